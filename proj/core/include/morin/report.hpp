#pragma once

#include <string>
#include <vector>

namespace morin {

struct CheckFailure {
    int column = -1;
    int degree = -1;
    std::string detail;
};

struct CheckReport {
    std::string name;
    std::vector<CheckFailure> failures;
    std::vector<std::string> notes;
    long checked = 0;  // number of elementary comparisons made

    bool passed() const { return failures.empty(); }
    void fail(int column, int degree, std::string detail) {
        failures.push_back({column, degree, std::move(detail)});
    }
    void merge(const CheckReport& o) {
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
        checked += o.checked;
    }
};

}  // namespace morin
