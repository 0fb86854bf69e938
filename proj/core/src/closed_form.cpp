#include "morin/page_engine.hpp"

namespace morin {

namespace {

struct Terms {
    int D;
    Series P(int a, int b) const { return full_series(a, b, D); }
    Series S(int a) const { return sym_series(a, D); }
    Series A(int a) const { return skew_series(a, D); }
    Series B(int d) const { return bso_series(d, D); }
    Series t(int k, const Series& s) const { return k > D ? Series(D) : s.shifted(k); }
};

// Even d. base is the part that survives in every truncation.
ClosedForm even_case(int d, const ColumnBound& R, int D) {
    const Terms T{D};
    const int s = d / 4;
    const bool four_s = d % 4 == 0;
    ClosedForm cf{Series(D), {}};

    if (R && *R == 1) {
        cf.series = T.B(d);  // P(0, d+1) = P(d)
        for (int a = 1; 2 * a <= d; ++a) cf.series += T.t(d + 1, T.P(a, d + 1 - a));
        if (!four_s)
            cf.notes.push_back("fold-column leading term P(0,d+1) taken without the t^{d+1} shift");
        return cf;
    }

    Series base = T.B(d);
    if (four_s) {
        for (int j = 0; j <= s - 1; ++j)
            base += T.t(d + 1 + 4 * (2 * s - j), T.P(2 * j + 1, 4 * s - 2 * j));
    } else {
        for (int j = 0; j <= s; ++j)
            base += T.t(d + 1 + 4 * (2 * s + 1 - j), T.P(2 * j + 1, d - 2 * j));
    }
    if (!R) {
        cf.series = base;
        return cf;
    }

    const int k = *R;
    const int r = k / 2;
    const bool odd_col = k % 2 == 1;
    const int h = d / 2;  // the a = b index
    cf.series = base;
    if (r % 2 == 1) {
        int shift = (four_s ? 8 * s : 2 * d) + 2 * r + (odd_col ? 1 : 0);
        Series block(D);
        if (four_s) block += odd_col ? T.S(h) : T.A(h);
        int top = four_s ? s - 1 : s;
        for (int i = 0; i <= top; ++i) block += T.P(2 * i, d - 2 * i);
        cf.series += T.t(shift, block);
    } else {
        int shift = d + 2 * r + (odd_col ? 1 : 0);
        Series block = odd_col ? T.A(h) : T.S(h);
        for (int a = 0; 2 * a < d; ++a) block += T.P(a, d - a);
        cf.series += T.t(shift, block);
    }
    return cf;
}

ClosedForm odd_case(int d, const ColumnBound& R, int D) {
    const Terms T{D};
    const int s = d / 4;
    const int h = (d + 1) / 2;
    ClosedForm cf{Series(D), {}};
    cf.notes.push_back("Euler-class fold sums run over even a with 0 <= a <= 2s");

    Series euler_folds(D);
    for (int i = 0; i <= s; ++i) euler_folds += T.P(2 * i, d + 1 - 2 * i);
    Series tail = T.t(2 * d + 2, euler_folds);
    if (d % 4 == 3) tail += T.t(2 * d + 2, T.S(h));

    if (R && *R == 1) {
        cf.series = T.B(d) + T.t(d + 1, T.A(h)) + tail;
        for (int a = 0; a < h; ++a) cf.series += T.t(d + 1, T.P(a, d + 1 - a));
        return cf;
    }

    cf.notes.push_back("alternating-sum families use P(2j, d+1-2j)");
    Series base = T.B(d) + T.t(d + 1, T.A(h)) + tail;
    for (int j = 0; j <= s; ++j) base += T.t(d + 1 + 4 * (h - j), T.P(2 * j, d + 1 - 2 * j));
    cf.series = base;
    if (!R) return cf;

    const int k = *R;
    const int r = k / 2;
    if (r % 2 == 0) {
        Series block(D);
        for (int a = 0; a < h; ++a) block += T.P(a, d - a);
        cf.series += T.t(d + 2 * r + (k % 2), block);
    }
    return cf;
}

}  // namespace

std::optional<ClosedForm> closed_form(int d, const ColumnBound& r, int max_degree) {
    if (d < 1 || (r && *r < 1)) return std::nullopt;
    if (d % 2 == 0) return even_case(d, r, max_degree);
    return odd_case(d, r, max_degree);
}

}  // namespace morin
