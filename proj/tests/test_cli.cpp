#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using morin::cli::run;

TEST_CASE("series verb") {
    auto res = run({"series", "--dim", "4", "--space", "sp:2,2", "--max-degree", "8"});
    CHECK(res.exit_code == 0);
    CHECK(res.output.substr(0, res.output.find('\n')) == "1,0,0,0,1,0,0,0,2");
}

TEST_CASE("e2 csv rows") {
    auto res = run({"e2", "--dim", "4", "--r", "inf", "--max-degree", "16", "--format", "csv"});
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\n4,1\n") != std::string::npos);
    CHECK(res.output.find("\n13,1\n") != std::string::npos);
    CHECK(res.output.find("\n5,0\n") != std::string::npos);
}

TEST_CASE("json schema") {
    auto res = run({"e2", "--dim", "4", "--r", "2", "--max-degree", "12", "--format", "json"});
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j["dim"] == 4);
    CHECK(j["r"] == 2);
    CHECK(j["max_degree"] == 12);
    CHECK(j["series"].size() == 13);
    CHECK(j["report"].is_array());

    auto inf = nlohmann::json::parse(run({"e1", "--dim", "4", "--column", "1", "--format", "json"}).output);
    CHECK(inf["r"] == "inf");
    CHECK(inf["series"][5] == 3);
}

TEST_CASE("verify") {
    auto res = run({"verify", "--dim", "4", "--r", "3", "--max-degree", "40"});
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify reports a mismatch with its location") {
    auto res = run({"verify", "--dim", "6", "--r", "inf", "--max-degree", "24", "--strict"});
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("first failure: column -1, degree 19") != std::string::npos);
    auto lenient = run({"verify", "--dim", "6", "--r", "inf", "--max-degree", "24"});
    CHECK(lenient.exit_code == 0);
    CHECK(lenient.output.find("DIFF") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).exit_code == 2);
    CHECK(run({"bogus"}).exit_code == 2);
    CHECK(run({"e2", "--r", "inf"}).exit_code == 2);
    CHECK(run({"e2", "--dim", "4", "--r", "x"}).exit_code == 2);
    CHECK(run({"series", "--space", "sp:2,4"}).exit_code == 2);
    CHECK(run({"series", "--space", "q:1"}).exit_code == 2);
    CHECK(run({"e2", "--dim", "4", "--format", "xml"}).exit_code == 2);
    CHECK(run({"e1", "--dim", "4"}).exit_code == 2);
}

TEST_CASE("other verbs") {
    CHECK(run({"oracle", "--dim", "4", "--column", "3"}).exit_code == 0);
    CHECK(run({"oracle", "--dim", "3", "--max-degree", "24"}).exit_code == 0);
    auto gen = run({"generators", "--dim", "4", "--max-degree", "13"});
    CHECK(gen.exit_code == 0);
    CHECK(gen.output.find("alt_") != std::string::npos);
    auto loop = run({"loopspace", "--dim", "4", "--r", "1", "--max-degree", "12", "--shift", "-1"});
    CHECK(loop.exit_code == 0);
    CHECK(loop.output.rfind("1,", 0) == 0);
    auto basis = run({"e1", "--dim", "4", "--column", "0", "--degree", "4"});
    CHECK(basis.exit_code == 0);
}

TEST_CASE("determinism and --out") {
    const std::vector<std::string> args{"e2", "--dim", "5", "--r", "3", "--max-degree", "24", "--format", "json"};
    auto a = run(args), b = run(args);
    CHECK(a.output == b.output);

    const std::string path = "cli_out_test.json";
    auto with_out = args;
    with_out.push_back("--out");
    with_out.push_back(path);
    auto c = run(with_out);
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == c.output);
    CHECK(c.output == a.output);
    std::remove(path.c_str());
}
