#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "psi3ut/cli.hpp"
#include "psi3ut/json_io.hpp"

using namespace psi3ut;
using psi3ut::cli::RunConfig;
using psi3ut::cli::RunResult;

namespace {

RunConfig base(const std::string& command) {
    RunConfig c;
    c.command = command;
    return c;
}

} // namespace

TEST_CASE("config validation") {
    RunConfig c = base("valuations");
    c.mod2exp = 8;
    CHECK_THROWS_AS(cli::run(c), ConfigError);

    RunConfig f = base("valuations");
    f.format = "xml";
    CHECK_THROWS_AS(cli::run(f), ConfigError);

    RunConfig x = base("xn");
    x.n = 6;
    x.size = 4;
    CHECK_THROWS_AS(cli::run(x), ConfigError);

    RunConfig u = base("no-such-command");
    CHECK_THROWS_AS(cli::run(u), ConfigError);

    RunConfig m = base("end-to-end");
    m.format = "csv";
    CHECK_THROWS_AS(cli::run(m), ConfigError);
}

TEST_CASE("valuations command") {
    RunConfig c = base("valuations");
    c.max = 4;
    RunResult r = cli::run(c);
    CHECK(r.exit_code == 0);

    Json j = Json::parse(r.artifact);
    CHECK(j["tool"] == "psi3ut");
    CHECK(j["all_agree"] == true);
    REQUIRE(j["nine_pow_minus_one"].size() == 4);
    CHECK(j["nine_pow_minus_one"][0]["input"] == 1);
    CHECK(j["nine_pow_minus_one"][0]["formula_value"] == 3);
    CHECK(j["iota_product"][1]["formula_value"] == 7);

    c.format = "csv";
    RunResult rc = cli::run(c);
    CHECK(rc.exit_code == 0);
    CHECK(rc.artifact.find("identity,input,formula_value,oracle_value,agree\n") == 0);
    CHECK(rc.artifact.find("nine_pow_minus_one,1,3,3,true") != std::string::npos);
}

TEST_CASE("psi3-matrix command") {
    RunConfig c = base("psi3-matrix");
    c.degree = 2;
    RunResult r = cli::run(c);
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.artifact);
    CHECK(j["matrix"]["rows"][0][0] == "1");
    CHECK(j["matrix"]["rows"][1][1] == "9");
    CHECK(j["matrix"]["rows"][2][2] == "81");
    CHECK(j["matrix"]["rows"][1][2] == "8");
}

TEST_CASE("basis command") {
    RunConfig c = base("basis");
    c.basis_m = 2;
    c.basis_l = 1;
    RunResult r = cli::run(c);
    Json j = Json::parse(r.artifact);
    // g_{8,4} = 2 U^2 W - 2 U^4.
    CHECK(j["element"]["(2,1)"] == "2");
    CHECK(j["element"]["(4,0)"] == "-2");

    c.basis_l = 3;
    CHECK_THROWS_AS(cli::run(c), ConfigError);
}

TEST_CASE("xn command emits the frozen small values") {
    RunConfig c = base("xn");
    c.n = 2;
    c.size = 4;
    RunResult r = cli::run(c);
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.artifact);
    CHECK(j["brute"]["rows"][1][2] == "80");
    CHECK(j["brute"]["rows"][0][2] == "1");
    CHECK(j["vanishing_ok"] == true);
    CHECK(j["path_matches_brute"] == true);
}

TEST_CASE("conjugate command") {
    RunConfig c = base("conjugate");
    c.size = 6;
    c.seeds = {3};
    RunResult r = cli::run(c);
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.artifact);
    CHECK(j["check"] == true);
    CHECK(j["C"]["size"] == 6);
    CHECK(j["C"]["mod2exp"] == 128);
    CHECK(j["c_upper_entries"][0]["i"] == 0);
    CHECK(j["c_upper_entries"][0]["j"] == 2);
    CHECK(j["c_upper_entries"][0]["i_1based"] == 1);
    CHECK(j["c_upper_entries"][0]["j_1based"] == 3);
}

TEST_CASE("conjugate command with entries from a file") {
    const char* path = "test_c_entries.json";
    {
        std::ofstream out(path);
        out << R"({"entries": [{"i": 0, "j": 2, "v": "5"}]})";
    }
    RunConfig c = base("conjugate");
    c.size = 3;
    c.c_entries_path = path;
    RunResult r = cli::run(c);
    std::remove(path);
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.artifact);
    CHECK(j["c_source"] == "file");
    CHECK(j["C"]["rows"][0][2] == "5");
    CHECK(j["check"] == true);
}

TEST_CASE("extract-a and end-to-end commands") {
    RunConfig c = base("extract-a");
    c.n = 4;
    c.seeds = {7};
    RunResult r = cli::run(c);
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.artifact);
    CHECK(j["results"][0]["diagonal_ok"] == true);
    CHECK(j["results"][0]["superdiagonal_odd"] == true);
    CHECK(j["results"][0]["A"]["rows"][1][1] == "9");

    RunConfig e = base("end-to-end");
    e.n = 4;
    e.seeds = {0, 1};
    RunResult re = cli::run(e);
    CHECK(re.exit_code == 0);
    Json je = Json::parse(re.artifact);
    CHECK(je["all_ok"] == true);
    CHECK(je["results"].size() == 2);
    CHECK(je["results"][0]["check"] == true);
}

TEST_CASE("reports are byte-identical for identical configs") {
    RunConfig a = base("end-to-end");
    a.n = 3;
    a.seeds = {5, 6};
    RunConfig b = a;
    CHECK(cli::run(a).artifact == cli::run(b).artifact);

    RunConfig v1 = base("valuations");
    v1.max = 12;
    CHECK(cli::run(v1).artifact == cli::run(v1).artifact);
}

TEST_CASE("verify-paper at small scale") {
    RunConfig c = base("verify-paper");
    c.n = 3;
    c.seeds = {0, 1};
    RunResult r = cli::run(c);
    CHECK(r.exit_code == 0);
    CHECK(!r.table.empty());
    CHECK(r.table.find("RESULT: PASS") != std::string::npos);
    Json j = Json::parse(r.artifact);
    CHECK(j["all_pass"] == true);
    bool saw_deviation = false;
    for (const auto& row : j["rows"])
        if (row["status"] == "documented-deviation") saw_deviation = true;
    CHECK(saw_deviation);

    c.format = "csv";
    RunResult rc = cli::run(c);
    CHECK(rc.exit_code == 0);
    CHECK(rc.artifact.find("id,status,detail\n") == 0);
    CHECK(rc.artifact.find("nine-power-valuation,pass") != std::string::npos);
    CHECK(rc.artifact.find("documented-deviation") != std::string::npos);
}

TEST_CASE("out path writing") {
    const char* path = "test_cli_out.json";
    RunConfig c = base("valuations");
    c.max = 2;
    c.out_path = path;
    RunResult r = cli::run(c);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    std::remove(path);
    CHECK(contents == r.artifact);
}

TEST_CASE("exit code mapping") {
    CHECK(cli::exit_code_for(ConfigError("x")) == 2);
    CHECK(cli::exit_code_for(NonUnitPivot("x")) == 5);
    CHECK(cli::exit_code_for(NonUnitDivision("x")) == 6);
    CHECK(cli::exit_code_for(HypothesisViolation("x")) == 7);
    CHECK(cli::exit_code_for(ZeroInput("x")) == 3);
}
