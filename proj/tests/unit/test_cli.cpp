#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gyro/reproduce.hpp"

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run_cli(const std::string& args) {
    std::string out_path = "cli_stdout.tmp", err_path = "cli_stderr.tmp";
    std::string cmd = std::string(GYRO_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    int status = std::system(cmd.c_str());
    auto slurp = [](const std::string& p) {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    CliRun r{WEXITSTATUS(status), slurp(out_path), slurp(err_path)};
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

} // namespace

TEST_CASE("cli invariants") {
    auto r = run_cli("invariants --graph \"lex(K2,circulant:5:1,4)\" --format json");
    REQUIRE(r.exit_code == 0);
    auto doc = parse(r.out);
    CHECK(doc["chi"] == 6);
    CHECK(doc["chi_c"]["num"] == 6);
    CHECK(doc["chi_c"]["den"] == 1);
    CHECK(doc["chi_f"]["num"] == 5);
    CHECK(doc["chi_f"]["den"] == 1);

    auto kn = parse(run_cli("invariants --graph kneser:5,2 --format json").out);
    CHECK(kn["chi_f"]["num"] == 5);
    CHECK(kn["chi_f"]["den"] == 2);
    CHECK(kn["chi_c"]["num"] == 3);

    auto lp = parse(run_cli("invariants --graph \"line(kneser:5,2)\" --format json").out);
    CHECK(lp["omega"] == 3);
    CHECK(lp["chi"] == 4);
}

TEST_CASE("cli gen and parse errors") {
    auto r = run_cli("gen --graph K3");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("3 3") != std::string::npos);

    auto bad = run_cli("invariants --graph nonsense:1,2");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("cli search and verify round trip") {
    auto r = run_cli("search --graph circulant:5:1,4 --group 5 --format json --out cli_cert.tmp.json");
    REQUIRE(r.exit_code == 0);
    auto doc = parse(r.out);
    CHECK(doc["density"]["num"] == 2);
    CHECK(doc["density"]["den"] == 5);
    CHECK(doc["exact"] == true);

    auto ok = run_cli("verify --graph circulant:5:1,4 cli_cert.tmp.json");
    CHECK(ok.exit_code == 0);

    // tamper with one shift
    auto cert = parse([] {
        std::ifstream in("cli_cert.tmp.json");
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }());
    cert["f"][1] = cert["f"][0];
    {
        std::ofstream out("cli_cert_bad.tmp.json");
        out << cert.dump();
    }
    auto bad = run_cli("verify --graph circulant:5:1,4 cli_cert_bad.tmp.json");
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("edge") != std::string::npos);

    {
        std::ofstream out("cli_cert_trunc.tmp.json");
        out << "{\"graph_label\": \"x\", ";
    }
    auto trunc = run_cli("verify --graph circulant:5:1,4 cli_cert_trunc.tmp.json");
    CHECK(trunc.exit_code == 2);

    std::remove("cli_cert.tmp.json");
    std::remove("cli_cert_bad.tmp.json");
    std::remove("cli_cert_trunc.tmp.json");
}

TEST_CASE("cli search over a toy group") {
    auto r = run_cli("search --graph circulant:5:1,4 --group 3 --format json");
    REQUIRE(r.exit_code == 0);
    auto doc = parse(r.out);
    CHECK(doc["density"]["num"] == 1);
    CHECK(doc["density"]["den"] == 3);
}

TEST_CASE("cli search reports budget exhaustion via exit code 3") {
    auto r = run_cli("search --graph kneser:5,2 --group 12 --budget 10");
    CHECK(r.exit_code == 3);
}

TEST_CASE("cli bounds on a circulant") {
    auto r = run_cli("bounds --graph circulant:5:1,4 --nmax 5 --format json --out cli_bounds.tmp");
    REQUIRE(r.exit_code == 0);
    std::ifstream in("cli_bounds.tmp");
    std::stringstream ss;
    ss << in.rdbuf();
    auto doc = parse(ss.str());
    CHECK(doc["gyro_lower"]["num"] == 5);
    CHECK(doc["gyro_lower"]["den"] == 2);
    CHECK(doc["gyro_upper"]["num"] == 5);
    CHECK(doc["gyro_upper"]["den"] == 2);
    CHECK(doc["chi_c"]["num"] == 5);
    std::remove("cli_bounds.tmp");
    std::remove("cli_bounds.tmp.certificate.json");
}

TEST_CASE("fault injection makes the reproduction suite fail") {
    gyro::ReproduceOptions opt;
    opt.inject_fault = true;
    opt.only = {4};
    auto results = gyro::run_reproduction(opt);
    CHECK(gyro::count_failures(results) == 1);

    gyro::ReproduceOptions clean;
    clean.only = {12};
    CHECK(gyro::count_failures(gyro::run_reproduction(clean)) == 0);
}

TEST_CASE("cli reproduce skip-slow subset passes") {
    auto r = run_cli("reproduce --skip-slow");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
