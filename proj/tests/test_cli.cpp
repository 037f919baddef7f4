#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nmds/cli.hpp"

using nmds::run_cli;

namespace {

const std::string kField = "GF(2^4;0x13)";

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
    const char* dir = std::getenv("NMDS_FIXTURES");
    return (std::filesystem::path(dir ? dir : "tests/fixtures") / name).string();
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

std::vector<std::string> nmds_fixture_args(bool json) {
    std::vector<std::string> a;
    if (json) a.push_back("--json");
    for (const char* s : {"construct", "gvand", "--field"}) a.push_back(s);
    a.push_back(kField);
    for (const char* s : {"--x", "1,a^1,a^2,a^3", "--y", "a^4,a^5,a^6,a^7", "--target", "nmds"}) a.push_back(s);
    return a;
}

}  // namespace

TEST_CASE("construct gvand, text") {
    const Result r = run(nmds_fixture_args(false));
    CHECK(r.code == 0);
    CHECK(r.out.find("a^7  a^9  a^9  1") != std::string::npos);
    CHECK(r.out.find("verdict: NMDS") != std::string::npos);
    CHECK(r.out.find("first zero {1,2,4,8}") != std::string::npos);
}

TEST_CASE("construct gvand, json") {
    const Result r = run(nmds_fixture_args(true));
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["matrix"][2][3] == "0");
    CHECK(j["inverse_direction"][0][0] == "0");
    CHECK(j["conditions"]["witness"] == nlohmann::json{1, 2, 4, 8});
    CHECK(j["report"]["verdict"] == "NMDS");
    CHECK(j["report"]["d1"] == 4);
    CHECK(j["report"]["d2"] == 6);
    CHECK(j["verified"] == true);
}

TEST_CASE("construct report round-trips through classify") {
    const Result c = run(nmds_fixture_args(true));
    REQUIRE(c.code == 0);
    const auto built = nlohmann::ordered_json::parse(c.out);
    const std::string path = temp_file("nmds_roundtrip.json", c.out);
    const Result k = run({"--json", "classify", "--matrix", path});
    REQUIRE(k.code == 0);
    CHECK(k.out == built["report"].dump(2) + "\n");
}

TEST_CASE("involutory construction") {
    const Result r = run({"construct", "involutory", "--field", kField, "--x", "1,a^1,a^2,a^3", "--l", "1", "--target", "nmds"});
    CHECK(r.code == 0);
    CHECK(r.out.find("A^2 = I: yes") != std::string::npos);
    CHECK(r.out.find("lower triangular: yes") != std::string::npos);
    const Result odd = run({"construct", "involutory", "--field", kField, "--x", "1,a^1,a^2", "--l", "a^3"});
    CHECK(odd.code == 5);
    CHECK(odd.err.find("OddOrder") != std::string::npos);
}

TEST_CASE("exit codes") {
    const Result bad = run({"construct", "gvand", "--field", kField, "--x", "1,a^1,a^q", "--y", "a^8,a^9,a^10"});
    CHECK(bad.code == 1);
    CHECK(bad.err.rfind("error: ParseError", 0) == 0);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"construct", "gvand", "--field", kField}).code == 1);

    const Result cond = run({"construct", "gvand", "--field", kField, "--x", "1,a^1,a^3,a^7", "--y", "a^8,a^9,a^10,a^11",
                             "--target", "nmds"});
    CHECK(cond.code == 2);
    CHECK(cond.err.find("[witness {1,2,3,4}]") != std::string::npos);

    const Result mds = run({"construct", "gvand", "--field", kField, "--x", "1,a^1,a^2,a^3", "--y", "a^4,a^5,a^6,a^7"});
    CHECK(mds.code == 2);
    CHECK(mds.err.find("{1,2,4,8}") != std::string::npos);

    const Result big = run({"--max-order", "3", "verify", "--field", kField, "--matrix", fixture("gf16_nmds.txt")});
    CHECK(big.code == 4);
    CHECK(big.err.find("cap override: max-order = 3") != std::string::npos);
    CHECK(run({"--max-exponent", "10", "scan", "--field", kField, "--poly", "1,a^1,0,0", "--m", "1..30"}).code == 4);
}

TEST_CASE("verify and classify") {
    const Result ok = run({"verify", "--field", kField, "--matrix", fixture("gf16_nmds.txt"), "--expect", "nmds"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("class: NMDS") != std::string::npos);
    CHECK(run({"verify", "--field", kField, "--matrix", fixture("gf16_nmds.txt"), "--expect", "mds"}).code == 2);
    CHECK(run({"verify", "--field", kField, "--matrix", fixture("identity3.txt"), "--expect", "nmds"}).code == 2);

    const Result inv = run({"--json", "verify", "--matrix", fixture("gf16_involutory.json")});
    REQUIRE(inv.code == 0);
    const auto j = nlohmann::json::parse(inv.out);
    CHECK(j["class"] == "NMDS");
    CHECK(j["involutory"] == true);

    const Result id = run({"--json", "classify", "--field", kField, "--matrix", fixture("identity3.txt"), "--profile"});
    REQUIRE(id.code == 0);
    const auto c = nlohmann::json::parse(id.out);
    CHECK(c["verdict"] == "OTHER");
    CHECK(c["witnesses"][0]["columns"] == nlohmann::json{1, 4});
    CHECK(c["dr_profile"] == nlohmann::json{2, 4, 6});
}

TEST_CASE("ghw") {
    const Result r = run({"--json", "ghw", "--field", kField, "--generator", fixture("identity3.txt"), "--r", "2"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["weights"][0]["d"] == 2);
    CHECK(j["weights"][0]["columns"] == nlohmann::json{1, 2});
}

TEST_CASE("recursive, search and scan") {
    const Result rec = run({"--json", "recursive", "theta-ib", "--field", kField, "--theta", "a^1", "--n", "4", "--m", "4..11",
                            "--verify"});
    REQUIRE(rec.code == 0);
    const auto j = nlohmann::json::parse(rec.out);
    CHECK(j["roots"] == nlohmann::json{"1", "a^1", "a^2", "a^4"});
    CHECK(j["table"].size() == 8);
    for (const auto& [m, v] : j["verified"].items()) CHECK(v == "NMDS");
    CHECK(j["verified"].size() == 8);
    CHECK(j["witnesses"]["4"] == nlohmann::json{1, 2, 4, 8});

    const Result spot = run({"--seed", "7", "recursive", "theta-ic", "--field", kField, "--theta", "a^1", "--n", "4", "--m", "4..11"});
    CHECK(spot.code == 0);
    CHECK(spot.err.find("spot-check seed=7") != std::string::npos);

    const Result col = run({"recursive", "theta-ib", "--field", kField, "--theta", "a^1", "--n", "4", "--m", "12"});
    CHECK(col.err.find("ExponentCollision") != std::string::npos);

    const Result search = run({"search", "--family", "new-mds", "--field", kField, "--n", "4", "--m", "4"});
    CHECK(search.code == 0);
    CHECK(search.out.find("a^1 mds_eligible") != std::string::npos);

    const Result scan = run({"--json", "scan", "--field", kField, "--poly", "1,a^1,0,0", "--m", "20..23"});
    REQUIRE(scan.code == 0);
    const auto s = nlohmann::json::parse(scan.out);
    CHECK(s["table"]["22"] == "MDS");
    CHECK(s["table"]["23"] == "NMDS");
    const Result hex = run({"--notation", "hex", "scan", "--field", kField, "--roots", "1,a^1,a^2,a^4", "--m", "4"});
    CHECK(hex.code == 0);
    CHECK(hex.out.find("NMDS") != std::string::npos);
}
