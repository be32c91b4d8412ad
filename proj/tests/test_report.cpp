#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "logarr/catalog.hpp"
#include "logarr/errors.hpp"
#include "logarr/report.hpp"

using namespace logarr;

namespace {

bool has_check(const RunReport& r, const std::string& id) {
    for (const auto& c : r.checks)
        if (c.id == id) return true;
    return false;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

#ifdef LOGARR_BIN
int run_cli(const std::string& args, const std::string& stdout_path = "/dev/null") {
    const std::string cmd = std::string("\"") + LOGARR_BIN + "\" " + args + " > " + stdout_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}
#endif

} // namespace

TEST_CASE("suite names and default windows") {
    CHECK(parse_suite("saito") == Suite::Saito);
    CHECK(parse_suite("hodge") == Suite::Hodge);
    CHECK(parse_suite("universal") == Suite::Universal);
    CHECK(parse_suite("all") == Suite::All);
    CHECK_THROWS_AS(parse_suite("everything"), usage_error);
    for (Suite s : {Suite::Saito, Suite::Hodge, Suite::Universal, Suite::All})
        CHECK(parse_suite(suite_name(s)) == s);

    CHECK(default_window(build_group("B2")) == std::pair<int, int>{-2, 2});
    CHECK(default_window(build_group("A3")) == std::pair<int, int>{-1, 1});
}

TEST_CASE("the saito suite certifies a catalog group end to end") {
    const GroupData g = build_group("I2_3");
    const RunReport rep = run_suite(g, Suite::Saito, -1, 1);
    CHECK(rep.all_pass);
    CHECK(rep.group == "I2_3");

    CHECK(has_check(rep, "catalog.structure"));
    CHECK(has_check(rep, "catalog.jacobian"));
    CHECK(has_check(rep, "saito.coordinate-frame"));
    CHECK(has_check(rep, "saito.invariant-frame"));
    CHECK(has_check(rep, "saito.dependent-rejected"));
    CHECK(has_check(rep, "saito.overscaled-rejected"));
    for (int k = -1; k <= 1; ++k) CHECK(has_check(rep, "saito.window-layer.k=" + std::to_string(k)));

    std::set<std::string> ids;
    for (const auto& c : rep.checks) ids.insert(c.id);
    CHECK(ids.size() == rep.checks.size()); // ids are unique
    for (const auto& c : rep.checks) {
        CHECK(!c.statement.empty());
        CHECK(!c.witness.is_null());
    }
}

TEST_CASE("reports are canonical and scheduling independent") {
    const GroupData g = build_group("I2_4");
    const RunReport serial = run_suite(g, Suite::Saito, -1, 1, 1);
    const RunReport parallel = run_suite(g, Suite::Saito, -1, 1, 4);
    CHECK(serial.all_pass);
    CHECK(canonical_dump(to_json(serial)) == canonical_dump(to_json(parallel)));

    const RunReport again = run_suite(g, Suite::Saito, -1, 1, 1);
    CHECK(canonical_dump(to_json(serial)) == canonical_dump(to_json(again)));
}

TEST_CASE("the universal suite walks the shift chain") {
    const GroupData g = build_group("B2");
    const RunReport rep = run_suite(g, Suite::Universal, 0, 1);
    CHECK(rep.all_pass);
    CHECK(has_check(rep, "universal.euler-shift.k=0"));
    CHECK(has_check(rep, "universal.euler-shift.k=1"));
    CHECK(has_check(rep, "universal.invariant-collapse.k=0"));
    CHECK(has_check(rep, "universal.invariant-collapse.k=1"));
    CHECK(has_check(rep, "universal.shift-step.k=0"));
    CHECK(has_check(rep, "universal.transport"));
    CHECK(!has_check(rep, "universal.shift-step.k=1")); // needs k+1 inside the window
}

TEST_CASE("the hodge suite propagates window errors") {
    const GroupData g = build_group("I2_3");
    CHECK_THROWS_AS(run_suite(g, Suite::Hodge, 0, 0), window_too_small);
    CHECK_THROWS_AS(run_suite(g, Suite::Saito, 1, -1), usage_error);

    const RunReport rep = run_suite(g, Suite::Hodge, -1, 1);
    CHECK(rep.all_pass);
    CHECK(has_check(rep, "hodge.flat-frame"));
    for (int k = -1; k <= 1; ++k) CHECK(has_check(rep, "hodge.window-layer.k=" + std::to_string(k)));
}

TEST_CASE("report json carries schema, verdicts, and witnesses") {
    const GroupData g = build_group("I2_3");
    const json j = to_json(run_suite(g, Suite::Saito, 0, 0));
    CHECK(j.at("schema_version").get<int>() == report_schema_version);
    CHECK(j.at("tool").get<std::string>() == "logarr");
    CHECK(j.at("tool_version").get<std::string>() == std::string(tool_version));
    CHECK(j.at("group").get<std::string>() == "I2_3");
    CHECK(j.at("suite").get<std::string>() == "saito");
    CHECK(j.at("all_pass").get<bool>());
    for (const auto& c : j.at("checks")) {
        CHECK(c.at("verdict").get<std::string>() == "pass");
        CHECK(c.contains("statement"));
        CHECK(c.contains("witness"));
    }
    CHECK(!canonical_dump(j).empty());
}

#ifdef LOGARR_BIN

TEST_CASE("cli: group info prints the data table") {
    const std::string out = "logarr_cli_group.txt";
    CHECK(run_cli("group B2", out) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("coxeter number  4") != std::string::npos);
    CHECK(text.find("degrees         2 4") != std::string::npos);
    CHECK(text.find("well-generated  yes") != std::string::npos);
}

TEST_CASE("cli: usage problems exit with code two") {
    CHECK(run_cli("group NoSuchGroup") == 2);
    CHECK(run_cli("") == 2);                                   // missing subcommand
    CHECK(run_cli("verify --group I2_3 --suite bogus") == 2);  // unknown suite
    CHECK(run_cli("saito-check --group I2_3 --derivations /nonexistent.json") == 2);
}

TEST_CASE("cli: mathematical failures exit with code one") {
    // a window of a single layer cannot support the decomposition checks
    CHECK(run_cli("hodge --group I2_3 --k-min 0 --k-max 0") == 1);
}

TEST_CASE("cli: saito-check certifies a derivation file") {
    const GroupData g = build_group("I2_3");
    json basis = json::array();
    for (int i = 0; i < g.rank; ++i) basis.push_back(to_json(vfield_unit(Frame::x, g.rank, i)));
    {
        std::ofstream f("logarr_cli_basis.json", std::ios::binary);
        f << basis.dump() << '\n';
    }
    CHECK(run_cli("saito-check --group I2_3 --nu 0 --derivations logarr_cli_basis.json", "logarr_cli_cert.json") == 0);
    const json cert = json::parse(slurp("logarr_cli_cert.json"));
    CHECK(cert.at("verdict").get<std::string>() == "Basis");

    json dependent = json::array();
    dependent.push_back(basis[0]);
    dependent.push_back(basis[0]);
    {
        std::ofstream f("logarr_cli_dep.json", std::ios::binary);
        f << dependent.dump() << '\n';
    }
    CHECK(run_cli("saito-check --group I2_3 --nu 0 --derivations logarr_cli_dep.json") == 1);
}

TEST_CASE("cli: verify writes byte identical reports across runs") {
    const std::string args = "verify --group I2_3 --suite saito --k-min 0 --k-max 0 --json ";
    CHECK(run_cli(args + "logarr_cli_r1.json") == 0);
    CHECK(run_cli(args + "logarr_cli_r2.json --threads 3") == 0);
    const std::string r1 = slurp("logarr_cli_r1.json");
    CHECK(!r1.empty());
    CHECK(r1 == slurp("logarr_cli_r2.json"));
}

#endif
