#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logarr/catalog.hpp"
#include "logarr/errors.hpp"
#include "logarr/report.hpp"

namespace {

using namespace logarr;

struct GlobalOpts {
    std::string json_path;
    int threads = 1;
    std::size_t element_cap = 10000;
};

void add_global(CLI::App* sub, GlobalOpts& o) {
    sub->add_option("--json", o.json_path, "write the canonical JSON report to this path");
    sub->add_option("--threads", o.threads, "workers for independent checks (output order is fixed)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--element-cap", o.element_cap, "abort group closure beyond this many elements");
}

/* Canonical bytes: same input, same output, byte for byte. */
void emit(const json& j, const GlobalOpts& o, bool to_stdout) {
    const std::string bytes = canonical_dump(j);
    if (!o.json_path.empty()) {
        std::ofstream f(o.json_path, std::ios::binary);
        if (!f) throw usage_error("cannot open for writing: " + o.json_path);
        f << bytes << '\n';
    }
    if (to_stdout) std::cout << bytes << '\n';
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

json parse_json_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw usage_error("cannot read file: " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw usage_error("invalid JSON in " + path + ": " + e.what());
    }
}

int cmd_group(const std::string& name, const GlobalOpts& o) {
    const GroupData g = build_group(name, o.element_cap);
    std::cout << "group           " << g.name << '\n'
              << "rank            " << g.rank << '\n'
              << "order           " << g.order() << '\n'
              << "reflections     " << g.reflections.size() << '\n'
              << "hyperplanes     " << g.hyperplanes.size() << '\n'
              << "orbits          " << g.norbits << '\n'
              << "degrees         " << join(g.degrees) << '\n'
              << "exponents       " << join(g.exponents) << '\n'
              << "coexponents     " << join(g.coexponents) << '\n'
              << "coxeter number  " << g.h << '\n'
              << "well-generated  " << (g.well_generated ? "yes" : "no") << '\n'
              << "omega           " << join(g.omega()) << '\n';
    if (!o.json_path.empty()) {
        json j{{"schema_version", report_schema_version},
               {"group", g.name},
               {"rank", g.rank},
               {"order", g.order()},
               {"reflections", g.reflections.size()},
               {"hyperplanes", g.hyperplanes.size()},
               {"orbits", g.norbits},
               {"degrees", g.degrees},
               {"exponents", g.exponents},
               {"coexponents", g.coexponents},
               {"h", g.h},
               {"well_generated", g.well_generated},
               {"omega", g.omega()}};
        emit(j, o, false);
    }
    return 0;
}

int cmd_saito_check(const std::string& name, const std::string& nu_text, const std::string& der_path,
                    const GlobalOpts& o) {
    const GroupData g = build_group(name, o.element_cap);
    const Mult nu = parse_mult(g, nu_text);
    json j = parse_json_file(der_path);
    if (j.is_object() && j.contains("derivations")) j = j.at("derivations");
    if (!j.is_array()) throw usage_error("the derivations file must hold a list of vector fields");
    std::vector<VField> fields;
    fields.reserve(j.size());
    for (const auto& e : j) fields.push_back(vfield_from_json(e, g.degrees));
    const BasisCert cert = saito_check(fields, g, nu);
    emit(to_json(cert), o, true);
    return cert.verdict == Verdict::Basis ? 0 : 1;
}

int cmd_hodge(const std::string& name, std::optional<int> k_min, std::optional<int> k_max, const GlobalOpts& o) {
    const GroupData g = build_group(name, o.element_cap);
    const auto window = default_window(g);
    const int lo = k_min.value_or(window.first), hi = k_max.value_or(window.second);
    const FlatFrame fr = flatten(g);
    const HodgeReport hr = verify_hodge(g, fr, lo, hi);
    for (const auto& kr : hr.per_k) {
        bool members = true, invariant = true;
        for (bool b : kr.membership) members = members && b;
        for (bool b : kr.invariance) invariant = invariant && b;
        std::cout << "k=" << kr.k << "  members " << (members ? "yes" : "NO") << "  invariant "
                  << (invariant ? "yes" : "NO") << "  " << verdict_name(kr.basis_cert.verdict) << "  exponents "
                  << join(kr.exponents) << (kr.exponents_match ? "" : " (MISMATCH)") << "  independent "
                  << (kr.t_independent ? "yes" : "NO");
        if (kr.decomposition_checked) std::cout << "  depth " << kr.decomposition_depth;
        std::cout << '\n';
    }
    std::cout << (hr.all_pass ? "all layers verified" : "FAILURES above") << '\n';
    emit(to_json(hr), o, false);
    return hr.all_pass ? 0 : 1;
}

int cmd_universal(const std::string& name, int k, const GlobalOpts& o) {
    const GroupData g = build_group(name, o.element_cap);
    const FlatFrame fr = flatten(g);
    const UniversalCert cert = check_euler_universal(g, fr, k);
    std::cout << "multiplicity      " << cert.nu.str() << '\n'
              << "member one up     " << (cert.member_shifted ? "yes" : "NO") << '\n'
              << "valuations exact  " << (cert.valuations_exact ? "yes" : "NO") << '\n'
              << "image frame       " << verdict_name(cert.basis_cert.verdict) << '\n'
              << "universal         " << (cert.universal ? "yes" : "NO") << '\n';
    emit(to_json(cert), o, false);
    return cert.universal ? 0 : 1;
}

int cmd_shift(const std::string& name, int k_from, const GlobalOpts& o) {
    const GroupData g = build_group(name, o.element_cap);
    const FlatFrame fr = flatten(g);
    const ShiftCert sc = shifted_universality(g, fr, k_from);
    std::cout << "source universal        " << (sc.from.universal ? "yes" : "NO") << '\n'
              << "antiderivative step     " << (sc.step_verified ? "yes" : "NO") << '\n'
              << "target universal        " << (sc.to.universal ? "yes" : "NO") << '\n'
              << "transition small-ring   " << (sc.transition_in_tprime ? "yes" : "NO") << '\n'
              << "transition degrees      " << (sc.degrees_match ? "yes" : "NO") << '\n'
              << "shift verified          " << (sc.all_pass ? "yes" : "NO") << '\n';
    emit(to_json(sc), o, false);
    return sc.all_pass ? 0 : 1;
}

int cmd_verify(const std::string& name, const std::string& suite_text, std::optional<int> k_min,
               std::optional<int> k_max, const GlobalOpts& o) {
    const auto start = std::chrono::steady_clock::now();
    const GroupData g = build_group(name, o.element_cap);
    const Suite suite = parse_suite(suite_text);
    const auto window = default_window(g);
    const int lo = k_min.value_or(window.first), hi = k_max.value_or(window.second);
    const RunReport rep = run_suite(g, suite, lo, hi, o.threads);
    for (const auto& c : rep.checks)
        std::cout << (c.pass ? "pass  " : "FAIL  ") << c.id << '\n';
    std::size_t failures = 0;
    for (const auto& c : rep.checks)
        if (!c.pass) ++failures;
    std::cout << rep.checks.size() << " checks, " << failures << " failures" << '\n';
    emit(to_json(rep), o, false);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cerr << "wall time: " << ms.count() << " ms\n"; // timing stays off the canonical byte stream
    return rep.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certified bases of logarithmic vector fields on reflection arrangements"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("logarr ") + logarr::tool_version);

    GlobalOpts opts;

    std::string group_name;
    bool info_flag = false;
    auto* sub_group = app.add_subcommand("group", "print the numerical data of a catalog group");
    sub_group->add_option("name", group_name, "catalog group name")->required();
    sub_group->add_flag("--info", info_flag, "print the data table (default behavior)");
    add_global(sub_group, opts);

    std::string sc_group, sc_nu = "0", sc_file;
    auto* sub_saito = app.add_subcommand("saito-check", "certify a tuple of vector fields against a multiplicity");
    sub_saito->add_option("--group", sc_group, "catalog group name")->required();
    sub_saito->add_option("--nu", sc_nu, "multiplicity: \"k*omega+c\" or per-orbit integers");
    sub_saito->add_option("--derivations", sc_file, "JSON file with the candidate fields")->required();
    add_global(sub_saito, opts);

    std::optional<int> h_kmin, h_kmax;
    std::string h_group;
    auto* sub_hodge = app.add_subcommand("hodge", "verify the filtration window layer by layer");
    sub_hodge->add_option("--group", h_group, "catalog group name")->required();
    sub_hodge->add_option("--k-min", h_kmin, "lowest layer (default by rank)");
    sub_hodge->add_option("--k-max", h_kmax, "highest layer (default by rank)");
    add_global(sub_hodge, opts);

    std::string u_group;
    int u_k = 0;
    auto* sub_universal = app.add_subcommand("universal", "certify the k-th covariant Euler field at -k*omega");
    sub_universal->add_option("--group", u_group, "catalog group name")->required();
    sub_universal->add_option("--k", u_k, "covariant power")->required();
    add_global(sub_universal, opts);

    std::string s_group;
    int s_kfrom = 0;
    auto* sub_shift = app.add_subcommand("shift", "move a universality certificate one multiplicity step up");
    sub_shift->add_option("--group", s_group, "catalog group name")->required();
    sub_shift->add_option("--k-from", s_kfrom, "source step: from k*omega to (k+1)*omega")->required();
    add_global(sub_shift, opts);

    std::string v_group, v_suite = "all";
    std::optional<int> v_kmin, v_kmax;
    auto* sub_verify = app.add_subcommand("verify", "run a named certificate suite");
    sub_verify->add_option("--group", v_group, "catalog group name")->required();
    sub_verify->add_option("--suite", v_suite, "saito, hodge, universal, or all");
    sub_verify->add_option("--k-min", v_kmin, "lowest layer (default by rank)");
    sub_verify->add_option("--k-max", v_kmax, "highest layer (default by rank)");
    add_global(sub_verify, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help, --version
        app.exit(e);
        return 2;
    }

    try {
        if (sub_group->parsed()) return cmd_group(group_name, opts);
        if (sub_saito->parsed()) return cmd_saito_check(sc_group, sc_nu, sc_file, opts);
        if (sub_hodge->parsed()) return cmd_hodge(h_group, h_kmin, h_kmax, opts);
        if (sub_universal->parsed()) return cmd_universal(u_group, u_k, opts);
        if (sub_shift->parsed()) return cmd_shift(s_group, s_kfrom, opts);
        if (sub_verify->parsed()) return cmd_verify(v_group, v_suite, v_kmin, v_kmax, opts);
    } catch (const logarr::usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const logarr::window_too_small& e) {
        std::cerr << "error: " << e.what() << "; widen the window to include k = " << e.required_depth << '\n';
        return 1;
    } catch (const logarr::math_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
