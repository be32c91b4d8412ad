#include "logarr/report.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <mutex>

#include "logarr/errors.hpp"

namespace logarr {

namespace {

using Task = std::function<std::vector<CheckRecord>()>;

CycNum rat_cyc(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return CycNum(r);
}

/* Work-stealing over a fixed task list; slot i of the output always holds
   the records of task i, so the report order never depends on scheduling. */
std::vector<CheckRecord> run_tasks(const std::vector<Task>& tasks, int threads) {
    std::vector<std::vector<CheckRecord>> slots(tasks.size());
    int n = std::min<int>(std::max(threads, 1), static_cast<int>(tasks.size()));
    if (n <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) slots[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> next{0};
        std::mutex err_mu;
        std::exception_ptr err;
        std::vector<std::future<void>> workers;
        workers.reserve(static_cast<std::size_t>(n));
        for (int w = 0; w < n; ++w)
            workers.push_back(std::async(std::launch::async, [&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    try {
                        slots[i] = tasks[i]();
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(err_mu);
                        if (!err) err = std::current_exception();
                        return;
                    }
                }
            }));
        for (auto& w : workers) w.wait();
        if (err) std::rethrow_exception(err);
    }
    std::vector<CheckRecord> out;
    for (auto& s : slots)
        for (auto& r : s) out.push_back(std::move(r));
    return out;
}

std::vector<Poly> hyperplane_forms(const GroupData& g) {
    std::vector<Poly> out;
    out.reserve(g.hyperplanes.size());
    for (const auto& hp : g.hyperplanes) out.push_back(hp.alpha.to_poly());
    return out;
}

std::vector<VField> coordinate_fields(int l) {
    std::vector<VField> dx;
    dx.reserve(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) dx.push_back(vfield_unit(Frame::x, l, i));
    return dx;
}

std::vector<VField> frame_to_x(const GroupData& g, const FlatFrame& fr, const std::vector<VField>& fields) {
    RMat jxt = rmat_inverse(rmat_from_pmat(jacobian(fr.invariants)));
    const auto cands = hyperplane_forms(g);
    std::vector<VField> out;
    out.reserve(fields.size());
    for (const auto& f : fields) out.push_back(frame_t_to_x(f, fr.invariants, jxt, cands));
    return out;
}

std::vector<VField> dt_fields(const GroupData& g, const FlatFrame& fr) {
    std::vector<VField> dt;
    dt.reserve(static_cast<std::size_t>(g.rank));
    for (int j = 0; j < g.rank; ++j) dt.push_back(vfield_unit(Frame::t, g.rank, j, g.degrees));
    return frame_to_x(g, fr, dt);
}

void catalog_tasks(const GroupData& g, std::vector<Task>& tasks) {
    tasks.push_back([&g] {
        long long prod = 1;
        for (int d : g.degrees) prod *= d;
        bool order_ok = prod == static_cast<long long>(g.order());
        bool expo_ok = true;
        for (int i = 0; i < g.rank; ++i) expo_ok = expo_ok && g.exponents[static_cast<std::size_t>(i)] == g.degrees[static_cast<std::size_t>(i)] - 1;
        int refl_count = static_cast<int>(g.reflections.size());
        int hyp_count = static_cast<int>(g.hyperplanes.size());
        bool coxeter_ok = g.rank * g.h == refl_count + hyp_count;
        bool duality_ok = true;
        if (g.well_generated)
            for (int i = 0; i < g.rank; ++i)
                duality_ok = duality_ok &&
                             g.exponents[static_cast<std::size_t>(i)] +
                                     g.coexponents[static_cast<std::size_t>(g.rank - 1 - i)] ==
                                 g.h;
        json witness{{"order", g.order()},          {"degrees", g.degrees},
                     {"exponents", g.exponents},    {"coexponents", g.coexponents},
                     {"reflections", refl_count},   {"hyperplanes", hyp_count},
                     {"h", g.h},                    {"well_generated", g.well_generated}};
        return std::vector<CheckRecord>{
            {"catalog.structure",
             "the group order is the product of the degrees, the reflection counts satisfy the rank-times-h identity, "
             "and well-generated groups pair exponents with coexponents to h",
             order_ok && expo_ok && coxeter_ok && duality_ok, std::move(witness)}};
    });
    tasks.push_back([&g] {
        CycNum c = jacobian_witness(g, g.invariants); // throws when not proportional
        bool qomega_ok = g.Qomega == g.Q * g.J;
        json witness{{"jacobian_scalar", to_json(c)}, {"qomega_equals_q_times_j", qomega_ok}};
        return std::vector<CheckRecord>{
            {"catalog.jacobian",
             "the Jacobian determinant of the fundamental invariants is a scalar multiple of the ramification "
             "polynomial, and the pointwise-order product splits as arrangement times ramification",
             !c.is_zero() && qomega_ok, std::move(witness)}};
    });
}

void saito_tasks(const GroupData& g, const FlatFrame& fr, int k_min, int k_max, std::vector<Task>& tasks) {
    tasks.push_back([&g] {
        auto cert = saito_check(coordinate_fields(g.rank), g, mult_constant(g, 0));
        bool ok = cert.verdict == Verdict::Basis && exponents(cert) == std::vector<int>(static_cast<std::size_t>(g.rank), 0);
        return std::vector<CheckRecord>{{"saito.coordinate-frame",
                                         "the coordinate fields form a basis at multiplicity zero with all exponents zero",
                                         ok, to_json(cert)}};
    });
    tasks.push_back([&g, &fr] {
        auto cert = saito_check(frame_to_x(g, fr, fr.eta), g, mult_constant(g, 1));
        bool ok = cert.verdict == Verdict::Basis && exponents(cert) == g.coexponents;
        return std::vector<CheckRecord>{{"saito.invariant-frame",
                                         "the flat frame is a basis at constant multiplicity one and its exponents are the coexponents",
                                         ok, to_json(cert)}};
    });
    tasks.push_back([&g] {
        auto dx = coordinate_fields(g.rank);
        dx.back() = dx.front();
        auto cert = saito_check(dx, g, mult_constant(g, 0));
        return std::vector<CheckRecord>{{"saito.dependent-rejected",
                                         "a linearly dependent tuple of members is rejected by the determinant comparison",
                                         cert.verdict == Verdict::NotBasis, to_json(cert)}};
    });
    tasks.push_back([&g] {
        auto dx = coordinate_fields(g.rank);
        const RatFunc a0{g.hyperplanes.front().alpha.to_poly()};
        for (auto& f : dx) f = vf_scale(f, a0);
        auto cert = saito_check(dx, g, mult_constant(g, 0));
        return std::vector<CheckRecord>{{"saito.overscaled-rejected",
                                         "scaling every element of a basis by a hyperplane form inflates the determinant past the target",
                                         cert.verdict == Verdict::NotBasis, to_json(cert)}};
    });
    for (int k = k_min; k <= k_max; ++k)
        tasks.push_back([&g, &fr, k] {
            auto b = xi(g, fr, k);
            auto cert = saito_check(b.fields, g, mult_linear(g, -k, 1));
            auto want = b.pdegs;
            std::sort(want.begin(), want.end());
            bool ok = cert.verdict == Verdict::Basis && exponents(cert) == want;
            return std::vector<CheckRecord>{{"saito.window-layer.k=" + std::to_string(k),
                                             "the k-th covariant frame is a basis one level above -k*omega with exponents shifted by k times h",
                                             ok, to_json(cert)}};
        });
}

void hodge_tasks(const GroupData& g, const FlatFrame& fr, int k_min, int k_max, std::vector<Task>& tasks) {
    tasks.push_back([&g, &fr] {
        const int l = g.rank;
        bool shape = true;
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                Poly d = fr.Meta(i, j).partial(l - 1);
                Poly want = i == j ? Poly::constant(l, CycNum(1)) : Poly(l);
                shape = shape && d == want && fr.Mprime(i, j).partial(l - 1) == Poly(l);
            }
        bool residue = true;
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                CycNum want = i == j ? rat_cyc(g.exponents[static_cast<std::size_t>(i)], g.h) - CycNum(1) : CycNum(0);
                residue = residue && fr.Binf(i, j) == want;
            }
        int dl = 0;
        bool monic = fr.Delta.is_weighted_homogeneous(g.degrees, &dl) && dl == g.rank * g.h;
        return std::vector<CheckRecord>{{"hodge.flat-frame",
                                         "the corrected invariants make the Saito matrix linear in the top variable with the "
                                         "constant diagonal residue prescribed by the exponents",
                                         shape && residue && monic, to_json(fr)}};
    });
    tasks.push_back([&g, &fr, k_min, k_max] {
        HodgeReport hr = verify_hodge(g, fr, k_min, k_max);
        std::vector<CheckRecord> recs;
        for (const auto& kr : hr.per_k) {
            bool ok = kr.basis_cert.verdict == Verdict::Basis && kr.exponents_match && kr.t_independent && kr.nabla_step_ok;
            for (bool b : kr.membership) ok = ok && b;
            for (bool b : kr.invariance) ok = ok && b;
            recs.push_back({"hodge.window-layer.k=" + std::to_string(kr.k),
                            "the covariant frame lies in the shifted module, is invariant under the group, certifies as a "
                            "basis with the predicted exponents, and the window rows stay independent over the small ring",
                            ok, to_json(kr)});
        }
        return recs;
    });
}

void universal_tasks(const GroupData& g, const FlatFrame& fr, int k_min, int k_max, std::vector<Task>& tasks) {
    for (int k = k_min; k <= k_max; ++k)
        tasks.push_back([&g, &fr, k] {
            auto cert = check_euler_universal(g, fr, k);
            return std::vector<CheckRecord>{{"universal.euler-shift.k=" + std::to_string(k),
                                             "the k-th covariant power of the Euler field is universal at -k*omega",
                                             cert.universal, to_json(cert)}};
        });
    for (int k = std::max(k_min, 0); k <= k_max; ++k)
        tasks.push_back([&g, &fr, k] {
            auto rep = invariant_part_collapse(g, fr, k);
            return std::vector<CheckRecord>{{"universal.invariant-collapse.k=" + std::to_string(k),
                                             "group averages of the basis at -k*omega land one level higher while witness fields "
                                             "separate the two modules",
                                             rep.all_pass, to_json(rep)}};
        });
    for (int k = std::max(k_min, 0); k <= k_max - 1; ++k)
        tasks.push_back([&g, &fr, k] {
            auto sc = shifted_universality(g, fr, k);
            return std::vector<CheckRecord>{{"universal.shift-step.k=" + std::to_string(k),
                                             "universality moves one multiplicity step up along the primitive antiderivative with a "
                                             "constant-determinant transition matrix over the small ring",
                                             sc.all_pass, to_json(sc)}};
        });
    tasks.push_back([&g, &fr] {
        auto cert = check_euler_universal(g, fr, -2);
        if (!cert.universal)
            return std::vector<CheckRecord>{{"universal.transport",
                                             "transporting the invariant coordinate frame along the doubly shifted Euler field "
                                             "yields a basis with exponents raised by the Coxeter number",
                                             false, to_json(cert)}};
        auto res = transported_basis(g, cert, mult_linear(g, -1, 1), dt_fields(g, fr));
        std::vector<int> want = g.coexponents;
        for (auto& e : want) e += g.h;
        bool ok = res.verdict == Verdict::Basis && exponents(res) == want;
        return std::vector<CheckRecord>{{"universal.transport",
                                         "transporting the invariant coordinate frame along the doubly shifted Euler field "
                                         "yields a basis with exponents raised by the Coxeter number",
                                         ok, to_json(res)}};
    });
}

} // namespace

Suite parse_suite(const std::string& name) {
    if (name == "saito") return Suite::Saito;
    if (name == "hodge") return Suite::Hodge;
    if (name == "universal") return Suite::Universal;
    if (name == "all") return Suite::All;
    throw usage_error("unknown suite: " + name + " (expected saito, hodge, universal, or all)");
}

std::string suite_name(Suite s) {
    switch (s) {
    case Suite::Saito: return "saito";
    case Suite::Hodge: return "hodge";
    case Suite::Universal: return "universal";
    default: return "all";
    }
}

std::pair<int, int> default_window(const GroupData& g) {
    return g.rank <= 2 ? std::pair<int, int>{-2, 2} : std::pair<int, int>{-1, 1};
}

RunReport run_suite(const GroupData& g, Suite suite, int k_min, int k_max, int threads) {
    if (k_min > k_max) throw usage_error("the filtration window is empty: k-min exceeds k-max");
    const FlatFrame fr = flatten(g);
    std::vector<Task> tasks;
    catalog_tasks(g, tasks);
    if (suite == Suite::Saito || suite == Suite::All) saito_tasks(g, fr, k_min, k_max, tasks);
    if (suite == Suite::Hodge || suite == Suite::All) hodge_tasks(g, fr, k_min, k_max, tasks);
    if (suite == Suite::Universal || suite == Suite::All) universal_tasks(g, fr, k_min, k_max, tasks);

    RunReport rep;
    rep.group = g.name;
    rep.suite = suite;
    rep.k_min = k_min;
    rep.k_max = k_max;
    rep.checks = run_tasks(tasks, threads);
    rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckRecord& c) { return c.pass; });
    return rep;
}

json to_json(const RunReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"id", c.id},
                              {"statement", c.statement},
                              {"verdict", c.pass ? "pass" : "fail"},
                              {"witness", c.witness}});
    return json{{"schema_version", report_schema_version},
                {"tool", "logarr"},
                {"tool_version", tool_version},
                {"group", r.group},
                {"suite", suite_name(r.suite)},
                {"k_min", r.k_min},
                {"k_max", r.k_max},
                {"checks", checks},
                {"all_pass", r.all_pass}};
}

} // namespace logarr
