#include "logarr/json_io.hpp"

#include "logarr/errors.hpp"

namespace logarr {

json to_json(const CycNum& c) {
    json coeffs = json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(rat_str(r));
    return json{{"order", c.order()}, {"coeffs", coeffs}};
}

CycNum cycnum_from_json(const json& j) {
    if (j.is_number_integer()) return CycNum(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return CycNum(rat_parse(j.get<std::string>()));
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw usage_error("cyclotomic number JSON must be {\"order\":N,\"coeffs\":[..]}");
    unsigned order = j.at("order").get<unsigned>();
    std::vector<Rat> coeffs;
    for (const auto& e : j.at("coeffs")) {
        if (e.is_number_integer())
            coeffs.emplace_back(static_cast<long>(e.get<long long>()));
        else
            coeffs.push_back(rat_parse(e.get<std::string>()));
    }
    return CycNum::from_coeffs(order, std::move(coeffs));
}

json to_json(const Poly& p) {
    json out = json::array();
    const auto& t = p.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it)
        out.push_back(json{{"exp", it->first.e}, {"coeff", to_json(it->second)}});
    return out;
}

Poly poly_from_json(const json& j, int nvars) {
    if (!j.is_array()) throw usage_error("polynomial JSON must be a list of terms");
    Poly p(nvars);
    for (const auto& term : j) {
        auto exps = term.at("exp").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != nvars) throw usage_error("term arity mismatch in polynomial JSON");
        p.add_term(Mono::of(std::move(exps)), cycnum_from_json(term.at("coeff")));
    }
    return p;
}

json to_json(const RatFunc& f) { return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RatFunc ratfunc_from_json(const json& j, int nvars) {
    if (j.is_array()) return RatFunc(poly_from_json(j, nvars)); // bare polynomial accepted
    return RatFunc(poly_from_json(j.at("num"), nvars), poly_from_json(j.at("den"), nvars));
}

json to_json(const VField& v) {
    json coeffs = json::array();
    for (const auto& c : v.coeffs) coeffs.push_back(to_json(c));
    json pdeg;
    if (v.pdeg) pdeg = *v.pdeg;
    return json{{"frame", frame_name(v.frame)}, {"coeffs", coeffs}, {"pdeg", pdeg}};
}

VField vfield_from_json(const json& j, const std::vector<int>& weights) {
    std::string frame = j.at("frame").get<std::string>();
    const json& cj = j.at("coeffs");
    int nvars = static_cast<int>(cj.size());
    std::vector<RatFunc> coeffs;
    coeffs.reserve(cj.size());
    for (const auto& e : cj) coeffs.push_back(ratfunc_from_json(e, nvars));
    VField out;
    if (frame == "x")
        out = vfield_x(std::move(coeffs));
    else if (frame == "t")
        out = vfield_t(std::move(coeffs), weights);
    else
        throw usage_error("vector field frame must be \"x\" or \"t\"");
    if (j.contains("pdeg") && !j.at("pdeg").is_null()) {
        int claimed = j.at("pdeg").get<int>();
        if (!out.pdeg || *out.pdeg != claimed) throw usage_error("vector field pdeg tag does not match coefficients");
    }
    return out;
}

json to_json(const CMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(to_json(m(i, j2)));
        rows.push_back(row);
    }
    return rows;
}

CMat cmat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw usage_error("matrix JSON must be a nonempty array");
    if (j[0].is_array()) {
        int r = static_cast<int>(j.size());
        int c = static_cast<int>(j[0].size());
        CMat m(r, c, CycNum(0));
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(j[static_cast<std::size_t>(i)].size()) != c)
                throw usage_error("ragged matrix JSON");
            for (int k = 0; k < c; ++k)
                m(i, k) = cycnum_from_json(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
        }
        return m;
    }
    // flat row-major square matrix
    int n = 0;
    while (n * n < static_cast<int>(j.size())) ++n;
    if (n * n != static_cast<int>(j.size())) throw usage_error("flat matrix JSON must have a square length");
    CMat m(n, n, CycNum(0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            m(i, k) = cycnum_from_json(j[static_cast<std::size_t>(i * n + k)]);
    return m;
}

json to_json(const PMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(to_json(m(i, j2)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const Mult& m) { return json{{"values", m.v}}; }

json to_json(const BasisCert& cert) {
    json ders = json::array();
    for (const auto& d : cert.derivations) ders.push_back(to_json(d));
    json scalar;
    if (cert.scalar) scalar = to_json(*cert.scalar);
    json pdeg_sum;
    if (cert.pdeg_sum) pdeg_sum = *cert.pdeg_sum;
    return json{{"verdict", verdict_name(cert.verdict)},
                {"derivations", ders},
                {"determinant", to_json(cert.determinant)},
                {"qplus", to_json(cert.target.qplus)},
                {"qminus", to_json(cert.target.qminus)},
                {"scalar", scalar},
                {"homogeneous", cert.homogeneous},
                {"pdeg_sum", pdeg_sum}};
}

namespace {

json fields_json(const std::vector<VField>& fields) {
    json out = json::array();
    for (const auto& f : fields) out.push_back(to_json(f));
    return out;
}

json polys_json(const std::vector<Poly>& ps) {
    json out = json::array();
    for (const auto& p : ps) out.push_back(to_json(p));
    return out;
}

} // namespace

json to_json(const FlatFrame& fr) {
    return json{{"invariants", polys_json(fr.invariants)},
                {"eta", fields_json(fr.eta)},
                {"saito_matrix", to_json(fr.Meta)},
                {"saito_matrix_reduced", to_json(fr.Mprime)},
                {"residue", to_json(fr.Binf)},
                {"discriminant", to_json(fr.Delta)}};
}

json to_json(const XiBasis& b) {
    return json{{"k", b.k},
                {"fields", fields_json(b.fields)},
                {"fields_t", fields_json(b.fields_t)},
                {"pdegs", b.pdegs}};
}

json to_json(const HodgeKReport& r) {
    return json{{"k", r.k},
                {"membership", r.membership},
                {"invariance", r.invariance},
                {"basis_cert", to_json(r.basis_cert)},
                {"exponents", r.exponents},
                {"exponents_match", r.exponents_match},
                {"t_independence_minor", to_json(r.t_independence_minor)},
                {"t_independent", r.t_independent},
                {"decomposition_depth", r.decomposition_depth},
                {"decomposition_checked", r.decomposition_checked},
                {"nabla_step_ok", r.nabla_step_ok}};
}

json to_json(const HodgeReport& r) {
    json per_k = json::array();
    for (const auto& kr : r.per_k) per_k.push_back(to_json(kr));
    return json{{"group", r.group},
                {"k_min", r.k_min},
                {"k_max", r.k_max},
                {"per_k", per_k},
                {"all_pass", r.all_pass}};
}

json to_json(const UniversalCert& c) {
    return json{{"zeta", to_json(c.zeta)},
                {"nu", to_json(c.nu)},
                {"images", fields_json(c.images)},
                {"basis_cert", to_json(c.basis_cert)},
                {"member_shifted", c.member_shifted},
                {"valuations", c.valuations},
                {"valuations_exact", c.valuations_exact},
                {"universal", c.universal}};
}

json to_json(const CollapseReport& r) {
    return json{{"k", r.k},
                {"source", to_json(r.source)},
                {"averaged", fields_json(r.averaged)},
                {"averaged_member", r.averaged_member},
                {"witness_separates", r.witness_separates},
                {"all_pass", r.all_pass}};
}

json to_json(const ShiftCert& c) {
    return json{{"from", to_json(c.from)},
                {"to", to_json(c.to)},
                {"transition", to_json(c.transition)},
                {"det_transition", to_json(c.det_transition)},
                {"step_verified", c.step_verified},
                {"transition_in_tprime", c.transition_in_tprime},
                {"degrees_match", c.degrees_match},
                {"all_pass", c.all_pass}};
}

std::string canonical_dump(const json& j) { return j.dump(); }

} // namespace logarr
