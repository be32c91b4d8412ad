#include "logarr/vfield.hpp"

#include <sstream>

#include "logarr/errors.hpp"

namespace logarr {

std::string frame_name(Frame f) { return f == Frame::x ? "x" : "t"; }

bool VField::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

bool VField::operator==(const VField& o) const {
    if (frame != o.frame || coeffs.size() != o.coeffs.size()) return false;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != o.coeffs[i]) return false;
    return true;
}

std::string VField::str() const {
    std::string pre = frame == Frame::x ? "x" : "t";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs[i].str(pre) << ")*d/d" << pre << (i + 1);
    }
    if (first) os << "0";
    return os.str();
}

namespace {

std::optional<int> common_pdeg(const std::vector<RatFunc>& coeffs, const std::vector<int>& unit_weights,
                               const std::vector<int>& var_weights) {
    std::optional<int> common;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        auto h = var_weights.empty() ? coeffs[i].hdeg() : coeffs[i].weighted_hdeg(var_weights);
        if (!h) return std::nullopt;
        int p = *h - unit_weights[i] + 1;
        if (common && *common != p) return std::nullopt;
        common = p;
    }
    return common;
}

} // namespace

namespace {
void check_coeff_arity(const std::vector<RatFunc>& coeffs) {
    for (const auto& c : coeffs)
        if (c.nvars() != static_cast<int>(coeffs.size()))
            throw usage_error("vector field coefficient arity must equal the number of variables");
}
} // namespace

VField vfield_x(std::vector<RatFunc> coeffs) {
    check_coeff_arity(coeffs);
    VField v;
    v.frame = Frame::x;
    std::vector<int> unit(coeffs.size(), 1);
    v.pdeg = common_pdeg(coeffs, unit, {});
    v.coeffs = std::move(coeffs);
    return v;
}

VField vfield_t(std::vector<RatFunc> coeffs, const std::vector<int>& weights) {
    if (coeffs.size() != weights.size()) throw math_error("vfield_t: weight arity mismatch");
    check_coeff_arity(coeffs);
    VField v;
    v.frame = Frame::t;
    v.pdeg = common_pdeg(coeffs, weights, weights);
    v.coeffs = std::move(coeffs);
    return v;
}

VField vfield_unit(Frame frame, int nvars, int i, const std::vector<int>& weights) {
    std::vector<RatFunc> c(nvars, RatFunc(Poly(nvars)));
    c[i] = RatFunc(Poly::constant(nvars, CycNum(1)));
    return frame == Frame::x ? vfield_x(std::move(c)) : vfield_t(std::move(c), weights);
}

bool validate_pdeg(const VField& v, const std::vector<int>& weights) {
    std::vector<int> unit = weights;
    if (v.frame == Frame::x) unit.assign(v.coeffs.size(), 1);
    else if (unit.size() != v.coeffs.size())
        throw math_error("validate_pdeg: t-frame needs weights");
    auto p = common_pdeg(v.coeffs, unit, v.frame == Frame::x ? std::vector<int>{} : weights);
    return p == v.pdeg;
}

RatFunc apply(const VField& v, const RatFunc& f) {
    if (f.nvars() != v.nvars()) throw frame_mismatch("apply: arity " + std::to_string(f.nvars()) +
                                                     " vs " + std::to_string(v.nvars()));
    RatFunc acc = RatFunc(Poly(v.nvars()));
    for (int i = 0; i < v.nvars(); ++i) {
        if (v.coeffs[i].is_zero()) continue;
        acc += v.coeffs[i] * f.partial(i);
    }
    return acc;
}

RatFunc apply(const VField& v, const Poly& f) { return apply(v, RatFunc(f)); }

VField nabla(const VField& theta, const VField& phi) {
    if (phi.frame != Frame::x) throw frame_mismatch("nabla: second argument must be in the x-frame");
    if (theta.frame != Frame::x) throw frame_mismatch("nabla: first argument must be in the x-frame");
    std::vector<RatFunc> out;
    out.reserve(phi.coeffs.size());
    for (const auto& c : phi.coeffs) out.push_back(apply(theta, c));
    return vfield_x(std::move(out));
}

VField vf_add(const VField& a, const VField& b) {
    if (a.frame != b.frame || a.nvars() != b.nvars()) throw frame_mismatch("vf_add");
    std::vector<RatFunc> out;
    out.reserve(a.coeffs.size());
    for (int i = 0; i < a.nvars(); ++i) out.push_back(a.coeffs[i] + b.coeffs[i]);
    VField v;
    v.frame = a.frame;
    v.coeffs = std::move(out);
    if (a.pdeg && b.pdeg && *a.pdeg == *b.pdeg) v.pdeg = a.pdeg;
    else if (a.is_zero()) v.pdeg = b.pdeg;
    else if (b.is_zero()) v.pdeg = a.pdeg;
    return v;
}

VField vf_sub(const VField& a, const VField& b) { return vf_add(a, vf_scale(b, CycNum(-1))); }

VField vf_scale(const VField& a, const RatFunc& s, const std::vector<int>& weights) {
    std::vector<RatFunc> out;
    out.reserve(a.coeffs.size());
    for (const auto& c : a.coeffs) out.push_back(c * s);
    return a.frame == Frame::x ? vfield_x(std::move(out)) : vfield_t(std::move(out), weights);
}

VField vf_scale(const VField& a, const CycNum& c) {
    VField v = a;
    for (auto& x : v.coeffs) x = x * c;
    if (c.is_zero()) v.pdeg = std::nullopt;
    return v;
}

RMat saito_matrix(const std::vector<VField>& fields) {
    if (fields.empty()) throw math_error("saito_matrix: no fields");
    int n = fields[0].nvars();
    RMat m(static_cast<int>(fields.size()), n, RatFunc(Poly(n)));
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i].nvars() != n || fields[i].frame != fields[0].frame)
            throw frame_mismatch("saito_matrix: inconsistent fields");
        for (int j = 0; j < n; ++j) m(static_cast<int>(i), j) = fields[i].coeffs[j];
    }
    return m;
}

RatFunc wedge(const std::vector<VField>& fields) {
    RMat m = saito_matrix(fields);
    if (m.rows() != m.cols()) throw math_error("wedge: need exactly rank-many fields");
    return rmat_det(m);
}

RatFunc ratfunc_substitute_linear(const RatFunc& f, const CMat& a) {
    int n = a.rows();
    std::vector<Poly> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) {
        Poly img(n);
        for (int j = 0; j < n; ++j) {
            if (a(i, j).is_zero()) continue;
            std::vector<int> e(n, 0);
            e[j] = 1;
            img.add_term(Mono::of(std::move(e)), a(i, j));
        }
        images.push_back(std::move(img));
    }
    return f.substitute(images);
}

VField w_action(const VField& theta, const CMat& w, const CMat& w_inv) {
    if (theta.frame != Frame::x) throw frame_mismatch("w_action: x-frame only");
    int n = theta.nvars();
    std::vector<RatFunc> moved;
    moved.reserve(n);
    for (int j = 0; j < n; ++j) moved.push_back(ratfunc_substitute_linear(theta.coeffs[j], w_inv));
    std::vector<RatFunc> out(n, RatFunc(Poly(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (w(i, j).is_zero()) continue;
            out[i] += moved[j] * w(i, j);
        }
    return vfield_x(std::move(out));
}

VField frame_t_to_x(const VField& theta, const std::vector<Poly>& t_of_x, const RMat& jxt,
                    const std::vector<Poly>& reduce_candidates) {
    if (theta.frame != Frame::t) throw frame_mismatch("frame_t_to_x: expected t-frame input");
    int n = static_cast<int>(t_of_x.size());
    /* q_j written in x through the invariants, then p = jxt^T q */
    std::vector<RatFunc> q_x;
    q_x.reserve(n);
    for (const auto& q : theta.coeffs) q_x.push_back(q.substitute(t_of_x));
    std::vector<RatFunc> p(n, RatFunc(Poly(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (q_x[j].is_zero()) continue;
            p[i] += jxt(j, i) * q_x[j];
        }
        p[i] = p[i].reduced_by(reduce_candidates);
    }
    return vfield_x(std::move(p));
}

} // namespace logarr
