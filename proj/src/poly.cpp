#include "logarr/poly.hpp"

#include <numeric>
#include <sstream>

#include "logarr/errors.hpp"

namespace logarr {

Mono Mono::of(std::vector<int> exps) {
    Mono m;
    m.deg = std::accumulate(exps.begin(), exps.end(), 0);
    m.e = std::move(exps);
    return m;
}

Poly Poly::constant(int nvars, const CycNum& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.t_.emplace(Mono::of(std::vector<int>(nvars, 0)), c);
    return p;
}

Poly Poly::variable(int nvars, int i) {
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e), CycNum(1));
}

Poly Poly::monomial(int nvars, std::vector<int> exps, const CycNum& c) {
    if (static_cast<int>(exps.size()) != nvars) throw math_error("Poly::monomial: exponent arity mismatch");
    Poly p(nvars);
    if (!c.is_zero()) p.t_.emplace(Mono::of(std::move(exps)), c);
    return p;
}

std::optional<int> Poly::degree() const {
    if (t_.empty()) return std::nullopt;
    return t_.rbegin()->first.deg;
}

bool Poly::is_homogeneous(int* deg_out) const {
    if (t_.empty()) {
        if (deg_out) *deg_out = 0;
        return true;
    }
    int d = t_.begin()->first.deg;
    if (t_.rbegin()->first.deg != d) return false;
    if (deg_out) *deg_out = d;
    return true;
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.deg == 0);
}

CycNum Poly::constant_value() const {
    if (t_.empty()) return CycNum(0);
    if (!is_constant()) throw math_error("Poly::constant_value: polynomial is not constant");
    return t_.begin()->second;
}

const CycNum& Poly::leading_coeff() const {
    if (t_.empty()) throw math_error("leading_coeff of zero polynomial");
    return t_.rbegin()->second;
}

const Mono& Poly::leading_mono() const {
    if (t_.empty()) throw math_error("leading_mono of zero polynomial");
    return t_.rbegin()->first;
}

void Poly::add_term(const Mono& m, const CycNum& c) {
    auto it = t_.find(m);
    if (it == t_.end()) {
        if (!c.is_zero()) t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

Poly Poly::operator-() const {
    Poly out(nvars_);
    for (const auto& [m, c] : t_) out.t_.emplace(m, -c);
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    if (nvars_ != o.nvars_) throw math_error("Poly::+: arity mismatch");
    Poly out = *this;
    for (const auto& [m, c] : o.t_) out.add_term(m, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    if (nvars_ != o.nvars_) throw math_error("Poly::-: arity mismatch");
    Poly out = *this;
    for (const auto& [m, c] : o.t_) out.add_term(m, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw math_error("Poly::*: arity mismatch");
    Poly out(nvars_);
    for (const auto& [ma, ca] : t_) {
        for (const auto& [mb, cb] : o.t_) {
            Mono m;
            m.deg = ma.deg + mb.deg;
            m.e.resize(nvars_);
            for (int i = 0; i < nvars_; ++i) m.e[i] = ma.e[i] + mb.e[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly Poly::operator*(const CycNum& c) const {
    if (c.is_zero()) return Poly(nvars_);
    Poly out(nvars_);
    for (const auto& [m, a] : t_) out.t_.emplace(m, a * c);
    return out;
}

Poly Poly::pow(unsigned k) const {
    Poly acc = Poly::constant(nvars_, CycNum(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1u) acc *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return acc;
}

Poly Poly::partial(int i) const {
    Poly out(nvars_);
    for (const auto& [m, c] : t_) {
        if (m.e[i] == 0) continue;
        Mono d = m;
        d.deg -= 1;
        d.e[i] -= 1;
        out.add_term(d, c * CycNum(m.e[i]));
    }
    return out;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw math_error("Poly::substitute: arity mismatch");
    int out_nvars = images.empty() ? 0 : images[0].nvars();
    for (const auto& g : images)
        if (g.nvars() != out_nvars) throw math_error("Poly::substitute: image arity mismatch");
    /* per-variable power cache */
    std::vector<std::vector<Poly>> pows(nvars_);
    auto power = [&](int i, int k) -> const Poly& {
        auto& pv = pows[i];
        if (pv.empty()) pv.push_back(Poly::constant(out_nvars, CycNum(1)));
        while (static_cast<int>(pv.size()) <= k) pv.push_back(pv.back() * images[i]);
        return pv[k];
    };
    Poly out(out_nvars);
    for (const auto& [m, c] : t_) {
        Poly term = Poly::constant(out_nvars, c);
        for (int i = 0; i < nvars_; ++i)
            if (m.e[i] > 0) term *= power(i, m.e[i]);
        out += term;
    }
    return out;
}

Poly Poly::substitute_linear(const std::vector<std::vector<CycNum>>& a) const {
    std::vector<Poly> images;
    images.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        Poly img(nvars_);
        for (int j = 0; j < nvars_; ++j) {
            std::vector<int> e(nvars_, 0);
            e[j] = 1;
            img.add_term(Mono::of(std::move(e)), a[i][j]);
        }
        images.push_back(std::move(img));
    }
    return substitute(images);
}

CycNum Poly::eval(const std::vector<CycNum>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw math_error("Poly::eval: arity mismatch");
    CycNum acc(0);
    for (const auto& [m, c] : t_) {
        CycNum v = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < m.e[i]; ++k) v *= point[i];
        acc += v;
    }
    return acc;
}

Poly Poly::monic() const {
    if (t_.empty()) return *this;
    return *this * leading_coeff().inv();
}

std::optional<int> Poly::weighted_degree(const std::vector<int>& w) const {
    if (t_.empty()) return std::nullopt;
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : t_) {
        int d = 0;
        for (int i = 0; i < nvars_; ++i) d += w[i] * m.e[i];
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

bool Poly::is_weighted_homogeneous(const std::vector<int>& w, int* deg_out) const {
    if (t_.empty()) {
        if (deg_out) *deg_out = 0;
        return true;
    }
    std::optional<int> seen;
    for (const auto& [m, c] : t_) {
        int d = 0;
        for (int i = 0; i < nvars_; ++i) d += w[i] * m.e[i];
        if (seen && *seen != d) return false;
        seen = d;
    }
    if (deg_out) *deg_out = *seen;
    return true;
}

std::string Poly::str(const std::string& var_prefix) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string cs = c.str();
        bool negated = false;
        if (c.is_rational() && c.to_rational() < 0) {
            negated = true;
            cs = (-c).str();
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        first = false;
        bool has_vars = m.deg > 0;
        bool unit = has_vars && cs == "1";
        bool needs_parens = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (!unit) {
            if (needs_parens && has_vars) os << "(" << cs << ")";
            else os << cs;
        }
        bool first_var = true;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!first_var || !unit) os << "*";
            first_var = false;
            os << var_prefix << (i + 1);
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
    }
    return os.str();
}

std::optional<Poly> exact_divide(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw division_by_zero();
    Poly r = f;
    Poly q(f.nvars());
    const Mono& gl = g.leading_mono();
    const CycNum gc_inv = g.leading_coeff().inv();
    while (!r.is_zero()) {
        const Mono& rl = r.leading_mono();
        Mono d;
        d.e.resize(rl.e.size());
        bool divides = rl.deg >= gl.deg;
        if (divides) {
            for (std::size_t i = 0; i < rl.e.size(); ++i) {
                d.e[i] = rl.e[i] - gl.e[i];
                if (d.e[i] < 0) { divides = false; break; }
            }
        }
        if (!divides) return std::nullopt;
        d.deg = rl.deg - gl.deg;
        CycNum c = r.leading_coeff() * gc_inv;
        Poly t = Poly::monomial(f.nvars(), d.e, c);
        q += t;
        r -= t * g;
    }
    return q;
}

int valuation(const Poly& f, const Poly& alpha) {
    if (alpha.is_zero() || alpha.is_constant()) throw math_error("valuation: divisor must be nonconstant");
    if (f.is_zero()) return VAL_INFINITY;
    int v = 0;
    Poly r = f;
    while (true) {
        auto q = exact_divide(r, alpha);
        if (!q) return v;
        r = std::move(*q);
        ++v;
    }
}

bool LinForm::is_zero() const {
    for (const auto& c : a)
        if (!c.is_zero()) return false;
    return true;
}

Poly LinForm::to_poly() const {
    Poly p(nvars());
    for (int i = 0; i < nvars(); ++i) {
        if (a[i].is_zero()) continue;
        std::vector<int> e(nvars(), 0);
        e[i] = 1;
        p.add_term(Mono::of(std::move(e)), a[i]);
    }
    return p;
}

LinForm LinForm::normalized() const {
    for (const auto& c : a) {
        if (!c.is_zero()) {
            LinForm out;
            CycNum inv = c.inv();
            out.a.reserve(a.size());
            for (const auto& x : a) out.a.push_back(x * inv);
            return out;
        }
    }
    throw math_error("LinForm::normalized: zero form");
}

LinForm LinForm::conj() const {
    LinForm out;
    out.a.reserve(a.size());
    for (const auto& x : a) out.a.push_back(x.conj());
    return out;
}

} // namespace logarr
