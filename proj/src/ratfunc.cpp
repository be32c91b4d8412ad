#include "logarr/ratfunc.hpp"

#include <algorithm>

#include "logarr/errors.hpp"

namespace logarr {

namespace {

/* exponent-wise minimum over all terms */
std::vector<int> monomial_content(const Poly& p) {
    std::vector<int> m(p.nvars(), 0);
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        if (first) {
            m = mono.e;
            first = false;
        } else {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], mono.e[i]);
        }
    }
    return m;
}

Poly shift_down(const Poly& p, const std::vector<int>& by) {
    Poly out(p.nvars());
    for (const auto& [mono, c] : p.terms()) {
        Mono m;
        m.e.resize(mono.e.size());
        m.deg = 0;
        for (std::size_t i = 0; i < mono.e.size(); ++i) {
            m.e[i] = mono.e[i] - by[i];
            m.deg += m.e[i];
        }
        out.add_term(m, c);
    }
    return out;
}

} // namespace

RatFunc::RatFunc(const Poly& num) : num_(num), den_(Poly::constant(num.nvars(), CycNum(1))) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero();
    if (num_.nvars() != den_.nvars()) throw math_error("RatFunc: arity mismatch");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.nvars(), CycNum(1));
        return;
    }
    auto cn = monomial_content(num_);
    auto cd = monomial_content(den_);
    std::vector<int> common(cn.size());
    bool any = false;
    for (std::size_t i = 0; i < cn.size(); ++i) {
        common[i] = std::min(cn[i], cd[i]);
        any = any || common[i] > 0;
    }
    if (any) {
        num_ = shift_down(num_, common);
        den_ = shift_down(den_, common);
    }
    CycNum lead = den_.leading_coeff();
    if (!(lead == CycNum(1))) {
        CycNum inv = lead.inv();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Poly RatFunc::to_poly() const {
    if (!is_polynomial()) throw math_error("RatFunc::to_poly: nontrivial denominator " + den_.str());
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    if (auto q = exact_divide(o.den_, den_)) return RatFunc(num_ * *q + o.num_, o.den_);
    if (auto q = exact_divide(den_, o.den_)) return RatFunc(num_ + o.num_ * *q, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw division_by_zero();
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RatFunc RatFunc::partial(int i) const {
    Poly n = num_.partial(i) * den_ - num_ * den_.partial(i);
    return RatFunc(std::move(n), den_ * den_);
}

RatFunc RatFunc::substitute(const std::vector<Poly>& images) const {
    Poly d = den_.substitute(images);
    if (d.is_zero()) throw division_by_zero();
    return RatFunc(num_.substitute(images), std::move(d));
}

RatFunc RatFunc::reduced_by(const std::vector<Poly>& candidates) const {
    Poly n = num_, d = den_;
    for (const auto& c : candidates) {
        if (c.is_zero() || c.is_constant()) continue;
        while (true) {
            auto qd = exact_divide(d, c);
            if (!qd) break;
            auto qn = exact_divide(n, c);
            if (!qn) break;
            n = std::move(*qn);
            d = std::move(*qd);
        }
    }
    return RatFunc(std::move(n), std::move(d));
}

std::optional<int> RatFunc::hdeg() const {
    if (num_.is_zero()) return std::nullopt;
    int dn = 0, dd = 0;
    if (!num_.is_homogeneous(&dn) || !den_.is_homogeneous(&dd)) return std::nullopt;
    return dn - dd;
}

std::optional<int> RatFunc::weighted_hdeg(const std::vector<int>& w) const {
    if (num_.is_zero()) return std::nullopt;
    int dn = 0, dd = 0;
    if (!num_.is_weighted_homogeneous(w, &dn) || !den_.is_weighted_homogeneous(w, &dd)) return std::nullopt;
    return dn - dd;
}

std::string RatFunc::str(const std::string& var_prefix) const {
    if (is_polynomial()) return num_.str(var_prefix);
    return "(" + num_.str(var_prefix) + ")/(" + den_.str(var_prefix) + ")";
}

} // namespace logarr
