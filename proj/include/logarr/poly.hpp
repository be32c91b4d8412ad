#ifndef LOGARR_POLY_HPP
#define LOGARR_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logarr/cyclotomic.hpp"

namespace logarr {

/* valuation() result standing in for +infinity (valuation of 0) */
inline constexpr int VAL_INFINITY = 1 << 28;

struct Mono {
    int deg = 0;              // cached total degree
    std::vector<int> e;       // exponent vector

    static Mono of(std::vector<int> exps);
    bool operator==(const Mono& o) const { return e == o.e; }
};

/* graded lexicographic, ascending; map::rbegin() is the leading term */
struct MonoGrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.e < b.e;
    }
};

class Poly {
  public:
    using TermMap = std::map<Mono, CycNum, MonoGrlexLess>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {}
    static Poly constant(int nvars, const CycNum& c);
    static Poly variable(int nvars, int i);
    static Poly monomial(int nvars, std::vector<int> exps, const CycNum& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    /* nullopt is the degree of the zero polynomial */
    std::optional<int> degree() const;
    bool is_homogeneous(int* deg_out = nullptr) const;
    bool is_constant() const;
    CycNum constant_value() const; // 0 for the zero polynomial; throws if nonconstant

    const CycNum& leading_coeff() const; // throws math_error on zero
    const Mono& leading_mono() const;    // throws math_error on zero

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const CycNum& c) const;
    Poly pow(unsigned k) const;
    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly partial(int i) const;

    /* substitute variable i -> images[i]; images share a common nvars */
    Poly substitute(const std::vector<Poly>& images) const;
    /* x_i -> sum_j a[i][j] x_j */
    Poly substitute_linear(const std::vector<std::vector<CycNum>>& a) const;
    CycNum eval(const std::vector<CycNum>& point) const;

    /* divide by the leading coefficient */
    Poly monic() const;

    /* weighted total degree (weight[i] per variable); nullopt for 0 */
    std::optional<int> weighted_degree(const std::vector<int>& w) const;
    bool is_weighted_homogeneous(const std::vector<int>& w, int* deg_out = nullptr) const;

    void add_term(const Mono& m, const CycNum& c); // accumulate, drop zeros

    std::string str(const std::string& var_prefix = "x") const;

  private:
    int nvars_;
    TermMap t_;
};

inline Poly operator*(const CycNum& c, const Poly& p) { return p * c; }

/* single-divisor division; nullopt when the remainder is nonzero */
std::optional<Poly> exact_divide(const Poly& f, const Poly& g);

/* largest k with alpha^k | f; VAL_INFINITY for f = 0; requires deg(alpha) >= 1 */
int valuation(const Poly& f, const Poly& alpha);

/* linear form sum a_i x_i */
struct LinForm {
    std::vector<CycNum> a;

    int nvars() const { return static_cast<int>(a.size()); }
    bool is_zero() const;
    Poly to_poly() const;
    LinForm normalized() const; // first nonzero coordinate scaled to 1
    LinForm conj() const;
    bool operator==(const LinForm& o) const { return a == o.a; }
    std::string str(const std::string& var_prefix = "x") const { return to_poly().str(var_prefix); }
};

} // namespace logarr

#endif
