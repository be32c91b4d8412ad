#ifndef LOGARR_RATFUNC_HPP
#define LOGARR_RATFUNC_HPP

#include <optional>
#include <string>
#include <vector>

#include "logarr/poly.hpp"

namespace logarr {

/* Quotient of two Polys. No general gcd is computed: the denominator is kept
   monic, monomial content is cancelled eagerly, and any further cancellation
   happens through reduce() against caller-supplied candidate factors. */
class RatFunc {
  public:
    RatFunc() : num_(0), den_(Poly::constant(0, CycNum(1))) {}
    explicit RatFunc(const Poly& num);
    RatFunc(Poly num, Poly den);
    static RatFunc constant(int nvars, const CycNum& c) { return RatFunc(Poly::constant(nvars, c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Poly to_poly() const; // throws math_error unless is_polynomial()

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc operator*(const CycNum& c) const { return RatFunc(num_ * c, den_); }

    bool operator==(const RatFunc& o) const; // cross-multiplied, representation independent
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc partial(int i) const;
    RatFunc substitute(const std::vector<Poly>& images) const;

    /* cancel every candidate factor common to num and den, repeatedly */
    RatFunc reduced_by(const std::vector<Poly>& candidates) const;

    /* deg num - deg den when both are homogeneous; nullopt otherwise or for 0 */
    std::optional<int> hdeg() const;
    std::optional<int> weighted_hdeg(const std::vector<int>& w) const;

    std::string str(const std::string& var_prefix = "x") const;

  private:
    Poly num_, den_;
    void normalize();
};

inline RatFunc operator*(const CycNum& c, const RatFunc& f) { return f * c; }

} // namespace logarr

#endif
