#ifndef LOGARR_CYCLOTOMIC_HPP
#define LOGARR_CYCLOTOMIC_HPP

#include <complex>
#include <string>
#include <vector>

#include "logarr/rat.hpp"

namespace logarr {

unsigned euler_phi(unsigned n);

/* Phi_n as a dense monic coefficient vector, constant term first. Cached. */
const std::vector<Rat>& cyclotomic_polynomial(unsigned n);

/* Element of Q(zeta_N) in the power basis 1, z, ..., z^{phi(N)-1} taken
   modulo Phi_N. Values are created in the smallest field they arise in;
   binary operations lift both sides to the lcm order lazily. */
class CycNum {
  public:
    CycNum() : order_(1), c_(1, Rat(0)) {}
    CycNum(const Rat& r) : order_(1), c_(1, r) {}
    CycNum(long n) : order_(1), c_(1, Rat(n)) {}
    CycNum(int n) : order_(1), c_(1, Rat(n)) {}

    static CycNum root_of_unity(unsigned n, long k);
    /* coefficients in the power basis of Q(zeta_n); size must be phi(n) */
    static CycNum from_coeffs(unsigned n, std::vector<Rat> coeffs);

    unsigned order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat to_rational() const; // throws math_error when not rational

    CycNum operator-() const;
    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum operator/(const CycNum& o) const; // throws division_by_zero
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    CycNum& operator/=(const CycNum& o) { return *this = *this / o; }

    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    CycNum conj() const; // zeta_N -> zeta_N^{-1}
    CycNum inv() const;  // throws division_by_zero

    /* embed into Q(zeta_m); requires order() | m */
    CycNum lifted(unsigned m) const;

    std::complex<double> to_complex() const;
    std::string str() const;  // human-readable, symbol z<N>
    std::string key() const;  // canonical string for container keys

    /* total order for deterministic containers: by order, then coeffs */
    static int compare(const CycNum& a, const CycNum& b);

  private:
    unsigned order_;
    std::vector<Rat> c_;
    static CycNum reduced(unsigned n, std::vector<Rat> dense);
};

inline CycNum operator*(const Rat& r, const CycNum& a) { return CycNum(r) * a; }
inline CycNum operator+(const Rat& r, const CycNum& a) { return CycNum(r) + a; }

} // namespace logarr

#endif
