#ifndef LOGARR_MULTIARR_HPP
#define LOGARR_MULTIARR_HPP

#include <optional>
#include <string>
#include <vector>

#include "logarr/group.hpp"

namespace logarr {

/* integer multiplicity per hyperplane of a fixed arrangement; zero means the
   hyperplane is disregarded except for the tangency conditions */
struct Mult {
    std::vector<int> v; // indexed like GroupData::hyperplanes

    int total() const;
    bool operator==(const Mult& o) const { return v == o.v; }
    bool geq(const Mult& o) const; // pointwise
    std::string str() const;
};

Mult mult_constant(const GroupData& g, int c);
Mult mult_omega(const GroupData& g);          // nu(H) = e_H
Mult mult_linear(const GroupData& g, int k, int c); // k*omega + c

/* "k*omega+c" mini-language ("omega", "-2*omega+1", "3", ...) or a
   comma-separated list of per-orbit integers */
Mult parse_mult(const GroupData& g, const std::string& text);

struct Qdata {
    Poly qplus, qminus; // coprime by construction: one factor set per hyperplane
    RatFunc ratio() const { return RatFunc(qplus, qminus); }
};

Qdata qdata(const GroupData& g, const Mult& nu);

/* basis of { beta : I*(alpha, beta) = 0 } w.r.t. the standard Hermitian
   form, by elimination pivoting on the first nonzero coordinate */
std::vector<LinForm> perp_basis(const LinForm& alpha);

/* normal derivation: sum_i conj(a_i) d/dx_i */
VField normal_field(const GroupData& g, std::size_t h_idx);

/* order of vanishing along alpha; VAL_INFINITY for 0; negative at poles */
int rat_valuation(const RatFunc& f, const Poly& alpha);

/* coefficients lie in the localization of S at the arrangement polynomial */
bool denominators_along_arrangement(const VField& theta, const GroupData& g);

/* tangency along every hyperplane: theta(beta) has no pole on H for each
   beta perpendicular to alpha_H, and coefficients only have poles on A */
bool member_inf(const VField& theta, const GroupData& g);

/* member_inf plus valuation(theta(alpha_H), alpha_H) >= nu(H) */
bool member(const VField& theta, const GroupData& g, const Mult& nu);

enum class Verdict { Basis, NotBasis, NotMembers };
std::string verdict_name(Verdict v);

struct BasisCert {
    std::vector<VField> derivations;
    RatFunc determinant;
    Qdata target;
    std::optional<CycNum> scalar; // determinant = scalar * qplus / qminus
    Verdict verdict = Verdict::NotBasis;
    bool homogeneous = false;
    std::optional<int> pdeg_sum;
};

/* generalized Saito criterion: membership, then determinant comparison
   against Q(A,nu); on homogeneous inputs the degree-count route is run as
   well and both routes must agree */
BasisCert saito_check(const std::vector<VField>& theta, const GroupData& g, const Mult& nu);

/* multiset of pdeg values of a certified homogeneous basis, ascending */
std::vector<int> exponents(const BasisCert& cert);

} // namespace logarr

#endif
