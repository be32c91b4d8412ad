#ifndef LOGARR_HODGE_HPP
#define LOGARR_HODGE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logarr/multiarr.hpp"

namespace logarr {

/* all exponent vectors a (over w.size() variables) with sum a_i w_i = d,
   lexicographically descending; weights must be positive */
std::vector<std::vector<int>> weighted_monomials(const std::vector<int>& w, int d);

/* Rewrites invariant polynomials in x as polynomials in a fixed system of
   algebraically independent homogeneous invariants, one exact linear solve
   per homogeneous degree. */
class InvariantRewriter {
  public:
    explicit InvariantRewriter(std::vector<Poly> invariants);

    const std::vector<Poly>& invariants() const { return inv_; }
    const std::vector<int>& weights() const { return w_; }

    /* f(x) = g(t_1,...,t_l); throws math_error when f is not a polynomial
       in the invariants (in particular when f is not W-invariant) */
    Poly rewrite(const Poly& f) const;

  private:
    std::vector<Poly> inv_;
    std::vector<int> w_; // degrees of the invariants
    int nx_ = 0;
    mutable std::map<std::vector<int>, Poly> cache_; // expansion of t^a in x
};

/* Coordinates t with M_eta = t_l * Id + M'(t'), eta_1 the scaled Euler
   field, and det M_eta the discriminant, monic of degree l in t_l. */
struct FlatFrame {
    std::vector<Poly> invariants; // corrected t_1..t_l as polynomials in x
    std::vector<VField> eta;      // t-frame, pdeg eta_j = e*_j
    PMat Meta;    // row i = eta_{l+1-i} applied to (t_1..t_l), over the t-variables
    PMat Mprime;  // Meta - t_l * Id; entries free of t_l
    CMat Binf;    // (1/h) diag(e_i) - Id; Binf + k*Id is invertible for every integer k
    Poly Delta;   // det Meta = the discriminant written in t
};

/* joint correction of the last invariant (t_l += p(t')) and of the
   derivation frame so that d(Meta)/dt_l is the identity matrix */
FlatFrame flatten(const GroupData& g);

/* d/dt_l in the x-frame through the bordered-Jacobian determinant formula;
   homogeneous with pdeg = -(h-1) */
VField primitive(const GroupData& g, const FlatFrame& fr);

/* nabla_D^k applied to the flat frame, index j = 1..l */
struct XiBasis {
    int k = 0;
    std::vector<VField> fields;   // x-frame
    std::vector<VField> fields_t; // the same fields in the t-frame
    std::vector<int> pdegs;       // e*_j - k*h
};

/* fields xi_j^(k) = nabla_D^k(eta_j): one-step matrices -Minv(Binf + m*Id)
   going up, their inverses going down; for k >= 1 the result is cross-checked
   against direct iterated covariant differentiation */
XiBasis xi(const GroupData& g, const FlatFrame& fr, int k);

struct HodgeKReport {
    int k = 0;
    std::vector<bool> membership; // xi_j^(k) lies in D(A, -k*omega + 1)
    std::vector<bool> invariance; // xi_j^(k) is fixed by every generator
    BasisCert basis_cert;         // saito_check at nu = -k*omega + 1
    std::vector<int> exponents;   // from the certificate, ascending
    bool exponents_match = false; // equals {e*_j - k*h}
    Poly t_independence_minor;    // nonzero maximal minor of the stacked window rows up to k
    bool t_independent = false;
    int decomposition_depth = 0;  // lowest index p used writing t_l * xi_j^(k) over the window
    bool decomposition_checked = false; // false only at k = k_min (needs index k_min - 1)
    bool nabla_step_ok = true;    // nabla_D xi^(k) = xi^(k+1) (last k: vacuous)
};

struct HodgeReport {
    std::string group;
    int k_min = 0, k_max = 0;
    std::vector<HodgeKReport> per_k;
    bool all_pass = false;
};

/* membership + invariance, Saito certificates, T-independence of the window,
   decomposition of t_l * xi over lower layers, and the one-step filtration
   moves, for every k in [k_min, k_max] */
HodgeReport verify_hodge(const GroupData& g, const FlatFrame& fr, int k_min, int k_max);

} // namespace logarr

#endif
