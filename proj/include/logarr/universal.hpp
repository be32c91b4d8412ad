#ifndef LOGARR_UNIVERSAL_HPP
#define LOGARR_UNIVERSAL_HPP

#include <vector>

#include "logarr/hodge.hpp"
#include "logarr/multiarr.hpp"

namespace logarr {

/* transport map of zeta: theta -> nabla_theta(zeta); both fields x-frame */
VField phi(const VField& zeta, const VField& theta);

/* Certificate that phi(zeta, -) maps the polynomial fields isomorphically
   onto D(A,nu).  Universality is equivalent to the finite conjunction:
   zeta in D(A,nu+1), the images of the coordinate fields a basis of
   D(A,nu), and valuation(zeta(alpha_H), alpha_H) = nu(H)+1 exactly for
   every H (zeta sits in no deeper layer, so no image drops multiplicity). */
struct UniversalCert {
    VField zeta;
    Mult nu;
    std::vector<VField> images; // nabla_{d/dx_i}(zeta), i = 1..l
    BasisCert basis_cert;       // saito_check(images, nu)
    bool member_shifted = false;
    std::vector<int> valuations;  // per hyperplane
    bool valuations_exact = false;
    bool universal = false;
};

UniversalCert check_universal(const GroupData& g, const VField& zeta, const Mult& nu);

/* images of a certified basis of D(A,mu) under phi(zeta, -), certified at
   nu+mu; requires -omega+1 <= mu <= 1 pointwise and a universal cert */
BasisCert transported_basis(const GroupData& g, const UniversalCert& cert, const Mult& mu,
                            const std::vector<VField>& source_basis);

/* k-th covariant power of the Euler field along the primitive direction,
   in the x-frame, and its certificate at -k*omega */
VField euler_shift(const GroupData& g, const FlatFrame& fr, int k);
UniversalCert check_euler_universal(const GroupData& g, const FlatFrame& fr, int k);

/* The invariant parts of D(A,-k*omega) and D(A,-k*omega+1) agree even
   though the containment is strict, so no basis of the larger module is
   group-invariant.  Checked as: the Reynolds average of every basis element
   of D(A,-k*omega) is a member of D(A,-k*omega+1), and a per-hyperplane
   witness field separates the two modules. */
struct CollapseReport {
    int k = 0;
    UniversalCert source; // E_k at -k*omega; its images are the basis
    std::vector<VField> averaged;
    std::vector<bool> averaged_member;   // at -k*omega+1
    std::vector<bool> witness_separates; // per H
    bool all_pass = false;
};

CollapseReport invariant_part_collapse(const GroupData& g, const FlatFrame& fr, int k);

/* Lemma-2.2 style separator for nu < mu at the given hyperplane:
   alpha_H^{min(nu(H),0)} * Q_+ * (normal of H), in D(A,nu) \ D(A,nu') for
   any nu' exceeding nu at H */
VField containment_witness(const GroupData& g, const Mult& nu, std::size_t h_idx);

/* One multiplicity shift: from E_{-k} universal at k*omega, certify
   E_{-k-1} at (k+1)*omega.  The transition matrix f solves
   nabla_{eta_j}(zeta) = sum_i f_ij nabla_{dt_i}(zeta'); its entries are
   invariant polynomials free of t_l of weighted degree e_i + e*_j - h and
   its determinant is a nonzero constant. */
struct ShiftCert {
    UniversalCert from; // E_{-k} at k*omega
    UniversalCert to;   // E_{-k-1} at (k+1)*omega
    PMat transition{0, 0, Poly(0)};
    CycNum det_transition;
    bool step_verified = false; // nabla_D(E_{-k-1}) == E_{-k}
    bool transition_in_tprime = false;
    bool degrees_match = false;
    bool all_pass = false;
};

ShiftCert shifted_universality(const GroupData& g, const FlatFrame& fr, int k);

} // namespace logarr

#endif
