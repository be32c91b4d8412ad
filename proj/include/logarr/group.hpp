#ifndef LOGARR_GROUP_HPP
#define LOGARR_GROUP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "logarr/vfield.hpp"

namespace logarr {

struct Hyperplane {
    LinForm alpha; // normalized: first nonzero coordinate is 1
    int e = 1;     // order of the pointwise stabilizer
    int orbit = 0;
};

struct GroupData {
    std::string name;
    int rank = 0;
    unsigned cyc_order = 1;
    std::vector<CMat> generators;
    std::vector<CMat> elements; // elements[0] is the identity
    std::vector<CMat> inverses; // conjugate transposes
    std::vector<std::size_t> reflections;
    std::vector<Hyperplane> hyperplanes;
    int norbits = 0;
    std::vector<int> degrees;     // ascending
    std::vector<int> exponents;   // d_i - 1
    std::vector<int> coexponents; // ascending
    int h = 0;
    bool well_generated = false;
    Poly Q{0}, J{0}, Qomega{0};
    std::vector<Poly> invariants;    // fundamental; replaced by the flat set downstream
    std::vector<VField> coexp_seeds; // generators of the invariant derivation module, by pdeg

    std::size_t order() const { return elements.size(); }
    std::vector<int> omega() const; // e_H per hyperplane
};

/* closure, reflections, hyperplanes, arrangement polynomials, coxeter number */
GroupData enumerate_group(const std::string& name, std::vector<CMat> generators, unsigned cyc_order,
                          std::size_t element_cap = 10000);

/* degrees from the Molien series; validates order = prod d_i */
void compute_degrees(GroupData& g);

/* Reynolds projector onto the invariants */
Poly reynolds(const GroupData& g, const Poly& f);
VField reynolds(const GroupData& g, const VField& v);

/* basis of the degree-d invariant polynomials, deterministic */
std::vector<Poly> invariant_poly_basis(const GroupData& g, int d);

/* fundamental invariants via Reynolds averaging + Jacobian independence */
void compute_fundamental_invariants(GroupData& g);

/* coexponents and generators of the module of invariant derivations */
void compute_coexponents(GroupData& g);

/* everything above in sequence */
void complete_group(GroupData& g);

/* jacobian of the given invariants: (i,j) entry dt_j/dx_i */
PMat jacobian(const std::vector<Poly>& t);

/* det J(t,x) = c * J; returns c, throws math_error when not proportional */
CycNum jacobian_witness(const GroupData& g, const std::vector<Poly>& t);

/* dim of the invariant derivations of polynomial degree p (exact, by averaging) */
int invariant_field_dimension(const GroupData& g, int p);

/* reflection generating the pointwise stabilizer of hyperplanes[h_idx]
   (its nontrivial eigenvalue has multiplicative order e_H) */
std::size_t stabilizer_generator(const GroupData& g, std::size_t h_idx);

CycNum element_det(const GroupData& g, std::size_t idx);

/* index of the image hyperplane under elements[w_idx] */
std::size_t hyperplane_image(const GroupData& g, std::size_t h_idx, std::size_t w_idx);

} // namespace logarr

#endif
