#ifndef LOGARR_VFIELD_HPP
#define LOGARR_VFIELD_HPP

#include <optional>
#include <string>
#include <vector>

#include "logarr/linalg.hpp"

namespace logarr {

enum class Frame { x, t };

std::string frame_name(Frame f);

/* Vector field sum_i c_i d/dv_i in a named coordinate frame. pdeg is the
   polynomial degree shift: a homogeneous field maps degree m to m + pdeg - 1
   (x-degree; t-frame coefficients are measured in the weighted grading).
   pdeg is computed at construction and kept, nullopt when inhomogeneous. */
struct VField {
    Frame frame = Frame::x;
    std::vector<RatFunc> coeffs;
    std::optional<int> pdeg;

    int nvars() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;
    bool operator==(const VField& o) const;
    bool operator!=(const VField& o) const { return !(*this == o); }
    std::string str() const;
};

/* x-frame constructor; pdeg = common homogeneous coefficient degree */
VField vfield_x(std::vector<RatFunc> coeffs);
/* t-frame constructor; weights are the degrees of the t-variables */
VField vfield_t(std::vector<RatFunc> coeffs, const std::vector<int>& weights);
VField vfield_unit(Frame frame, int nvars, int i, const std::vector<int>& weights = {});

/* recompute pdeg from the coefficients and check it matches the stored tag */
bool validate_pdeg(const VField& v, const std::vector<int>& weights = {});

RatFunc apply(const VField& v, const RatFunc& f);
RatFunc apply(const VField& v, const Poly& f);

/* covariant derivative of phi along theta w.r.t. the flat sections d/dx_i:
   coefficients theta(phi_i); phi must be in the x-frame */
VField nabla(const VField& theta, const VField& phi);

VField vf_add(const VField& a, const VField& b);
VField vf_sub(const VField& a, const VField& b);
VField vf_scale(const VField& a, const RatFunc& s, const std::vector<int>& weights = {});
VField vf_scale(const VField& a, const CycNum& c);

/* rows are the coefficient vectors of the fields */
RMat saito_matrix(const std::vector<VField>& fields);
RatFunc wedge(const std::vector<VField>& fields);

/* group element acting on an x-frame field: (w.theta)_i = sum_j w_ij (p_j o w^{-1}) */
VField w_action(const VField& theta, const CMat& w, const CMat& w_inv);

/* substitute a linear change of coordinates into every coefficient */
RatFunc ratfunc_substitute_linear(const RatFunc& f, const CMat& a);

/* t-frame -> x-frame using t_i(x) and the inverse Jacobian (jxt = jtx^{-1},
   jtx(i,j) = dt_j/dx_i); coefficients are reduced against the candidates */
VField frame_t_to_x(const VField& theta, const std::vector<Poly>& t_of_x, const RMat& jxt,
                    const std::vector<Poly>& reduce_candidates);

} // namespace logarr

#endif
