#ifndef LOGARR_LINALG_HPP
#define LOGARR_LINALG_HPP

#include <optional>
#include <vector>

#include "logarr/ratfunc.hpp"

namespace logarr {

template <class T>
class Mat {
  public:
    Mat() : r_(0), c_(0) {}
    Mat(int r, int c, const T& fill) : r_(r), c_(c), d_(static_cast<std::size_t>(r) * c, fill) {}

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * c_ + j]; }
    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && d_ == o.d_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transposed() const {
        Mat out(c_, r_, d_.empty() ? T() : d_[0]);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

  private:
    int r_, c_;
    std::vector<T> d_;
};

using CMat = Mat<CycNum>;
using PMat = Mat<Poly>;
using RMat = Mat<RatFunc>;

/* --- matrices over CycNum (a field) --- */

CMat cmat_identity(int n);
CMat cmat_mul(const CMat& a, const CMat& b);
CMat cmat_conj_transpose(const CMat& a);
CycNum cmat_det(const CMat& a);
CMat cmat_inverse(const CMat& a); // throws math_error when singular
int cmat_rank(CMat a);

struct CSolveResult {
    bool consistent = false;
    std::vector<CycNum> particular;              // one solution, free variables set to 0
    std::vector<std::vector<CycNum>> kernel;     // basis of the homogeneous solutions
};

/* solve A x = b exactly by Gaussian elimination, deterministic pivoting */
CSolveResult cmat_solve(const CMat& a, const std::vector<CycNum>& b);

/* --- matrices over Poly (fraction-free) --- */

PMat pmat_identity(int n, int nvars);
PMat pmat_mul(const PMat& a, const PMat& b);
Poly pmat_det_bareiss(PMat a); // fraction-free elimination with exact divisions

struct PEchelonResult {
    int rank = 0;
    std::vector<int> pivot_cols;
    Poly last_pivot; // nonzero maximal minor of the row space (up to sign) when rank > 0
};

/* fraction-free row echelon; the returned last_pivot is the rank-sized minor
   on the pivot columns, a certificate of the rank over the fraction field */
PEchelonResult pmat_echelon(PMat a);

/* --- matrices over RatFunc --- */

RMat rmat_identity(int n, int nvars);
RMat rmat_from_pmat(const PMat& a);
RMat rmat_mul(const RMat& a, const RMat& b);
RMat rmat_add(const RMat& a, const RMat& b);
RMat rmat_scale(const RMat& a, const RatFunc& s);
RMat rmat_reduced_by(const RMat& a, const std::vector<Poly>& candidates);
RatFunc rmat_det(const RMat& a); // row-cleared Bareiss over Poly
RMat rmat_inverse(const RMat& a); // adjugate route; throws math_error when singular

struct RSolveResult {
    bool consistent = false;
    bool unique = false;
    std::vector<RatFunc> solution; // free variables set to 0 when not unique
};

RSolveResult rmat_solve(const RMat& a, const std::vector<RatFunc>& b);

} // namespace logarr

#endif
