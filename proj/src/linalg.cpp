#include "logarr/linalg.hpp"

#include <algorithm>

#include "logarr/errors.hpp"

namespace logarr {

CMat cmat_identity(int n) {
    CMat m(n, n, CycNum(0));
    for (int i = 0; i < n; ++i) m(i, i) = CycNum(1);
    return m;
}

CMat cmat_mul(const CMat& a, const CMat& b) {
    if (a.cols() != b.rows()) throw math_error("cmat_mul: shape mismatch");
    CMat out(a.rows(), b.cols(), CycNum(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

CMat cmat_conj_transpose(const CMat& a) {
    CMat out(a.cols(), a.rows(), CycNum(0));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
    return out;
}

CycNum cmat_det(const CMat& a) {
    if (a.rows() != a.cols()) throw math_error("cmat_det: not square");
    CMat m = a;
    int n = m.rows();
    CycNum det(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m(i, k).is_zero()) { piv = i; break; }
        if (piv < 0) return CycNum(0);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            det = -det;
        }
        det *= m(k, k);
        CycNum inv = m(k, k).inv();
        for (int i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            CycNum f = m(i, k) * inv;
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

CMat cmat_inverse(const CMat& a) {
    if (a.rows() != a.cols()) throw math_error("cmat_inverse: not square");
    int n = a.rows();
    CMat m = a;
    CMat inv = cmat_identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m(i, k).is_zero()) { piv = i; break; }
        if (piv < 0) throw math_error("cmat_inverse: singular matrix");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(k, j));
                std::swap(inv(piv, j), inv(k, j));
            }
        CycNum f = m(k, k).inv();
        for (int j = 0; j < n; ++j) {
            m(k, j) *= f;
            inv(k, j) *= f;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || m(i, k).is_zero()) continue;
            CycNum g = m(i, k);
            for (int j = 0; j < n; ++j) {
                m(i, j) -= g * m(k, j);
                inv(i, j) -= g * inv(k, j);
            }
        }
    }
    return inv;
}

int cmat_rank(CMat m) {
    int n = m.rows(), c = m.cols();
    int rank = 0;
    for (int col = 0; col < c && rank < n; ++col) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (!m(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < c; ++j) std::swap(m(piv, j), m(rank, j));
        CycNum f = m(rank, col).inv();
        for (int i = rank + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            CycNum g = m(i, col) * f;
            for (int j = col; j < c; ++j) m(i, j) -= g * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

CSolveResult cmat_solve(const CMat& a, const std::vector<CycNum>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw math_error("cmat_solve: shape mismatch");
    int n = a.rows(), c = a.cols();
    CMat m(n, c + 1, CycNum(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < c; ++j) m(i, j) = a(i, j);
        m(i, c) = b[i];
    }
    std::vector<int> pivot_col_of_row;
    int rank = 0;
    for (int col = 0; col < c && rank < n; ++col) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (!m(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j <= c; ++j) std::swap(m(piv, j), m(rank, j));
        CycNum f = m(rank, col).inv();
        for (int j = col; j <= c; ++j) m(rank, j) *= f;
        for (int i = 0; i < n; ++i) {
            if (i == rank || m(i, col).is_zero()) continue;
            CycNum g = m(i, col);
            for (int j = col; j <= c; ++j) m(i, j) -= g * m(rank, j);
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    CSolveResult res;
    for (int i = rank; i < n; ++i)
        if (!m(i, c).is_zero()) return res; // inconsistent
    res.consistent = true;
    res.particular.assign(c, CycNum(0));
    std::vector<bool> is_pivot(c, false);
    for (int r = 0; r < rank; ++r) {
        res.particular[pivot_col_of_row[r]] = m(r, c);
        is_pivot[pivot_col_of_row[r]] = true;
    }
    for (int j = 0; j < c; ++j) {
        if (is_pivot[j]) continue;
        std::vector<CycNum> v(c, CycNum(0));
        v[j] = CycNum(1);
        for (int r = 0; r < rank; ++r) v[pivot_col_of_row[r]] = -m(r, j);
        res.kernel.push_back(std::move(v));
    }
    return res;
}

PMat pmat_identity(int n, int nvars) {
    PMat m(n, n, Poly(nvars));
    for (int i = 0; i < n; ++i) m(i, i) = Poly::constant(nvars, CycNum(1));
    return m;
}

PMat pmat_mul(const PMat& a, const PMat& b) {
    if (a.cols() != b.rows()) throw math_error("pmat_mul: shape mismatch");
    int nv = a(0, 0).nvars();
    PMat out(a.rows(), b.cols(), Poly(nv));
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Poly pmat_det_bareiss(PMat m) {
    if (m.rows() != m.cols()) throw math_error("pmat_det_bareiss: not square");
    int n = m.rows();
    if (n == 0) throw math_error("pmat_det_bareiss: empty");
    int nv = m(0, 0).nvars();
    Poly prev = Poly::constant(nv, CycNum(1));
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m(i, k).is_zero()) { piv = i; break; }
        if (piv < 0) return Poly(nv);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                auto q = exact_divide(t, prev);
                if (!q) throw math_error("pmat_det_bareiss: inexact division");
                m(i, j) = std::move(*q);
            }
            m(i, k) = Poly(nv);
        }
        prev = m(k, k);
    }
    Poly det = m(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

PEchelonResult pmat_echelon(PMat m) {
    PEchelonResult res;
    if (m.rows() == 0 || m.cols() == 0) return res;
    int n = m.rows(), c = m.cols();
    int nv = m(0, 0).nvars();
    Poly prev = Poly::constant(nv, CycNum(1));
    int row = 0;
    for (int col = 0; col < c && row < n; ++col) {
        int piv = -1;
        for (int i = row; i < n; ++i)
            if (!m(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < c; ++j) std::swap(m(piv, j), m(row, j));
        for (int i = row + 1; i < n; ++i) {
            for (int j = col + 1; j < c; ++j) {
                Poly t = m(row, col) * m(i, j) - m(i, col) * m(row, j);
                auto q = exact_divide(t, prev);
                if (!q) throw math_error("pmat_echelon: inexact division");
                m(i, j) = std::move(*q);
            }
            m(i, col) = Poly(nv);
        }
        prev = m(row, col);
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;
    if (row > 0) res.last_pivot = prev;
    return res;
}

RMat rmat_identity(int n, int nvars) {
    RMat m(n, n, RatFunc(Poly(nvars)));
    for (int i = 0; i < n; ++i) m(i, i) = RatFunc(Poly::constant(nvars, CycNum(1)));
    return m;
}

RMat rmat_from_pmat(const PMat& a) {
    RMat out(a.rows(), a.cols(), RatFunc());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = RatFunc(a(i, j));
    return out;
}

RMat rmat_mul(const RMat& a, const RMat& b) {
    if (a.cols() != b.rows()) throw math_error("rmat_mul: shape mismatch");
    int nv = a(0, 0).nvars();
    RMat out(a.rows(), b.cols(), RatFunc(Poly(nv)));
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RMat rmat_add(const RMat& a, const RMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw math_error("rmat_add: shape mismatch");
    RMat out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
    return out;
}

RMat rmat_scale(const RMat& a, const RatFunc& s) {
    RMat out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) *= s;
    return out;
}

RMat rmat_reduced_by(const RMat& a, const std::vector<Poly>& candidates) {
    RMat out = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = out(i, j).reduced_by(candidates);
    return out;
}

RatFunc rmat_det(const RMat& a) {
    if (a.rows() != a.cols()) throw math_error("rmat_det: not square");
    int n = a.rows();
    if (n == 0) throw math_error("rmat_det: empty");
    int nv = a(0, 0).nvars();
    PMat cleared(n, n, Poly(nv));
    Poly full_den = Poly::constant(nv, CycNum(1));
    for (int i = 0; i < n; ++i) {
        /* product of the distinct denominators in the row */
        std::vector<Poly> dens;
        for (int j = 0; j < n; ++j) {
            const Poly& d = a(i, j).den();
            if (d.is_constant()) continue;
            bool seen = false;
            for (const auto& x : dens) seen = seen || x == d;
            if (!seen) dens.push_back(d);
        }
        Poly row_den = Poly::constant(nv, CycNum(1));
        for (const auto& d : dens) row_den *= d;
        for (int j = 0; j < n; ++j) {
            auto q = exact_divide(row_den, a(i, j).den());
            cleared(i, j) = a(i, j).num() * *q;
        }
        full_den *= row_den;
    }
    return RatFunc(pmat_det_bareiss(std::move(cleared)), std::move(full_den));
}

namespace {

RatFunc rdet_cofactor(const RMat& a, std::vector<int> rows, std::vector<int> cols) {
    int n = static_cast<int>(rows.size());
    int nv = a(0, 0).nvars();
    if (n == 1) return a(rows[0], cols[0]);
    RatFunc acc = RatFunc(Poly(nv));
    for (int k = 0; k < n; ++k) {
        if (a(rows[0], cols[k]).is_zero()) continue;
        std::vector<int> sub_cols;
        for (int j = 0; j < n; ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        RatFunc minor = rdet_cofactor(a, std::vector<int>(rows.begin() + 1, rows.end()), sub_cols);
        RatFunc term = a(rows[0], cols[k]) * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

RMat rmat_inverse(const RMat& a) {
    if (a.rows() != a.cols()) throw math_error("rmat_inverse: not square");
    int n = a.rows();
    int nv = a(0, 0).nvars();
    std::vector<int> all;
    for (int i = 0; i < n; ++i) all.push_back(i);
    RatFunc det = rdet_cofactor(a, all, all);
    if (det.is_zero()) throw math_error("rmat_inverse: singular matrix");
    RMat adj(n, n, RatFunc(Poly(nv)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int r = 0; r < n; ++r)
                if (r != j) rows.push_back(r);
            for (int c = 0; c < n; ++c)
                if (c != i) cols.push_back(c);
            RatFunc minor = n == 1 ? RatFunc(Poly::constant(nv, CycNum(1))) : rdet_cofactor(a, rows, cols);
            adj(i, j) = ((i + j) % 2 == 0) ? minor / det : -(minor / det);
        }
    }
    return adj;
}

RSolveResult rmat_solve(const RMat& a, const std::vector<RatFunc>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw math_error("rmat_solve: shape mismatch");
    int n = a.rows(), c = a.cols();
    int nv = c > 0 ? a(0, 0).nvars() : (n > 0 ? b[0].nvars() : 0);
    RMat m(n, c + 1, RatFunc(Poly(nv)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < c; ++j) m(i, j) = a(i, j);
        m(i, c) = b[i];
    }
    std::vector<int> pivot_col_of_row;
    int rank = 0;
    for (int col = 0; col < c && rank < n; ++col) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (!m(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j <= c; ++j) std::swap(m(piv, j), m(rank, j));
        RatFunc f = m(rank, col);
        for (int j = col; j <= c; ++j) m(rank, j) /= f;
        for (int i = 0; i < n; ++i) {
            if (i == rank || m(i, col).is_zero()) continue;
            RatFunc g = m(i, col);
            for (int j = col; j <= c; ++j) m(i, j) -= g * m(rank, j);
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    RSolveResult res;
    for (int i = rank; i < n; ++i)
        if (!m(i, c).is_zero()) return res;
    res.consistent = true;
    res.unique = rank == c;
    res.solution.assign(c, RatFunc(Poly(nv)));
    for (int r = 0; r < rank; ++r) res.solution[pivot_col_of_row[r]] = m(r, c);
    return res;
}

} // namespace logarr
