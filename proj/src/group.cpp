#include "logarr/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "logarr/errors.hpp"

namespace logarr {

namespace {

CMat lift_entries(CMat m, unsigned n) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = m(i, j).lifted(n);
    return m;
}

std::string mat_key(const CMat& m) {
    std::string k;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            k += m(i, j).key();
            k += '#';
        }
    return k;
}

std::string form_key(const LinForm& f) {
    std::string k;
    for (const auto& c : f.a) {
        k += c.key();
        k += '#';
    }
    return k;
}

std::vector<std::vector<CycNum>> mat_rows(const CMat& m) {
    std::vector<std::vector<CycNum>> rows(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        rows[i].resize(m.cols());
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
    }
    return rows;
}

/* defining form of a reflection: normalized nonzero row of w - 1 */
LinForm reflection_form(const CMat& w) {
    int n = w.rows();
    for (int i = 0; i < n; ++i) {
        LinForm f;
        f.a.resize(n);
        bool nonzero = false;
        for (int j = 0; j < n; ++j) {
            f.a[j] = w(i, j) - CycNum(i == j ? 1 : 0);
            if (!f.a[j].is_zero()) nonzero = true;
        }
        if (nonzero) return f.normalized();
    }
    throw math_error("reflection_form: identity passed");
}

/* image of a form under w: alpha o w^{-1} */
LinForm form_image(const LinForm& f, const CMat& w_inv) {
    int n = f.nvars();
    LinForm out;
    out.a.assign(n, CycNum(0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out.a[j] += f.a[i] * w_inv(i, j);
    return out.normalized();
}

/* reduced row echelon accumulator over the cyclotomic field; insertion
   order does not affect the final basis */
struct Ech {
    std::vector<std::vector<CycNum>> rows; // kept sorted by pivot column
    std::vector<std::size_t> piv;

    void reduce(std::vector<CycNum>& v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const CycNum& c = v[piv[r]];
            if (c.is_zero()) continue;
            CycNum f = c;
            for (std::size_t j = piv[r]; j < v.size(); ++j)
                if (!rows[r][j].is_zero()) v[j] -= f * rows[r][j];
        }
    }

    bool insert(std::vector<CycNum> v) {
        reduce(v);
        std::size_t p = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) {
                p = j;
                break;
            }
        if (p == v.size()) return false;
        CycNum inv = v[p].inv();
        for (auto& c : v) c = c * inv;
        for (auto& row : rows)
            if (!row[p].is_zero()) {
                CycNum f = row[p];
                for (std::size_t j = 0; j < v.size(); ++j)
                    if (!v[j].is_zero()) row[j] -= f * v[j];
            }
        std::size_t pos = 0;
        while (pos < piv.size() && piv[pos] < p) ++pos;
        rows.insert(rows.begin() + static_cast<long>(pos), std::move(v));
        piv.insert(piv.begin() + static_cast<long>(pos), p);
        return true;
    }
};

/* monomials of total degree d in n variables, lexicographically descending */
void monomials_rec(int n, int d, std::vector<int>& cur, std::vector<Mono>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(d);
        out.push_back(Mono::of(cur));
        cur.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        monomials_rec(n, d - e, cur, out);
        cur.pop_back();
    }
}

std::vector<Mono> monomials_of_degree(int n, int d) {
    std::vector<Mono> out;
    std::vector<int> cur;
    monomials_rec(n, d, cur, out);
    return out;
}

/* out_i = sum_j w(i,j) (c_j o w^{-1}) */
std::vector<Poly> poly_field_action(const CMat& w, const CMat& w_inv, const std::vector<Poly>& c) {
    auto sub = mat_rows(w_inv);
    int n = static_cast<int>(c.size());
    std::vector<Poly> moved(c.size()), out(c.size(), Poly(c[0].nvars()));
    for (int j = 0; j < n; ++j) moved[j] = c[j].substitute_linear(sub);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!w(i, j).is_zero()) out[i] += moved[j] * w(i, j);
    return out;
}

/* dense truncated power series over CycNum */
std::vector<CycNum> series_inverse(const std::vector<CycNum>& p, int order) {
    if (p.empty() || p[0] != CycNum(1)) throw math_error("series_inverse: constant term must be 1");
    std::vector<CycNum> q(static_cast<std::size_t>(order) + 1, CycNum(0));
    q[0] = CycNum(1);
    for (int k = 1; k <= order; ++k) {
        CycNum s(0);
        int top = std::min<int>(k, static_cast<int>(p.size()) - 1);
        for (int j = 1; j <= top; ++j) s += p[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
        q[static_cast<std::size_t>(k)] = -s;
    }
    return q;
}

std::vector<CycNum> charpoly_reversed(const CMat& w) {
    // det(1 - lambda w) as a univariate polynomial in lambda
    int n = w.rows();
    PMat m(n, n, Poly(1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly e = Poly::monomial(1, {1}, -w(i, j));
            if (i == j) e += Poly::constant(1, CycNum(1));
            m(i, j) = e;
        }
    Poly det = pmat_det_bareiss(m);
    std::vector<CycNum> dense(static_cast<std::size_t>(n) + 1, CycNum(0));
    for (const auto& [mono, coef] : det.terms()) dense[static_cast<std::size_t>(mono.deg)] = coef;
    return dense;
}

int multiplicative_order(const CycNum& z, int bound) {
    CycNum p = z;
    for (int k = 1; k <= bound; ++k) {
        if (p == CycNum(1)) return k;
        p = p * z;
    }
    return 0;
}

} // namespace

std::vector<int> GroupData::omega() const {
    std::vector<int> out;
    out.reserve(hyperplanes.size());
    for (const auto& hp : hyperplanes) out.push_back(hp.e);
    return out;
}

GroupData enumerate_group(const std::string& name, std::vector<CMat> generators, unsigned cyc_order,
                          std::size_t element_cap) {
    GroupData g;
    g.name = name;
    g.cyc_order = cyc_order;
    if (generators.empty()) throw catalog_error("group '" + name + "' has no generators");
    g.rank = generators[0].rows();
    const int n = g.rank;
    const CMat id = lift_entries(cmat_identity(n), cyc_order);
    for (auto& w : generators) {
        if (w.rows() != n || w.cols() != n) throw catalog_error("generator shape mismatch in '" + name + "'");
        w = lift_entries(w, cyc_order);
        if (cmat_mul(w, cmat_conj_transpose(w)) != id)
            throw catalog_error("non-unitary generator in '" + name + "'");
    }
    g.generators = generators;

    std::unordered_map<std::string, std::size_t> seen;
    g.elements.push_back(id);
    seen.emplace(mat_key(id), 0);
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::size_t cur = frontier.front();
        frontier.pop_front();
        for (const auto& gen : g.generators) {
            CMat p = lift_entries(cmat_mul(g.elements[cur], gen), cyc_order);
            std::string k = mat_key(p);
            if (seen.count(k)) continue;
            if (g.elements.size() >= element_cap) throw not_closed_within_budget(element_cap);
            seen.emplace(std::move(k), g.elements.size());
            g.elements.push_back(p);
            frontier.push_back(g.elements.size() - 1);
        }
    }

    g.inverses.reserve(g.elements.size());
    for (const auto& w : g.elements) g.inverses.push_back(lift_entries(cmat_conj_transpose(w), cyc_order));

    std::map<std::string, LinForm> forms; // canonical hyperplane order: by form key
    std::vector<std::string> refl_form_keys;
    for (std::size_t i = 1; i < g.elements.size(); ++i) {
        CMat diff = g.elements[i];
        for (int r = 0; r < n; ++r) diff(r, r) -= CycNum(1);
        if (cmat_rank(diff) != 1) continue;
        g.reflections.push_back(i);
        LinForm f = reflection_form(g.elements[i]);
        refl_form_keys.push_back(form_key(f));
        forms.emplace(refl_form_keys.back(), f);
    }
    std::map<std::string, std::size_t> hp_index;
    for (const auto& [key, f] : forms) {
        Hyperplane hp;
        hp.alpha = f;
        hp_index.emplace(key, g.hyperplanes.size());
        g.hyperplanes.push_back(hp);
    }
    for (const auto& k : refl_form_keys) g.hyperplanes[hp_index.at(k)].e += 1;

    // orbits under the full group, labelled by smallest member index
    std::vector<std::size_t> parent(g.hyperplanes.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t hidx = 0; hidx < g.hyperplanes.size(); ++hidx)
        for (std::size_t gi = 0; gi < g.generators.size(); ++gi) {
            LinForm img = form_image(g.hyperplanes[hidx].alpha, lift_entries(cmat_conj_transpose(g.generators[gi]), cyc_order));
            auto it = hp_index.find(form_key(img));
            if (it == hp_index.end()) throw math_error("hyperplane set not closed under the group");
            std::size_t a = find(hidx), b = find(it->second);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<std::size_t, int> root_label;
    for (std::size_t hidx = 0; hidx < g.hyperplanes.size(); ++hidx) {
        std::size_t r = find(hidx);
        auto it = root_label.find(r);
        if (it == root_label.end()) it = root_label.emplace(r, static_cast<int>(root_label.size())).first;
        g.hyperplanes[hidx].orbit = it->second;
    }
    g.norbits = static_cast<int>(root_label.size());

    g.Q = Poly::constant(n, CycNum(1));
    g.J = Poly::constant(n, CycNum(1));
    g.Qomega = Poly::constant(n, CycNum(1));
    for (const auto& hp : g.hyperplanes) {
        Poly a = hp.alpha.to_poly();
        g.Q *= a;
        for (int k = 0; k + 1 < hp.e; ++k) g.J *= a;
        for (int k = 0; k < hp.e; ++k) g.Qomega *= a;
    }

    std::size_t total = g.reflections.size() + g.hyperplanes.size();
    g.h = (total % static_cast<std::size_t>(n) == 0) ? static_cast<int>(total / static_cast<std::size_t>(n)) : 0;
    return g;
}

void compute_degrees(GroupData& g) {
    const int order = static_cast<int>(g.order());
    std::vector<CycNum> molien(static_cast<std::size_t>(order) + 1, CycNum(0));
    for (const auto& w : g.elements) {
        auto inv = series_inverse(charpoly_reversed(w), order);
        for (std::size_t k = 0; k < molien.size(); ++k) molien[k] += inv[k];
    }
    std::vector<Rat> m(molien.size());
    Rat scale(1, static_cast<long>(g.order()));
    for (std::size_t k = 0; k < molien.size(); ++k) {
        if (!molien[k].is_rational()) throw math_error("character series has an irrational coefficient");
        m[k] = molien[k].to_rational() * scale;
        if (m[k].get_den() != 1 || m[k] < 0) throw math_error("character series is not a dimension series");
    }
    if (m[0] != 1) throw math_error("character series does not start at 1");

    g.degrees.clear();
    while (static_cast<int>(g.degrees.size()) < g.rank) {
        int d = 0;
        for (int k = 1; k <= order; ++k)
            if (m[static_cast<std::size_t>(k)] != 0) {
                d = k;
                break;
            }
        if (d == 0) throw math_error("dimension series terminated before producing all degrees");
        g.degrees.push_back(d);
        for (int k = order; k >= d; --k) m[static_cast<std::size_t>(k)] -= m[static_cast<std::size_t>(k - d)];
    }
    for (int k = 1; k <= order; ++k)
        if (m[static_cast<std::size_t>(k)] != 0) throw math_error("dimension series has excess terms");

    long prod = 1;
    long esum = 0;
    for (int d : g.degrees) {
        prod *= d;
        esum += d - 1;
    }
    if (prod != static_cast<long>(g.order())) throw math_error("degree product does not match the group order");
    if (esum != static_cast<long>(g.reflections.size()))
        throw math_error("exponent sum does not match the reflection count");
    g.exponents.clear();
    for (int d : g.degrees) g.exponents.push_back(d - 1);
}

Poly reynolds(const GroupData& g, const Poly& f) {
    Poly sum(f.nvars());
    for (const auto& w_inv : g.inverses) sum += f.substitute_linear(mat_rows(w_inv));
    return sum * CycNum(Rat(1, static_cast<long>(g.order())));
}

VField reynolds(const GroupData& g, const VField& v) {
    VField sum = v;
    for (std::size_t i = 1; i < g.elements.size(); ++i)
        sum = vf_add(sum, w_action(v, g.elements[i], g.inverses[i]));
    return vf_scale(sum, CycNum(Rat(1, static_cast<long>(g.order()))));
}

std::vector<Poly> invariant_poly_basis(const GroupData& g, int d) {
    if (d == 0) return {Poly::constant(g.rank, CycNum(1))};
    auto monos = monomials_of_degree(g.rank, d);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i].e, i);
    Ech ech;
    for (const auto& mono : monos) {
        Poly avg = reynolds(g, Poly::monomial(g.rank, mono.e, CycNum(1)));
        if (avg.is_zero()) continue;
        std::vector<CycNum> v(monos.size(), CycNum(0));
        for (const auto& [mm, cc] : avg.terms()) v[index.at(mm.e)] = cc;
        ech.insert(std::move(v));
    }
    std::vector<Poly> out;
    for (const auto& row : ech.rows) {
        Poly p(g.rank);
        for (std::size_t i = 0; i < row.size(); ++i)
            if (!row[i].is_zero()) p.add_term(monos[i], row[i]);
        out.push_back(p);
    }
    return out;
}

PMat jacobian(const std::vector<Poly>& t) {
    if (t.empty()) throw math_error("jacobian of an empty list");
    int n = t[0].nvars();
    PMat j(n, static_cast<int>(t.size()), Poly(n));
    for (int col = 0; col < static_cast<int>(t.size()); ++col)
        for (int row = 0; row < n; ++row) j(row, col) = t[static_cast<std::size_t>(col)].partial(row);
    return j;
}

void compute_fundamental_invariants(GroupData& g) {
    if (g.degrees.empty()) throw usage_error("degrees must be computed first");
    g.invariants.clear();
    for (int d : g.degrees) {
        bool found = false;
        for (const auto& mono : monomials_of_degree(g.rank, d)) {
            Poly avg = reynolds(g, Poly::monomial(g.rank, mono.e, CycNum(1)));
            if (avg.is_zero()) continue;
            std::vector<Poly> trial = g.invariants;
            trial.push_back(avg);
            if (pmat_echelon(jacobian(trial)).rank != static_cast<int>(trial.size())) continue;
            g.invariants.push_back(avg.monic());
            found = true;
            break;
        }
        if (!found)
            throw search_exhausted("no fundamental invariant of degree " + std::to_string(d) +
                                   " extends the chosen ones");
    }
    jacobian_witness(g, g.invariants); // throws when det J is not proportional to J
}

CycNum jacobian_witness(const GroupData& g, const std::vector<Poly>& t) {
    if (static_cast<int>(t.size()) != g.rank) throw usage_error("need rank-many invariants");
    Poly det = pmat_det_bareiss(jacobian(t));
    auto q = exact_divide(det, g.J);
    if (!q || !q->is_constant() || q->is_zero())
        throw math_error("invariant jacobian determinant is not a nonzero multiple of the product of "
                         "hyperplane forms");
    return q->constant_value();
}

namespace {

/* canonical echelon basis of the invariant fields of coefficient degree p,
   as coordinate vectors over (direction, monomial) */
struct FieldSpace {
    std::vector<Mono> monos;
    std::map<std::vector<int>, std::size_t> index;
    Ech basis;
};

FieldSpace invariant_field_space(const GroupData& g, int p) {
    FieldSpace fs;
    fs.monos = monomials_of_degree(g.rank, p);
    for (std::size_t i = 0; i < fs.monos.size(); ++i) fs.index.emplace(fs.monos[i].e, i);
    const std::size_t m = fs.monos.size();
    const CycNum scale(Rat(1, static_cast<long>(g.order())));
    for (int dir = 0; dir < g.rank; ++dir)
        for (const auto& mono : fs.monos) {
            std::vector<Poly> c(static_cast<std::size_t>(g.rank), Poly(g.rank));
            c[static_cast<std::size_t>(dir)] = Poly::monomial(g.rank, mono.e, CycNum(1));
            std::vector<Poly> avg(static_cast<std::size_t>(g.rank), Poly(g.rank));
            for (std::size_t wi = 0; wi < g.elements.size(); ++wi) {
                auto moved = poly_field_action(g.elements[wi], g.inverses[wi], c);
                for (int i = 0; i < g.rank; ++i) avg[static_cast<std::size_t>(i)] += moved[static_cast<std::size_t>(i)];
            }
            std::vector<CycNum> v(static_cast<std::size_t>(g.rank) * m, CycNum(0));
            bool nonzero = false;
            for (int i = 0; i < g.rank; ++i) {
                avg[static_cast<std::size_t>(i)] = avg[static_cast<std::size_t>(i)] * scale;
                for (const auto& [mm, cc] : avg[static_cast<std::size_t>(i)].terms()) {
                    v[static_cast<std::size_t>(i) * m + fs.index.at(mm.e)] = cc;
                    nonzero = true;
                }
            }
            if (nonzero) fs.basis.insert(std::move(v));
        }
    return fs;
}

VField field_from_vector(const GroupData& g, const FieldSpace& fs, const std::vector<CycNum>& v) {
    std::vector<RatFunc> coeffs;
    coeffs.reserve(static_cast<std::size_t>(g.rank));
    for (int i = 0; i < g.rank; ++i) {
        Poly p(g.rank);
        for (std::size_t k = 0; k < fs.monos.size(); ++k) {
            const CycNum& c = v[static_cast<std::size_t>(i) * fs.monos.size() + k];
            if (!c.is_zero()) p.add_term(fs.monos[k], c);
        }
        coeffs.emplace_back(p);
    }
    return vfield_x(std::move(coeffs));
}

} // namespace

int invariant_field_dimension(const GroupData& g, int p) {
    return static_cast<int>(invariant_field_space(g, p).basis.rows.size());
}

void compute_coexponents(GroupData& g) {
    if (g.degrees.empty()) throw usage_error("degrees must be computed first");
    g.coexponents.clear();
    g.coexp_seeds.clear();
    const int bound = std::max(g.h, 1) + 1;
    for (int p = 0; p <= bound && static_cast<int>(g.coexp_seeds.size()) < g.rank; ++p) {
        FieldSpace fs = invariant_field_space(g, p);
        Ech span;
        for (const auto& seed : g.coexp_seeds) {
            int q = seed.pdeg.value();
            if (p - q < 0) continue;
            for (const auto& b : invariant_poly_basis(g, p - q)) {
                std::vector<CycNum> v(static_cast<std::size_t>(g.rank) * fs.monos.size(), CycNum(0));
                for (int i = 0; i < g.rank; ++i) {
                    Poly prod = seed.coeffs[static_cast<std::size_t>(i)].to_poly() * b;
                    for (const auto& [mm, cc] : prod.terms())
                        v[static_cast<std::size_t>(i) * fs.monos.size() + fs.index.at(mm.e)] = cc;
                }
                span.insert(std::move(v));
            }
        }
        for (const auto& row : fs.basis.rows) {
            if (static_cast<int>(g.coexp_seeds.size()) == g.rank) break;
            if (!span.insert(row)) continue;
            g.coexp_seeds.push_back(field_from_vector(g, fs, row));
            g.coexponents.push_back(p);
        }
    }
    if (static_cast<int>(g.coexp_seeds.size()) != g.rank)
        throw search_exhausted("module of invariant fields not generated in degrees up to " +
                               std::to_string(bound));
    g.well_generated = true;
    for (int i = 0; i < g.rank; ++i)
        if (g.exponents[static_cast<std::size_t>(i)] +
                g.coexponents[static_cast<std::size_t>(g.rank - 1 - i)] != g.h)
            g.well_generated = false;
}

void complete_group(GroupData& g) {
    compute_degrees(g);
    compute_fundamental_invariants(g);
    compute_coexponents(g);
}

std::size_t stabilizer_generator(const GroupData& g, std::size_t h_idx) {
    const Hyperplane& hp = g.hyperplanes.at(h_idx);
    for (std::size_t r : g.reflections) {
        if (!(reflection_form(g.elements[r]) == hp.alpha)) continue;
        CycNum det = cmat_det(g.elements[r]);
        if (multiplicative_order(det, hp.e) == hp.e) return r;
    }
    throw math_error("pointwise stabilizer has no generator among the reflections");
}

CycNum element_det(const GroupData& g, std::size_t idx) { return cmat_det(g.elements.at(idx)); }

std::size_t hyperplane_image(const GroupData& g, std::size_t h_idx, std::size_t w_idx) {
    LinForm img = form_image(g.hyperplanes.at(h_idx).alpha, g.inverses.at(w_idx));
    for (std::size_t i = 0; i < g.hyperplanes.size(); ++i)
        if (g.hyperplanes[i].alpha == img) return i;
    throw math_error("hyperplane set not closed under the group");
}

} // namespace logarr
