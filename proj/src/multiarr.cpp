#include "logarr/multiarr.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "logarr/errors.hpp"

namespace logarr {

int Mult::total() const { return std::accumulate(v.begin(), v.end(), 0); }

bool Mult::geq(const Mult& o) const {
    if (v.size() != o.v.size()) throw usage_error("multiplicity comparison across different arrangements");
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < o.v[i]) return false;
    return true;
}

std::string Mult::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

Mult mult_constant(const GroupData& g, int c) {
    Mult m;
    m.v.assign(g.hyperplanes.size(), c);
    return m;
}

Mult mult_omega(const GroupData& g) {
    Mult m;
    m.v = g.omega();
    return m;
}

Mult mult_linear(const GroupData& g, int k, int c) {
    Mult m;
    m.v.reserve(g.hyperplanes.size());
    for (const auto& hp : g.hyperplanes) m.v.push_back(k * hp.e + c);
    return m;
}

namespace {

bool parse_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoi(s, &pos);
    } catch (...) {
        return false;
    }
    return pos == s.size();
}

} // namespace

Mult parse_mult(const GroupData& g, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw usage_error("empty multiplicity spec");

    auto omega_pos = s.find("omega");
    if (omega_pos == std::string::npos) {
        int c = 0;
        if (parse_int(s, c)) return mult_constant(g, c);
        // per-orbit list
        std::vector<int> per_orbit;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            int val = 0;
            if (!parse_int(item, val)) throw usage_error("bad multiplicity spec '" + text + "'");
            per_orbit.push_back(val);
        }
        if (static_cast<int>(per_orbit.size()) != g.norbits)
            throw usage_error("multiplicity list has " + std::to_string(per_orbit.size()) + " entries, group has " +
                              std::to_string(g.norbits) + " orbits");
        Mult m;
        for (const auto& hp : g.hyperplanes) m.v.push_back(per_orbit[static_cast<std::size_t>(hp.orbit)]);
        return m;
    }

    // [k*]omega[+c] with optional sign on k
    int k = 1;
    std::string head = s.substr(0, omega_pos);
    if (!head.empty()) {
        if (head == "-")
            k = -1;
        else if (head == "+")
            k = 1;
        else {
            if (head.back() != '*') throw usage_error("bad multiplicity spec '" + text + "'");
            if (!parse_int(head.substr(0, head.size() - 1), k))
                throw usage_error("bad multiplicity spec '" + text + "'");
        }
    }
    int c = 0;
    std::string tail = s.substr(omega_pos + 5);
    if (!tail.empty()) {
        if ((tail[0] != '+' && tail[0] != '-') || !parse_int(tail, c))
            throw usage_error("bad multiplicity spec '" + text + "'");
    }
    return mult_linear(g, k, c);
}

Qdata qdata(const GroupData& g, const Mult& nu) {
    if (nu.v.size() != g.hyperplanes.size()) throw usage_error("multiplicity arity does not match the arrangement");
    Qdata q;
    q.qplus = Poly::constant(g.rank, CycNum(1));
    q.qminus = Poly::constant(g.rank, CycNum(1));
    for (std::size_t i = 0; i < nu.v.size(); ++i) {
        Poly a = g.hyperplanes[i].alpha.to_poly();
        for (int rep = 0; rep < nu.v[i]; ++rep) q.qplus *= a;
        for (int rep = 0; rep < -nu.v[i]; ++rep) q.qminus *= a;
    }
    return q;
}

std::vector<LinForm> perp_basis(const LinForm& alpha) {
    int n = alpha.nvars();
    int pivot = -1;
    for (int i = 0; i < n; ++i)
        if (!alpha.a[static_cast<std::size_t>(i)].is_zero()) {
            pivot = i;
            break;
        }
    if (pivot < 0) throw math_error("perpendicular basis of the zero form");
    std::vector<LinForm> out;
    for (int j = 0; j < n; ++j) {
        if (j == pivot) continue;
        LinForm b;
        b.a.assign(static_cast<std::size_t>(n), CycNum(0));
        b.a[static_cast<std::size_t>(j)] = CycNum(1);
        b.a[static_cast<std::size_t>(pivot)] =
            -(alpha.a[static_cast<std::size_t>(j)] / alpha.a[static_cast<std::size_t>(pivot)]).conj();
        out.push_back(std::move(b));
    }
    return out;
}

VField normal_field(const GroupData& g, std::size_t h_idx) {
    const LinForm& alpha = g.hyperplanes.at(h_idx).alpha;
    std::vector<RatFunc> coeffs;
    coeffs.reserve(alpha.a.size());
    for (const auto& a : alpha.a) coeffs.push_back(RatFunc(Poly::constant(g.rank, a.conj())));
    return vfield_x(std::move(coeffs));
}

int rat_valuation(const RatFunc& f, const Poly& alpha) {
    if (f.is_zero()) return VAL_INFINITY;
    return valuation(f.num(), alpha) - valuation(f.den(), alpha);
}

bool denominators_along_arrangement(const VField& theta, const GroupData& g) {
    for (const auto& c : theta.coeffs) {
        Poly rest = c.den();
        for (const auto& hp : g.hyperplanes) {
            Poly a = hp.alpha.to_poly();
            for (;;) {
                auto q = exact_divide(rest, a);
                if (!q) break;
                rest = *q;
            }
        }
        if (rest.is_constant()) continue;
        // remaining factors must cancel against the numerator
        if (!exact_divide(c.num(), rest)) return false;
    }
    return true;
}

bool member_inf(const VField& theta, const GroupData& g) {
    if (theta.frame != Frame::x) throw frame_mismatch("membership is checked in the x-frame");
    if (theta.nvars() != g.rank) throw frame_mismatch("membership: arity mismatch");
    if (!denominators_along_arrangement(theta, g)) return false;
    for (const auto& hp : g.hyperplanes) {
        Poly a = hp.alpha.to_poly();
        for (const auto& beta : perp_basis(hp.alpha)) {
            RatFunc val = apply(theta, beta.to_poly());
            if (rat_valuation(val, a) < 0) return false;
        }
    }
    return true;
}

bool member(const VField& theta, const GroupData& g, const Mult& nu) {
    if (nu.v.size() != g.hyperplanes.size()) throw usage_error("multiplicity arity does not match the arrangement");
    if (!member_inf(theta, g)) return false;
    for (std::size_t i = 0; i < g.hyperplanes.size(); ++i) {
        Poly a = g.hyperplanes[i].alpha.to_poly();
        if (rat_valuation(apply(theta, a), a) < nu.v[i]) return false;
    }
    return true;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Basis: return "Basis";
        case Verdict::NotBasis: return "NotBasis";
        case Verdict::NotMembers: return "NotMembers";
    }
    return "?";
}

BasisCert saito_check(const std::vector<VField>& theta, const GroupData& g, const Mult& nu) {
    BasisCert cert;
    cert.derivations = theta;
    cert.target = qdata(g, nu);
    cert.determinant = RatFunc(Poly(g.rank));
    if (static_cast<int>(theta.size()) != g.rank) {
        cert.verdict = Verdict::NotBasis;
        return cert;
    }

    cert.homogeneous = true;
    int sum = 0;
    for (const auto& th : theta) {
        if (th.pdeg)
            sum += *th.pdeg;
        else
            cert.homogeneous = false;
    }
    if (cert.homogeneous) cert.pdeg_sum = sum;

    for (const auto& th : theta)
        if (!member(th, g, nu)) {
            cert.verdict = Verdict::NotMembers;
            return cert;
        }

    cert.determinant = wedge(theta);

    // route (ii): determinant = scalar * Q+ / Q-, by cross multiplication
    bool route_det = false;
    if (!cert.determinant.is_zero()) {
        Poly lhs = cert.determinant.num() * cert.target.qminus;
        Poly rhs = cert.target.qplus * cert.determinant.den();
        if (lhs.leading_mono() == rhs.leading_mono()) {
            CycNum c = lhs.leading_coeff() / rhs.leading_coeff();
            if (lhs == rhs * c) {
                route_det = true;
                cert.scalar = c;
            }
        }
    }

    if (cert.homogeneous) {
        // route (iii): independence plus total degree count
        bool route_deg = !cert.determinant.is_zero() && sum == nu.total();
        if (route_deg != route_det)
            throw math_error("determinant and degree-count basis criteria disagree on a homogeneous tuple");
    }

    cert.verdict = route_det ? Verdict::Basis : Verdict::NotBasis;
    return cert;
}

std::vector<int> exponents(const BasisCert& cert) {
    if (cert.verdict != Verdict::Basis) throw math_error("exponents of a tuple that is not a certified basis");
    if (!cert.homogeneous) throw math_error("exponents need homogeneous derivations");
    std::vector<int> out;
    out.reserve(cert.derivations.size());
    for (const auto& th : cert.derivations) out.push_back(th.pdeg.value());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace logarr
