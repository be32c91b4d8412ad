#include "logarr/universal.hpp"

#include <utility>

#include "logarr/errors.hpp"

namespace logarr {

namespace {

std::vector<Poly> hyperplane_forms(const GroupData& g) {
    std::vector<Poly> out;
    out.reserve(g.hyperplanes.size());
    for (const auto& hp : g.hyperplanes) out.push_back(hp.alpha.to_poly());
    return out;
}

Mult mult_shift(const Mult& nu, int c) {
    Mult out = nu;
    for (int& m : out.v) m += c;
    return out;
}

} // namespace

VField phi(const VField& zeta, const VField& theta) {
    if (zeta.frame != Frame::x || theta.frame != Frame::x)
        throw frame_mismatch("phi expects x-frame fields");
    return nabla(theta, zeta);
}

UniversalCert check_universal(const GroupData& g, const VField& zeta, const Mult& nu) {
    if (zeta.frame != Frame::x) throw frame_mismatch("check_universal expects an x-frame field");
    const int l = g.rank;
    if (zeta.nvars() != l) throw usage_error("check_universal: field arity differs from the group rank");

    UniversalCert cert;
    cert.zeta = zeta;
    cert.nu = nu;
    for (int i = 0; i < l; ++i) cert.images.push_back(nabla(vfield_unit(Frame::x, l, i), zeta));
    cert.basis_cert = saito_check(cert.images, g, nu);
    cert.member_shifted = member(zeta, g, mult_shift(nu, 1));
    cert.valuations_exact = true;
    for (std::size_t hix = 0; hix < g.hyperplanes.size(); ++hix) {
        const Poly alpha = g.hyperplanes[hix].alpha.to_poly();
        const int v = rat_valuation(apply(zeta, alpha), alpha);
        cert.valuations.push_back(v);
        if (v != nu.v[hix] + 1) cert.valuations_exact = false;
    }
    cert.universal =
        cert.member_shifted && cert.valuations_exact && cert.basis_cert.verdict == Verdict::Basis;
    return cert;
}

BasisCert transported_basis(const GroupData& g, const UniversalCert& cert, const Mult& mu,
                            const std::vector<VField>& source_basis) {
    if (!cert.universal)
        throw math_error("transported_basis: the transport field is not certified universal");
    for (std::size_t hix = 0; hix < g.hyperplanes.size(); ++hix) {
        const int m = mu.v[hix];
        if (m < 1 - g.hyperplanes[hix].e || m > 1)
            throw out_of_range_mult("transported_basis requires -omega+1 <= mu <= 1");
    }
    if (source_basis.size() != static_cast<std::size_t>(g.rank))
        throw missing_source_basis("transported_basis needs a rank-sized source basis");
    const BasisCert src = saito_check(source_basis, g, mu);
    if (src.verdict != Verdict::Basis)
        throw missing_source_basis("the source fields are not a certified basis: " +
                                   verdict_name(src.verdict));

    std::vector<VField> images;
    images.reserve(source_basis.size());
    for (const auto& th : source_basis) images.push_back(phi(cert.zeta, th));
    Mult target = cert.nu;
    for (std::size_t i = 0; i < target.v.size(); ++i) target.v[i] += mu.v[i];
    return saito_check(images, g, target);
}

VField euler_shift(const GroupData& g, const FlatFrame& fr, int k) {
    return xi(g, fr, k).fields[0];
}

UniversalCert check_euler_universal(const GroupData& g, const FlatFrame& fr, int k) {
    return check_universal(g, euler_shift(g, fr, k), mult_linear(g, -k, 0));
}

VField containment_witness(const GroupData& g, const Mult& nu, std::size_t h_idx) {
    const Poly alpha = g.hyperplanes[h_idx].alpha.to_poly();
    const Qdata qd = qdata(g, nu);
    RatFunc s(qd.qplus);
    const int m = nu.v[h_idx];
    if (m < 0) s = RatFunc(qd.qplus, alpha.pow(static_cast<unsigned>(-m)));
    return vf_scale(normal_field(g, h_idx), s);
}

CollapseReport invariant_part_collapse(const GroupData& g, const FlatFrame& fr, int k) {
    CollapseReport rep;
    rep.k = k;
    rep.source = check_euler_universal(g, fr, k);
    if (!rep.source.universal)
        throw math_error("invariant_part_collapse: the transport field failed its certificate");

    const Mult nu = mult_linear(g, -k, 0);
    const Mult nu1 = mult_linear(g, -k, 1);
    rep.all_pass = true;
    for (const auto& th : rep.source.images) {
        VField avg = reynolds(g, th);
        const bool ok = member(avg, g, nu1);
        rep.averaged.push_back(std::move(avg));
        rep.averaged_member.push_back(ok);
        if (!ok) rep.all_pass = false;
    }
    for (std::size_t hix = 0; hix < g.hyperplanes.size(); ++hix) {
        const VField w = containment_witness(g, nu, hix);
        const bool sep = member(w, g, nu) && !member(w, g, nu1);
        rep.witness_separates.push_back(sep);
        if (!sep) rep.all_pass = false;
    }
    return rep;
}

ShiftCert shifted_universality(const GroupData& g, const FlatFrame& fr, int k) {
    ShiftCert sc;
    sc.from = check_euler_universal(g, fr, -k);
    if (!sc.from.universal)
        throw math_error("shifted_universality: the input field failed its universality certificate");

    const VField& zeta = sc.from.zeta;
    const VField zshift = euler_shift(g, fr, -k - 1);
    sc.step_verified = (nabla(primitive(g, fr), zshift) == zeta);
    sc.to = check_universal(g, zshift, mult_linear(g, k + 1, 0));

    /* transition matrix: nabla_{eta_j}(zeta) over the basis nabla_{dt_i}(zshift) */
    const int l = g.rank;
    const PMat jtx = jacobian(fr.invariants);
    const RMat jxt = rmat_inverse(rmat_from_pmat(jtx));
    const auto forms = hyperplane_forms(g);
    std::vector<VField> basis_fields;
    basis_fields.reserve(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) {
        const VField dt = frame_t_to_x(vfield_unit(Frame::t, l, i, g.degrees), fr.invariants, jxt, forms);
        basis_fields.push_back(nabla(dt, zshift));
    }
    RMat a(l, l, RatFunc(Poly(l)));
    for (int r = 0; r < l; ++r)
        for (int i = 0; i < l; ++i) a(r, i) = basis_fields[static_cast<std::size_t>(i)].coeffs[static_cast<std::size_t>(r)];

    InvariantRewriter rt(fr.invariants);
    sc.transition = PMat(l, l, Poly(l));
    sc.transition_in_tprime = true;
    sc.degrees_match = true;
    for (int j = 0; j < l; ++j) {
        const VField eta_x = frame_t_to_x(fr.eta[static_cast<std::size_t>(j)], fr.invariants, jxt, forms);
        const auto sol = rmat_solve(a, nabla(eta_x, zeta).coeffs);
        if (!sol.consistent || !sol.unique)
            throw math_error("shifted_universality: the transition system is singular");
        for (int i = 0; i < l; ++i) {
            const RatFunc& f = sol.solution[static_cast<std::size_t>(i)];
            const auto p = exact_divide(f.num(), f.den());
            if (!p) throw math_error("shifted_universality: a transition entry is not polynomial");
            const Poly ft = rt.rewrite(*p);
            const int want = g.exponents[static_cast<std::size_t>(i)] +
                             g.coexponents[static_cast<std::size_t>(j)] - g.h;
            if (!ft.is_zero()) {
                if (want < 0) sc.degrees_match = false;
                int wd = 0;
                if (!ft.is_weighted_homogeneous(g.degrees, &wd) || wd != want) sc.degrees_match = false;
                for (const auto& [mono, c] : ft.terms())
                    if (mono.e[static_cast<std::size_t>(l - 1)] != 0) sc.transition_in_tprime = false;
            }
            sc.transition(i, j) = ft;
        }
    }
    const Poly dt = pmat_det_bareiss(sc.transition);
    const bool det_ok = dt.is_constant() && !dt.constant_value().is_zero();
    if (det_ok) sc.det_transition = dt.constant_value();
    sc.all_pass = sc.from.universal && sc.to.universal && sc.step_verified &&
                  sc.transition_in_tprime && sc.degrees_match && det_ok;
    return sc;
}

} // namespace logarr
