#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "logarr/errors.hpp"
#include "logarr/vfield.hpp"

using namespace logarr;

namespace {

Poly X(int nvars, int i) { return Poly::variable(nvars, i); }

RatFunc zero2() { return RatFunc(Poly(2)); }

Poly random_poly(std::mt19937_64& rng, int nvars, int max_deg, int terms) {
    Poly p(nvars);
    std::uniform_int_distribution<int> dd(0, max_deg), cc(-4, 4);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(nvars));
        for (auto& v : e) v = dd(rng);
        p.add_term(Mono::of(e), CycNum(cc(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("apply is the directional derivative") {
    Poly x1 = X(2, 0), x2 = X(2, 1);
    VField theta = vfield_x({RatFunc(x1), zero2()}); // x1 d/dx1
    CHECK(apply(theta, x1 * x1 * x1) == RatFunc(x1 * x1 * x1 * CycNum(3)));
    CHECK(apply(theta, x2).is_zero());

    VField euler = vfield_x({RatFunc(x1), RatFunc(x2)});
    Poly f = x1 * x1 * x2 + x2 * x2 * x1; // homogeneous of degree 3
    CHECK(apply(euler, f) == RatFunc(f * CycNum(3)));
    CHECK(euler.pdeg.value() == 1);
}

TEST_CASE("apply rejects arity mismatches") {
    VField theta = vfield_x({RatFunc(X(2, 0)), zero2()});
    CHECK_THROWS_AS(apply(theta, X(3, 0)), frame_mismatch);
}

TEST_CASE("Leibniz rule") {
    std::mt19937_64 rng(20240811);
    for (int rep = 0; rep < 12; ++rep) {
        Poly f = random_poly(rng, 2, 3, 4), g = random_poly(rng, 2, 3, 4);
        VField theta = vfield_x({RatFunc(random_poly(rng, 2, 2, 3)), RatFunc(random_poly(rng, 2, 2, 3))});
        CHECK(apply(theta, f * g) == RatFunc(f) * apply(theta, g) + RatFunc(g) * apply(theta, f));
    }
}

TEST_CASE("pdeg bookkeeping") {
    Poly x1 = X(2, 0), x2 = X(2, 1);
    VField unit = vfield_unit(Frame::x, 2, 0);
    CHECK(unit.pdeg.value() == 0);

    VField cubic = vfield_x({RatFunc(x1 * x1 * x1), RatFunc(x1 * x2 * x2)});
    CHECK(cubic.pdeg.value() == 3);

    // a field of pdeg p sends degree m to degree m + p - 1
    Poly f = x1 * x1 + x2 * x2;
    CHECK(apply(cubic, f).hdeg().value() == 2 + 3 - 1);

    VField mixed = vfield_x({RatFunc(x1), RatFunc(x1 * x1)});
    CHECK_FALSE(mixed.pdeg.has_value());

    VField ratio = vfield_x({RatFunc(x1, f), RatFunc(x2, f)});
    CHECK(ratio.pdeg.value() == -1);

    CHECK(validate_pdeg(cubic));
    CHECK(validate_pdeg(ratio));
}

TEST_CASE("t-frame pdeg uses the weighted grading") {
    // variables t1, t2 of weights 2 and 4
    std::vector<int> w{2, 4};
    Poly t1 = X(2, 0), t2 = X(2, 1);
    VField dt1 = vfield_t({RatFunc(Poly::constant(2, CycNum(1))), zero2()}, w);
    CHECK(dt1.pdeg.value() == -1);
    VField dt2 = vfield_t({zero2(), RatFunc(Poly::constant(2, CycNum(1)))}, w);
    CHECK(dt2.pdeg.value() == -3);
    // t1^2 d/dt2 and t2 d/dt2 are both homogeneous of pdeg 1
    VField a = vfield_t({zero2(), RatFunc(t1 * t1)}, w);
    VField b = vfield_t({zero2(), RatFunc(t2)}, w);
    CHECK(a.pdeg.value() == 1);
    CHECK(b.pdeg.value() == 1);
    CHECK(vf_add(a, b).pdeg.value() == 1);
    // mixing pdeg -1 and pdeg 1 coefficients is inhomogeneous
    VField m = vfield_t({RatFunc(Poly::constant(2, CycNum(1))), RatFunc(t2)}, w);
    CHECK_FALSE(m.pdeg.has_value());
}

TEST_CASE("nabla differentiates the coefficient vector") {
    Poly x1 = X(2, 0), x2 = X(2, 1);
    VField euler = vfield_x({RatFunc(x1), RatFunc(x2)});
    VField unit0 = vfield_unit(Frame::x, 2, 0);

    // flat sections are nabla-constant
    CHECK(nabla(euler, unit0).is_zero());

    VField phi = vfield_x({RatFunc(x1 * x2), RatFunc(x2 * x2)});
    VField got = nabla(unit0, phi);
    CHECK(got.coeffs[0] == RatFunc(x2));
    CHECK(got.coeffs[1].is_zero());
    CHECK(got.pdeg.value() == phi.pdeg.value() + unit0.pdeg.value() - 1);

    VField via_euler = nabla(euler, phi);
    CHECK(via_euler.coeffs[0] == RatFunc(x1 * x2 * CycNum(2)));
    CHECK(via_euler.pdeg.value() == 2);
}

TEST_CASE("nabla is additive and Leibniz in the scalar") {
    std::mt19937_64 rng(991);
    Poly x1 = X(2, 0), x2 = X(2, 1);
    VField theta = vfield_x({RatFunc(random_poly(rng, 2, 2, 3)), RatFunc(random_poly(rng, 2, 2, 3))});
    VField phi = vfield_x({RatFunc(random_poly(rng, 2, 3, 3)), RatFunc(random_poly(rng, 2, 3, 3))});
    VField psi = vfield_x({RatFunc(random_poly(rng, 2, 3, 3)), RatFunc(random_poly(rng, 2, 3, 3))});
    CHECK(nabla(theta, vf_add(phi, psi)) == vf_add(nabla(theta, phi), nabla(theta, psi)));

    RatFunc f(x1 * x1 + x2);
    // nabla_theta(f phi) = theta(f) phi + f nabla_theta(phi)
    VField lhs = nabla(theta, vf_scale(phi, f));
    VField rhs = vf_add(vf_scale(phi, apply(theta, f)), vf_scale(nabla(theta, phi), f));
    CHECK(lhs == rhs);
}

TEST_CASE("wedge of the unit frame is 1 and wedge is alternating") {
    VField d1 = vfield_unit(Frame::x, 3, 0);
    VField d2 = vfield_unit(Frame::x, 3, 1);
    VField d3 = vfield_unit(Frame::x, 3, 2);
    CHECK(wedge({d1, d2, d3}) == RatFunc(Poly::constant(3, CycNum(1))));
    CHECK(wedge({d1, d2, d1}).is_zero());
    CHECK(wedge({d2, d1, d3}) == RatFunc(Poly::constant(3, CycNum(-1))));

    Poly x1 = X(3, 0);
    CHECK(wedge({vf_scale(d1, RatFunc(x1)), d2, d3}) == RatFunc(x1));
}

TEST_CASE("saito matrix rows are coefficient vectors") {
    Poly x1 = X(2, 0), x2 = X(2, 1);
    VField a = vfield_x({RatFunc(x1), RatFunc(x2)});
    VField b = vfield_x({RatFunc(x2), zero2()});
    RMat m = saito_matrix({a, b});
    CHECK(m.rows() == 2);
    CHECK(m(0, 0) == RatFunc(x1));
    CHECK(m(1, 0) == RatFunc(x2));
    CHECK(m(1, 1).is_zero());
    CHECK(wedge({a, b}) == RatFunc(Poly(2) - x2 * x2));
}

TEST_CASE("group action on fields") {
    Poly x1 = X(2, 0), x2 = X(2, 1);
    // w = diag(1,-1)
    CMat w(2, 2, CycNum(0));
    w(0, 0) = CycNum(1);
    w(1, 1) = CycNum(-1);
    CMat winv = cmat_conj_transpose(w);

    VField theta = vfield_x({RatFunc(x2), zero2()});
    VField moved = w_action(theta, w, winv);
    CHECK(moved.coeffs[0] == -RatFunc(x2));
    CHECK(moved.coeffs[1].is_zero());

    VField euler = vfield_x({RatFunc(x1), RatFunc(x2)});
    CHECK(w_action(euler, w, winv) == euler);

    // s = the swap, zrot = rotation part of the order-3 dihedral group
    CMat s(2, 2, CycNum(0));
    s(0, 1) = CycNum(1);
    s(1, 0) = CycNum(1);
    CMat zrot(2, 2, CycNum(0));
    zrot(0, 1) = CycNum::root_of_unity(3, 1);
    zrot(1, 0) = CycNum::root_of_unity(3, 2);

    std::mt19937_64 rng(7);
    VField phi = vfield_x({RatFunc(random_poly(rng, 2, 3, 4)), RatFunc(random_poly(rng, 2, 3, 4))});
    // homomorphism: (s zrot) . phi = s . (zrot . phi)
    CMat prod = cmat_mul(s, zrot);
    VField lhs = w_action(phi, prod, cmat_conj_transpose(prod));
    VField rhs = w_action(w_action(phi, zrot, cmat_conj_transpose(zrot)), s, cmat_conj_transpose(s));
    CHECK(lhs == rhs);

    // equivariance: (w.theta)(w.f) = w.(theta(f))
    Poly f = random_poly(rng, 2, 3, 4);
    RatFunc wf = ratfunc_substitute_linear(RatFunc(f), cmat_conj_transpose(s));
    CHECK(apply(w_action(phi, s, cmat_conj_transpose(s)), wf) ==
          ratfunc_substitute_linear(apply(phi, f), cmat_conj_transpose(s)));
}

TEST_CASE("frame change from t to x inverts the jacobian") {
    // t1 = x1^2 + x2^2, t2 = x1^2 x2^2
    Poly x1 = X(2, 0), x2 = X(2, 1);
    Poly t1 = x1 * x1 + x2 * x2;
    Poly t2 = x1 * x1 * x2 * x2;
    std::vector<Poly> t{t1, t2};

    PMat jtx(2, 2, Poly(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) jtx(i, j) = t[static_cast<std::size_t>(j)].partial(i);
    RMat jxt = rmat_inverse(rmat_from_pmat(jtx));

    std::vector<int> w{2, 4};
    std::vector<Poly> candidates{x1, x2, x1 - x2, x1 + x2};
    for (int j = 0; j < 2; ++j) {
        VField dtj = vfield_unit(Frame::t, 2, j, w);
        VField in_x = frame_t_to_x(dtj, t, jxt, candidates);
        CHECK(in_x.frame == Frame::x);
        for (int k = 0; k < 2; ++k) {
            RatFunc got = apply(in_x, t[static_cast<std::size_t>(k)]);
            CHECK(got == RatFunc(Poly::constant(2, CycNum(j == k ? 1 : 0))));
        }
        CHECK(in_x.pdeg.value() == dtj.pdeg.value());
    }

    // t1 d/dt1 is weighted-homogeneous and keeps its pdeg across the frame change
    VField comb = vfield_t({RatFunc(X(2, 0)), zero2()}, w);
    CHECK(comb.pdeg.value() == 1);
    VField comb_x = frame_t_to_x(comb, t, jxt, candidates);
    CHECK(comb_x.pdeg.value() == 1);
    CHECK(apply(comb_x, t1) == RatFunc(t1));
}

TEST_CASE("vf_scale tracks degree shifts") {
    Poly x1 = X(2, 0), x2 = X(2, 1);
    VField unit0 = vfield_unit(Frame::x, 2, 0);
    VField scaled = vf_scale(unit0, RatFunc(x1 * x2));
    CHECK(scaled.pdeg.value() == 2);
    VField c = vf_scale(scaled, CycNum(Rat(1, 2)));
    CHECK(c.pdeg.value() == 2);
    CHECK(c.coeffs[0] == RatFunc(x1 * x2 * CycNum(Rat(1, 2))));

    VField zero = vf_sub(scaled, scaled);
    CHECK(zero.is_zero());
    CHECK(vf_add(zero, scaled) == scaled);
}
