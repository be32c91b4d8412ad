#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "logarr/catalog.hpp"
#include "logarr/errors.hpp"
#include "logarr/multiarr.hpp"

using namespace logarr;

namespace {

Poly X(int nvars, int i) { return Poly::variable(nvars, i); }

GroupData boolean2() {
    CMat a(2, 2, CycNum(0)), b(2, 2, CycNum(0));
    a(0, 0) = CycNum(-1);
    a(1, 1) = CycNum(1);
    b(0, 0) = CycNum(1);
    b(1, 1) = CycNum(-1);
    return enumerate_group("Bool2", {a, b}, 1);
}

std::size_t hyperplane_index(const GroupData& g, const Poly& alpha) {
    for (std::size_t i = 0; i < g.hyperplanes.size(); ++i)
        if (g.hyperplanes[i].alpha.to_poly() == alpha) return i;
    throw std::runtime_error("no such hyperplane in test");
}

Mult mult_by_form(const GroupData& g, const std::vector<std::pair<Poly, int>>& assign) {
    Mult m = mult_constant(g, 0);
    for (const auto& [p, val] : assign) m.v[hyperplane_index(g, p)] = val;
    return m;
}

Poly random_poly(std::mt19937_64& rng, int nvars, int max_deg, int terms) {
    Poly p(nvars);
    std::uniform_int_distribution<int> dd(0, max_deg), cc(-3, 3);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(nvars));
        for (auto& v : e) v = dd(rng);
        p.add_term(Mono::of(e), CycNum(cc(rng)));
    }
    return p;
}

/* the t-coordinate unit fields rewritten in the x-frame */
std::vector<VField> dt_fields(const GroupData& g) {
    RMat jxt = rmat_inverse(rmat_from_pmat(jacobian(g.invariants)));
    std::vector<Poly> candidates;
    for (const auto& hp : g.hyperplanes) candidates.push_back(hp.alpha.to_poly());
    std::vector<VField> out;
    for (int j = 0; j < g.rank; ++j)
        out.push_back(frame_t_to_x(vfield_unit(Frame::t, g.rank, j, g.degrees), g.invariants, jxt, candidates));
    return out;
}

} // namespace

TEST_CASE("multiplicity spec mini-language") {
    GroupData g = build_group("I2_4");
    CHECK(parse_mult(g, "omega") == mult_omega(g));
    CHECK(parse_mult(g, "-2*omega+1") == mult_linear(g, -2, 1));
    CHECK(parse_mult(g, "-omega+1") == mult_linear(g, -1, 1));
    CHECK(parse_mult(g, "2*omega-1") == mult_linear(g, 2, -1));
    CHECK(parse_mult(g, "omega-1") == mult_linear(g, 1, -1));
    CHECK(parse_mult(g, "3") == mult_constant(g, 3));
    CHECK(parse_mult(g, "-1") == mult_constant(g, -1));
    CHECK(parse_mult(g, " 1 , 2 ").v.size() == 4); // one value per orbit
    for (const auto& hp : g.hyperplanes) {
        Mult m = parse_mult(g, "1,2");
        CHECK(m.v[hyperplane_index(g, hp.alpha.to_poly())] == (hp.orbit == 0 ? 1 : 2));
    }
    CHECK_THROWS_AS(parse_mult(g, "omega*2"), usage_error);
    CHECK_THROWS_AS(parse_mult(g, "1,2,3"), usage_error);
    CHECK_THROWS_AS(parse_mult(g, "banana"), usage_error);

    Mult omega = mult_omega(g);
    CHECK(omega.total() == 8);
    CHECK(mult_linear(g, -1, 1).total() == -4);
    CHECK(omega.geq(mult_constant(g, 1)));
    CHECK_FALSE(mult_constant(g, 1).geq(omega));
}

TEST_CASE("defining fraction of a multiplicity") {
    GroupData g = build_group("I2_4");
    Qdata q1 = qdata(g, mult_constant(g, 1));
    CHECK(q1.qplus == g.Q);
    CHECK(q1.qminus.is_constant());

    Qdata qw = qdata(g, mult_omega(g));
    CHECK(qw.qplus == g.Qomega);

    Qdata qneg = qdata(g, mult_linear(g, -1, 1)); // nu = -omega+1 = -1 here
    CHECK(qneg.qplus.is_constant());
    CHECK(qneg.qminus == g.J);

    // mixed signs split between the two factors with no common form
    Mult mixed = mult_constant(g, 0);
    mixed.v[0] = 2;
    mixed.v[1] = -1;
    Qdata qm = qdata(g, mixed);
    Poly a0 = g.hyperplanes[0].alpha.to_poly(), a1 = g.hyperplanes[1].alpha.to_poly();
    CHECK(qm.qplus == a0 * a0);
    CHECK(qm.qminus == a1);
}

TEST_CASE("perpendicular bases annihilate under the normal derivation") {
    GroupData g = build_group("G4");
    for (std::size_t h = 0; h < g.hyperplanes.size(); ++h) {
        VField normal = normal_field(g, h);
        auto perp = perp_basis(g.hyperplanes[h].alpha);
        CHECK(perp.size() == static_cast<std::size_t>(g.rank - 1));
        for (const auto& beta : perp) CHECK(apply(normal, beta.to_poly()).is_zero());
        // the normal direction itself is not annihilated
        CHECK_FALSE(apply(normal, g.hyperplanes[h].alpha.to_poly()).is_zero());
    }
}

TEST_CASE("membership in the coordinate-axes arrangement") {
    GroupData g = boolean2();
    REQUIRE(g.hyperplanes.size() == 2);
    Poly x1 = X(2, 0), x2 = X(2, 1);
    RatFunc zero(Poly(2));

    VField d1 = vfield_unit(Frame::x, 2, 0);
    CHECK(member_inf(d1, g));

    VField theta = vfield_x({RatFunc(x1 * x1), RatFunc(x2)});
    CHECK(member(theta, g, mult_by_form(g, {{x1, 2}, {x2, 1}})));
    CHECK_FALSE(member(theta, g, mult_by_form(g, {{x1, 3}, {x2, 1}})));
    CHECK_FALSE(member(theta, g, mult_by_form(g, {{x1, 2}, {x2, 2}})));

    // poles along the arrangement are fine for D(A,infty) in the normal direction
    VField pole_normal = vfield_x({RatFunc(Poly::constant(2, CycNum(1)), x1), zero});
    CHECK(member_inf(pole_normal, g));
    CHECK(member(pole_normal, g, mult_by_form(g, {{x1, -1}, {x2, 0}})));
    CHECK_FALSE(member(pole_normal, g, mult_by_form(g, {{x1, 0}, {x2, 0}})));

    // but not in a perpendicular direction
    VField pole_tangent = vfield_x({zero, RatFunc(Poly::constant(2, CycNum(1)), x1)});
    CHECK_FALSE(member_inf(pole_tangent, g));

    // denominators away from the arrangement are rejected outright
    VField off = vfield_x({RatFunc(x1, x1 + Poly::constant(2, CycNum(1))), zero});
    CHECK_FALSE(member_inf(off, g));
}

TEST_CASE("saito criterion on the coordinate axes") {
    GroupData g = boolean2();
    Poly x1 = X(2, 0), x2 = X(2, 1);
    RatFunc zero(Poly(2));
    Mult nu = mult_by_form(g, {{x1, 2}, {x2, 1}});

    VField t1 = vfield_x({RatFunc(x1 * x1), zero});
    VField t2 = vfield_x({zero, RatFunc(x2)});
    BasisCert cert = saito_check({t1, t2}, g, nu);
    CHECK(cert.verdict == Verdict::Basis);
    CHECK(cert.determinant == RatFunc(x1 * x1 * x2));
    CHECK(cert.scalar.value() == CycNum(1));
    CHECK(cert.pdeg_sum.value() == 3);
    CHECK(exponents(cert) == std::vector<int>{1, 2});

    // dependent tuple
    VField d1 = vfield_unit(Frame::x, 2, 0);
    VField e1 = vfield_x({RatFunc(x1), zero});
    BasisCert dep = saito_check({d1, e1}, g, mult_constant(g, 0));
    CHECK(dep.verdict == Verdict::NotBasis);
    CHECK(dep.determinant.is_zero());
    CHECK_FALSE(dep.scalar.has_value());
    CHECK_THROWS_AS(exponents(dep), math_error);

    // membership failure short-circuits
    BasisCert nm = saito_check({d1, vfield_unit(Frame::x, 2, 1)}, g, mult_constant(g, 1));
    CHECK(nm.verdict == Verdict::NotMembers);

    // wrong arity
    CHECK(saito_check({d1}, g, nu).verdict == Verdict::NotBasis);
}

TEST_CASE("module generators certify the simple arrangement for every group") {
    for (const char* name : {"I2_3", "I2_4", "I2_5", "I2_6", "A3", "G4"}) {
        CAPTURE(name);
        GroupData g = build_group(name);
        BasisCert cert = saito_check(g.coexp_seeds, g, mult_constant(g, 1));
        CHECK(cert.verdict == Verdict::Basis);
        CHECK(exponents(cert) == g.coexponents);
        CHECK(cert.pdeg_sum.value() == static_cast<int>(g.hyperplanes.size()));
    }
}

TEST_CASE("invariant coordinate fields certify nu = -omega+1") {
    for (const char* name : {"I2_3", "I2_4", "A3"}) {
        CAPTURE(name);
        GroupData g = build_group(name);
        auto dt = dt_fields(g);
        for (int j = 0; j < g.rank; ++j)
            CHECK(dt[static_cast<std::size_t>(j)].pdeg.value() == 1 - g.degrees[static_cast<std::size_t>(j)]);
        Mult nu = mult_linear(g, -1, 1);
        BasisCert cert = saito_check(dt, g, nu);
        CHECK(cert.verdict == Verdict::Basis);
        std::vector<int> expected;
        for (int e : g.exponents) expected.push_back(-e);
        std::sort(expected.begin(), expected.end());
        CHECK(exponents(cert) == expected);
        CHECK(cert.pdeg_sum.value() == nu.total());
    }
}

TEST_CASE("raising one multiplicity strictly shrinks the module") {
    std::mt19937_64 rng(4242);
    for (const char* name : {"I2_4", "G4"}) {
        CAPTURE(name);
        GroupData g = build_group(name);
        std::uniform_int_distribution<int> dmult(-2, 2), dh(0, static_cast<int>(g.hyperplanes.size()) - 1);
        for (int rep = 0; rep < 4; ++rep) {
            Mult nu = mult_constant(g, 0);
            for (auto& v : nu.v) v = dmult(rng);
            std::size_t bump = static_cast<std::size_t>(dh(rng));
            if (nu.v[bump] < 0) nu.v[bump] = 0;
            Mult mu = nu;
            mu.v[bump] += 1;

            VField witness = vf_scale(normal_field(g, bump), RatFunc(qdata(g, nu).qplus));
            CHECK(member(witness, g, nu));
            CHECK_FALSE(member(witness, g, mu));
        }
    }
}

TEST_CASE("clearing denominators and determinant valuations") {
    GroupData g = build_group("I2_4");
    Mult nu = mult_linear(g, -1, 1);
    Qdata q = qdata(g, nu);
    auto dt = dt_fields(g);
    std::vector<Poly> forms;
    for (const auto& hp : g.hyperplanes) forms.push_back(hp.alpha.to_poly());

    // clearing by Q- makes every coefficient polynomial
    for (const auto& th : dt)
        for (const auto& c : th.coeffs) CHECK((RatFunc(q.qminus) * c).reduced_by(forms).is_polynomial());

    // wedges of random member tuples vanish to order nu along each hyperplane
    std::mt19937_64 rng(5150);
    for (int rep = 0; rep < 4; ++rep) {
        std::vector<VField> tuple;
        for (int i = 0; i < g.rank; ++i) {
            VField th = vf_scale(dt[0], RatFunc(random_poly(rng, 2, 2, 3)));
            th = vf_add(th, vf_scale(dt[1], RatFunc(random_poly(rng, 2, 2, 3))));
            tuple.push_back(th);
        }
        RatFunc w = wedge(tuple);
        for (std::size_t h = 0; h < g.hyperplanes.size(); ++h)
            CHECK(rat_valuation(w, forms[h]) >= nu.v[h]);
    }
}
