#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "logarr/errors.hpp"
#include "logarr/linalg.hpp"
#include "logarr/poly.hpp"
#include "logarr/ratfunc.hpp"

using namespace logarr;

namespace {

Poly mono2(int e1, int e2, const CycNum& c = CycNum(1)) { return Poly::monomial(2, {e1, e2}, c); }

Poly random_poly(std::mt19937_64& rng, int nvars, int max_deg, int terms) {
    std::uniform_int_distribution<int> ed(0, max_deg);
    std::uniform_int_distribution<int> cd(-5, 5);
    Poly p(nvars);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(nvars);
        for (auto& x : e) x = ed(rng);
        p.add_term(Mono::of(std::move(e)), CycNum(cd(rng)));
    }
    return p;
}

Poly random_linform(std::mt19937_64& rng, int nvars) {
    std::uniform_int_distribution<int> cd(-3, 3);
    while (true) {
        Poly p(nvars);
        for (int i = 0; i < nvars; ++i) {
            std::vector<int> e(nvars, 0);
            e[i] = 1;
            p.add_term(Mono::of(std::move(e)), CycNum(cd(rng)));
        }
        if (!p.is_zero()) return p;
    }
}

} // namespace

TEST_CASE("basic arithmetic and degrees") {
    Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    Poly f = x1 * x1 - x2 * x2;
    CHECK(f.degree() == 2);
    CHECK(f.is_homogeneous());
    CHECK(Poly(2).degree() == std::nullopt);
    CHECK((f - f).is_zero());
    CHECK(f * Poly(2) == Poly(2));
    Poly g = x1 + x2;
    CHECK((f + g).is_homogeneous() == false);
    CHECK(f.pow(3) == f * f * f);
    CHECK(f.pow(0) == Poly::constant(2, CycNum(1)));
}

TEST_CASE("grlex leading term") {
    Poly p = mono2(2, 0) + mono2(1, 1) + mono2(0, 3);
    CHECK(p.leading_mono().e == std::vector<int>{0, 3}); // degree 3 beats degree 2
    Poly q = mono2(2, 0) + mono2(1, 1);
    CHECK(q.leading_mono().e == std::vector<int>{2, 0}); // same degree: lex
}

TEST_CASE("partial derivatives") {
    Poly f = mono2(2, 1); // x1^2 x2
    CHECK(f.partial(0) == mono2(1, 1, CycNum(2)));
    CHECK(f.partial(1) == mono2(2, 0));
    CHECK(f.partial(0).partial(1) == f.partial(1).partial(0));
}

TEST_CASE("linear substitution") {
    Poly f = mono2(1, 2); // x1 x2^2
    std::vector<std::vector<CycNum>> ident = {{CycNum(1), CycNum(0)}, {CycNum(0), CycNum(1)}};
    CHECK(f.substitute_linear(ident) == f);
    std::vector<std::vector<CycNum>> swap = {{CycNum(0), CycNum(1)}, {CycNum(1), CycNum(0)}};
    CHECK(f.substitute_linear(swap) == mono2(2, 1));

    // unitary rotation diag(i, -i) of order 4 fixes the quadric x1 x2 exactly
    CycNum i4 = CycNum::root_of_unity(4, 1);
    std::vector<std::vector<CycNum>> rot = {{i4, CycNum(0)}, {CycNum(0), -i4}};
    Poly quadric = mono2(1, 1);
    CHECK(quadric.substitute_linear(rot) == quadric);
    // while the anti-diagonal map (x1,x2) -> (i x2, i x1) negates x1^2 + x2^2
    std::vector<std::vector<CycNum>> anti = {{CycNum(0), i4}, {i4, CycNum(0)}};
    Poly sumsq = mono2(2, 0) + mono2(0, 2);
    CHECK(sumsq.substitute_linear(anti) == -sumsq);
}

TEST_CASE("general substitution composes") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 10; ++it) {
        Poly f = random_poly(rng, 2, 3, 4);
        std::vector<Poly> g = {random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3)};
        std::vector<Poly> h = {random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3)};
        std::vector<Poly> gh = {g[0].substitute(h), g[1].substitute(h)};
        CHECK(f.substitute(g).substitute(h) == f.substitute(gh));
    }
}

TEST_CASE("exact division") {
    Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    auto q = exact_divide(x1 * x1 - x2 * x2, x1 - x2);
    REQUIRE(q.has_value());
    CHECK(*q == x1 + x2);
    CHECK(!exact_divide(x1, x2).has_value());
    CHECK_THROWS_AS((void)exact_divide(x1, Poly(2)), division_by_zero);

    std::mt19937_64 rng(3);
    for (int it = 0; it < 30; ++it) {
        Poly f = random_poly(rng, 3, 3, 4);
        Poly g = random_poly(rng, 3, 2, 3);
        if (g.is_zero()) continue;
        auto r = exact_divide(f * g, g);
        REQUIRE(r.has_value());
        CHECK(*r == f);
    }
}

TEST_CASE("valuation") {
    Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    Poly a = x1 + x2;
    CHECK(valuation(x1 * x1 * x1 * a * a, a) == 2);
    CHECK(valuation(x1, a) == 0);
    CHECK(valuation(Poly(2), a) == VAL_INFINITY);

    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 40) {
        Poly alpha = random_linform(rng, 2);
        Poly f = random_poly(rng, 2, 3, 3) * alpha.pow(checked % 3);
        Poly g = random_poly(rng, 2, 3, 3) * alpha.pow((checked + 1) % 2);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK(valuation(f * g, alpha) == valuation(f, alpha) + valuation(g, alpha));
        ++checked;
    }
}

TEST_CASE("rational functions normalize and cancel") {
    Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    RatFunc r(x1 * x1 * x2, x1 * x2 * x2); // monomial content cancels
    CHECK(r.num() == x1);
    CHECK(r.den() == x2);
    RatFunc s(x1 * x1 - x2 * x2, x1 - x2);
    CHECK(s.reduced_by({x1 - x2}).is_polynomial());
    CHECK(s.reduced_by({x1 - x2}).to_poly() == x1 + x2);
    CHECK(s == RatFunc(x1 + x2)); // cross-multiplied equality sees through representation
    CHECK(RatFunc(x1, x1 * CycNum(3)).den().leading_coeff() == CycNum(1));
    CHECK_THROWS_AS(RatFunc(x1, Poly(2)), division_by_zero);
}

TEST_CASE("rational function field ops") {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 15; ++it) {
        Poly n1 = random_poly(rng, 2, 2, 3), d1 = random_poly(rng, 2, 2, 3);
        Poly n2 = random_poly(rng, 2, 2, 3), d2 = random_poly(rng, 2, 2, 3);
        if (d1.is_zero() || d2.is_zero()) continue;
        RatFunc a(n1, d1), b(n2, d2);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == RatFunc(Poly(2)));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        // derivative satisfies the Leibniz rule
        CHECK((a * b).partial(0) == a.partial(0) * b + a * b.partial(0));
    }
}

TEST_CASE("homogeneous degree bookkeeping") {
    Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    RatFunc r(x1 * x1 * x2, x1 - x2);
    CHECK(r.hdeg() == 2);
    CHECK(RatFunc(x1 + x1 * x1).hdeg() == std::nullopt);
    CHECK(r.weighted_hdeg({2, 2}) == 4);
}

TEST_CASE("cyc matrix determinant, inverse, solve") {
    CMat a(2, 2, CycNum(0));
    a(0, 0) = CycNum(1);
    a(0, 1) = CycNum(2);
    a(1, 0) = CycNum::root_of_unity(4, 1);
    a(1, 1) = CycNum(1);
    CycNum det = cmat_det(a);
    CHECK(det == CycNum(1) - CycNum(2) * CycNum::root_of_unity(4, 1));
    CMat inv = cmat_inverse(a);
    CHECK(cmat_mul(a, inv) == cmat_identity(2));

    std::vector<CycNum> b = {CycNum(3), CycNum(0)};
    auto sol = cmat_solve(a, b);
    REQUIRE(sol.consistent);
    CHECK(sol.kernel.empty());
    CycNum r0 = a(0, 0) * sol.particular[0] + a(0, 1) * sol.particular[1];
    CHECK(r0 == CycNum(3));

    // singular system: consistent with kernel
    CMat s(2, 2, CycNum(0));
    s(0, 0) = CycNum(1);
    s(0, 1) = CycNum(1);
    s(1, 0) = CycNum(2);
    s(1, 1) = CycNum(2);
    auto ks = cmat_solve(s, {CycNum(1), CycNum(2)});
    REQUIRE(ks.consistent);
    CHECK(ks.kernel.size() == 1);
    auto bad = cmat_solve(s, {CycNum(1), CycNum(3)});
    CHECK(!bad.consistent);
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
    std::mt19937_64 rng(12);
    for (int it = 0; it < 8; ++it) {
        PMat m(3, 3, Poly(2));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = random_poly(rng, 2, 2, 2);
        Poly direct(2);
        int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
        for (int p = 0; p < 6; ++p) {
            Poly term = m(0, perm[p][0]) * m(1, perm[p][1]) * m(2, perm[p][2]);
            direct = p < 3 ? direct + term : direct - term;
        }
        CHECK(pmat_det_bareiss(m) == direct);
    }
}

TEST_CASE("frozen jacobian determinant of the degree-2,4 pair") {
    // t1 = x1^2 + x2^2, t2 = x1^2 x2^2: det of the jacobian is 4 x1 x2 (x1^2 - x2^2)
    Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    Poly t1 = x1 * x1 + x2 * x2, t2 = x1 * x1 * x2 * x2;
    PMat j(2, 2, Poly(2));
    j(0, 0) = t1.partial(0);
    j(0, 1) = t2.partial(0);
    j(1, 0) = t1.partial(1);
    j(1, 1) = t2.partial(1);
    Poly det = pmat_det_bareiss(j);
    Poly expect = CycNum(4) * (x1 * x2 * (x1 * x1 - x2 * x2));
    CHECK(det == expect);
}

TEST_CASE("ratfunc matrix inverse and solve") {
    std::mt19937_64 rng(5);
    Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1);
    RMat m(2, 2, RatFunc(Poly(2)));
    m(0, 0) = RatFunc(x1, x2);
    m(0, 1) = RatFunc(Poly::constant(2, CycNum(1)));
    m(1, 0) = RatFunc(x2);
    m(1, 1) = RatFunc(x1 + x2);
    RMat inv = rmat_inverse(m);
    CHECK(rmat_mul(m, inv) == rmat_identity(2, 2));
    CHECK(rmat_det(m) == RatFunc(x1 * x1 + x1 * x2 - x2 * x2, x2));

    auto sol = rmat_solve(m, {RatFunc(x1), RatFunc(x2)});
    REQUIRE(sol.consistent);
    REQUIRE(sol.unique);
    RatFunc r0 = m(0, 0) * sol.solution[0] + m(0, 1) * sol.solution[1];
    CHECK(r0 == RatFunc(x1));
    RatFunc r1 = m(1, 0) * sol.solution[0] + m(1, 1) * sol.solution[1];
    CHECK(r1 == RatFunc(x2));
}

TEST_CASE("echelon rank certificate") {
    Poly x1 = Poly::variable(1, 0);
    PMat m(3, 2, Poly(1));
    m(0, 0) = x1;
    m(0, 1) = x1 * x1;
    m(1, 0) = Poly::constant(1, CycNum(1));
    m(1, 1) = x1;
    m(2, 0) = x1 + Poly::constant(1, CycNum(1));
    m(2, 1) = x1 * x1 + x1;
    auto ech = pmat_echelon(m);
    CHECK(ech.rank == 1); // all rows proportional to (1, x1) over the fraction field
    PMat full(2, 2, Poly(1));
    full(0, 0) = x1;
    full(0, 1) = Poly::constant(1, CycNum(2));
    full(1, 0) = Poly::constant(1, CycNum(1));
    full(1, 1) = x1;
    CHECK(pmat_echelon(full).rank == 2);
}
