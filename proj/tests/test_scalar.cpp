#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "logarr/cyclotomic.hpp"
#include "logarr/errors.hpp"

using namespace logarr;

namespace {

CycNum z(unsigned n, long k = 1) { return CycNum::root_of_unity(n, k); }

CycNum random_cyc(std::mt19937_64& rng, unsigned order) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rat> c;
    for (unsigned i = 0; i < euler_phi(order); ++i) c.emplace_back(Rat(num(rng), den(rng)));
    for (auto& x : c) x.canonicalize();
    return CycNum::from_coeffs(order, std::move(c));
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
    auto p1 = cyclotomic_polynomial(1);
    CHECK(p1 == std::vector<Rat>{Rat(-1), Rat(1)});
    auto p4 = cyclotomic_polynomial(4); // x^2 + 1
    CHECK(p4 == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    auto p12 = cyclotomic_polynomial(12); // x^4 - x^2 + 1
    CHECK(p12 == std::vector<Rat>{Rat(1), Rat(0), Rat(-1), Rat(0), Rat(1)});
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(5) == 4);
}

TEST_CASE("frozen arithmetic identities") {
    // (1 + z3)(1 + z3^2) = 1
    CycNum a = CycNum(1) + z(3);
    CycNum b = CycNum(1) + z(3, 2);
    CHECK(a * b == CycNum(1));
    CHECK(a.inv() == b);

    // i^{-1} = -i
    CHECK(z(4).inv() == -z(4));

    // conj(z3) = z3^2 = -1 - z3
    CHECK(z(3).conj() == z(3, 2));
    CHECK(z(3).conj() == CycNum(-1) - z(3));

    // mixing orders 3 and 4 lands in order 12
    CycNum m = z(4) * z(3);
    CHECK(m == z(12, 7));
    CHECK(m.order() == 12);
}

TEST_CASE("order compression and cross-order equality") {
    CHECK(z(6, 2) == z(3));
    CHECK(z(6, 2).order() == 3);
    CHECK(CycNum(1) + z(3) == z(6)); // 1 + z3 is a primitive 6th root
    CHECK(z(2) == CycNum(-1));
    CHECK(z(1) == CycNum(1));
    CHECK(z(5).order() == 5);
}

TEST_CASE("rationality detection") {
    CHECK(CycNum(Rat(3, 4)).is_rational());
    CHECK(!z(5).is_rational());
    CHECK((z(3) + z(3, 2)).to_rational() == Rat(-1));
    CHECK_THROWS_AS((void)z(5).to_rational(), math_error);
    CHECK_THROWS_AS((void)CycNum(0).inv(), division_by_zero);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(20240811);
    for (unsigned order : {1u, 3u, 4u, 5u, 12u}) {
        for (int it = 0; it < 25; ++it) {
            CycNum a = random_cyc(rng, order);
            CycNum b = random_cyc(rng, order);
            CycNum c = random_cyc(rng, 12);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a.conj().conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK((a + b).conj() == a.conj() + b.conj());
            if (!a.is_zero()) {
                CHECK(a * a.inv() == CycNum(1));
                CHECK(a / a == CycNum(1));
            }
        }
    }
}

TEST_CASE("conjugation is the complex conjugate embedding") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 10; ++it) {
        CycNum a = random_cyc(rng, 12);
        auto za = a.to_complex();
        auto zc = a.conj().to_complex();
        CHECK(std::abs(za.real() - zc.real()) < 1e-9);
        CHECK(std::abs(za.imag() + zc.imag()) < 1e-9);
        // norm a * conj(a) is conj-invariant
        CycNum nrm = a * a.conj();
        CHECK(nrm.conj() == nrm);
    }
}

TEST_CASE("roots of unity satisfy their minimal polynomial") {
    for (unsigned n : {3u, 4u, 5u, 6u, 12u}) {
        const auto& phi = cyclotomic_polynomial(n);
        CycNum zn = z(n);
        CycNum acc(0), pw(1);
        for (const auto& coef : phi) {
            acc += CycNum(coef) * pw;
            pw *= zn;
        }
        CHECK(acc.is_zero());
        // z^n = 1, z^k != 1 for 0 < k < n
        CycNum p(1);
        for (unsigned k = 1; k < n; ++k) {
            p *= zn;
            CHECK(p != CycNum(1));
        }
        CHECK(p * zn == CycNum(1));
    }
}
