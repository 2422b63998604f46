#include <doctest.h>

#include <random>
#include <set>

#include "glnq/fq.hpp"
#include "glnq/fqpoly.hpp"
#include "glnq/matrix.hpp"

using namespace glnq;

TEST_CASE("F_3 arithmetic basics") {
    const FqField& F = FqField::get(3);
    CHECK(F.add(2, 2) == 1);   // 2 + 2 = 1 mod 3
    CHECK(F.inv(2) == 2);      // 2 * 2 = 4 = 1 mod 3
    CHECK(F.mul(2, 2) == 1);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
}

TEST_CASE("F_9 is F_3[t]/(t^2+1) and t*t = -1") {
    const FqField& F = FqField::get(9);
    CHECK(F.p() == 3);
    CHECK(F.f() == 2);
    CHECK(F.modulus() == std::vector<int>{1, 0, 1}); // t^2 + 1
    int t = F.from_coeffs({0, 1});
    CHECK(F.mul(t, t) == F.neg(1));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(4242);
    for (long long q : {3LL, 5LL, 9LL, 27LL}) {
        const FqField& F = FqField::get(q);
        for (int i = 0; i < 200; ++i) {
            int a = static_cast<int>(rng() % q);
            int b = static_cast<int>(rng() % q);
            int c = static_cast<int>(rng() % q);
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        }
    }
}

TEST_CASE("Frobenius fixes every element: a^q = a, exhaustively for q <= 27") {
    for (long long q : {3LL, 5LL, 7LL, 9LL, 25LL, 27LL}) {
        const FqField& F = FqField::get(q);
        for (int a = 0; a < q; ++a) CHECK(F.pow(a, q) == a);
    }
}

TEST_CASE("FieldElement wrapper carries coefficients") {
    const FqField& F = FqField::get(9);
    FieldElement t(F, F.from_coeffs({0, 1}));
    CHECK(t.coeffs() == std::vector<int>{0, 1});
    CHECK((t * t) == FieldElement(F, F.neg(1)));
    CHECK((t - t) == FieldElement(F, 0));
    CHECK(t.inverse() * t == FieldElement(F, 1));
}

TEST_CASE("monic irreducible listing matches counting formulas") {
    // Number of monic irreducibles of degree d over F_q:
    //   d=1: q; d=2: (q^2-q)/2; d=3: (q^3-q)/3
    for (long long q : {3LL, 5LL, 7LL}) {
        const FqField& F = FqField::get(q);
        CHECK(monic_irreducibles(F, 1).size() == static_cast<std::size_t>(q));
        CHECK(monic_irreducibles(F, 2).size() == static_cast<std::size_t>((q * q - q) / 2));
        CHECK(monic_irreducibles(F, 3).size() == static_cast<std::size_t>((q * q * q - q) / 3));
        for (const PolyFq& g : monic_irreducibles(F, 2)) {
            // no roots
            for (int x = 0; x < q; ++x) {
                int v = F.add(F.mul(g[2], F.mul(x, x)), F.add(F.mul(g[1], x), g[0]));
                CHECK(v != 0);
            }
        }
    }
}

TEST_CASE("matrix inverse, determinant and codes") {
    const FqField& F = FqField::get(3);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        MatFq m(F, 3);
        for (int& x : m.a) x = static_cast<int>(rng() % 3);
        if (m.det() == 0) {
            CHECK_THROWS_AS(m.inverse(), std::domain_error);
            continue;
        }
        CHECK((m * m.inverse()).is_identity());
        CHECK(MatFq::from_code(F, 3, m.code()) == m);
    }
    CHECK(MatFq::identity(F, 2).det() == 1);
}

TEST_CASE("characteristic polynomial is monic and vanishes at the matrix") {
    std::mt19937 rng(11);
    for (long long q : {3LL, 5LL}) {
        const FqField& F = FqField::get(q);
        for (int n = 1; n <= 4; ++n) {
            for (int trial = 0; trial < 40; ++trial) {
                MatFq m(F, n);
                for (int& x : m.a) x = static_cast<int>(rng() % q);
                PolyFq cp = characteristic_polynomial(m);
                REQUIRE(poly_degree(cp) == n);
                CHECK(cp.back() == 1);
                // Cayley-Hamilton
                MatFq z = evaluate_poly_at(cp, m);
                for (int v : z.a) CHECK(v == 0);
            }
        }
    }
}

TEST_CASE("characteristic polynomial of a diagonal matrix splits as expected") {
    const FqField& F = FqField::get(5);
    MatFq m(F, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    // (x-2)(x-3) = x^2 - 5x + 6 = x^2 + 0x + 1 over F_5
    CHECK(characteristic_polynomial(m) == PolyFq{1, 0, 1});
}
