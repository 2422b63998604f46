#include <doctest.h>

#include <complex>
#include <random>

#include "glnq/bigint.hpp"
#include "glnq/cyclotomic.hpp"
#include "glnq/rational.hpp"

using namespace glnq;

TEST_CASE("bigint small/big paths agree with native arithmetic") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 2000; ++i) {
        long long a = static_cast<long long>(rng() % 2000000000ULL) - 1000000000;
        long long b = static_cast<long long>(rng() % 2000000000ULL) - 1000000000;
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
    }
}

TEST_CASE("bigint spill path: powers, factorial, round trips") {
    CHECK(pow(BigInt(2), 100).to_string() == "1267650600228229401496703205376");
    BigInt fact(1);
    for (int i = 2; i <= 30; ++i) fact *= BigInt(i);
    CHECK(fact.to_string() == "265252859812191058636308480000000");
    BigInt big = BigInt::from_string("-98765432109876543210987654321098765432109876543210");
    CHECK(big.to_string() == "-98765432109876543210987654321098765432109876543210");
    CHECK((big / BigInt::from_string("98765432109876543210")).sign() == -1);
    CHECK((big % big).is_zero());
    CHECK(big + (-big) == BigInt(0));

    BigInt p2_90 = pow(BigInt(2), 90);
    BigInt p2_50 = pow(BigInt(2), 50);
    CHECK(p2_90 / p2_50 == pow(BigInt(2), 40));
    CHECK(BigInt::gcd(p2_90 * BigInt(15), p2_50 * BigInt(35)) == p2_50 * BigInt(5));
}

TEST_CASE("bigint division invariants on random wide values") {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 300; ++i) {
        BigInt a = BigInt(static_cast<long long>(rng() >> 1)) * BigInt(static_cast<long long>(rng() >> 1));
        BigInt b = BigInt(static_cast<long long>((rng() % 1000000000ULL) + 1));
        if (rng() % 2) a = -a;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("rational reduction and arithmetic") {
    Rational r(BigInt(6), BigInt(-4));
    CHECK(r.num() == BigInt(-3));
    CHECK(r.den() == BigInt(2));
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational::from_string("-3/2") == r);
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK(r + Rational(BigInt(3), BigInt(2)) == Rational(0));
    CHECK(r * Rational(BigInt(-2), BigInt(3)) == Rational(1));
    CHECK(Rational(BigInt(22), BigInt(11)).is_integer());
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(2)).to_integer(), std::domain_error);
}

TEST_CASE("cyclotomic: zeta_4 squared is -1") {
    Cyclotomic z4 = Cyclotomic::root_of_unity(4, 1);
    CHECK(z4 * z4 == Cyclotomic(-1));
}

TEST_CASE("cyclotomic: conjugation and realness of conjugate sums") {
    Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
    CHECK(z3.conj() == Cyclotomic::root_of_unity(3, 2));
    CHECK((z3 + Cyclotomic::root_of_unity(3, 2)).is_real());
    CHECK((z3 + Cyclotomic::root_of_unity(3, 2)).rational_value() == Rational(-1));
}

TEST_CASE("cyclotomic: zeta_5 - zeta_5^4 is not real") {
    // Numeric sanity first: the value is 2i sin(2*pi/5), visibly imaginary.
    std::complex<double> z = std::polar(1.0, 2 * 3.14159265358979323846 / 5);
    std::complex<double> v = z - std::pow(z, 4);
    CHECK(std::abs(v.imag()) > 0.5);
    CHECK(std::abs(v.real()) < 1e-9);

    Cyclotomic exact = Cyclotomic::root_of_unity(5, 1) - Cyclotomic::root_of_unity(5, 4);
    CHECK_FALSE(exact.is_real());
    CHECK((exact * exact.conj()).is_real()); // |v|^2 is always real
}

TEST_CASE("cyclotomic canonical form is idempotent") {
    // Feed an unreduced coefficient vector twice through reduction.
    std::vector<Rational> raw(10);
    for (int i = 0; i < 10; ++i) raw[i] = Rational(i - 4);
    Cyclotomic once = Cyclotomic::from_coeffs(12, raw);
    std::vector<Rational> again = once.coeffs();
    Cyclotomic twice = Cyclotomic::from_coeffs(12, again);
    CHECK(once == twice);
    CHECK(once.coeffs() == twice.coeffs());
}

TEST_CASE("conjugation is an involutive ring homomorphism") {
    std::mt19937 rng(99);
    auto random_cyclo = [&](long long e) {
        std::vector<Rational> c(euler_phi(e));
        for (auto& x : c) x = Rational(static_cast<int>(rng() % 11) - 5);
        return Cyclotomic::from_coeffs(e, c);
    };
    for (long long e : {3LL, 5LL, 8LL, 12LL}) {
        for (int i = 0; i < 30; ++i) {
            Cyclotomic a = random_cyclo(e), b = random_cyclo(e);
            CHECK(a.conj().conj() == a);
            CHECK((a + b).conj() == a.conj() + b.conj());
            CHECK((a * b).conj() == a.conj() * b.conj());
        }
    }
}

TEST_CASE("cyclotomic embedding respects arithmetic across orders") {
    Cyclotomic z6 = Cyclotomic::root_of_unity(6, 1);
    Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
    Cyclotomic z2 = Cyclotomic::root_of_unity(2, 1);
    CHECK(z6 * z6 * z6 == z2);       // zeta_6^3 = -1
    CHECK(z6 * z6 == z3);            // zeta_6^2 = zeta_3
    CHECK(z2 == Cyclotomic(-1));
    CHECK((z3 * z3 * z3).rational_value() == Rational(1));
}
