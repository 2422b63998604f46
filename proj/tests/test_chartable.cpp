#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "shared_tables.hpp"

using namespace glnq;

namespace {

std::multiset<long long> degree_multiset(const CharacterTable& t) {
    std::multiset<long long> out;
    for (const auto& chi : t.chars()) out.insert(chi.degree);
    return out;
}

} // namespace

TEST_CASE("GL_1(F_3): the two characters of a cyclic group of order 2") {
    const CharacterTable& t = cached_table(1, 3);
    REQUIRE(t.size() == 2);
    CHECK(t.chars()[0].degree == 1);
    CHECK(t.chars()[1].degree == 1);
    // One row is all ones, the other takes -1 on the class of -1.
    std::multiset<std::string> rows;
    for (const auto& chi : t.chars()) {
        std::string r;
        for (const auto& v : chi.values) r += v.rational_value().to_string() + " ";
        rows.insert(r);
    }
    CHECK(rows.count("1/1 1/1 ") == 1);
    CHECK(rows.count("1/1 -1/1 ") + rows.count("-1/1 1/1 ") == 1);
}

TEST_CASE("GL_1(F_5) and GL_1(F_9): abelian tables") {
    const CharacterTable& t5 = cached_table(1, 5);
    CHECK(t5.size() == 4);
    for (const auto& chi : t5.chars()) CHECK(chi.degree == 1);

    const CharacterTable& t9 = cached_table(1, 9);
    CHECK(t9.size() == 8);
    CHECK(t9.exponent() == 8);
}

TEST_CASE("GL_2(F_3): degree multiset matches the classical inventory") {
    const CharacterTable& t = cached_table(2, 3);
    REQUIRE(t.size() == 8);
    CHECK(degree_multiset(t) == std::multiset<long long>{1, 1, 2, 2, 2, 3, 3, 4});
}

TEST_CASE("GL_2(F_5): classical family counts") {
    // (q-1) linear, (q^2-q)/2 cuspidal of degree q-1, (q-1) of degree q,
    // (q-1)(q-2)/2 principal series of degree q+1.
    const CharacterTable& t = cached_table(2, 5);
    REQUIRE(t.size() == 24);
    std::map<long long, int> by_degree;
    for (const auto& chi : t.chars()) ++by_degree[chi.degree];
    CHECK(by_degree[1] == 4);
    CHECK(by_degree[4] == 10);
    CHECK(by_degree[5] == 4);
    CHECK(by_degree[6] == 6);
}

TEST_CASE("GL_3(F_3): sum of squared degrees is 11232") {
    const CharacterTable& t = cached_table(3, 3);
    REQUIRE(t.size() == 24);
    BigInt sum(0);
    for (const auto& chi : t.chars()) sum += BigInt(chi.degree) * BigInt(chi.degree);
    CHECK(sum == BigInt(11232));
    // validate_table ran inside the builder; run it once more explicitly.
    CHECK_NOTHROW(validate_table(t));
}

TEST_CASE("inner products: orthonormal rows and the regular character") {
    const CharacterTable& t = cached_table(2, 3);
    const GroupContext& G = t.group();
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j < t.size(); ++j) {
            BigInt ip = inner_product_integer(G, t.row(i), t.row(j));
            CHECK(ip == BigInt(i == j ? 1 : 0));
        }

    // Regular character: |G| at the identity, 0 elsewhere.
    ClassFunction reg = ClassFunction::zero(t.size());
    reg.values[G.identity_class()] = Cyclotomic(Rational(G.order()));
    int trivial_row = -1;
    for (std::size_t i = 0; i < t.size(); ++i) {
        bool all_one = true;
        for (const auto& v : t.chars()[i].values)
            if (v != Cyclotomic(1)) all_one = false;
        if (all_one) trivial_row = static_cast<int>(i);
    }
    REQUIRE(trivial_row >= 0);
    CHECK(inner_product_integer(G, reg, t.row(trivial_row)) == BigInt(1));
    // And it decomposes with multiplicity deg(chi) on every irreducible.
    for (std::size_t i = 0; i < t.size(); ++i)
        CHECK(inner_product_integer(G, reg, t.row(i)) == BigInt(t.chars()[i].degree));
}

TEST_CASE("duality stability: conjugate of every row is again a row") {
    for (auto [n, q] : std::vector<std::pair<int, long long>>{{1, 5}, {2, 3}, {2, 5}, {3, 3}}) {
        const CharacterTable& t = cached_table(n, q);
        for (std::size_t i = 0; i < t.size(); ++i) {
            ClassFunction conj = t.row(i).conj();
            int matches = 0;
            for (std::size_t j = 0; j < t.size(); ++j)
                if (conj.values == t.chars()[j].values) ++matches;
            CHECK(matches == 1);
        }
    }
}

TEST_CASE("number of linear characters equals q - 1") {
    for (auto [n, q] : std::vector<std::pair<int, long long>>{{2, 3}, {2, 5}, {3, 3}}) {
        const CharacterTable& t = cached_table(n, q);
        int linear = 0;
        for (const auto& chi : t.chars())
            if (chi.degree == 1) ++linear;
        CHECK(linear == q - 1);
    }
}

TEST_CASE("table construction is deterministic across thread counts") {
    for (int threads : {1, 3}) {
        Budget budget;
        budget.threads = threads;
        auto ctx = std::make_shared<GroupContext>(GroupSpec{2, 3});
        CharacterTable t = build_character_table(ctx, budget);
        const CharacterTable& ref = cached_table(2, 3);
        REQUIRE(t.size() == ref.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            CHECK(t.chars()[i].degree == ref.chars()[i].degree);
            for (std::size_t c = 0; c < t.chars()[i].values.size(); ++c)
                CHECK(t.chars()[i].values[c] == ref.chars()[i].values[c]);
        }
    }
}

TEST_CASE("splitting prime satisfies its constraints") {
    long long ell = splitting_prime(24, 48, 100'000'000);
    CHECK(ell % 24 == 1);
    CHECK(ell * ell > 4 * 48);
    CHECK(is_prime(ell));
    CHECK(48 % ell != 0);
    CHECK_THROWS_AS(splitting_prime(9360, 24'261'120, 10'000), ConfigError);
}
