#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "glnq/involution.hpp"
#include "glnq/parabolic.hpp"

using namespace glnq;

namespace {

MatFq random_invertible(const FqField& F, int n, std::mt19937& rng) {
    for (;;) {
        MatFq m(F, n);
        for (int& x : m.a) x = static_cast<int>(rng() % F.q());
        if (m.det() != 0) return m;
    }
}

} // namespace

TEST_CASE("group orders: formula vs exhaustive enumeration") {
    CHECK(group_order({1, 3}) == BigInt(2));
    CHECK(group_order({2, 3}) == BigInt(48));
    CHECK(group_order({3, 3}) == BigInt(11232));
    CHECK(group_order({2, 5}) == BigInt(480));
    CHECK(group_order({0, 3}) == BigInt(1));

    // Count invertible matrices directly.
    for (GroupSpec spec : {GroupSpec{2, 3}, GroupSpec{3, 3}, GroupSpec{2, 5}}) {
        long long count = 0;
        for_each_group_element(FqField::get(spec.q), spec, [&](const MatFq&) { ++count; });
        CHECK(BigInt(count) == group_order(spec));
    }
}

TEST_CASE("class_of: scalar, split semisimple, and Jordan block in GL_2(F_3)") {
    const FqField& F = FqField::get(3);

    MatFq id = MatFq::identity(F, 2);
    ClassLabel lid = class_of(id);
    REQUIRE(lid.pairs.size() == 1);
    CHECK(lid.pairs[0].first == PolyFq{2, 1}); // x - 1 = x + 2
    CHECK(lid.pairs[0].second == Partition{1, 1});

    MatFq d(F, 2);
    d.at(0, 0) = 1;
    d.at(1, 1) = F.neg(1);
    ClassLabel ld = class_of(d);
    REQUIRE(ld.pairs.size() == 2);
    CHECK(ld.pairs[0].first == PolyFq{1, 1}); // x + 1
    CHECK(ld.pairs[0].second == Partition{1});
    CHECK(ld.pairs[1].first == PolyFq{2, 1}); // x - 1
    CHECK(ld.pairs[1].second == Partition{1});

    MatFq j(F, 2);
    j.at(0, 0) = 1;
    j.at(0, 1) = 1;
    j.at(1, 1) = 1;
    ClassLabel lj = class_of(j);
    REQUIRE(lj.pairs.size() == 1);
    CHECK(lj.pairs[0].first == PolyFq{2, 1});
    CHECK(lj.pairs[0].second == Partition{2});

    // Oracle: the label is constant on the full conjugation orbit.
    std::set<std::uint64_t> orbit;
    for_each_group_element(F, {2, 3}, [&](const MatFq& g) {
        MatFq conj = g * j * g.inverse();
        CHECK(class_of(conj) == lj);
        orbit.insert(conj.code());
    });
    CHECK(BigInt(static_cast<long long>(orbit.size())) ==
          group_order({2, 3}) / centralizer_order(3, lj));
}

TEST_CASE("class_of rejects singular matrices") {
    const FqField& F = FqField::get(3);
    MatFq z(F, 2);
    CHECK_THROWS_AS(class_of(z), std::domain_error);
}

TEST_CASE("enumerate_classes: GL_1(F_3) and GL_2(F_3) against orbit oracle") {
    const FqField& F = FqField::get(3);

    auto cls1 = enumerate_classes(F, {1, 3});
    REQUIRE(cls1.size() == 2);
    for (const ClassData& c : cls1) CHECK(c.size == BigInt(1));

    auto cls2 = enumerate_classes(F, {2, 3});
    REQUIRE(cls2.size() == 8);

    // Brute-force orbits of all 48 elements under conjugation.
    std::vector<MatFq> elements;
    for_each_group_element(F, {2, 3}, [&](const MatFq& m) { elements.push_back(m); });
    std::map<std::uint64_t, int> orbit_of;
    int orbit_count = 0;
    std::map<int, long long> orbit_size;
    std::map<int, ClassLabel> orbit_label;
    for (const MatFq& m : elements) {
        if (orbit_of.count(m.code())) continue;
        int id = orbit_count++;
        for (const MatFq& g : elements) {
            MatFq c = g * m * g.inverse();
            if (!orbit_of.count(c.code())) {
                orbit_of[c.code()] = id;
                ++orbit_size[id];
            }
        }
        orbit_label[id] = class_of(m);
    }
    CHECK(orbit_count == 8);
    for (const ClassData& c : cls2) {
        bool found = false;
        for (int id = 0; id < orbit_count; ++id)
            if (orbit_label[id] == c.label) {
                CHECK(BigInt(orbit_size[id]) == c.size);
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("enumerate_classes GL_3(F_3): consistency checks") {
    const FqField& F = FqField::get(3);
    auto cls = enumerate_classes(F, {3, 3});
    BigInt total(0);
    for (const ClassData& c : cls) {
        total += c.size;
        CHECK(c.size * c.centralizer_order == BigInt(11232));
        CHECK(class_of(c.representative) == c.label); // representative round trip
    }
    CHECK(total == BigInt(11232));

    std::mt19937 rng(2024);
    for (int i = 0; i < 50; ++i) {
        const ClassData& c = cls[rng() % cls.size()];
        MatFq g = random_invertible(F, 3, rng);
        CHECK(class_of(g * c.representative * g.inverse()) == c.label);
    }
}

TEST_CASE("size * centralizer_order = |G| for all supported (n, q)") {
    for (GroupSpec spec : {GroupSpec{2, 3}, GroupSpec{2, 5}, GroupSpec{2, 7}, GroupSpec{3, 3}}) {
        const FqField& F = FqField::get(spec.q);
        BigInt order = group_order(spec);
        for (const ClassData& c : enumerate_classes(F, spec))
            CHECK(c.size * c.centralizer_order == order);
    }
}

TEST_CASE("class_of is conjugation invariant on 1000 random pairs") {
    const FqField& F = FqField::get(3);
    std::mt19937 rng(555);
    for (int i = 0; i < 1000; ++i) {
        MatFq m = random_invertible(F, 3, rng);
        MatFq g = random_invertible(F, 3, rng);
        CHECK(class_of(g * m * g.inverse()) == class_of(m));
    }
}

TEST_CASE("GroupContext class table agrees with analytic sizes") {
    GroupContext ctx({2, 3});
    ctx.build_class_table(2); // count checks happen inside
    CHECK(ctx.classes().size() == 8);
    const FqField& F = ctx.field();
    std::mt19937 rng(17);
    for (int i = 0; i < 100; ++i) {
        MatFq m = random_invertible(F, 2, rng);
        CHECK(ctx.class_index(m) == ctx.index_of_label(class_of(m)));
    }
    MatFq z(F, 2);
    CHECK_THROWS_AS(ctx.class_index(z), std::domain_error);
}

TEST_CASE("involution fusion: p = 0 gives the identity fusion") {
    GroupContext ctx({2, 3});
    auto fused = involution_centralizer_classes(ctx, {2, 0});
    REQUIRE(fused.size() == 8);
    for (const FusedHClass& h : fused) {
        CHECK(h.fused_label == h.factor_b.label);
        CHECK(h.size == ctx.classes()[h.fused_index].size);
    }
}

TEST_CASE("involution fusion: diagonal torus of GL_2(F_3)") {
    GroupContext ctx({2, 3});
    auto fused = involution_centralizer_classes(ctx, {2, 1});
    REQUIRE(fused.size() == 4); // |GL_1 x GL_1| classes
    std::set<int> targets;
    for (const FusedHClass& h : fused) {
        CHECK(h.size == BigInt(1));
        targets.insert(h.fused_index);
    }
    CHECK(targets.size() == 3); // diag(1,-1) and diag(-1,1) fuse
}

TEST_CASE("involution fusion: (n, p) = (3, 1) over F_3") {
    GroupContext ctx({3, 3});
    CHECK(centralizer_group_order({3, 1}, 3) == BigInt(96));
    auto fused = involution_centralizer_classes(ctx, {3, 1});
    BigInt total(0);
    for (const FusedHClass& h : fused) {
        total += h.size;
        int linear_pm = 0;
        for (const auto& [f, lam] : h.fused_label.pairs)
            if (poly_degree(f) == 1 && (f[0] == 1 || f[0] == ctx.field().q() - 1)) ++linear_pm;
        CHECK(linear_pm <= 2);
    }
    CHECK(total == BigInt(96));
}

TEST_CASE("fusion is well defined on conjugate H-elements") {
    GroupContext ctx({3, 3});
    const FqField& F = ctx.field();
    std::mt19937 rng(31);
    for (int i = 0; i < 50; ++i) {
        MatFq a = random_invertible(F, 1, rng), b = random_invertible(F, 2, rng);
        MatFq ka = random_invertible(F, 1, rng), kb = random_invertible(F, 2, rng);
        MatFq h = MatFq::block_diag(a, b);
        MatFq k = MatFq::block_diag(ka, kb);
        CHECK(class_of(k * h * k.inverse()) == class_of(h));
    }
}

TEST_CASE("unipotent radical sizes and membership") {
    const FqField& F = FqField::get(3);

    UnipotentRange trivial(F, CompositionSpec{2});
    int count = 0;
    for (const MatFq& u : trivial) {
        CHECK(u.is_identity());
        ++count;
    }
    CHECK(count == 1);

    UnipotentRange borel2(F, CompositionSpec{1, 1});
    CHECK(borel2.size() == 3);
    std::set<std::uint64_t> seen;
    for (const MatFq& u : borel2) {
        CHECK(u.at(0, 0) == 1);
        CHECK(u.at(1, 1) == 1);
        CHECK(u.at(1, 0) == 0);
        seen.insert(u.code());
    }
    CHECK(seen.size() == 3);

    UnipotentRange full3(F, CompositionSpec{1, 1, 1});
    CHECK(full3.size() == 27);
    seen.clear();
    for (const MatFq& u : full3) seen.insert(u.code());
    CHECK(seen.size() == 27);

    CHECK(unipotent_order(CompositionSpec{1, 1, 1}, 3) == 27);
    CHECK(unipotent_order(CompositionSpec{1, 2}, 3) == 9);
}

TEST_CASE("budget guards") {
    Budget b;
    CHECK_THROWS_AS(b.check_group({4, 5}), BudgetError);
    CHECK_THROWS_AS(b.check_group({4, 3}), BudgetError); // stretch off
    Budget s;
    s.stretch = true;
    CHECK_NOTHROW(s.check_group({4, 3}));
    CHECK_NOTHROW(b.check_group({3, 3}));
    CHECK_THROWS_AS(b.check_unipotent(3'000'000), BudgetError);
}
