#include <doctest.h>

#include <map>
#include <random>

#include "glnq/psh.hpp"

using namespace glnq;
using namespace glnq::psh;

namespace {

// Independent LR oracle through symmetric polynomials: expand s_mu * s_nu in
// the Schur basis by explicit polynomial arithmetic in N variables. Schur
// polynomials are built from plain SSYT enumeration (no lattice words), and
// the expansion peels lexicographically leading terms, which is valid since
// the Schur-to-monomial transition is unitriangular.
using Monomials = std::map<std::vector<int>, long long>;

Monomials schur_poly(const Partition& lam, int vars) {
    static std::map<std::pair<Partition, int>, Monomials> cache;
    auto key = std::make_pair(lam, vars);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    Monomials out;
    int rows = static_cast<int>(lam.size());
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(lam[r], 0);
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < lam[r]; ++c) cells.emplace_back(r, c);

    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            std::vector<int> content(vars, 0);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < lam[r]; ++c) ++content[grid[r][c] - 1];
            ++out[content];
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[r][c - 1]);       // rows weakly increase
        if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);   // columns strictly increase
        for (int v = lo; v <= vars; ++v) {
            grid[r][c] = v;
            self(self, k + 1);
        }
        grid[r][c] = 0;
    };
    if (rows == 0)
        out[std::vector<int>(vars, 0)] = 1;
    else
        rec(rec, 0);
    cache.emplace(key, out);
    return out;
}

std::map<Partition, long long> schur_expand_product(const Partition& mu, const Partition& nu,
                                                    int vars) {
    Monomials prod;
    for (const auto& [ea, ca] : schur_poly(mu, vars))
        for (const auto& [eb, cb] : schur_poly(nu, vars)) {
            std::vector<int> e(vars);
            for (int i = 0; i < vars; ++i) e[i] = ea[i] + eb[i];
            prod[e] += ca * cb;
        }
    std::map<Partition, long long> result;
    while (!prod.empty()) {
        auto lead = std::prev(prod.end()); // lex-maximal exponent vector
        std::vector<int> expo = lead->first;
        long long coeff = lead->second;
        Partition lam;
        for (int x : expo)
            if (x > 0) lam.push_back(x);
        for (std::size_t i = 1; i < lam.size(); ++i) REQUIRE(lam[i - 1] >= lam[i]);
        result[lam] += coeff;
        for (const auto& [e, c] : schur_poly(lam, vars)) {
            auto it = prod.emplace(e, 0).first;
            it->second -= coeff * c;
            if (it->second == 0) prod.erase(it);
        }
    }
    return result;
}

LabelSet test_labels() {
    LabelSet labels;
    labels.add(1, 1, 1); // self-dual, degree 1
    labels.add(2, 1, 3); // dual pair of degree 1
    labels.add(3, 1, 2);
    labels.add(4, 2, 4); // self-dual, degree 2
    labels.validate();
    return labels;
}

} // namespace

TEST_CASE("LR pinned values") {
    CHECK(lr_coefficient({2}, {1}, {1}) == 1);
    CHECK(lr_coefficient({1, 1}, {1}, {1}) == 1);
    CHECK(lr_coefficient({3}, {}, {3}) == 1);      // unit
    CHECK(lr_coefficient({2, 1}, {2, 1}, {}) == 1); // unit on the other side
    CHECK(lr_coefficient({2, 1}, {1}, {1, 1}) == 1);
    CHECK(lr_coefficient({3}, {1}, {1, 1}) == 0);
    // A multiplicity-two coefficient: c^{(3,2,1)}_{(2,1),(2,1)} = 2.
    CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}) == 2);
}

TEST_CASE("LR agrees with the symmetric-polynomial oracle up to degree 6") {
    for (int total = 0; total <= 6; ++total) {
        for (int a = 0; a <= total; ++a) {
            for (const Partition& mu : all_partitions(a))
                for (const Partition& nu : all_partitions(total - a)) {
                    auto oracle = schur_expand_product(mu, nu, 6);
                    for (const Partition& lam : all_partitions(total)) {
                        long long expect = oracle.count(lam) ? oracle.at(lam) : 0;
                        CHECK(lr_coefficient(lam, mu, nu) == expect);
                    }
                }
        }
    }
}

TEST_CASE("LR symmetry, exhaustively to degree 6") {
    for (int total = 0; total <= 6; ++total)
        for (int a = 0; a <= total; ++a)
            for (const Partition& mu : all_partitions(a))
                for (const Partition& nu : all_partitions(total - a))
                    for (const Partition& lam : all_partitions(total))
                        CHECK(lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu));
}

TEST_CASE("psh multiplication: rho^2 = x_2 + y_2 and friends") {
    BasisElement rho{{1, {1}}};
    Element sq = multiply_basis(rho, rho);
    REQUIRE(sq.terms.size() == 2);
    CHECK(sq.terms.at(BasisElement{{1, {2}}}) == 1);
    CHECK(sq.terms.at(BasisElement{{1, {1, 1}}}) == 1);

    // Distinct cuspidals multiply to a single basis element.
    BasisElement rho2{{2, {1}}};
    Element mixed = multiply_basis(rho, rho2);
    REQUIRE(mixed.terms.size() == 1);
    CHECK(mixed.terms.at(BasisElement{{1, {1}}, {2, {1}}}) == 1);

    // Pieri: s_(2) * s_(1) = s_(3) + s_(2,1).
    Element pieri = multiply_basis(BasisElement{{1, {2}}}, rho);
    REQUIRE(pieri.terms.size() == 2);
    CHECK(pieri.terms.at(BasisElement{{1, {3}}}) == 1);
    CHECK(pieri.terms.at(BasisElement{{1, {2, 1}}}) == 1);
}

TEST_CASE("comultiplication: primitives, adjointness, factorization") {
    BasisElement rho{{1, {1}}};
    TensorElement co = comultiply_basis(rho);
    REQUIRE(co.terms.size() == 2);
    CHECK(co.terms.at({BasisElement{}, rho}) == 1);
    CHECK(co.terms.at({rho, BasisElement{}}) == 1);

    // <rho * rho, s_(2)> = <rho (x) rho, m* s_(2)> = 1.
    Element prod = multiply_basis(rho, rho);
    CHECK(pairing(prod, Element::basis(BasisElement{{1, {2}}})) == 1);
    TensorElement co2 = comultiply_basis(BasisElement{{1, {2}}});
    CHECK(co2.terms.at({rho, rho}) == 1);

    // Mixed elements comultiply as the tensor product of the per-label parts.
    BasisElement mixed{{1, {1}}, {2, {1}}};
    TensorElement com = comultiply_basis(mixed);
    CHECK(com.terms.size() == 4);
    CHECK(com.terms.at({BasisElement{}, mixed}) == 1);
    CHECK(com.terms.at({BasisElement{{1, {1}}}, BasisElement{{2, {1}}}}) == 1);
}

TEST_CASE("duality: relabeling, partition fixing, involution") {
    LabelSet labels = test_labels();

    BasisElement self_dual{{1, {2, 1}}};
    CHECK(dual_basis(self_dual, labels) == self_dual);

    BasisElement pair{{2, {1}}, {3, {2}}};
    BasisElement swapped{{2, {2}}, {3, {1}}};
    CHECK(dual_basis(pair, labels) == swapped);

    std::mt19937 rng(8);
    auto degrees = basis_of_degree(labels, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const BasisElement& b = degrees[rng() % degrees.size()];
        CHECK(dual_basis(dual_basis(b, labels), labels) == b);
    }

    // Dual is a ring map: (ab)* = a* b*.
    BasisElement a{{2, {1}}};
    BasisElement b{{2, {1, 1}}, {1, {1}}};
    Element lhs = dual(multiply_basis(a, b), labels);
    Element rhs = multiply(dual(Element::basis(a), labels), dual(Element::basis(b), labels));
    CHECK(lhs == rhs);
}

TEST_CASE("primary decomposition reads off support and reconstructs") {
    LabelSet labels = test_labels();
    BasisElement b{{1, {1}}, {4, {3, 1}}};
    auto factors = primary_decomposition(b);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == std::make_pair(1, Partition{1}));
    CHECK(factors[1] == std::make_pair(4, Partition{3, 1}));

    // Multiplying the primary parts back recovers b with coefficient 1.
    Element prod = Element::unit();
    for (const auto& [id, lam] : factors)
        prod = multiply(prod, Element::basis(BasisElement{{id, lam}}));
    CHECK(prod.terms.at(b) == 1);
}

TEST_CASE("single-partition primary element is its own decomposition") {
    BasisElement b{{1, {2}}};
    auto factors = primary_decomposition(b);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].second == Partition{2});
}

TEST_CASE("axiom sweep up to degree 6 passes") {
    LabelSet labels = test_labels();
    SelfCheckResult r = run_axiom_checks(labels, 6);
    INFO(r.failure);
    CHECK(r.ok);
    CHECK(r.cases > 10000);
}

TEST_CASE("associativity on basis triples of total degree <= 5") {
    LabelSet labels = test_labels();
    std::vector<BasisElement> all;
    for (int d = 1; d <= 3; ++d)
        for (const BasisElement& b : basis_of_degree(labels, d)) all.push_back(b);
    for (const BasisElement& a : all)
        for (const BasisElement& b : all)
            for (const BasisElement& c : all) {
                if (degree_of(a, labels) + degree_of(b, labels) + degree_of(c, labels) > 5)
                    continue;
                Element lhs = multiply(multiply_basis(a, b), Element::basis(c));
                Element rhs = multiply(Element::basis(a), multiply_basis(b, c));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("comultiplication is cocommutative on basis elements") {
    LabelSet labels = test_labels();
    for (int d = 1; d <= 6; ++d)
        for (const BasisElement& b : basis_of_degree(labels, d)) {
            TensorElement co = comultiply_basis(b);
            for (const auto& [pair, coeff] : co.terms) {
                auto flipped = std::make_pair(pair.second, pair.first);
                CHECK(co.terms.at(flipped) == coeff);
            }
        }
}
