// crosscheck.hpp -- ties the group side to the combinatorial PSH model.
//
// Cuspidal labels are discovered from the tables of GL_m(F_q), m <= n. For a
// cuspidal rho of degree d, H_k is defined as the unique constituent of
// rho^k carrying a Whittaker vector (the induced character carries exactly
// one in total, which is checked). The dictionary sends the basis element
// {rho: lambda} to the Jacobi-Trudi determinant det(H_{lambda_i + j - i}),
// i.e. the single-row partition goes to the generic constituent, and mixed
// basis elements to the product across labels. The checks:
//   (i)   basis elements of total degree m biject with irreducibles of GL_m;
//   (ii)  decomposition multiplicities of induced cuspidal products match
//         the PSH product coefficients, term by term;
//   (iii) Whittaker multiplicity is 1 exactly on all-single-row elements;
//   (iv)  complex conjugation of characters matches the PSH duality
//         (relabel rho -> rho*, partitions fixed).
// Any mismatch is reported with a minimal witness.

#pragma once

#include <functional>
#include <sstream>

#include "glnq/distinction.hpp"
#include "glnq/induction.hpp"
#include "glnq/psh.hpp"

namespace glnq {

using TableProvider = std::function<const CharacterTable&(int rank)>;

struct CrosscheckReport {
    int n = 0;
    long long q = 0;
    bool ok = true;
    std::string failure; // first mismatch, with a minimal witness
    long long checks = 0;
    std::vector<int> cuspidals_per_rank; // index m-1 -> count of degree-m labels
};

namespace detail {

struct CuspidalDictionary {
    psh::LabelSet labels;
    std::map<int, std::pair<int, int>> source;           // label id -> (rank, char index)
    std::map<int, std::vector<ClassFunction>> h_powers;  // label id -> H_k by k (0 unused)
};

// Fails via exception only for internal errors; mismatches go to the report.
inline CuspidalDictionary discover_cuspidals(int n, const TableProvider& tables,
                                             const Budget& budget, CrosscheckReport& report) {
    CuspidalDictionary dict;
    int next_id = 1;
    std::map<std::pair<int, int>, int> id_of; // (rank, char index) -> id
    for (int m = 1; m <= n; ++m) {
        const CharacterTable& t = tables(m);
        GroupContext& G = const_cast<CharacterTable&>(t).group_mutable();
        std::vector<int> cuspidal_rows;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (is_cuspidal(G, t.row(i), budget)) cuspidal_rows.push_back(static_cast<int>(i));
        report.cuspidals_per_rank.push_back(static_cast<int>(cuspidal_rows.size()));
        for (int i : cuspidal_rows) {
            id_of[{m, i}] = next_id;
            dict.source[next_id] = {m, i};
            ++next_id;
        }
        // Duality on labels: the conjugate row of a cuspidal is cuspidal.
        for (int i : cuspidal_rows) {
            ClassFunction conj = t.row(i).conj();
            int dual_row = -1;
            for (std::size_t j = 0; j < t.size(); ++j)
                if (conj.values == t.chars()[j].values) dual_row = static_cast<int>(j);
            if (dual_row < 0 || !id_of.count({m, dual_row}))
                throw std::logic_error("crosscheck: conjugate of a cuspidal is not cuspidal");
            dict.labels.add(id_of[{m, i}], m, id_of[{m, dual_row}]);
        }
    }
    dict.labels.validate();
    return dict;
}

} // namespace detail

inline CrosscheckReport crosscheck_against_group(int n, long long q, const TableProvider& tables,
                                                 const Budget& budget) {
    CrosscheckReport report;
    report.n = n;
    report.q = q;
    auto mismatch = [&](const std::string& what) {
        report.ok = false;
        if (report.failure.empty()) report.failure = what;
    };

    detail::CuspidalDictionary dict = detail::discover_cuspidals(n, tables, budget, report);

    // (i) Counting: basis elements of degree m vs irreducibles of GL_m.
    for (int m = 1; m <= n; ++m) {
        ++report.checks;
        std::size_t basis_count = psh::basis_of_degree(dict.labels, m).size();
        if (basis_count != tables(m).size())
            mismatch("degree " + std::to_string(m) + ": " + std::to_string(basis_count) +
                     " basis elements vs " + std::to_string(tables(m).size()) + " irreducibles");
    }

    // H_k per label: the unique Whittaker-generic constituent of rho^k.
    for (const auto& [id, label] : dict.labels.all()) {
        auto [rank, row] = dict.source.at(id);
        std::vector<ClassFunction>& powers = dict.h_powers[id];
        powers.push_back(ClassFunction{}); // k = 0 placeholder
        powers.push_back(tables(rank).row(row));
        for (int k = 2; k * rank <= n; ++k) {
            const CharacterTable& target = tables(k * rank);
            GroupContext& G = const_cast<CharacterTable&>(target).group_mutable();
            CompositionSpec comp(std::vector<int>(k, rank));
            std::vector<ClassFunction> parts(k, tables(rank).row(row));
            ClassFunction power = parabolic_induce(G, comp, parts, budget);

            ++report.checks;
            if (whittaker_multiplicity(G, power, budget) != BigInt(1))
                mismatch("rho^" + std::to_string(k) + " does not have exactly one Whittaker vector");

            auto mults = decompose(target, power);
            int generic = -1;
            for (std::size_t i = 0; i < target.size(); ++i) {
                if (mults[i].is_zero()) continue;
                BigInt w = whittaker_multiplicity(G, target.row(i), budget);
                if (!w.is_zero()) {
                    if (generic >= 0) mismatch("two generic constituents in a cuspidal power");
                    generic = static_cast<int>(i);
                    ++report.checks;
                    if (mults[i] != BigInt(1) || w != BigInt(1))
                        mismatch("generic constituent multiplicity is not one");
                }
            }
            if (generic < 0) {
                mismatch("no generic constituent in a cuspidal power");
                return report;
            }
            powers.push_back(target.row(generic));
        }
    }

    // The dictionary chi_b, built per basis element via Jacobi-Trudi.
    auto jacobi_trudi = [&](int id, const Partition& lam) -> ClassFunction {
        int d = dict.labels.get(id).degree;
        const std::vector<ClassFunction>& H = dict.h_powers.at(id);
        if (lam.size() == 1) return H[lam[0]];
        int r = static_cast<int>(lam.size());
        int total = partition_size(lam) * d;
        const CharacterTable& target = tables(total);
        GroupContext& G = const_cast<CharacterTable&>(target).group_mutable();

        ClassFunction acc = ClassFunction::zero(target.size());
        std::vector<int> perm(r);
        for (int i = 0; i < r; ++i) perm[i] = i;
        do {
            int sign = 1;
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j)
                    if (perm[i] > perm[j]) sign = -sign;
            std::vector<int> ks;
            bool zero = false;
            for (int i = 0; i < r; ++i) {
                int kk = lam[i] + perm[i] - i;
                if (kk < 0) zero = true;
                if (kk > 0) ks.push_back(kk);
            }
            if (zero) continue;
            ClassFunction term;
            if (ks.empty()) throw std::logic_error("jacobi_trudi: empty monomial");
            if (ks.size() == 1 && ks[0] * d == total) {
                term = H[ks[0]];
            } else {
                std::vector<int> comp_parts;
                std::vector<ClassFunction> parts;
                for (int kk : ks) {
                    comp_parts.push_back(kk * d);
                    parts.push_back(H[kk]);
                }
                term = parabolic_induce(G, CompositionSpec(comp_parts), parts, budget);
            }
            if (sign > 0)
                acc = acc + term;
            else
                acc = acc - term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return acc;
    };

    auto chi_of_basis = [&](const psh::BasisElement& b) -> ClassFunction {
        if (b.empty()) throw std::invalid_argument("chi_of_basis: empty element");
        std::vector<int> comp_parts;
        std::vector<ClassFunction> parts;
        for (const auto& [id, lam] : b) {
            comp_parts.push_back(partition_size(lam) * dict.labels.get(id).degree);
            parts.push_back(jacobi_trudi(id, lam));
        }
        if (parts.size() == 1) return parts[0];
        int total = 0;
        for (int c : comp_parts) total += c;
        GroupContext& G = const_cast<CharacterTable&>(tables(total)).group_mutable();
        return parabolic_induce(G, CompositionSpec(comp_parts), parts, budget);
    };

    // Dictionary rows: irreducible, distinct, Whittaker-consistent, dual-consistent.
    std::map<psh::BasisElement, int> row_of_basis;
    for (int m = 1; m <= n; ++m) {
        const CharacterTable& t = tables(m);
        const GroupContext& G = t.group();
        GroupContext& Gm = const_cast<CharacterTable&>(t).group_mutable();
        std::vector<bool> hit(t.size(), false);
        for (const psh::BasisElement& b : psh::basis_of_degree(dict.labels, m)) {
            ClassFunction chi = chi_of_basis(b);
            ++report.checks;
            if (inner_product_integer(G, chi, chi) != BigInt(1)) {
                mismatch("chi_b is not irreducible for b = " + psh::basis_to_string(b));
                continue;
            }
            int row = -1;
            for (std::size_t i = 0; i < t.size(); ++i)
                if (chi.values == t.chars()[i].values) row = static_cast<int>(i);
            if (row < 0) {
                mismatch("chi_b is not an actual character row for b = " + psh::basis_to_string(b));
                continue;
            }
            if (hit[row]) mismatch("dictionary is not injective at " + psh::basis_to_string(b));
            hit[row] = true;
            row_of_basis[b] = row;

            // (iii) Whittaker normalization.
            bool all_single_row = true;
            for (const auto& [id, lam] : b)
                if (lam.size() != 1) all_single_row = false;
            ++report.checks;
            BigInt w = whittaker_multiplicity(Gm, chi, budget);
            if (w != BigInt(all_single_row ? 1 : 0))
                mismatch("Whittaker multiplicity of " + psh::basis_to_string(b) + " is " +
                         w.to_string());
        }
    }

    // (iv) Duality dictionary: conj(chi_b) = chi_{b*}.
    for (int m = 1; m <= n; ++m) {
        const CharacterTable& t = tables(m);
        for (const psh::BasisElement& b : psh::basis_of_degree(dict.labels, m)) {
            if (!row_of_basis.count(b)) continue;
            psh::BasisElement bd = psh::dual_basis(b, dict.labels);
            if (!row_of_basis.count(bd)) continue;
            ++report.checks;
            ClassFunction conj = t.row(row_of_basis[b]).conj();
            if (conj.values != t.chars()[row_of_basis[bd]].values)
                mismatch("duality mismatch at " + psh::basis_to_string(b));
        }
    }

    // (ii) Induction multiplicities match PSH product coefficients, termwise.
    // Multisets of labels with total degree m <= n.
    std::vector<int> ids;
    for (const auto& [id, label] : dict.labels.all()) ids.push_back(id);
    for (int m = 2; m <= n; ++m) {
        std::vector<std::vector<int>> multisets;
        std::vector<int> current;
        auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
            if (remaining == 0) {
                if (current.size() >= 2) multisets.push_back(current);
                return;
            }
            if (idx == ids.size()) return;
            self(self, idx + 1, remaining);
            int d = dict.labels.get(ids[idx]).degree;
            for (int reps = 1; reps * d <= remaining; ++reps) {
                for (int r = 0; r < reps; ++r) current.push_back(ids[idx]);
                self(self, idx + 1, remaining - reps * d);
                for (int r = 0; r < reps; ++r) current.pop_back();
            }
        };
        rec(rec, 0, m);

        const CharacterTable& t = tables(m);
        GroupContext& G = const_cast<CharacterTable&>(t).group_mutable();
        for (const std::vector<int>& multiset : multisets) {
            std::vector<int> comp_parts;
            std::vector<ClassFunction> parts;
            psh::Element product = psh::Element::unit();
            for (int id : multiset) {
                auto [rank, row] = dict.source.at(id);
                comp_parts.push_back(rank);
                parts.push_back(tables(rank).row(row));
                product = psh::multiply(product, psh::Element::basis({{id, {1}}}));
            }
            ClassFunction induced = parabolic_induce(G, CompositionSpec(comp_parts), parts, budget);

            BigInt norm_sq(0);
            for (const auto& [b, coeff] : product.terms) {
                ++report.checks;
                auto it = row_of_basis.find(b);
                if (it == row_of_basis.end()) {
                    mismatch("product term missing from dictionary: " + psh::basis_to_string(b));
                    continue;
                }
                if (inner_product_integer(G, induced, t.row(it->second)) != BigInt(coeff))
                    mismatch("multiplicity mismatch at " + psh::basis_to_string(b));
                norm_sq += BigInt(coeff) * BigInt(coeff);
            }
            ++report.checks;
            if (inner_product_integer(G, induced, induced) != norm_sq)
                mismatch("induced character has constituents outside the dictionary");
        }
    }

    return report;
}

} // namespace glnq
