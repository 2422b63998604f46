// geometry.hpp -- brute-force check of the double-coset geometric statement:
// every (H, P) double coset contains an x with x sigma(x)^{-1} monomial,
// i.e. normalizing the diagonal torus. Exhaustive, so guarded to small G.

#pragma once

#include <map>

#include "glnq/involution.hpp"
#include "glnq/parabolic.hpp"

namespace glnq {

inline bool is_monomial(const MatFq& m) {
    for (int i = 0; i < m.n; ++i) {
        int in_row = 0, in_col = 0;
        for (int j = 0; j < m.n; ++j) {
            if (m.at(i, j) != 0) ++in_row;
            if (m.at(j, i) != 0) ++in_col;
        }
        if (in_row != 1 || in_col != 1) return false;
    }
    return true;
}

struct DoubleCosetReport {
    CompositionSpec comp;
    InvolutionSpec involution;
    struct Coset {
        long long size = 0;
        bool has_witness = false;
        std::uint64_t witness_code = 0;
    };
    std::vector<Coset> cosets;
    bool all_have_witness = false;
};

inline DoubleCosetReport double_coset_geometric_check(GroupContext& G,
                                                      const CompositionSpec& comp,
                                                      const InvolutionSpec& inv) {
    if (G.order() > BigInt(100'000))
        throw BudgetError("double coset check: |G| exceeds 10^5");
    if (comp.total() != G.spec().n || inv.n != G.spec().n)
        throw std::invalid_argument("double coset check: size mismatch");

    const FqField& F = G.field();
    MatFq A = inv.matrix(F);
    MatFq Ainv = A.inverse();

    // H as block-diagonal pairs, P as Levi points times the radical.
    std::vector<MatFq> H;
    for_each_group_element(F, {inv.p, F.q()}, [&](const MatFq& a) {
        for_each_group_element(F, {inv.n - inv.p, F.q()}, [&](const MatFq& b) {
            H.push_back(MatFq::block_diag(a, b));
        });
    });
    std::vector<MatFq> P;
    {
        std::vector<std::vector<MatFq>> levi = levi_factor_elements(F, comp);
        UnipotentRange radical(F, comp);
        std::vector<std::size_t> idx(comp.block_count(), 0);
        for (;;) {
            MatFq l(F, 0);
            for (std::size_t i = 0; i < idx.size(); ++i)
                l = MatFq::block_diag(l, levi[i][idx[i]]);
            for (const MatFq& u : radical) P.push_back(l * u);
            std::size_t i = idx.size();
            for (; i-- > 0;) {
                if (++idx[i] < levi[i].size()) break;
                idx[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
    }

    DoubleCosetReport report;
    report.comp = comp;
    report.involution = inv;
    std::map<std::uint64_t, int> coset_of;
    for_each_group_element(F, G.spec(), [&](const MatFq& g) {
        if (coset_of.count(g.code())) return;
        int id = static_cast<int>(report.cosets.size());
        report.cosets.push_back({});
        DoubleCosetReport::Coset& coset = report.cosets.back();
        for (const MatFq& h : H) {
            MatFq hg = h * g;
            for (const MatFq& pr : P) {
                MatFq x = hg * pr;
                auto [it, fresh] = coset_of.emplace(x.code(), id);
                if (!fresh) continue;
                ++coset.size;
                if (!coset.has_witness) {
                    // x sigma(x)^{-1} = x A x^{-1} A^{-1}
                    MatFq t = x * A * x.inverse() * Ainv;
                    if (is_monomial(t)) {
                        coset.has_witness = true;
                        coset.witness_code = x.code();
                    }
                }
            }
        }
    });
    report.all_have_witness = true;
    for (const auto& coset : report.cosets)
        if (!coset.has_witness) report.all_have_witness = false;
    return report;
}

} // namespace glnq
