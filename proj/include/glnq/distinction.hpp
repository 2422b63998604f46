// distinction.hpp -- the theorem verifier.
//
// For the symmetric pair H = GL_p x GL_{n-p} inside G = GL_n(F_q), the
// dimension of H-invariant functionals of an irreducible pi is
//     dim pi^H = <chi|_H, 1> = (1/|H|) sum_{c in classes(H)} |c| chi(fused c),
// an exact non-negative integer. The statement under test: whenever this
// dimension is positive, chi is real-valued (pi is self-dual). Multiplicity
// one is NOT asserted anywhere; dimensions greater than one occur over F_q
// and are recorded as data.

#pragma once

#include "glnq/budget.hpp"
#include "glnq/chartable.hpp"
#include "glnq/induction.hpp"
#include "glnq/involution.hpp"

namespace glnq {

inline BigInt distinction_dimension(const GroupContext& G, const std::vector<FusedHClass>& fused,
                                    const ClassFunction& chi, const InvolutionSpec& inv) {
    Cyclotomic sum(0);
    for (const FusedHClass& h : fused)
        sum += Rational(h.size) * chi.values[h.fused_index];
    Cyclotomic avg = Rational(BigInt(1), centralizer_group_order(inv, G.spec().q)) * sum;
    BigInt dim = avg.rational_value().to_integer(); // throws if not an integer
    if (dim.sign() < 0)
        throw std::logic_error("distinction_dimension: negative dimension (table/fusion bug)");
    return dim;
}

// Oracle variant for conjugated involutions: enumerates the centralizer of
// an explicit matrix A with A^2 = I. Only for small groups.
inline BigInt distinction_dimension_brute(GroupContext& G, const ClassFunction& chi,
                                          const MatFq& A) {
    if (G.order() > BigInt(100'000))
        throw BudgetError("distinction_dimension_brute: group too large");
    if (!(A * A).is_identity()) throw std::invalid_argument("A^2 must be the identity");
    Cyclotomic sum(0);
    long long h_order = 0;
    for_each_group_element(G.field(), G.spec(), [&](const MatFq& x) {
        if (A * x == x * A) {
            sum += chi.values[G.class_index(x)];
            ++h_order;
        }
    });
    return (Rational(BigInt(1), BigInt(h_order)) * sum).rational_value().to_integer();
}

inline bool is_self_dual(const IrreducibleCharacter& chi) {
    for (const Cyclotomic& v : chi.values)
        if (!v.is_real()) return false;
    return true;
}

struct DistinctionRow {
    int char_index = 0;
    long long degree = 0;
    bool cuspidal = false;
    long long distinction_dimension = 0;
    bool self_dual = false;
    long long whittaker = 0;
};

struct DistinctionReport {
    GroupSpec spec;
    InvolutionSpec involution;
    std::vector<DistinctionRow> rows;
    bool theorem_holds = false;
    std::vector<int> counterexamples; // char indices with dim > 0 but not self-dual
};

inline DistinctionReport build_distinction_report(const CharacterTable& table, int p,
                                                  const Budget& budget) {
    GroupContext& G = const_cast<CharacterTable&>(table).group_mutable();
    InvolutionSpec inv(G.spec().n, p);
    std::vector<FusedHClass> fused = involution_centralizer_classes(G, inv);

    DistinctionReport report;
    report.spec = G.spec();
    report.involution = inv;
    for (std::size_t i = 0; i < table.size(); ++i) {
        DistinctionRow row;
        row.char_index = static_cast<int>(i);
        row.degree = table.chars()[i].degree;
        row.cuspidal = is_cuspidal(G, table.row(i), budget);
        row.distinction_dimension =
            distinction_dimension(G, fused, table.row(i), inv).to_int64();
        row.self_dual = is_self_dual(table.chars()[i]);
        row.whittaker = whittaker_multiplicity(G, table.row(i), budget).to_int64();
        if (row.distinction_dimension > 0 && !row.self_dual)
            report.counterexamples.push_back(row.char_index);
        report.rows.push_back(row);
    }
    report.theorem_holds = report.counterexamples.empty();
    return report;
}

// One report per p in {0, ..., n}. p and n-p give isomorphic centralizers;
// both are kept as a symmetry check.
inline std::vector<DistinctionReport> verify_main_theorem(const CharacterTable& table,
                                                          const Budget& budget) {
    std::vector<DistinctionReport> reports;
    for (int p = 0; p <= table.group().spec().n; ++p)
        reports.push_back(build_distinction_report(table, p, budget));
    return reports;
}

// The cuspidal case gets its own pass/fail: restrict rows to cuspidals.
inline DistinctionReport cuspidal_distinction_survey(const DistinctionReport& full) {
    DistinctionReport out;
    out.spec = full.spec;
    out.involution = full.involution;
    for (const DistinctionRow& row : full.rows) {
        if (!row.cuspidal) continue;
        out.rows.push_back(row);
        if (row.distinction_dimension > 0 && !row.self_dual)
            out.counterexamples.push_back(row.char_index);
    }
    out.theorem_holds = out.counterexamples.empty();
    return out;
}

// sum_chi dim(chi^H) deg(chi) must equal |G| / |H|, the dimension of the
// space of functions on G/H; a global exactness check on table and fusion.
inline BigInt distinction_degree_sum(const DistinctionReport& report) {
    BigInt sum(0);
    for (const DistinctionRow& row : report.rows)
        sum += BigInt(row.distinction_dimension) * BigInt(row.degree);
    return sum;
}

} // namespace glnq
