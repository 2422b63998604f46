// induction.hpp -- character-level parabolic induction, Jacquet restriction,
// cuspidality, and Whittaker multiplicity.
//
// Conventions. For a composition (n_0, ..., n_{m-1}) of n, P = L U is the
// block upper-triangular parabolic. Induction of a class function theta on
// L = prod GL_{n_i} uses the fused-class formula
//     Ind(c) = |Cent_G(c)| / |P| * sum_{p in P, p in c} theta(levi part of p),
// and Jacquet restriction averages over U,
//     r(chi)(l) = (1/|U|) sum_{u in U} chi(l u),
// the finite-group form of taking U-coinvariants. The two are exactly
// adjoint (Frobenius reciprocity), which the tests verify pairwise.

#pragma once

#include "glnq/budget.hpp"
#include "glnq/chartable.hpp"
#include "glnq/parabolic.hpp"

namespace glnq {

// Classes of a Levi subgroup L = prod_i GL_{n_i}(F_q), indexed by tuples of
// factor classes flattened in lexicographic order (last factor fastest).
class LeviClassSystem {
public:
    LeviClassSystem(const FqField& F, const CompositionSpec& comp)
        : comp_(comp) {
        for (int part : comp.parts)
            factors_.push_back(std::make_shared<GroupContext>(GroupSpec{part, F.q()}));
        order_ = BigInt(1);
        count_ = 1;
        for (const auto& f : factors_) {
            order_ *= f->order();
            count_ *= f->classes().size();
        }
        strides_.assign(factors_.size(), 1);
        for (std::size_t i = factors_.size(); i-- > 1;)
            strides_[i - 1] = strides_[i] * factors_[i]->classes().size();
    }

    const CompositionSpec& comp() const { return comp_; }
    const std::vector<std::shared_ptr<GroupContext>>& factors() const { return factors_; }
    const BigInt& order() const { return order_; }
    std::size_t class_count() const { return count_; }

    std::vector<int> tuple_of(std::size_t flat) const {
        std::vector<int> t(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            t[i] = static_cast<int>(flat / strides_[i]);
            flat %= strides_[i];
        }
        return t;
    }
    std::size_t flat_of(const std::vector<int>& tuple) const {
        std::size_t flat = 0;
        for (std::size_t i = 0; i < tuple.size(); ++i) flat += tuple[i] * strides_[i];
        return flat;
    }

    BigInt class_size(std::size_t flat) const {
        std::vector<int> t = tuple_of(flat);
        BigInt s(1);
        for (std::size_t i = 0; i < t.size(); ++i) s *= factors_[i]->classes()[t[i]].size;
        return s;
    }

    MatFq representative(const FqField& F, std::size_t flat) const {
        std::vector<int> t = tuple_of(flat);
        MatFq m(F, 0);
        for (std::size_t i = 0; i < t.size(); ++i)
            m = MatFq::block_diag(m, factors_[i]->classes()[t[i]].representative);
        return m;
    }

    // Outer tensor product of class functions on the factors.
    ClassFunction box_product(const std::vector<ClassFunction>& parts) const {
        if (parts.size() != factors_.size())
            throw std::invalid_argument("box_product: factor count mismatch");
        ClassFunction out = ClassFunction::zero(count_);
        for (std::size_t flat = 0; flat < count_; ++flat) {
            std::vector<int> t = tuple_of(flat);
            Cyclotomic v(1);
            for (std::size_t i = 0; i < t.size(); ++i) v *= parts[i].values[t[i]];
            out.values[flat] = v;
        }
        return out;
    }

    Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g) const {
        if (f.values.size() != count_ || g.values.size() != count_)
            throw std::invalid_argument("LeviClassSystem: class list mismatch");
        Cyclotomic sum(0);
        for (std::size_t c = 0; c < count_; ++c) {
            if (f.values[c].is_zero() || g.values[c].is_zero()) continue;
            sum += Rational(class_size(c)) * (f.values[c] * g.values[c].conj());
        }
        return Rational(BigInt(1), order_) * sum;
    }

private:
    CompositionSpec comp_;
    std::vector<std::shared_ptr<GroupContext>> factors_;
    BigInt order_;
    std::size_t count_ = 1;
    std::vector<std::size_t> strides_;
};

// Character of Ind_S^G(theta) from explicit subgroup elements with values.
inline ClassFunction induce_from_elements(GroupContext& G,
                                          const std::vector<std::pair<MatFq, Cyclotomic>>& elems) {
    std::size_t k = G.classes().size();
    std::vector<Cyclotomic> sums(k);
    for (const auto& [x, value] : elems) sums[G.class_index(x)] += value;
    ClassFunction out = ClassFunction::zero(k);
    Rational inv_sub(BigInt(1), BigInt(static_cast<long long>(elems.size())));
    for (std::size_t c = 0; c < k; ++c) {
        if (sums[c].is_zero()) continue;
        out.values[c] = (inv_sub * Rational(G.classes()[c].centralizer_order)) * sums[c];
    }
    return out;
}

// Parabolic induction of per-factor class functions along a composition.
inline ClassFunction parabolic_induce(GroupContext& G, const CompositionSpec& comp,
                                      const std::vector<ClassFunction>& parts,
                                      const Budget& budget) {
    if (comp.total() != G.spec().n)
        throw std::invalid_argument("parabolic_induce: composition does not sum to n");
    if (parts.size() != comp.block_count())
        throw std::invalid_argument("parabolic_induce: one class function per block required");
    if (comp.block_count() == 1) return parts[0];

    const FqField& F = G.field();
    G.build_class_table(budget.threads);
    budget.check_unipotent(unipotent_order(comp, F.q()));

    // Factor class indices are resolved per element below.
    std::vector<std::shared_ptr<GroupContext>> fctx;
    for (int part : comp.parts) fctx.push_back(std::make_shared<GroupContext>(GroupSpec{part, F.q()}));
    std::vector<std::vector<MatFq>> elements = levi_factor_elements(F, comp);
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].values.size() != fctx[i]->classes().size())
            throw std::invalid_argument("parabolic_induce: part has wrong class count");

    std::size_t k = G.classes().size();
    std::vector<Cyclotomic> sums(k);
    BigInt levi_order(1);
    for (const auto& e : elements) levi_order *= BigInt(static_cast<long long>(e.size()));
    UnipotentRange radical(F, comp);

    // Walk L as a cartesian product; for each Levi point, sweep U.
    std::vector<std::size_t> idx(comp.block_count(), 0);
    for (;;) {
        Cyclotomic theta(1);
        MatFq l(F, 0);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            const MatFq& fi = elements[i][idx[i]];
            theta *= parts[i].values[fctx[i]->class_index(fi)];
            l = MatFq::block_diag(l, fi);
        }
        if (!theta.is_zero())
            for (const MatFq& u : radical) sums[G.class_index(l * u)] += theta;

        std::size_t i = idx.size();
        for (; i-- > 0;) {
            if (++idx[i] < elements[i].size()) break;
            idx[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }

    BigInt parabolic_order = levi_order * BigInt(radical.size());
    ClassFunction out = ClassFunction::zero(k);
    for (std::size_t c = 0; c < k; ++c) {
        if (sums[c].is_zero()) continue;
        out.values[c] =
            Rational(G.classes()[c].centralizer_order, parabolic_order) * sums[c];
    }
    return out;
}

// Jacquet restriction: U-average of chi at block-diagonal representatives.
inline ClassFunction jacquet_restrict(GroupContext& G, const LeviClassSystem& L,
                                      const ClassFunction& chi, const Budget& budget) {
    const CompositionSpec& comp = L.comp();
    if (comp.total() != G.spec().n)
        throw std::invalid_argument("jacquet_restrict: composition does not sum to n");
    if (chi.values.size() != G.classes().size())
        throw std::invalid_argument("jacquet_restrict: wrong class count");
    if (comp.block_count() == 1) return chi;

    const FqField& F = G.field();
    G.build_class_table(budget.threads);
    budget.check_unipotent(unipotent_order(comp, F.q()));

    UnipotentRange radical(F, comp);
    Rational inv_u(BigInt(1), BigInt(radical.size()));
    ClassFunction out = ClassFunction::zero(L.class_count());
    for (std::size_t flat = 0; flat < L.class_count(); ++flat) {
        MatFq l = L.representative(F, flat);
        Cyclotomic sum(0);
        for (const MatFq& u : radical) sum += chi.values[G.class_index(l * u)];
        out.values[flat] = inv_u * sum;
    }
    return out;
}

// Cuspidal iff the U-average vanishes for every two-block composition;
// refinements follow by transitivity of the radical.
inline bool is_cuspidal(GroupContext& G, const ClassFunction& chi, const Budget& budget) {
    const FqField& F = G.field();
    int n = G.spec().n;
    if (n <= 1) return true;
    G.build_class_table(budget.threads);
    for (int p = 1; p < n; ++p) {
        CompositionSpec comp{std::vector<int>{p, n - p}};
        budget.check_unipotent(unipotent_order(comp, F.q()));
        Cyclotomic sum(0);
        for (const MatFq& u : UnipotentRange(F, comp)) sum += chi.values[G.class_index(u)];
        if (!sum.is_zero()) return false;
    }
    return true;
}

// Value of the generic character at a full unitriangular element:
// zeta_p ^ Tr(sum of superdiagonal entries).
inline Cyclotomic generic_character_value(const FqField& F, const MatFq& u) {
    int acc = 0;
    for (int i = 0; i + 1 < u.n; ++i) acc = F.add(acc, u.at(i, i + 1));
    return Cyclotomic::root_of_unity(F.p(), F.trace(acc));
}

// <chi|_U, psi> over the full upper unitriangular group.
inline BigInt whittaker_multiplicity(GroupContext& G, const ClassFunction& chi,
                                     const Budget& budget) {
    const FqField& F = G.field();
    int n = G.spec().n;
    if (n <= 1) {
        // U is trivial; the multiplicity is the degree.
        return chi.values[G.identity_class()].rational_value().to_integer();
    }
    G.build_class_table(budget.threads);
    CompositionSpec full(std::vector<int>(n, 1));
    budget.check_unipotent(unipotent_order(full, F.q()));
    UnipotentRange radical(F, full);
    Cyclotomic sum(0);
    for (const MatFq& u : radical)
        sum += chi.values[G.class_index(u)] * generic_character_value(F, u).conj();
    Cyclotomic avg = Rational(BigInt(1), BigInt(radical.size())) * sum;
    return avg.rational_value().to_integer();
}

// Multiplicity vector of a class function against the table rows.
inline std::vector<BigInt> decompose(const CharacterTable& table, const ClassFunction& f) {
    std::vector<BigInt> out;
    out.reserve(table.size());
    for (std::size_t i = 0; i < table.size(); ++i)
        out.push_back(inner_product_integer(table.group(), f, table.row(i)));
    return out;
}

} // namespace glnq
