// chartable.hpp -- exact irreducible character tables.
//
// A table is the list of classes of G (owned by a GroupContext) together
// with one row of exact cyclotomic values per irreducible. Every table is
// validated before use: first and second orthogonality exactly, sum of
// squared degrees equal to |G|, degrees dividing |G|. Values are stored at
// the order of their class representative, which always divides the table
// exponent.

#pragma once

#include <memory>
#include <vector>

#include "glnq/conjugacy.hpp"
#include "glnq/cyclotomic.hpp"

namespace glnq {

struct IrreducibleCharacter {
    std::vector<Cyclotomic> values; // indexed by class
    long long degree = 0;           // value at the identity class
};

// A (possibly virtual) class function on a fixed group.
struct ClassFunction {
    std::vector<Cyclotomic> values;

    static ClassFunction zero(std::size_t k) { return {std::vector<Cyclotomic>(k)}; }

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
        ClassFunction r = a;
        for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
        return r;
    }
    friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
        ClassFunction r = a;
        for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] -= b.values[i];
        return r;
    }
    ClassFunction conj() const {
        ClassFunction r = *this;
        for (Cyclotomic& v : r.values) v = v.conj();
        return r;
    }
};

class CharacterTable {
public:
    CharacterTable(std::shared_ptr<GroupContext> ctx, long long exponent,
                   std::vector<IrreducibleCharacter> chars)
        : ctx_(std::move(ctx)), exponent_(exponent), chars_(std::move(chars)) {}

    const GroupContext& group() const { return *ctx_; }
    GroupContext& group_mutable() { return *ctx_; }
    std::shared_ptr<GroupContext> group_ptr() const { return ctx_; }
    long long exponent() const { return exponent_; }
    const std::vector<IrreducibleCharacter>& chars() const { return chars_; }
    std::size_t size() const { return chars_.size(); }

    ClassFunction row(std::size_t i) const { return {chars_[i].values}; }

private:
    std::shared_ptr<GroupContext> ctx_;
    long long exponent_;
    std::vector<IrreducibleCharacter> chars_;
};

// <f, g> = (1/|G|) sum_c |c| f(c) conj(g(c))
inline Cyclotomic inner_product(const GroupContext& G, const ClassFunction& f,
                                const ClassFunction& g) {
    const auto& classes = G.classes();
    if (f.values.size() != classes.size() || g.values.size() != classes.size())
        throw std::invalid_argument("inner_product: class list mismatch");
    Cyclotomic sum(0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (f.values[c].is_zero() || g.values[c].is_zero()) continue;
        sum += Rational(classes[c].size) * (f.values[c] * g.values[c].conj());
    }
    return Rational(BigInt(1), G.order()) * sum;
}

// Exact integer pairing; throws if the result is not a rational integer
// (for proper characters it always is).
inline BigInt inner_product_integer(const GroupContext& G, const ClassFunction& f,
                                    const ClassFunction& g) {
    return inner_product(G, f, g).rational_value().to_integer();
}

// Full invariant check; throws std::logic_error with a description on failure.
inline void validate_table(const CharacterTable& table) {
    const GroupContext& G = table.group();
    const auto& classes = G.classes();
    std::size_t k = classes.size();
    if (table.size() != k)
        throw std::logic_error("table: number of characters differs from number of classes");

    BigInt sum_sq(0);
    for (const IrreducibleCharacter& chi : table.chars()) {
        if (chi.degree <= 0) throw std::logic_error("table: non-positive degree");
        if (!(G.order() % BigInt(chi.degree)).is_zero())
            throw std::logic_error("table: degree does not divide |G|");
        if (chi.values.at(G.identity_class()) != Cyclotomic(chi.degree))
            throw std::logic_error("table: identity value differs from degree");
        sum_sq += BigInt(chi.degree) * BigInt(chi.degree);
    }
    if (sum_sq != G.order()) throw std::logic_error("table: sum of squared degrees is not |G|");

    std::vector<std::vector<Cyclotomic>> conj_rows(k);
    for (std::size_t i = 0; i < k; ++i) {
        conj_rows[i].reserve(k);
        for (const Cyclotomic& v : table.chars()[i].values) conj_rows[i].push_back(v.conj());
    }

    // Row orthogonality: sum_c |c| chi_i(c) conj(chi_j(c)) = delta_ij |G|.
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            Cyclotomic sum(0);
            for (std::size_t c = 0; c < k; ++c)
                sum += Rational(classes[c].size) * (table.chars()[i].values[c] * conj_rows[j][c]);
            Cyclotomic expect = i == j ? Cyclotomic(Rational(G.order())) : Cyclotomic(0);
            if (sum != expect)
                throw std::logic_error("table: row orthogonality failed at (" +
                                       std::to_string(i) + "," + std::to_string(j) + ")");
        }

    // Column orthogonality: sum_chi chi(c) conj(chi(d)) = delta_cd |G| / |c|.
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = c; d < k; ++d) {
            Cyclotomic sum(0);
            for (std::size_t i = 0; i < k; ++i)
                sum += table.chars()[i].values[c] * conj_rows[i][d];
            Cyclotomic expect =
                c == d ? Cyclotomic(Rational(classes[c].centralizer_order)) : Cyclotomic(0);
            if (sum != expect)
                throw std::logic_error("table: column orthogonality failed at (" +
                                       std::to_string(c) + "," + std::to_string(d) + ")");
        }
}

} // namespace glnq
