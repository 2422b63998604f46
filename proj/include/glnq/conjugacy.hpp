// conjugacy.hpp -- conjugacy classes of GL_n(F_q).
//
// A class is labelled by its F_q[x]-module invariant: the set of pairs
// (monic irreducible polynomial f != x, partition lambda_f), with
// sum deg(f) * |lambda_f| = n. Two matrices are conjugate iff their labels
// agree. Class sizes come from the standard centralizer-order product over
// the pairs, so enumeration never touches group elements; the flat
// code->class table (used by the character-table and induction machinery)
// is where every invertible matrix is classified, and its per-class counts
// are checked against the analytic sizes.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glnq/budget.hpp"
#include "glnq/group.hpp"
#include "glnq/parallel.hpp"
#include "glnq/partitions.hpp"
#include "glnq/rational.hpp"

namespace glnq {

struct ClassLabel {
    // Pairs sorted by (polynomial, partition); polynomials are distinct.
    std::vector<std::pair<PolyFq, Partition>> pairs;

    friend bool operator==(const ClassLabel& a, const ClassLabel& b) { return a.pairs == b.pairs; }
    friend bool operator<(const ClassLabel& a, const ClassLabel& b) {
        std::size_t m = std::min(a.pairs.size(), b.pairs.size());
        for (std::size_t i = 0; i < m; ++i) {
            int c = poly_compare(a.pairs[i].first, b.pairs[i].first);
            if (c != 0) return c < 0;
            if (a.pairs[i].second != b.pairs[i].second) return a.pairs[i].second < b.pairs[i].second;
        }
        return a.pairs.size() < b.pairs.size();
    }

    void canonicalize() {
        std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
            int c = poly_compare(x.first, y.first);
            if (c != 0) return c < 0;
            return x.second < y.second;
        });
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (i) s += ";";
            s += "p:" + poly_to_string(pairs[i].first) + "|lam:";
            for (std::size_t j = 0; j < pairs[i].second.size(); ++j) {
                if (j) s += ",";
                s += std::to_string(pairs[i].second[j]);
            }
        }
        return s;
    }

    static ClassLabel from_string(const FqField&, const std::string& s) {
        ClassLabel label;
        if (s.empty()) return label;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t end = s.find(';', pos);
            if (end == std::string::npos) end = s.size();
            std::string item = s.substr(pos, end - pos);
            auto bar = item.find("|lam:");
            if (item.rfind("p:", 0) != 0 || bar == std::string::npos)
                throw std::invalid_argument("ClassLabel: bad item " + item);
            PolyFq poly;
            for (std::size_t i = 2; i < bar;) {
                std::size_t comma = item.find(',', i);
                if (comma == std::string::npos || comma > bar) comma = bar;
                poly.push_back(std::stoi(item.substr(i, comma - i)));
                i = comma + 1;
            }
            Partition lam;
            for (std::size_t i = bar + 5; i < item.size();) {
                std::size_t comma = item.find(',', i);
                if (comma == std::string::npos) comma = item.size();
                lam.push_back(std::stoi(item.substr(i, comma - i)));
                i = comma + 1;
            }
            label.pairs.emplace_back(std::move(poly), std::move(lam));
            pos = end + 1;
        }
        label.canonicalize();
        return label;
    }
};

// Invariant-factor data of an invertible matrix. Throws on singular input.
inline ClassLabel class_of(const MatFq& m) {
    const FqField& F = *m.F;
    if (m.n == 0) return {};
    if (m.det() == 0) throw std::domain_error("class_of: singular matrix");
    PolyFq cp = characteristic_polynomial(m);
    ClassLabel label;
    for (int d = 1; d <= m.n && poly_degree(cp) > 0; ++d) {
        if (poly_degree(cp) < d) break;
        for (const PolyFq& f : monic_irreducibles(F, d)) {
            if (poly_degree(cp) < d) break;
            int mult = 0;
            PolyFq quot, rem;
            for (;;) {
                poly_divmod(F, cp, f, quot, rem);
                if (!rem.empty()) break;
                cp = quot;
                ++mult;
            }
            if (mult == 0) continue;
            Partition lam;
            if (mult == 1) {
                lam = {1};
            } else {
                // dim ker f(m)^j = deg(f) * sum_i min(lambda_i, j); the
                // increments give the conjugate partition.
                MatFq fm = evaluate_poly_at(f, m);
                Partition conj;
                MatFq power = MatFq::identity(F, m.n);
                int prev = 0, total = 0;
                while (total < mult) {
                    power = power * fm;
                    int dim = m.n - power.rank();
                    int parts = (dim - prev) / d;
                    if (parts <= 0 || (dim - prev) % d != 0)
                        throw std::logic_error("class_of: inconsistent kernel growth");
                    conj.push_back(parts);
                    total += parts;
                    prev = dim;
                }
                lam = conjugate_partition(conj);
                if (partition_size(lam) != mult)
                    throw std::logic_error("class_of: partition does not match multiplicity");
            }
            label.pairs.emplace_back(f, std::move(lam));
        }
    }
    if (poly_degree(cp) != 0)
        throw std::logic_error("class_of: characteristic polynomial did not factor");
    label.canonicalize();
    return label;
}

// Companion matrix of a monic polynomial.
inline MatFq companion_matrix(const FqField& F, const PolyFq& g) {
    int m = poly_degree(g);
    MatFq c(F, m);
    for (int i = 0; i + 1 < m; ++i) c.at(i + 1, i) = 1;
    for (int i = 0; i < m; ++i) c.at(i, m - 1) = F.neg(g[i]);
    return c;
}

// Primary rational canonical form: one companion block of f^s per part s.
inline MatFq representative_matrix(const FqField& F, int n, const ClassLabel& label) {
    MatFq rep(F, 0);
    for (const auto& [f, lam] : label.pairs)
        for (int part : lam)
            rep = MatFq::block_diag(rep, companion_matrix(F, poly_pow(F, f, part)));
    if (rep.n != n) throw std::logic_error("representative_matrix: size mismatch");
    return rep;
}

// Centralizer order of a single (f, lambda) pair, over Q = q^deg(f):
//   Q^{sum conj(lambda)_j^2} * prod_i prod_{k=1}^{m_i} (1 - Q^{-k})
// with m_i the multiplicity of part i in lambda.
inline BigInt centralizer_order_of_pair(long long q, int deg, const Partition& lam) {
    BigInt Q = pow(BigInt(q), deg);
    Partition conj = conjugate_partition(lam);
    long long expo = 0;
    for (int c : conj) expo += static_cast<long long>(c) * c;
    Rational result(pow(Q, expo));
    std::map<int, int> mult;
    for (int part : lam) ++mult[part];
    for (const auto& [part, m] : mult) {
        (void)part;
        for (int k = 1; k <= m; ++k)
            result *= Rational(pow(Q, k) - BigInt(1), pow(Q, k));
    }
    return result.to_integer();
}

inline BigInt centralizer_order(long long q, const ClassLabel& label) {
    BigInt c(1);
    for (const auto& [f, lam] : label.pairs)
        c *= centralizer_order_of_pair(q, poly_degree(f), lam);
    return c;
}

struct ClassData {
    ClassLabel label;
    MatFq representative;
    BigInt size;
    BigInt centralizer_order;
};

// All conjugacy classes, sorted by label. Purely analytic.
inline std::vector<ClassData> enumerate_classes(const FqField& F, const GroupSpec& spec) {
    BigInt order = group_order(spec);
    std::vector<ClassData> out;
    if (spec.n == 0) {
        out.push_back({ClassLabel{}, MatFq(F, 0), BigInt(1), BigInt(1)});
        return out;
    }
    // Irreducibles of degree <= n except x itself, in canonical order.
    std::vector<PolyFq> irr;
    for (int d = 1; d <= spec.n; ++d)
        for (const PolyFq& f : monic_irreducibles(F, d))
            if (!(d == 1 && f[0] == 0)) irr.push_back(f);

    ClassLabel current;
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (remaining == 0) {
            ClassLabel label = current;
            label.canonicalize();
            BigInt cent = centralizer_order(spec.q, label);
            BigInt size = order / cent;
            if (size * cent != order)
                throw std::logic_error("enumerate_classes: centralizer does not divide group order");
            out.push_back({label, representative_matrix(F, spec.n, label), size, cent});
            return;
        }
        if (idx == irr.size()) return;
        self(self, idx + 1, remaining); // skip this irreducible
        int deg = poly_degree(irr[idx]);
        for (int w = 1; w * deg <= remaining; ++w)
            for (const Partition& lam : all_partitions(w)) {
                current.pairs.emplace_back(irr[idx], lam);
                self(self, idx + 1, remaining - w * deg);
                current.pairs.pop_back();
            }
    };
    rec(rec, 0, spec.n);

    std::sort(out.begin(), out.end(),
              [](const ClassData& a, const ClassData& b) { return a.label < b.label; });
    BigInt total(0);
    for (const ClassData& c : out) total += c.size;
    if (total != order) throw std::logic_error("enumerate_classes: class sizes do not sum to |G|");
    return out;
}

// Shared per-group state: classes plus the flat code->class lookup.
class GroupContext {
public:
    GroupContext(const GroupSpec& spec) : spec_(spec), field_(&FqField::get(spec.q)) {
        classes_ = enumerate_classes(*field_, spec);
        for (std::size_t i = 0; i < classes_.size(); ++i)
            label_index_[classes_[i].label] = static_cast<int>(i);
        ClassLabel id_label = spec.n == 0 ? ClassLabel{} : class_of(MatFq::identity(*field_, spec.n));
        identity_class_ = label_index_.at(id_label);
        order_ = group_order(spec);
    }

    const GroupSpec& spec() const { return spec_; }
    const FqField& field() const { return *field_; }
    const std::vector<ClassData>& classes() const { return classes_; }
    const BigInt& order() const { return order_; }
    long long order_ll() const { return order_.to_int64(); }
    int identity_class() const { return identity_class_; }

    int index_of_label(const ClassLabel& label) const {
        auto it = label_index_.find(label);
        if (it == label_index_.end())
            throw std::logic_error("GroupContext: label not in class list: " + label.to_string());
        return it->second;
    }

    bool has_class_table() const { return !class_table_.empty(); }

    // Classifies all q^(n^2) codes in parallel and checks the per-class
    // counts against the analytic sizes.
    void build_class_table(int threads) {
        if (has_class_table() || spec_.n == 0) return;
        std::uint64_t space = matrix_code_space(spec_);
        if (space == 0 || space > (1ULL << 31))
            throw BudgetError("matrix code space too large for a class table");
        class_table_.assign(space, -1);
        std::vector<std::vector<long long>> counts(parallel_block_count(space),
                                                   std::vector<long long>(classes_.size(), 0));
        parallel_blocks(space, threads, [&](std::size_t lo, std::size_t hi, std::size_t b) {
            for (std::size_t code = lo; code < hi; ++code) {
                MatFq m = MatFq::from_code(*field_, spec_.n, code);
                if (m.det() == 0) continue;
                int idx = index_of_label(class_of(m));
                class_table_[code] = static_cast<std::int16_t>(idx);
                ++counts[b][idx];
            }
        });
        std::vector<long long> total(classes_.size(), 0);
        for (const auto& blockCounts : counts)
            for (std::size_t i = 0; i < total.size(); ++i) total[i] += blockCounts[i];
        for (std::size_t i = 0; i < total.size(); ++i)
            if (BigInt(total[i]) != classes_[i].size)
                throw std::logic_error("class table: orbit count disagrees with analytic size for " +
                                       classes_[i].label.to_string());
    }

    int class_index(const MatFq& m) const {
        if (spec_.n == 0) return 0;
        if (!class_table_.empty()) {
            std::int16_t idx = class_table_[m.code()];
            if (idx < 0) throw std::domain_error("class_index: singular matrix");
            return idx;
        }
        return index_of_label(class_of(m));
    }

    // Raw table access by code; -1 marks singular. Requires a built table.
    int class_index_of_code(std::uint64_t code) const {
        return class_table_[code];
    }

private:
    GroupSpec spec_;
    const FqField* field_;
    std::vector<ClassData> classes_;
    std::map<ClassLabel, int> label_index_;
    std::vector<std::int16_t> class_table_;
    int identity_class_ = 0;
    BigInt order_;
};

} // namespace glnq
