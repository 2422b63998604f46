// psh.hpp -- the free model of the positive self-adjoint Hopf algebra on a
// set of cuspidal symbols.
//
// A basis element assigns a partition to finitely many cuspidal labels; its
// degree is sum deg(rho) * |lambda_rho|. By the factorization theorem the
// whole ring is the tensor product over labels of one-cuspidal rings, and
// each of those is symmetric functions with basis {s_lambda}; so
// multiplication and comultiplication are Littlewood-Richardson expansions
// per label, tensored across labels. Duality relabels rho -> rho* and fixes
// the partition (the Whittaker-normalized choice of the structure
// isomorphism; for self-dual rho this is the identity map).

#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "glnq/lr.hpp"

namespace glnq {
namespace psh {

struct CuspidalLabel {
    int id = 0;
    int degree = 1;
    int dual_id = 0;
};

class LabelSet {
public:
    void add(int id, int degree, int dual_id) {
        labels_[id] = {id, degree, dual_id};
    }
    const CuspidalLabel& get(int id) const {
        auto it = labels_.find(id);
        if (it == labels_.end())
            throw std::invalid_argument("LabelSet: unknown label " + std::to_string(id));
        return it->second;
    }
    // dual is an involution preserving degree
    void validate() const {
        for (const auto& [id, label] : labels_) {
            const CuspidalLabel& dual = get(label.dual_id);
            if (dual.dual_id != id)
                throw std::logic_error("LabelSet: dual is not an involution");
            if (dual.degree != label.degree)
                throw std::logic_error("LabelSet: dual changes the degree");
        }
    }
    const std::map<int, CuspidalLabel>& all() const { return labels_; }

private:
    std::map<int, CuspidalLabel> labels_;
};

// label id -> nonempty partition, canonically ordered by the map.
using BasisElement = std::map<int, Partition>;

inline int degree_of(const BasisElement& b, const LabelSet& labels) {
    int d = 0;
    for (const auto& [id, lam] : b) d += labels.get(id).degree * partition_size(lam);
    return d;
}

inline std::string basis_to_string(const BasisElement& b) {
    if (b.empty()) return "1";
    std::string s;
    for (const auto& [id, lam] : b) {
        if (!s.empty()) s += "*";
        s += "rho" + std::to_string(id) + partition_to_string(lam);
    }
    return s;
}

// Integer combination of basis elements; zero coefficients are never stored.
struct Element {
    std::map<BasisElement, long long> terms;

    static Element basis(const BasisElement& b) { return {{{b, 1}}}; }
    static Element unit() { return basis({}); }

    void add_term(const BasisElement& b, long long c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(b, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    friend Element operator+(const Element& a, const Element& b) {
        Element r = a;
        for (const auto& [t, c] : b.terms) r.add_term(t, c);
        return r;
    }
    friend bool operator==(const Element& a, const Element& b) { return a.terms == b.terms; }
};

// Per-label LR expansion of the product of two basis elements.
inline Element multiply_basis(const BasisElement& a, const BasisElement& b) {
    // Union of supports.
    std::vector<int> ids;
    for (const auto& [id, lam] : a) ids.push_back(id);
    for (const auto& [id, lam] : b)
        if (!a.count(id)) ids.push_back(id);
    std::sort(ids.begin(), ids.end());

    Element result = Element::unit();
    for (int id : ids) {
        Partition mu = a.count(id) ? a.at(id) : Partition{};
        Partition nu = b.count(id) ? b.at(id) : Partition{};
        // All lambda with c^lambda_{mu nu} > 0.
        std::vector<std::pair<Partition, long long>> expansions;
        for (const Partition& lam : all_partitions(partition_size(mu) + partition_size(nu))) {
            long long c = lr_coefficient(lam, mu, nu);
            if (c > 0) expansions.emplace_back(lam, c);
        }
        Element next;
        for (const auto& [term, coeff] : result.terms)
            for (const auto& [lam, c] : expansions) {
                BasisElement extended = term;
                if (!lam.empty()) extended[id] = lam;
                next.add_term(extended, coeff * c);
            }
        result = std::move(next);
    }
    return result;
}

inline Element multiply(const Element& a, const Element& b) {
    Element result;
    for (const auto& [ta, ca] : a.terms)
        for (const auto& [tb, cb] : b.terms) {
            Element prod = multiply_basis(ta, tb);
            for (const auto& [t, c] : prod.terms) result.add_term(t, ca * cb * c);
        }
    return result;
}

// Formal sums in the tensor square, for comultiplication and its tests.
struct TensorElement {
    std::map<std::pair<BasisElement, BasisElement>, long long> terms;

    void add_term(const BasisElement& x, const BasisElement& y, long long c) {
        if (c == 0) return;
        auto key = std::make_pair(x, y);
        auto [it, fresh] = terms.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.terms == b.terms;
    }
};

// m*(basis): per label, all splittings lambda -> (mu, nu) weighted by
// c^lambda_{mu nu}; tensored across labels.
inline TensorElement comultiply_basis(const BasisElement& b) {
    TensorElement result;
    result.add_term({}, {}, 1);
    for (const auto& [id, lam] : b) {
        int total = partition_size(lam);
        std::vector<std::tuple<Partition, Partition, long long>> splits;
        for (int left = 0; left <= total; ++left)
            for (const Partition& mu : all_partitions(left))
                for (const Partition& nu : all_partitions(total - left)) {
                    long long c = lr_coefficient(lam, mu, nu);
                    if (c > 0) splits.emplace_back(mu, nu, c);
                }
        TensorElement next;
        for (const auto& [pair, coeff] : result.terms)
            for (const auto& [mu, nu, c] : splits) {
                BasisElement x = pair.first, y = pair.second;
                if (!mu.empty()) x[id] = mu;
                if (!nu.empty()) y[id] = nu;
                next.add_term(x, y, coeff * c);
            }
        result = std::move(next);
    }
    return result;
}

inline TensorElement comultiply(const Element& a) {
    TensorElement result;
    for (const auto& [t, c] : a.terms) {
        TensorElement part = comultiply_basis(t);
        for (const auto& [pair, coeff] : part.terms)
            result.add_term(pair.first, pair.second, c * coeff);
    }
    return result;
}

// Product in the tensor square: (a (x) b)(c (x) d) = ac (x) bd.
inline TensorElement multiply_tensor(const TensorElement& a, const TensorElement& b) {
    TensorElement result;
    for (const auto& [pa, ca] : a.terms)
        for (const auto& [pb, cb] : b.terms) {
            Element left = multiply(Element::basis(pa.first), Element::basis(pb.first));
            Element right = multiply(Element::basis(pa.second), Element::basis(pb.second));
            for (const auto& [tl, cl] : left.terms)
                for (const auto& [tr, cr] : right.terms)
                    result.add_term(tl, tr, ca * cb * cl * cr);
        }
    return result;
}

// rho -> rho*, partitions fixed.
inline BasisElement dual_basis(const BasisElement& b, const LabelSet& labels) {
    BasisElement out;
    for (const auto& [id, lam] : b) out[labels.get(id).dual_id] = lam;
    return out;
}

inline Element dual(const Element& a, const LabelSet& labels) {
    Element out;
    for (const auto& [t, c] : a.terms) out.add_term(dual_basis(t, labels), c);
    return out;
}

// Unique factorization into primary pieces: just the support pairs.
inline std::vector<std::pair<int, Partition>> primary_decomposition(const BasisElement& b) {
    std::vector<std::pair<int, Partition>> out;
    for (const auto& [id, lam] : b) out.emplace_back(id, lam);
    return out;
}

// Orthonormal-basis pairing.
inline long long pairing(const Element& a, const Element& b) {
    long long s = 0;
    for (const auto& [t, c] : a.terms) {
        auto it = b.terms.find(t);
        if (it != b.terms.end()) s += c * it->second;
    }
    return s;
}

inline long long pairing_tensor(const TensorElement& a, const TensorElement& b) {
    long long s = 0;
    for (const auto& [t, c] : a.terms) {
        auto it = b.terms.find(t);
        if (it != b.terms.end()) s += c * it->second;
    }
    return s;
}

// All basis elements of the given total degree over the label set.
inline std::vector<BasisElement> basis_of_degree(const LabelSet& labels, int degree) {
    std::vector<int> ids;
    for (const auto& [id, label] : labels.all()) ids.push_back(id);
    std::vector<BasisElement> out;
    BasisElement current;
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (idx == ids.size()) return;
        self(self, idx + 1, remaining);
        int d = labels.get(ids[idx]).degree;
        for (int w = 1; w * d <= remaining; ++w)
            for (const Partition& lam : all_partitions(w)) {
                current[ids[idx]] = lam;
                self(self, idx + 1, remaining - w * d);
                current.erase(ids[idx]);
            }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

// Axiom sweep used by the CLI self-check: positivity, adjointness, Hopf
// compatibility and LR symmetry, exhaustively up to the given total degree.
struct SelfCheckResult {
    bool ok = true;
    long long cases = 0;
    std::string failure;
};

inline SelfCheckResult run_axiom_checks(const LabelSet& labels, int max_degree) {
    SelfCheckResult result;
    auto fail = [&](const std::string& what) {
        result.ok = false;
        if (result.failure.empty()) result.failure = what;
    };
    labels.validate();

    std::vector<std::vector<BasisElement>> by_degree(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) by_degree[d] = basis_of_degree(labels, d);

    // LR symmetry c^lam_{mu nu} = c^lam_{nu mu}.
    for (int total = 0; total <= max_degree; ++total)
        for (int a = 0; a <= total; ++a)
            for (const Partition& mu : all_partitions(a))
                for (const Partition& nu : all_partitions(total - a))
                    for (const Partition& lam : all_partitions(total)) {
                        ++result.cases;
                        if (lr_coefficient(lam, mu, nu) != lr_coefficient(lam, nu, mu))
                            fail("LR symmetry failed at " + partition_to_string(lam));
                    }

    // Positivity and degree additivity of products; adjointness against m*.
    std::map<BasisElement, TensorElement> coproducts;
    for (int d = 0; d <= max_degree; ++d)
        for (const BasisElement& c : by_degree[d]) {
            TensorElement co = comultiply_basis(c);
            for (const auto& [pair, coeff] : co.terms) {
                ++result.cases;
                if (coeff <= 0) fail("non-positive coproduct coefficient");
            }
            coproducts[c] = std::move(co);
        }
    for (int da = 0; da <= max_degree; ++da)
        for (int db = 0; da + db <= max_degree; ++db)
            for (const BasisElement& a : by_degree[da])
                for (const BasisElement& b : by_degree[db]) {
                    Element prod = multiply_basis(a, b);
                    for (const auto& [t, c] : prod.terms) {
                        ++result.cases;
                        if (c <= 0) fail("non-positive product coefficient");
                        if (degree_of(t, labels) != da + db) fail("product is not degree-additive");
                    }
                    for (const BasisElement& c : by_degree[da + db]) {
                        ++result.cases;
                        long long lhs = 0;
                        auto it = prod.terms.find(c);
                        if (it != prod.terms.end()) lhs = it->second;
                        long long rhs = 0;
                        auto jt = coproducts[c].terms.find(std::make_pair(a, b));
                        if (jt != coproducts[c].terms.end()) rhs = jt->second;
                        if (lhs != rhs) fail("adjointness <ab,c> = <a(x)b, m*c> failed");
                    }
                }

    // Hopf compatibility m*(ab) = m*(a) m*(b) on single-label elements.
    for (int da = 1; da <= max_degree; ++da)
        for (int db = 1; da + db <= std::min(max_degree, 4); ++db)
            for (const BasisElement& a : by_degree[da])
                for (const BasisElement& b : by_degree[db]) {
                    if (a.size() != 1 || b.size() != 1) continue;
                    ++result.cases;
                    TensorElement lhs = comultiply(multiply_basis(a, b));
                    TensorElement rhs = multiply_tensor(comultiply_basis(a), comultiply_basis(b));
                    if (!(lhs == rhs)) fail("Hopf compatibility failed");
                }

    // Duality: involutive ring map fixing partitions.
    for (int d = 0; d <= max_degree; ++d)
        for (const BasisElement& b : by_degree[d]) {
            ++result.cases;
            if (dual_basis(dual_basis(b, labels), labels) != b) fail("dual not involutive");
        }
    return result;
}

} // namespace psh
} // namespace glnq
