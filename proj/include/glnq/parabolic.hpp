// parabolic.hpp -- standard (interval) compositions of n and the attached
// subgroups: the block upper-triangular parabolic P, its unipotent radical U
// and the block-diagonal Levi L. Only interval compositions are needed;
// arbitrary ordered set partitions are conjugate to one of these and every
// character-level construction here is conjugation-invariant.

#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "glnq/conjugacy.hpp"

namespace glnq {

struct CompositionSpec {
    std::vector<int> parts;

    CompositionSpec() = default;
    CompositionSpec(std::initializer_list<int> p) : parts(p) { validate(); }
    explicit CompositionSpec(std::vector<int> p) : parts(std::move(p)) { validate(); }

    int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    std::size_t block_count() const { return parts.size(); }

    // Block index of a matrix row/column.
    int block_of(int i) const {
        int acc = 0;
        for (std::size_t b = 0; b < parts.size(); ++b) {
            acc += parts[b];
            if (i < acc) return static_cast<int>(b);
        }
        throw std::out_of_range("CompositionSpec: index outside [0, n)");
    }
    int block_start(std::size_t b) const {
        return std::accumulate(parts.begin(), parts.begin() + b, 0);
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s;
    }

private:
    void validate() const {
        if (parts.empty()) throw std::invalid_argument("composition must be nonempty");
        for (int p : parts)
            if (p <= 0) throw std::invalid_argument("composition parts must be positive");
    }
};

inline long long unipotent_order(const CompositionSpec& comp, long long q) {
    long long dim = 0;
    for (std::size_t i = 0; i < comp.parts.size(); ++i)
        for (std::size_t j = i + 1; j < comp.parts.size(); ++j)
            dim += static_cast<long long>(comp.parts[i]) * comp.parts[j];
    long long count = 1;
    for (long long k = 0; k < dim; ++k) count *= q;
    return count;
}

// Iterates U(T) = { I + A : A strictly block upper } as a forward range.
class UnipotentRange {
public:
    UnipotentRange(const FqField& F, const CompositionSpec& comp)
        : field_(&F), n_(comp.total()) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (comp.block_of(i) < comp.block_of(j)) free_.emplace_back(i, j);
    }

    class Iterator {
    public:
        using value_type = MatFq;

        Iterator(const UnipotentRange* range, bool end)
            : range_(range), digits_(range->free_.size(), 0), done_(end) {
            if (!done_) materialize();
        }
        const MatFq& operator*() const { return current_; }
        Iterator& operator++() {
            long long q = range_->field_->q();
            std::size_t i = 0;
            for (; i < digits_.size(); ++i) {
                if (++digits_[i] < q) break;
                digits_[i] = 0;
            }
            if (i == digits_.size())
                done_ = true;
            else
                materialize();
            return *this;
        }
        friend bool operator==(const Iterator& a, const Iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.digits_ == b.digits_);
        }
        friend bool operator!=(const Iterator& a, const Iterator& b) { return !(a == b); }

    private:
        const UnipotentRange* range_;
        std::vector<int> digits_;
        bool done_;
        MatFq current_;

        void materialize() {
            current_ = MatFq::identity(*range_->field_, range_->n_);
            for (std::size_t k = 0; k < digits_.size(); ++k)
                current_.at(range_->free_[k].first, range_->free_[k].second) = digits_[k];
        }
    };

    Iterator begin() const { return Iterator(this, false); }
    Iterator end() const { return Iterator(this, true); }

    long long size() const {
        long long count = 1;
        for (std::size_t i = 0; i < free_.size(); ++i) count *= field_->q();
        return count;
    }

private:
    const FqField* field_;
    int n_;
    std::vector<std::pair<int, int>> free_;
};

// Embeds a tuple of factor matrices as a block-diagonal Levi element.
inline MatFq levi_embed(const FqField& F, const CompositionSpec& comp,
                        const std::vector<MatFq>& factors) {
    if (factors.size() != comp.block_count())
        throw std::invalid_argument("levi_embed: factor count mismatch");
    MatFq m(F, 0);
    for (const MatFq& f : factors) m = MatFq::block_diag(m, f);
    if (m.n != comp.total()) throw std::invalid_argument("levi_embed: size mismatch");
    return m;
}

// All elements of each GL_{n_i}(F_q), in code order; used to walk L and P.
inline std::vector<std::vector<MatFq>> levi_factor_elements(const FqField& F,
                                                            const CompositionSpec& comp) {
    std::vector<std::vector<MatFq>> out(comp.block_count());
    for (std::size_t b = 0; b < comp.block_count(); ++b) {
        GroupSpec fspec{comp.parts[b], F.q()};
        for_each_group_element(F, fspec, [&](const MatFq& m) { out[b].push_back(m); });
    }
    return out;
}

} // namespace glnq
