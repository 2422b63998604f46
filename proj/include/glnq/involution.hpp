// involution.hpp -- the symmetric pair datum. Over odd characteristic any A
// with A^2 = I is conjugate to diag(I_p, -I_{n-p}), so an involution is
// recorded by (n, p) alone; its centralizer is H = GL_p x GL_{n-p}, and
// H-classes fuse into G along the block-diagonal embedding.

#pragma once

#include "glnq/conjugacy.hpp"

namespace glnq {

struct InvolutionSpec {
    int n = 1;
    int p = 0;

    InvolutionSpec() = default;
    InvolutionSpec(int n_, int p_) : n(n_), p(p_) {
        if (p < 0 || p > n) throw std::invalid_argument("InvolutionSpec: p outside [0, n]");
    }

    MatFq matrix(const FqField& F) const {
        MatFq a = MatFq::identity(F, n);
        for (int i = p; i < n; ++i) a.at(i, i) = F.neg(1);
        return a;
    }
};

inline BigInt centralizer_group_order(const InvolutionSpec& inv, long long q) {
    return group_order(GroupSpec{inv.p, q}) * group_order(GroupSpec{inv.n - inv.p, q});
}

// One class of H = GL_p x GL_{n-p} together with its image class in G.
struct FusedHClass {
    ClassData factor_a; // class in GL_p
    ClassData factor_b; // class in GL_{n-p}
    BigInt size;        // |class| inside H
    ClassLabel fused_label;
    int fused_index;
};

// Classes of H as pairs of factor classes, each with the G-class of its
// block-diagonal representative. Order: (factor_a label, factor_b label).
inline std::vector<FusedHClass> involution_centralizer_classes(GroupContext& G,
                                                               const InvolutionSpec& inv) {
    if (inv.n != G.spec().n) throw std::invalid_argument("involution rank mismatch");
    const FqField& F = G.field();
    std::vector<ClassData> classes_a = enumerate_classes(F, GroupSpec{inv.p, G.spec().q});
    std::vector<ClassData> classes_b = enumerate_classes(F, GroupSpec{inv.n - inv.p, G.spec().q});

    std::vector<FusedHClass> out;
    out.reserve(classes_a.size() * classes_b.size());
    BigInt total(0);
    for (const ClassData& ca : classes_a)
        for (const ClassData& cb : classes_b) {
            MatFq rep = MatFq::block_diag(ca.representative, cb.representative);
            ClassLabel fused = class_of(rep);
            int idx = G.index_of_label(fused);
            BigInt size = ca.size * cb.size;
            total += size;
            out.push_back({ca, cb, size, std::move(fused), idx});
        }
    if (total != centralizer_group_order(inv, G.spec().q))
        throw std::logic_error("involution_centralizer_classes: sizes do not sum to |H|");
    return out;
}

} // namespace glnq
