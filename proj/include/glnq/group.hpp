// group.hpp -- the group GL_n(F_q): order, element iteration by matrix code.

#pragma once

#include <cstdint>
#include <functional>

#include "glnq/bigint.hpp"
#include "glnq/errors.hpp"
#include "glnq/matrix.hpp"

namespace glnq {

struct GroupSpec {
    int n = 1;
    long long q = 3;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        return a.n == b.n && a.q == b.q;
    }
    friend bool operator<(const GroupSpec& a, const GroupSpec& b) {
        return a.n != b.n ? a.n < b.n : a.q < b.q;
    }
};

// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i)
inline BigInt group_order(const GroupSpec& spec) {
    BigInt qn = pow(BigInt(spec.q), spec.n);
    BigInt result(1);
    BigInt qi(1);
    for (int i = 0; i < spec.n; ++i) {
        result *= qn - qi;
        qi *= BigInt(spec.q);
    }
    return result;
}

// q^(n^2), or 0 when that overflows 64 bits (then codes are unusable).
inline std::uint64_t matrix_code_space(const GroupSpec& spec) {
    unsigned __int128 s = 1;
    for (int i = 0; i < spec.n * spec.n; ++i) {
        s *= static_cast<unsigned __int128>(spec.q);
        if (s > UINT64_MAX) return 0;
    }
    return static_cast<std::uint64_t>(s);
}

// Applies fn to every invertible matrix, in code order.
inline void for_each_group_element(const FqField& F, const GroupSpec& spec,
                                   const std::function<void(const MatFq&)>& fn) {
    std::uint64_t space = matrix_code_space(spec);
    if (space == 0) throw BudgetError("group too large for element enumeration");
    for (std::uint64_t code = 0; code < space; ++code) {
        MatFq m = MatFq::from_code(F, spec.n, code);
        if (m.det() != 0) fn(m);
    }
}

} // namespace glnq
