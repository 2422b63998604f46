// budget.hpp -- explicit resource limits. Exceeding a budget raises
// BudgetError; nothing is ever silently truncated.

#pragma once

#include "glnq/errors.hpp"
#include "glnq/group.hpp"

namespace glnq {

struct Budget {
    long long max_group_order = 34'000'000; // covers n <= 3 with q <= 7
    bool stretch = false;                   // permits rank 4, i.e. GL_4(F_3)
    long long max_unipotent = 2'000'000;    // enumeration bound for U(T)
    long long max_ell = 100'000'000;        // search bound for the splitting prime
    int threads = 1;

    void check_group(const GroupSpec& spec) const {
        BigInt order = group_order(spec);
        if (order > BigInt(max_group_order))
            throw BudgetError("group order " + order.to_string() + " exceeds budget " +
                              std::to_string(max_group_order));
        if (spec.n > 3 && !stretch)
            throw BudgetError("rank " + std::to_string(spec.n) +
                              " requires the stretch flag");
        if (matrix_code_space(spec) == 0)
            throw BudgetError("matrix code space exceeds 64 bits");
    }

    void check_unipotent(long long count) const {
        if (count > max_unipotent)
            throw BudgetError("unipotent group of size " + std::to_string(count) +
                              " exceeds budget " + std::to_string(max_unipotent));
    }
};

} // namespace glnq
