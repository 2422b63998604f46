// lr.hpp -- Littlewood-Richardson coefficients by direct enumeration of
// lattice-word skew tableaux. Cells of lambda/mu are filled in reading-word
// order (rows top to bottom, each row right to left), so the semistandard
// and lattice constraints only ever look at already-placed cells. Fine for
// the degrees this project needs (|lambda| up to ~12).

#pragma once

#include "glnq/partitions.hpp"

namespace glnq {

// Number of semistandard skew tableaux of shape lambda/mu with content nu
// whose reverse reading word is a lattice word.
inline long long lr_coefficient(const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
    if (partition_size(mu) + partition_size(nu) != partition_size(lambda)) return 0;
    if (mu.size() > lambda.size()) return 0;
    for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] > lambda[i]) return 0; // mu must fit inside lambda
    if (nu.empty()) return 1;            // then lambda = mu

    int rows = static_cast<int>(lambda.size());
    int colors = static_cast<int>(nu.size());
    auto mu_at = [&](int r) { return r < static_cast<int>(mu.size()) ? mu[r] : 0; };

    // Reading-word order: (row, col) with rows ascending, cols descending.
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = lambda[r] - 1; c >= mu_at(r); --c) cells.emplace_back(r, c);

    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(lambda[r], 0);
    std::vector<int> used(colors + 1, 0);

    long long count = 0;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        int right = c + 1 < lambda[r] ? grid[r][c + 1] : colors + 1; // placed earlier
        // The cell above (if any) is inside lambda since lambda is a
        // partition; it constrains us only when it is outside mu.
        int above = (r > 0 && c >= mu_at(r - 1)) ? grid[r - 1][c] : 0;
        for (int v = 1; v <= colors; ++v) {
            if (used[v] >= nu[v - 1]) continue;
            if (v > right) continue;                          // rows weakly increase
            if (v <= above) continue;                         // columns strictly increase
            if (v > 1 && used[v] + 1 > used[v - 1]) continue; // lattice prefix
            ++used[v];
            grid[r][c] = v;
            self(self, k + 1);
            grid[r][c] = 0;
            --used[v];
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace glnq
