// partitions.hpp -- integer partitions (weakly decreasing, no zero parts).

#pragma once

#include <string>
#include <vector>

namespace glnq {

using Partition = std::vector<int>;

inline int partition_size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

inline Partition conjugate_partition(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    c.resize(p[0], 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++c[j];
    return c;
}

// All partitions of n, in descending lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, rest - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline std::string partition_to_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

} // namespace glnq
