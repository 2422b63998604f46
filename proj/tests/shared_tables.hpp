// Shared per-process table cache so test files do not rebuild GL_n(F_q)
// character tables over and over.

#pragma once

#include <map>
#include <memory>

#include "glnq/dixon.hpp"

inline const glnq::CharacterTable& cached_table(int n, long long q) {
    static std::map<std::pair<int, long long>, std::unique_ptr<glnq::CharacterTable>> cache;
    auto key = std::make_pair(n, q);
    auto it = cache.find(key);
    if (it == cache.end()) {
        glnq::Budget budget;
        budget.threads = 2;
        auto ctx = std::make_shared<glnq::GroupContext>(glnq::GroupSpec{n, q});
        it = cache.emplace(key, std::make_unique<glnq::CharacterTable>(
                                    glnq::build_character_table(ctx, budget)))
                 .first;
    }
    return *it->second;
}
