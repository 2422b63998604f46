// fqpoly.hpp -- univariate polynomials over F_q, as vectors of element
// indices (low degree first, no leading zeros; the zero polynomial is empty).

#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "glnq/fq.hpp"

namespace glnq {

using PolyFq = std::vector<int>;

inline int poly_degree(const PolyFq& a) { return static_cast<int>(a.size()) - 1; }

inline void poly_trim(PolyFq& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PolyFq poly_mul(const FqField& F, const PolyFq& a, const PolyFq& b) {
    if (a.empty() || b.empty()) return {};
    PolyFq c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    poly_trim(c);
    return c;
}

inline PolyFq poly_add(const FqField& F, const PolyFq& a, const PolyFq& b) {
    PolyFq c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        c[i] = F.add(x, y);
    }
    poly_trim(c);
    return c;
}

inline PolyFq poly_scale(const FqField& F, int s, const PolyFq& a) {
    PolyFq c = a;
    for (int& x : c) x = F.mul(s, x);
    poly_trim(c);
    return c;
}

// Remainder of a by b; b need not be monic.
inline PolyFq poly_mod(const FqField& F, PolyFq a, const PolyFq& b) {
    if (b.empty()) throw std::domain_error("poly_mod: division by zero polynomial");
    int lead_inv = F.inv(b.back());
    while (a.size() >= b.size()) {
        int coef = F.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = F.sub(a[shift + j], F.mul(coef, b[j]));
        poly_trim(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

inline void poly_divmod(const FqField& F, PolyFq a, const PolyFq& b, PolyFq& quot, PolyFq& rem) {
    if (b.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
    quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    int lead_inv = F.inv(b.back());
    while (a.size() >= b.size()) {
        int coef = F.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - b.size();
        quot[shift] = coef;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = F.sub(a[shift + j], F.mul(coef, b[j]));
        poly_trim(a);
        if (a.size() < b.size()) break;
    }
    poly_trim(quot);
    rem = std::move(a);
}

inline bool poly_divides(const FqField& F, const PolyFq& b, const PolyFq& a) {
    return poly_mod(F, a, b).empty();
}

inline PolyFq poly_pow(const FqField& F, PolyFq base, int e) {
    PolyFq r{1};
    while (e) {
        if (e & 1) r = poly_mul(F, r, base);
        base = poly_mul(F, base, base);
        e >>= 1;
    }
    return r;
}

// Canonical polynomial order: by degree, then coefficient vector from the
// constant term up. Used for class-label ordering throughout.
inline int poly_compare(const PolyFq& a, const PolyFq& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

inline std::string poly_to_string(const PolyFq& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s.empty() ? "0" : s;
}

// Monic irreducibles of each degree 1..max_deg over F_q, excluding none;
// cached per (field, degree). Irreducibility by trial division against all
// lower-degree irreducibles, scanning candidates in value order so the
// listing is canonical.
inline const std::vector<PolyFq>& monic_irreducibles(const FqField& F, int deg) {
    static std::map<std::pair<long long, int>, std::vector<PolyFq>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(F.q(), deg);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    for (int d = 1; d <= deg; ++d) {
        auto kd = std::make_pair(F.q(), d);
        if (cache.count(kd)) continue;
        std::vector<PolyFq> irr;
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= F.q();
        for (long long v = 0; v < count; ++v) {
            PolyFq cand(d + 1);
            long long t = v;
            for (int i = 0; i < d; ++i) {
                cand[i] = static_cast<int>(t % F.q());
                t /= F.q();
            }
            cand[d] = 1;
            bool reducible = false;
            for (int e = 1; 2 * e <= d && !reducible; ++e)
                for (const PolyFq& g : cache[std::make_pair(F.q(), e)])
                    if (poly_divides(F, g, cand)) {
                        reducible = true;
                        break;
                    }
            if (!reducible) irr.push_back(std::move(cand));
        }
        cache.emplace(kd, std::move(irr));
    }
    return cache[key];
}

} // namespace glnq
