// arith.hpp -- small number-theoretic helpers shared across the library.

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace glnq {

inline long long euler_phi(long long n) {
    long long result = n, m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline std::vector<long long> divisors(long long n) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline int moebius(long long n) {
    int mu = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

// q = p^f for an odd prime p, or throws.
inline void factor_prime_power(long long q, long long& p, int& f) {
    if (q < 3) throw std::invalid_argument("q must be an odd prime power >= 3");
    for (long long c = 2; c * c <= q; ++c) {
        if (q % c == 0) {
            p = c;
            f = 0;
            long long m = q;
            while (m % c == 0) {
                m /= c;
                ++f;
            }
            if (m != 1) throw std::invalid_argument("q is not a prime power");
            if (p == 2) throw std::invalid_argument("even characteristic is not supported");
            return;
        }
    }
    p = q;
    f = 1;
}

// Arithmetic in F_ell for a word-sized prime ell.
struct PrimeField {
    std::uint64_t ell;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= ell ? s - ell : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + ell - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % ell);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % ell;
        a %= ell;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a % ell == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, ell - 2);
    }
};

// Least generator of F_ell^*; deterministic, so downstream output is reproducible.
inline std::uint64_t primitive_root(std::uint64_t ell) {
    PrimeField F{ell};
    std::uint64_t order = ell - 1;
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t m = order;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            prime_factors.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    for (std::uint64_t g = 2; g < ell; ++g) {
        bool ok = true;
        for (std::uint64_t p : prime_factors)
            if (F.pow(g, order / p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: no generator found");
}

} // namespace glnq
