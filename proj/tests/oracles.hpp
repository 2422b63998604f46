// Independent counting oracles used by unit and acceptance tests. These are
// deliberately written from first principles, not through the library's own
// machinery, so they can catch systematic errors in it.

#pragma once

namespace oracles {

// Number of cuspidal irreducibles of GL_n(F_q): Frobenius orbits of size
// exactly n of characters of F_{q^n}^*, counted by direct orbit walking on
// Z/(q^n - 1).
inline long long cuspidal_count(int n, long long q) {
    long long modulus = 1;
    for (int i = 0; i < n; ++i) modulus *= q;
    modulus -= 1;
    long long in_full_orbits = 0;
    for (long long c = 0; c < modulus; ++c) {
        long long x = c, size = 0;
        do {
            x = (x * (q % modulus)) % modulus;
            ++size;
        } while (x != c);
        if (size == n) ++in_full_orbits;
    }
    return in_full_orbits / n;
}

} // namespace oracles
