// dixon.hpp -- character table construction through the class algebra.
//
// The class sums span the center of the group algebra; their structure
// constants are integers, so the common eigenvectors can be found over a
// prime field F_ell with ell = 1 (mod exponent) and ell > 2 sqrt(|G|).
// Splitting the class-function space by the class operators in canonical
// class order yields one eigenvector per irreducible; degrees are recovered
// from the orthogonality relation mod ell and character values are lifted
// exactly as eigenvalue multiplicities, i.e. non-negative integer
// combinations of roots of unity.

#pragma once

#include <algorithm>
#include <memory>

#include "glnq/budget.hpp"
#include "glnq/chartable.hpp"
#include "glnq/parallel.hpp"

namespace glnq {

namespace detail {

using ModRow = std::vector<std::uint64_t>;
using ModMatrix = std::vector<ModRow>;

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(const PrimeField& F, ModMatrix& m) {
    std::vector<int> pivots;
    std::size_t rows = m.size();
    if (rows == 0) return pivots;
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        std::uint64_t inv = F.inv(m[r][c]);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            std::uint64_t factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(factor, m[r][j]));
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

// Nullspace basis of a square matrix, rows in RREF-canonical order.
inline ModMatrix nullspace(const PrimeField& F, ModMatrix m) {
    std::size_t d = m.size();
    std::vector<int> pivots = rref(F, m);
    std::vector<bool> is_pivot(d, false);
    for (int c : pivots) is_pivot[c] = true;
    ModMatrix basis;
    for (std::size_t free_col = 0; free_col < d; ++free_col) {
        if (is_pivot[free_col]) continue;
        ModRow v(d, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F.sub(0, m[r][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Characteristic polynomial via Hessenberg form; coefficients low first.
inline ModRow hessenberg_charpoly(const PrimeField& F, ModMatrix h) {
    std::size_t d = h.size();
    for (std::size_t c = 0; c + 2 < d + 1 && c + 1 < d; ++c) {
        std::size_t pivot = d;
        for (std::size_t r = c + 1; r < d; ++r)
            if (h[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot == d) continue;
        if (pivot != c + 1) {
            std::swap(h[pivot], h[c + 1]);
            for (std::size_t r = 0; r < d; ++r) std::swap(h[r][pivot], h[r][c + 1]);
        }
        std::uint64_t inv = F.inv(h[c + 1][c]);
        for (std::size_t r = c + 2; r < d; ++r) {
            if (h[r][c] == 0) continue;
            std::uint64_t factor = F.mul(h[r][c], inv);
            for (std::size_t j = 0; j < d; ++j) h[r][j] = F.sub(h[r][j], F.mul(factor, h[c + 1][j]));
            for (std::size_t i = 0; i < d; ++i) h[i][c + 1] = F.add(h[i][c + 1], F.mul(factor, h[i][r]));
        }
    }
    // p_m = (x - h_mm) p_{m-1} - sum_i h_im (prod_{j=i..m-2} h_{j+1,j}) p_{i-1}
    std::vector<ModRow> p(d + 1);
    p[0] = {1};
    for (std::size_t m = 1; m <= d; ++m) {
        ModRow cur(m + 1, 0);
        for (std::size_t t = 0; t < m; ++t) {
            cur[t + 1] = F.add(cur[t + 1], p[m - 1][t]);
            cur[t] = F.sub(cur[t], F.mul(h[m - 1][m - 1], p[m - 1][t]));
        }
        std::uint64_t subprod = 1;
        for (std::size_t i = m - 1; i-- > 0;) {
            subprod = F.mul(subprod, h[i + 1][i]);
            std::uint64_t coef = F.mul(h[i][m - 1], subprod);
            if (coef == 0) continue;
            for (std::size_t t = 0; t < p[i].size(); ++t)
                cur[t] = F.sub(cur[t], F.mul(coef, p[i][t]));
        }
        p[m] = std::move(cur);
    }
    return p[d];
}

inline std::uint64_t eval_poly(const PrimeField& F, const ModRow& p, std::uint64_t x) {
    std::uint64_t acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = F.add(F.mul(acc, x), p[i]);
    return acc;
}

} // namespace detail

// Smallest prime ell = 1 (mod e), ell > 2 sqrt(|G|), ell not dividing |G|.
inline long long splitting_prime(long long exponent, long long order_ll, long long max_ell) {
    long long lower = 1;
    while (lower * lower <= 4 * order_ll) ++lower; // lower = floor(2 sqrt(|G|)) + 1
    for (long long ell = exponent + 1;; ell += exponent) {
        if (ell > max_ell)
            throw ConfigError("no splitting prime = 1 mod " + std::to_string(exponent) +
                              " below " + std::to_string(max_ell));
        if (ell < lower || !is_prime(ell)) continue;
        if (order_ll % ell == 0) continue;
        return ell;
    }
}

inline CharacterTable build_character_table(std::shared_ptr<GroupContext> ctx,
                                            const Budget& budget) {
    GroupContext& G = *ctx;
    budget.check_group(G.spec());

    const std::size_t k = G.classes().size();
    if (k == 1) {
        // Only GL_0; one trivial character.
        IrreducibleCharacter triv{{Cyclotomic(1)}, 1};
        return CharacterTable(std::move(ctx), 1, {triv});
    }

    G.build_class_table(budget.threads);
    const long long order = G.order_ll();

    // Element orders, the exponent, and class power maps.
    std::vector<long long> class_order(k);
    std::vector<std::vector<int>> power_class(k);
    long long exponent = 1;
    for (std::size_t j = 0; j < k; ++j) {
        const MatFq& rep = G.classes()[j].representative;
        MatFq acc = MatFq::identity(G.field(), G.spec().n);
        long long o = 0;
        do {
            power_class[j].push_back(G.class_index(acc));
            acc = acc * rep;
            ++o;
            if (o > 1'000'000) throw std::logic_error("element order runaway");
        } while (!acc.is_identity());
        class_order[j] = o;
        exponent = lcm_ll(exponent, o);
    }

    const long long ell = splitting_prime(exponent, order, budget.max_ell);
    const PrimeField F{static_cast<std::uint64_t>(ell)};

    std::vector<int> inverse_class(k);
    for (std::size_t j = 0; j < k; ++j)
        inverse_class[j] = G.classes()[j].representative.is_identity()
                               ? static_cast<int>(j)
                               : G.class_index(G.classes()[j].representative.inverse());

    std::vector<std::uint64_t> size_mod(k), size_inv(k);
    for (std::size_t j = 0; j < k; ++j) {
        size_mod[j] = static_cast<std::uint64_t>(G.classes()[j].size.to_int64() % ell);
        size_inv[j] = F.inv(size_mod[j]);
    }

    // M_i[j][t] = #{ x in C_i : x^{-1} z_t in C_j } mod ell, computed on demand.
    std::vector<MatFq> reps;
    reps.reserve(k);
    for (const ClassData& c : G.classes()) reps.push_back(c.representative);
    auto struct_matrix = [&](std::size_t i) {
        std::uint64_t space = matrix_code_space(G.spec());
        std::size_t blocks = parallel_block_count(space);
        std::vector<std::vector<std::uint32_t>> counts(
            blocks, std::vector<std::uint32_t>(k * k, 0));
        parallel_blocks(space, budget.threads, [&](std::size_t lo, std::size_t hi, std::size_t b) {
            auto& local = counts[b];
            for (std::size_t code = lo; code < hi; ++code) {
                if (G.class_index_of_code(code) != static_cast<int>(i)) continue;
                MatFq x = MatFq::from_code(G.field(), G.spec().n, code);
                MatFq xinv = x.inverse();
                for (std::size_t t = 0; t < k; ++t) {
                    int j = G.class_index(xinv * reps[t]);
                    ++local[j * k + t];
                }
            }
        });
        detail::ModMatrix m(k, detail::ModRow(k, 0));
        for (const auto& local : counts)
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t t = 0; t < k; ++t)
                    m[j][t] = F.add(m[j][t], local[j * k + t] % ell);
        return m;
    };

    // Split the class-function space by class operators in canonical order.
    std::vector<detail::ModMatrix> spaces;
    {
        detail::ModMatrix full(k, detail::ModRow(k, 0));
        for (std::size_t j = 0; j < k; ++j) full[j][j] = 1;
        spaces.push_back(std::move(full));
    }
    for (std::size_t i = 0; i < k; ++i) {
        bool all_split = true;
        for (const auto& s : spaces)
            if (s.size() > 1) all_split = false;
        if (all_split) break;

        detail::ModMatrix M = struct_matrix(i);
        std::vector<detail::ModMatrix> next;
        for (auto& S : spaces) {
            std::size_t d = S.size();
            if (d == 1) {
                next.push_back(std::move(S));
                continue;
            }
            // Pivot columns of the RREF basis give coordinates directly.
            detail::ModMatrix basis = S;
            std::vector<int> pivots = detail::rref(F, basis);
            detail::ModMatrix R(d, detail::ModRow(d, 0)); // R[s][t]: image of b_s
            for (std::size_t s = 0; s < d; ++s) {
                detail::ModRow image(k, 0);
                for (std::size_t j = 0; j < k; ++j) {
                    std::uint64_t acc = 0;
                    for (std::size_t t = 0; t < k; ++t)
                        if (basis[s][t]) acc = F.add(acc, F.mul(M[j][t], basis[s][t]));
                    image[j] = acc;
                }
                for (std::size_t t = 0; t < d; ++t) {
                    std::uint64_t coef = image[pivots[t]];
                    R[s][t] = coef;
                    if (coef == 0) continue;
                    for (std::size_t j = 0; j < k; ++j)
                        image[j] = F.sub(image[j], F.mul(coef, basis[t][j]));
                }
                for (std::size_t j = 0; j < k; ++j)
                    if (image[j] != 0)
                        throw std::logic_error("dixon: subspace not invariant under class operator");
            }
            detail::ModMatrix RT(d, detail::ModRow(d, 0));
            for (std::size_t s = 0; s < d; ++s)
                for (std::size_t t = 0; t < d; ++t) RT[t][s] = R[s][t];

            detail::ModRow charpoly = detail::hessenberg_charpoly(F, RT);
            std::size_t found = 0;
            for (std::uint64_t lambda = 0; lambda < static_cast<std::uint64_t>(ell); ++lambda) {
                if (detail::eval_poly(F, charpoly, lambda) != 0) continue;
                detail::ModMatrix shifted = RT;
                for (std::size_t s = 0; s < d; ++s) shifted[s][s] = F.sub(shifted[s][s], lambda);
                detail::ModMatrix kernel = detail::nullspace(F, shifted);
                if (kernel.empty()) continue;
                detail::ModMatrix child;
                for (const auto& u : kernel) {
                    detail::ModRow w(k, 0);
                    for (std::size_t s = 0; s < d; ++s) {
                        if (u[s] == 0) continue;
                        for (std::size_t j = 0; j < k; ++j)
                            w[j] = F.add(w[j], F.mul(u[s], basis[s][j]));
                    }
                    child.push_back(std::move(w));
                }
                detail::rref(F, child);
                found += child.size();
                next.push_back(std::move(child));
            }
            if (found != d) throw std::logic_error("dixon: eigenvalues did not split over F_ell");
        }
        spaces = std::move(next);
    }
    if (spaces.size() != k) throw std::logic_error("dixon: wrong number of eigenspaces");

    // Each 1-dim space, normalized at the identity class, is the vector of
    // class-algebra eigenvalues omega(C_j) = |C_j| chi(g_j) / chi(1) mod ell.
    const int id = G.identity_class();
    std::vector<detail::ModRow> omegas;
    omegas.reserve(k);
    for (const auto& S : spaces) {
        if (S.size() != 1) throw std::logic_error("dixon: eigenspace not one-dimensional");
        detail::ModRow w = S[0];
        if (w[id] == 0) throw std::logic_error("dixon: eigenvector vanishes at the identity class");
        std::uint64_t norm = F.inv(w[id]);
        for (auto& x : w) x = F.mul(x, norm);
        omegas.push_back(std::move(w));
    }

    // Degrees from first orthogonality mod ell; d is the unique square root
    // below ell/2, found by scanning d <= sqrt(|G|).
    long long sqrt_order = 1;
    while ((sqrt_order + 1) * (sqrt_order + 1) <= order) ++sqrt_order;

    const std::uint64_t z =
        F.pow(primitive_root(F.ell), static_cast<std::uint64_t>((ell - 1) / exponent));

    std::vector<IrreducibleCharacter> chars;
    chars.reserve(k);
    for (const detail::ModRow& omega : omegas) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < k; ++j)
            s = F.add(s, F.mul(F.mul(omega[j], omega[inverse_class[j]]), size_inv[j]));
        std::uint64_t dd = F.mul(static_cast<std::uint64_t>(order % ell), F.inv(s));
        long long degree = 0;
        for (long long d = 1; d <= sqrt_order; ++d)
            if (F.mul(d, d) == dd) {
                degree = d;
                break;
            }
        if (degree == 0) throw std::logic_error("dixon: no integer degree matches");

        std::vector<std::uint64_t> chi_mod(k);
        for (std::size_t j = 0; j < k; ++j)
            chi_mod[j] = F.mul(F.mul(static_cast<std::uint64_t>(degree), omega[j]), size_inv[j]);

        IrreducibleCharacter chi;
        chi.degree = degree;
        chi.values.reserve(k);
        for (std::size_t j = 0; j < k; ++j) {
            long long o = class_order[j];
            std::uint64_t zeta_o = F.pow(z, static_cast<std::uint64_t>(exponent / o));
            std::uint64_t inv_o = F.inv(static_cast<std::uint64_t>(o % ell));
            std::vector<Rational> coeffs(o);
            long long total = 0;
            for (long long t = 0; t < o; ++t) {
                std::uint64_t acc = 0;
                for (long long sdx = 0; sdx < o; ++sdx) {
                    long long expo = ((o - t) * sdx) % o; // zeta^{-t s}
                    acc = F.add(acc, F.mul(chi_mod[power_class[j][sdx]],
                                           F.pow(zeta_o, static_cast<std::uint64_t>(expo))));
                }
                std::uint64_t count = F.mul(inv_o, acc);
                if (count > static_cast<std::uint64_t>(degree))
                    throw std::logic_error("dixon: eigenvalue multiplicity out of range");
                coeffs[t] = Rational(static_cast<long long>(count));
                total += static_cast<long long>(count);
            }
            if (total != degree)
                throw std::logic_error("dixon: multiplicities do not sum to the degree");
            chi.values.push_back(Cyclotomic::from_coeffs(o, std::move(coeffs)));
        }
        chars.push_back(std::move(chi));
    }

    // Canonical row order: by degree, then values lexicographically.
    std::sort(chars.begin(), chars.end(),
              [&](const IrreducibleCharacter& a, const IrreducibleCharacter& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  for (std::size_t c = 0; c < k; ++c) {
                      int cmp = Cyclotomic::compare(a.values[c], b.values[c], exponent);
                      if (cmp != 0) return cmp < 0;
                  }
                  return false;
              });

    CharacterTable table(std::move(ctx), exponent, std::move(chars));
    validate_table(table);
    return table;
}

} // namespace glnq
