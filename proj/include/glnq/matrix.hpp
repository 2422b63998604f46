// matrix.hpp -- square matrices over F_q, with a dense integer code used to
// index matrices in flat lookup tables during exhaustive passes.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "glnq/fqpoly.hpp"

namespace glnq {

struct MatFq {
    const FqField* F = nullptr;
    int n = 0;
    std::vector<int> a; // row-major element indices, size n*n

    MatFq() = default;
    MatFq(const FqField& field, int size) : F(&field), n(size), a(size * size, 0) {}

    static MatFq identity(const FqField& field, int size) {
        MatFq m(field, size);
        for (int i = 0; i < size; ++i) m.at(i, i) = 1;
        return m;
    }

    int& at(int i, int j) { return a[i * n + j]; }
    int at(int i, int j) const { return a[i * n + j]; }

    bool is_identity() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    friend bool operator==(const MatFq& x, const MatFq& y) {
        return x.n == y.n && x.F == y.F && x.a == y.a;
    }
    friend bool operator!=(const MatFq& x, const MatFq& y) { return !(x == y); }

    friend MatFq operator*(const MatFq& x, const MatFq& y) {
        if (x.n != y.n || x.F != y.F) throw std::domain_error("MatFq: size/field mismatch");
        const FqField& F = *x.F;
        MatFq r(F, x.n);
        for (int i = 0; i < x.n; ++i)
            for (int k = 0; k < x.n; ++k) {
                int v = x.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < x.n; ++j)
                    r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
            }
        return r;
    }

    int det() const {
        const FqField& Fd = *F;
        MatFq m = *this;
        int d = 1;
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (m.at(r, col) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            if (pivot != col) {
                for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
                d = Fd.neg(d);
            }
            d = Fd.mul(d, m.at(col, col));
            int pinv = Fd.inv(m.at(col, col));
            for (int r = col + 1; r < n; ++r) {
                int factor = Fd.mul(m.at(r, col), pinv);
                if (factor == 0) continue;
                for (int j = col; j < n; ++j)
                    m.at(r, j) = Fd.sub(m.at(r, j), Fd.mul(factor, m.at(col, j)));
            }
        }
        return d;
    }

    int rank() const {
        const FqField& Fd = *F;
        MatFq m = *this;
        int rk = 0;
        for (int col = 0; col < n && rk < n; ++col) {
            int pivot = -1;
            for (int r = rk; r < n; ++r)
                if (m.at(r, col) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            if (pivot != rk)
                for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(rk, j));
            int pinv = Fd.inv(m.at(rk, col));
            for (int r = rk + 1; r < n; ++r) {
                int factor = Fd.mul(m.at(r, col), pinv);
                if (factor == 0) continue;
                for (int j = col; j < n; ++j)
                    m.at(r, j) = Fd.sub(m.at(r, j), Fd.mul(factor, m.at(rk, j)));
            }
            ++rk;
        }
        return rk;
    }

    MatFq inverse() const {
        const FqField& Fd = *F;
        MatFq m = *this;
        MatFq inv = identity(Fd, n);
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int r = col; r < n; ++r)
                if (m.at(r, col) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) throw std::domain_error("MatFq: singular matrix");
            if (pivot != col)
                for (int j = 0; j < n; ++j) {
                    std::swap(m.at(pivot, j), m.at(col, j));
                    std::swap(inv.at(pivot, j), inv.at(col, j));
                }
            int pinv = Fd.inv(m.at(col, col));
            for (int j = 0; j < n; ++j) {
                m.at(col, j) = Fd.mul(pinv, m.at(col, j));
                inv.at(col, j) = Fd.mul(pinv, inv.at(col, j));
            }
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                int factor = m.at(r, col);
                if (factor == 0) continue;
                for (int j = 0; j < n; ++j) {
                    m.at(r, j) = Fd.sub(m.at(r, j), Fd.mul(factor, m.at(col, j)));
                    inv.at(r, j) = Fd.sub(inv.at(r, j), Fd.mul(factor, inv.at(col, j)));
                }
            }
        }
        return inv;
    }

    // Base-q code of the entry vector; fits u64 for every supported (n, q).
    std::uint64_t code() const {
        std::uint64_t c = 0;
        for (std::size_t k = a.size(); k-- > 0;) c = c * F->q() + a[k];
        return c;
    }
    static MatFq from_code(const FqField& field, int size, std::uint64_t code) {
        MatFq m(field, size);
        for (int k = 0; k < size * size; ++k) {
            m.a[k] = static_cast<int>(code % field.q());
            code /= field.q();
        }
        return m;
    }

    static MatFq block_diag(const MatFq& x, const MatFq& y) {
        if (x.F != y.F) throw std::domain_error("MatFq: mixed fields");
        MatFq r(*x.F, x.n + y.n);
        for (int i = 0; i < x.n; ++i)
            for (int j = 0; j < x.n; ++j) r.at(i, j) = x.at(i, j);
        for (int i = 0; i < y.n; ++i)
            for (int j = 0; j < y.n; ++j) r.at(x.n + i, x.n + j) = y.at(i, j);
        return r;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < n; ++i) {
            if (i) s += "; ";
            for (int j = 0; j < n; ++j) {
                if (j) s += " ";
                s += std::to_string(at(i, j));
            }
        }
        return s + "]";
    }
};

// det(xI - M) as a monic polynomial over F_q, by Laplace expansion along the
// first remaining column (n is at most 4 or 5 here, so this is cheap).
inline PolyFq characteristic_polynomial(const MatFq& m) {
    const FqField& F = *m.F;
    int n = m.n;
    if (n == 0) return {1};
    // entry(i, j) of xI - M
    auto entry = [&](int i, int j) -> PolyFq {
        if (i == j) {
            int c = F.neg(m.at(i, j));
            if (c == 0) return {0, 1};
            return {c, 1};
        }
        int c = F.neg(m.at(i, j));
        if (c == 0) return {};
        return {c};
    };
    std::vector<int> rows(n);
    for (int i = 0; i < n; ++i) rows[i] = i;
    auto rec = [&](auto&& self, std::vector<int>& rs, int col) -> PolyFq {
        if (rs.empty()) return {1};
        PolyFq acc;
        for (std::size_t k = 0; k < rs.size(); ++k) {
            PolyFq e = entry(rs[k], col);
            if (e.empty()) continue;
            std::vector<int> sub;
            sub.reserve(rs.size() - 1);
            for (std::size_t t = 0; t < rs.size(); ++t)
                if (t != k) sub.push_back(rs[t]);
            PolyFq minor = self(self, sub, col + 1);
            PolyFq term = poly_mul(F, e, minor);
            if (k % 2 == 1) term = poly_scale(F, F.neg(1), term);
            acc = poly_add(F, acc, term);
        }
        return acc;
    };
    return rec(rec, rows, 0);
}

// p(M) by Horner's rule.
inline MatFq evaluate_poly_at(const PolyFq& p, const MatFq& m) {
    const FqField& F = *m.F;
    MatFq acc(F, m.n);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * m;
        if (p[i] != 0)
            for (int d = 0; d < m.n; ++d) acc.at(d, d) = F.add(acc.at(d, d), p[i]);
    }
    return acc;
}

} // namespace glnq
