// fq.hpp -- finite fields F_q for odd prime powers q, with table-driven
// element arithmetic.
//
// Elements are indexed 0..q-1 by the base-p value of their coefficient
// vector over F_p, so index 0 is zero and index 1 is one. For extension
// fields the modulus is the least monic irreducible of degree f in that
// same base-p value order, which keeps every run reproducible.

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "glnq/arith.hpp"

namespace glnq {

class FqField {
public:
    static const FqField& get(long long q) {
        static std::map<long long, std::unique_ptr<FqField>> registry;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto it = registry.find(q);
        if (it == registry.end())
            it = registry.emplace(q, std::unique_ptr<FqField>(new FqField(q))).first;
        return *it->second;
    }

    long long p() const { return p_; }
    int f() const { return f_; }
    long long q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    int zero() const { return 0; }
    int one() const { return 1; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const {
        if (a == 0) throw std::domain_error("FqField: inverse of zero");
        return inv_[a];
    }
    int pow(int a, long long e) const {
        if (e < 0) return pow(inv(a), -e);
        int r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // Coefficients over F_p, low power of the generator first; length f.
    std::vector<int> coeffs(int a) const {
        std::vector<int> c(f_);
        for (int i = 0; i < f_; ++i) {
            c[i] = a % static_cast<int>(p_);
            a /= static_cast<int>(p_);
        }
        return c;
    }
    int from_coeffs(const std::vector<int>& c) const {
        long long v = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            int r = ((c[i] % p_) + p_) % p_;
            v = v * p_ + r;
        }
        return static_cast<int>(v);
    }
    // Image of an integer under Z -> F_p -> F_q.
    int from_int(long long v) const { return static_cast<int>(((v % p_) + p_) % p_); }

    // Tr_{F_q/F_p}(a) as a residue in [0, p).
    int trace(int a) const { return trace_[a]; }

private:
    long long p_, q_;
    int f_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_, trace_;

    explicit FqField(long long q) : q_(q) {
        factor_prime_power(q, p_, f_);
        if (q > 4096) throw std::invalid_argument("FqField: q too large for table arithmetic");
        modulus_ = least_irreducible_modulus();
        build_tables();
    }

    std::vector<int> poly_of(int a) const {
        std::vector<int> c(f_);
        for (int i = 0; i < f_; ++i) {
            c[i] = a % static_cast<int>(p_);
            a /= static_cast<int>(p_);
        }
        return c;
    }

    // Multiplication of coefficient vectors mod (modulus, p).
    std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> c(2 * f_ - 1, 0);
        for (int i = 0; i < f_; ++i)
            for (int j = 0; j < f_; ++j)
                c[i + j] = static_cast<int>((c[i + j] + static_cast<long long>(a[i]) * b[j]) % p_);
        for (int d = 2 * f_ - 2; d >= f_; --d) {
            int coef = c[d];
            if (coef == 0) continue;
            c[d] = 0;
            for (int j = 0; j < f_; ++j) {
                long long t = c[d - f_ + j] - static_cast<long long>(coef) * modulus_[j];
                c[d - f_ + j] = static_cast<int>(((t % p_) + p_) % p_);
            }
        }
        c.resize(f_);
        return c;
    }

    int index_of(const std::vector<int>& c) const {
        long long v = 0;
        for (int i = f_ - 1; i >= 0; --i) v = v * p_ + c[i];
        return static_cast<int>(v);
    }

    std::vector<int> least_irreducible_modulus() const {
        if (f_ == 1) return {0, 1}; // the polynomial t
        // Scan monic degree-f polynomials in base-p value order of their
        // lower coefficients; irreducible iff no monic factor of degree <= f/2.
        std::vector<std::vector<int>> low_divisors; // monic, degree 1..f/2
        for (int d = 1; 2 * d <= f_; ++d) {
            long long count = 1;
            for (int i = 0; i < d; ++i) count *= p_;
            for (long long v = 0; v < count; ++v) {
                std::vector<int> g(d + 1);
                long long t = v;
                for (int i = 0; i < d; ++i) {
                    g[i] = static_cast<int>(t % p_);
                    t /= p_;
                }
                g[d] = 1;
                low_divisors.push_back(std::move(g));
            }
        }
        long long count = 1;
        for (int i = 0; i < f_; ++i) count *= p_;
        for (long long v = 0; v < count; ++v) {
            std::vector<int> cand(f_ + 1);
            long long t = v;
            for (int i = 0; i < f_; ++i) {
                cand[i] = static_cast<int>(t % p_);
                t /= p_;
            }
            cand[f_] = 1;
            bool reducible = false;
            for (const auto& g : low_divisors) {
                if (poly_divides(g, cand)) {
                    reducible = true;
                    break;
                }
            }
            if (!reducible) return cand;
        }
        throw std::logic_error("FqField: no irreducible modulus found");
    }

    // Does monic g divide h over F_p?
    bool poly_divides(const std::vector<int>& g, const std::vector<int>& h) const {
        std::vector<int> r = h;
        int dg = static_cast<int>(g.size()) - 1;
        for (int d = static_cast<int>(r.size()) - 1; d >= dg; --d) {
            int coef = r[d];
            if (coef == 0) continue;
            for (int j = 0; j <= dg; ++j) {
                long long t = r[d - dg + j] - static_cast<long long>(coef) * g[j];
                r[d - dg + j] = static_cast<int>(((t % p_) + p_) % p_);
            }
        }
        for (int j = 0; j < dg; ++j)
            if (r[j] != 0) return false;
        return true;
    }

    void build_tables() {
        int q = static_cast<int>(q_);
        add_.resize(q * q);
        mul_.resize(q * q);
        neg_.resize(q);
        inv_.assign(q, 0);
        trace_.resize(q);
        for (int a = 0; a < q; ++a) {
            std::vector<int> pa = poly_of(a);
            std::vector<int> na(f_);
            for (int i = 0; i < f_; ++i) na[i] = static_cast<int>((p_ - pa[i]) % p_);
            neg_[a] = index_of(na);
            for (int b = 0; b < q; ++b) {
                std::vector<int> pb = poly_of(b);
                std::vector<int> s(f_);
                for (int i = 0; i < f_; ++i) s[i] = static_cast<int>((pa[i] + pb[i]) % p_);
                add_[a * q + b] = index_of(s);
                mul_[a * q + b] = index_of(poly_mul_mod(pa, pb));
            }
        }
        for (int a = 1; a < q; ++a) {
            if (inv_[a]) continue;
            for (int b = 1; b < q; ++b)
                if (mul_[a * q + b] == 1) {
                    inv_[a] = b;
                    inv_[b] = a;
                    break;
                }
            if (!inv_[a]) throw std::logic_error("FqField: modulus is not irreducible");
        }
        for (int a = 0; a < q; ++a) {
            // Tr(a) = sum of a^(p^i), always in the prime subfield.
            int s = 0, x = a;
            for (int i = 0; i < f_; ++i) {
                s = add(s, x);
                x = pow(x, p_);
            }
            if (s >= p_) throw std::logic_error("FqField: trace left the prime subfield");
            trace_[a] = s;
        }
    }
};

// A field element carrying its field, for callers that want value semantics.
struct FieldElement {
    const FqField* field = nullptr;
    int idx = 0;

    FieldElement() = default;
    FieldElement(const FqField& F, int i) : field(&F), idx(i) {}

    std::vector<int> coeffs() const { return field->coeffs(idx); }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        require_same(a, b);
        return {*a.field, a.field->add(a.idx, b.idx)};
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        require_same(a, b);
        return {*a.field, a.field->sub(a.idx, b.idx)};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        require_same(a, b);
        return {*a.field, a.field->mul(a.idx, b.idx)};
    }
    friend FieldElement operator-(FieldElement a) { return {*a.field, a.field->neg(a.idx)}; }
    FieldElement inverse() const { return {*field, field->inv(idx)}; }

    friend bool operator==(FieldElement a, FieldElement b) {
        return a.field == b.field && a.idx == b.idx;
    }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

private:
    static void require_same(const FieldElement& a, const FieldElement& b) {
        if (a.field != b.field) throw std::domain_error("FieldElement: mixed fields");
    }
};

} // namespace glnq
