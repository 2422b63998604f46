// cyclotomic.hpp -- exact arithmetic in cyclotomic fields Q(zeta_e).
//
// A value of order e is stored by its coordinates in the power basis
// 1, zeta, ..., zeta^{phi(e)-1}, always reduced mod the e-th cyclotomic
// polynomial. Values of different orders are compared and combined by
// embedding into the lcm order. Complex conjugation sends zeta to
// zeta^{-1}; a character is self-dual exactly when every value is fixed
// by it.

#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "glnq/arith.hpp"
#include "glnq/rational.hpp"

namespace glnq {

namespace detail {

// Monic integer coefficients of Phi_e, low degree first. x^e - 1 = prod_{d|e} Phi_d.
inline const std::vector<BigInt>& cyclotomic_polynomial(long long e) {
    static std::map<long long, std::vector<BigInt>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;

    // x^e - 1, then exact division by Phi_d for every proper divisor d.
    std::vector<BigInt> poly(e + 1, BigInt(0));
    poly[0] = BigInt(-1);
    poly[e] = BigInt(1);
    for (long long d : divisors(e)) {
        if (d == e) continue;
        auto jt = cache.find(d);
        if (jt == cache.end())
            throw std::logic_error("cyclotomic_polynomial: divisor not yet cached");
        const std::vector<BigInt>& phi_d = jt->second;
        std::vector<BigInt> q(poly.size() - phi_d.size() + 1, BigInt(0));
        std::vector<BigInt> rem = poly;
        for (std::size_t i = q.size(); i-- > 0;) {
            BigInt c = rem[i + phi_d.size() - 1];
            q[i] = c;
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < phi_d.size(); ++j)
                rem[i + j] -= c * phi_d[j];
        }
        for (const BigInt& c : rem)
            if (!c.is_zero()) throw std::logic_error("cyclotomic_polynomial: non-exact division");
        poly = std::move(q);
    }
    auto [pos, inserted] = cache.emplace(e, std::move(poly));
    (void)inserted;
    return pos->second;
}

// Seeds the cache bottom-up so the recursion above always finds its divisors.
inline const std::vector<BigInt>& cyclotomic_polynomial_checked(long long e) {
    for (long long d : divisors(e)) cyclotomic_polynomial(d);
    return cyclotomic_polynomial(e);
}

} // namespace detail

class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1) {}
    Cyclotomic(const Rational& r) : order_(1), coeffs_{r} {}
    Cyclotomic(long long n) : order_(1), coeffs_{Rational(n)} {}

    // zeta_e^t
    static Cyclotomic root_of_unity(long long e, long long t) {
        t %= e;
        if (t < 0) t += e;
        std::vector<Rational> poly(t + 1);
        poly[t] = Rational(1);
        return Cyclotomic(e, reduce_mod_phi(std::move(poly), e));
    }

    static Cyclotomic zero_of_order(long long e) {
        return Cyclotomic(e, std::vector<Rational>(euler_phi(e)));
    }

    // Raw constructor from power-basis coordinates of any length; reduces.
    static Cyclotomic from_coeffs(long long e, std::vector<Rational> poly) {
        return Cyclotomic(e, reduce_mod_phi(std::move(poly), e));
    }

    long long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const Rational& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return false;
        return true;
    }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("Cyclotomic: value is irrational");
        return coeffs_[0];
    }

    Cyclotomic embedded(long long m) const {
        if (m == order_) return *this;
        if (m % order_ != 0) throw std::invalid_argument("Cyclotomic: order does not divide target");
        long long step = m / order_;
        std::vector<Rational> poly(static_cast<std::size_t>((coeffs_.size() - 1) * step + 1));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
        return Cyclotomic(m, reduce_mod_phi(std::move(poly), m));
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        long long m = lcm_ll(a.order_, b.order_);
        Cyclotomic x = a.embedded(m), y = b.embedded(m);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        return x;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        long long m = lcm_ll(a.order_, b.order_);
        Cyclotomic x = a.embedded(m), y = b.embedded(m);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
        return x;
    }
    friend Cyclotomic operator-(const Cyclotomic& a) {
        Cyclotomic x = a;
        for (Rational& c : x.coeffs_) c = -c;
        return x;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        long long m = lcm_ll(a.order_, b.order_);
        Cyclotomic x = a.embedded(m), y = b.embedded(m);
        std::vector<Rational> conv(x.coeffs_.size() + y.coeffs_.size() - 1);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
                if (y.coeffs_[j].is_zero()) continue;
                conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
            }
        }
        return Cyclotomic(m, reduce_mod_phi(std::move(conv), m));
    }
    friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a) {
        Cyclotomic x = a;
        for (Rational& c : x.coeffs_) c *= s;
        return x;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    // zeta^i -> zeta^{-i}
    Cyclotomic conj() const {
        std::vector<Rational> poly(order_ > 1 ? order_ : 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero()) continue;
            std::size_t j = i == 0 ? 0 : static_cast<std::size_t>(order_ - i);
            poly[j] += coeffs_[i];
        }
        return Cyclotomic(order_, reduce_mod_phi(std::move(poly), order_));
    }

    bool is_real() const { return *this == conj(); }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        long long m = lcm_ll(a.order_, b.order_);
        return a.embedded(m).coeffs_ == b.embedded(m).coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Total order used for canonical sorting: compare coordinates at a common order.
    static int compare(const Cyclotomic& a, const Cyclotomic& b, long long ambient) {
        Cyclotomic x = a.embedded(ambient), y = b.embedded(ambient);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] != y.coeffs_[i]) return x.coeffs_[i] < y.coeffs_[i] ? -1 : 1;
        }
        return 0;
    }

    // "(order; c0 c1 ...)" with rationals as num/den decimal strings.
    std::string to_string() const {
        std::string s = "(" + std::to_string(order_) + ";";
        for (const Rational& c : coeffs_) s += " " + c.to_string();
        s += ")";
        return s;
    }

private:
    long long order_;
    std::vector<Rational> coeffs_;

    Cyclotomic(long long order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    static std::vector<Rational> reduce_mod_phi(std::vector<Rational> poly, long long e) {
        const std::vector<BigInt>& phi = detail::cyclotomic_polynomial_checked(e);
        std::size_t deg_phi = phi.size() - 1;
        if (poly.size() < deg_phi) poly.resize(deg_phi);
        for (std::size_t i = poly.size(); i-- > deg_phi;) {
            if (poly[i].is_zero()) continue;
            Rational c = poly[i];
            for (std::size_t j = 0; j < phi.size(); ++j)
                poly[i - deg_phi + j] -= c * Rational(phi[j]);
        }
        poly.resize(deg_phi);
        return poly;
    }
};

} // namespace glnq
