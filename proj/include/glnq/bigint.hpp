// bigint.hpp -- arbitrary-precision signed integers.
//
// Values that fit in a machine word stay on a fast inline path; anything
// larger spills into a base-2^32 limb vector. Character-table arithmetic
// must never wrap silently, so every small-path operation checks for
// overflow and promotes.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace glnq {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) : small_(v) {}
    BigInt(int v) : small_(v) {}
    BigInt(unsigned long long v) {
        if (v <= static_cast<unsigned long long>(kSmallMax)) {
            small_ = static_cast<long long>(v);
        } else {
            sign_ = 1;
            limbs_ = {static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v >> 32)};
            trim();
        }
    }

    static BigInt from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("BigInt: empty string");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
        BigInt r;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            r = r * BigInt(10) + BigInt(c - '0');
        }
        return neg ? -r : r;
    }

    bool is_small() const { return limbs_.empty(); }
    bool is_zero() const { return is_small() && small_ == 0; }
    bool is_one() const { return is_small() && small_ == 1; }
    int sign() const {
        if (!is_small()) return sign_;
        return small_ > 0 ? 1 : small_ < 0 ? -1 : 0;
    }

    // Throws when the value does not fit in long long.
    long long to_int64() const {
        if (!is_small()) throw std::overflow_error("BigInt: value exceeds 64 bits");
        return small_;
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        if (r.is_small())
            r.small_ = -r.small_;
        else
            r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.is_small() && b.is_small()) {
            long long s;
            if (!__builtin_add_overflow(a.small_, b.small_, &s) && std::llabs(s) <= kSmallMax)
                return BigInt(s);
        }
        return add_big(a, b, false);
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        if (a.is_small() && b.is_small()) {
            long long s;
            if (!__builtin_sub_overflow(a.small_, b.small_, &s) && std::llabs(s) <= kSmallMax)
                return BigInt(s);
        }
        return add_big(a, b, true);
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_small() && b.is_small()) {
            __int128 p = static_cast<__int128>(a.small_) * b.small_;
            if (p <= kSmallMax && p >= -static_cast<__int128>(kSmallMax))
                return BigInt(static_cast<long long>(p));
        }
        Magnitude m = mul_mag(a.magnitude(), b.magnitude());
        return from_mag(std::move(m), a.sign() * b.sign());
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated quotient and remainder (remainder has the dividend's sign).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        if (a.is_small() && b.is_small()) {
            q = BigInt(a.small_ / b.small_);
            r = BigInt(a.small_ % b.small_);
            return;
        }
        Magnitude qm, rm;
        divmod_mag(a.magnitude(), b.magnitude(), qm, rm);
        q = from_mag(std::move(qm), a.sign() * b.sign());
        r = from_mag(std::move(rm), a.sign());
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt x = a.abs(), y = b.abs();
        while (!y.is_zero()) {
            BigInt q, r;
            divmod(x, y, q, r);
            x = std::move(y);
            y = std::move(r);
        }
        return x;
    }

    BigInt abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    std::string to_string() const {
        if (is_small()) return std::to_string(small_);
        std::string out;
        Magnitude m = limbs_;
        while (!(m.size() == 1 && m[0] == 0)) {
            std::uint32_t rem = div_small_inplace(m, 1000000000u);
            std::string chunk = std::to_string(rem);
            bool last = m.size() == 1 && m[0] == 0;
            if (!last) chunk.insert(0, 9 - chunk.size(), '0');
            out.insert(0, chunk);
        }
        if (out.empty()) out = "0";
        if (sign_ < 0) out.insert(0, 1, '-');
        return out;
    }

private:
    using Magnitude = std::vector<std::uint32_t>;

    // Small-path bound leaves headroom so add/sub never overflow long long.
    static constexpr long long kSmallMax = 0x3FFFFFFFFFFFFFFFLL;

    long long small_ = 0;
    int sign_ = 0;
    Magnitude limbs_;

    Magnitude magnitude() const {
        if (!is_small()) return limbs_;
        unsigned long long v = small_ < 0 ? -static_cast<unsigned long long>(small_)
                                          : static_cast<unsigned long long>(small_);
        Magnitude m;
        while (v) {
            m.push_back(static_cast<std::uint32_t>(v));
            v >>= 32;
        }
        return m;
    }

    static BigInt from_mag(Magnitude m, int sign) {
        while (!m.empty() && m.back() == 0) m.pop_back();
        BigInt r;
        if (m.empty() || sign == 0) return r;
        if (m.size() <= 2) {
            unsigned long long v = m[0];
            if (m.size() == 2) v |= static_cast<unsigned long long>(m[1]) << 32;
            if (v <= static_cast<unsigned long long>(kSmallMax)) {
                r.small_ = sign * static_cast<long long>(v);
                return r;
            }
        }
        r.sign_ = sign;
        r.limbs_ = std::move(m);
        return r;
    }

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) {
            sign_ = 0;
            small_ = 0;
        }
    }

    static int cmp_mag(const Magnitude& a, const Magnitude& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.is_small() && b.is_small()) return a.small_ < b.small_ ? -1 : a.small_ > b.small_ ? 1 : 0;
        int sa = a.sign(), sb = b.sign();
        if (sa != sb) return sa < sb ? -1 : 1;
        int c = cmp_mag(a.magnitude(), b.magnitude());
        return sa >= 0 ? c : -c;
    }

    static Magnitude add_mag(const Magnitude& a, const Magnitude& b) {
        Magnitude r(std::max(a.size(), b.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t s = carry;
            if (i < a.size()) s += a[i];
            if (i < b.size()) s += b[i];
            r[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        return r;
    }

    // Requires |a| >= |b|.
    static Magnitude sub_mag(const Magnitude& a, const Magnitude& b) {
        Magnitude r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            borrow = d < 0;
            if (d < 0) d += (1LL << 32);
            r[i] = static_cast<std::uint32_t>(d);
        }
        return r;
    }

    static BigInt add_big(const BigInt& a, const BigInt& b, bool negate_b) {
        int sa = a.sign(), sb = negate_b ? -b.sign() : b.sign();
        Magnitude ma = a.magnitude(), mb = b.magnitude();
        if (sa == 0) return from_mag(std::move(mb), sb);
        if (sb == 0) return from_mag(std::move(ma), sa);
        if (sa == sb) return from_mag(add_mag(ma, mb), sa);
        int c = cmp_mag(ma, mb);
        if (c == 0) return BigInt();
        if (c > 0) return from_mag(sub_mag(ma, mb), sa);
        return from_mag(sub_mag(mb, ma), sb);
    }

    static Magnitude mul_mag(const Magnitude& a, const Magnitude& b) {
        if (a.empty() || b.empty()) return {};
        Magnitude r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = r[k] + carry;
                r[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        return r;
    }

    // Schoolbook binary long division on magnitudes.
    static void divmod_mag(const Magnitude& a, const Magnitude& b, Magnitude& q, Magnitude& r) {
        q.assign(a.size(), 0);
        r.clear();
        if (cmp_mag(a, b) < 0) {
            r = a;
            return;
        }
        std::size_t bits = a.size() * 32;
        for (std::size_t k = bits; k-- > 0;) {
            // r = (r << 1) | bit k of a
            std::uint32_t carry = (a[k / 32] >> (k % 32)) & 1u;
            for (std::size_t i = 0; i < r.size(); ++i) {
                std::uint32_t next = r[i] >> 31;
                r[i] = (r[i] << 1) | carry;
                carry = next;
            }
            if (carry) r.push_back(carry);
            if (cmp_mag(r, b) >= 0) {
                r = sub_mag(r, b);
                while (!r.empty() && r.back() == 0) r.pop_back();
                q[k / 32] |= 1u << (k % 32);
            }
        }
        if (r.empty()) r.push_back(0);
    }

    static std::uint32_t div_small_inplace(Magnitude& m, std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (m.size() > 1 && m.back() == 0) m.pop_back();
        return static_cast<std::uint32_t>(rem);
    }
};

inline BigInt pow(BigInt base, unsigned long long exp) {
    BigInt r(1);
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

} // namespace glnq
