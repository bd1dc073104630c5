#ifndef COSMOTOPE_RATIONAL_HPP
#define COSMOTOPE_RATIONAL_HPP

// Arbitrary-precision integers and rationals. All arithmetic in the
// library is exact; nothing here ever touches floating point.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosmo {

class BigInt {
public:
    BigInt() : sign_(0) {}
    BigInt(long long v) {  // NOLINT: implicit by design
        if (v == 0) { sign_ = 0; return; }
        sign_ = v > 0 ? 1 : -1;
        unsigned long long u = v > 0 ? (unsigned long long)v : 0ULL - (unsigned long long)v;
        while (u) { mag_.push_back((uint32_t)(u & 0xffffffffULL)); u >>= 32; }
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_odd() const { return sign_ != 0 && (mag_[0] & 1u); }

    BigInt operator-() const { BigInt r = *this; r.sign_ = -r.sign_; return r; }
    BigInt abs() const { BigInt r = *this; if (r.sign_ < 0) r.sign_ = 1; return r; }

    friend int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }
    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) { r.mag_ = sub_mag(a.mag_, b.mag_); r.sign_ = a.sign_; }
            else       { r.mag_ = sub_mag(b.mag_, a.mag_); r.sign_ = b.sign_; }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = (uint64_t)a.mag_[i] * b.mag_[j] + r.mag_[i + j] + carry;
                r.mag_[i + j] = (uint32_t)(cur & 0xffffffffULL);
                carry = cur >> 32;
            }
            size_t k = i + b.mag_.size();
            while (carry) {
                uint64_t cur = (uint64_t)r.mag_[k] + carry;
                r.mag_[k] = (uint32_t)(cur & 0xffffffffULL);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    // Truncated division (quotient rounds toward zero, as in C++).
    friend void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) { q = BigInt(); r = a; return; }
        divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r; divmod(a, b, q, r); return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r; divmod(a, b, q, r); return r;
    }

    friend BigInt gcd(BigInt a, BigInt b) {  // Stein's binary gcd
        a.sign_ = a.sign_ ? 1 : 0;
        b.sign_ = b.sign_ ? 1 : 0;
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int sa = a.trailing_zero_bits(), sb = b.trailing_zero_bits();
        int s = sa < sb ? sa : sb;
        a.shr(sa);
        b.shr(sb);
        while (true) {
            if (cmp_mag(a.mag_, b.mag_) > 0) std::swap(a, b);
            b = b - a;  // both odd, result even or zero
            if (b.is_zero()) break;
            b.shr(b.trailing_zero_bits());
        }
        a.shl(s);
        return a;
    }

    long long to_long_long() const {
        unsigned long long u = 0;
        if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in long long");
        for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
        if (sign_ >= 0) {
            if (u > 0x7fffffffffffffffULL) throw std::overflow_error("BigInt: does not fit in long long");
            return (long long)u;
        }
        if (u > 0x8000000000000000ULL) throw std::overflow_error("BigInt: does not fit in long long");
        return -(long long)(u - 1) - 1;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = (uint32_t)(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back((char)('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        std::string out;
        if (sign_ < 0) out.push_back('-');
        out.append(digits.rbegin(), digits.rend());
        return out;
    }

private:
    int sign_;                    // -1, 0, +1
    std::vector<uint32_t> mag_;   // little-endian limbs, no leading zeros

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    int trailing_zero_bits() const {
        for (size_t i = 0; i < mag_.size(); ++i)
            if (mag_[i]) return (int)(32 * i) + __builtin_ctz(mag_[i]);
        return 0;
    }

    void shr(int bits) {
        int words = bits / 32, rem = bits % 32;
        if (words) mag_.erase(mag_.begin(), mag_.begin() + std::min<size_t>(words, mag_.size()));
        if (rem && !mag_.empty()) {
            for (size_t i = 0; i + 1 < mag_.size(); ++i)
                mag_[i] = (mag_[i] >> rem) | (mag_[i + 1] << (32 - rem));
            mag_.back() >>= rem;
        }
        trim();
    }

    void shl(int bits) {
        if (sign_ == 0 || bits == 0) return;
        int words = bits / 32, rem = bits % 32;
        if (rem) {
            uint32_t carry = 0;
            for (size_t i = 0; i < mag_.size(); ++i) {
                uint32_t nc = mag_[i] >> (32 - rem);
                mag_[i] = (mag_[i] << rem) | carry;
                carry = nc;
            }
            if (carry) mag_.push_back(carry);
        }
        if (words) mag_.insert(mag_.begin(), (size_t)words, 0u);
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = (uint64_t)r[i] + carry + (i < small.size() ? small[i] : 0);
            r[i] = (uint32_t)(cur & 0xffffffffULL);
            carry = cur >> 32;
            if (!carry && i >= small.size()) break;
        }
        if (carry) r.push_back((uint32_t)carry);
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = (int64_t)r[i] - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) { cur += (int64_t)1 << 32; borrow = 1; } else borrow = 0;
            r[i] = (uint32_t)cur;
            if (!borrow && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // magnitude shift-subtract long division, |a| >= |b| > 0
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        BigInt rem; rem.mag_ = a; rem.sign_ = 1;
        int shift = (int)(a.size() * 32) - (int)((b.size() - 1) * 32 + bit_length(b.back()));
        BigInt d; d.mag_ = b; d.sign_ = 1;
        d.shl(shift);
        std::vector<uint32_t> quot((size_t)(shift / 32 + 1), 0u);
        for (int k = shift; k >= 0; --k) {
            if (cmp_mag(rem.mag_, d.mag_) >= 0) {
                rem.mag_ = sub_mag(rem.mag_, d.mag_);
                quot[(size_t)(k / 32)] |= 1u << (k % 32);
            }
            d.shr(1);
        }
        while (!quot.empty() && quot.back() == 0) quot.pop_back();
        q = quot;
        rem.trim();
        r = rem.mag_;
    }

    static int bit_length(uint32_t w) { return 32 - __builtin_clz(w); }
};

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    return (a / gcd(a, b)) * b;
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    bool is_negative() const { return num_.is_negative(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const { Rational r = *this; r.num_ = -r.num_; return r; }
    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }
    // Always "p/q", used for machine-readable value fields.
    std::string to_fraction_string() const {
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    BigInt num_, den_;  // den_ > 0, gcd(num_, den_) = 1

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.is_negative()) { num_ = -num_; den_ = -den_; }
        if (num_.is_zero()) { den_ = BigInt(1); return; }
        BigInt g = gcd(num_, den_);
        if (!g.is_one()) { num_ = num_ / g; den_ = den_ / g; }
    }
};

// Accumulates a sum of rationals without intermediate gcd reduction;
// reduces once when the value is read. Keeps long facet sums cheap.
class RationalSum {
public:
    RationalSum() : num_(0), den_(1) {}
    void add(const Rational& r) {
        num_ = num_ * r.den() + r.num() * den_;
        den_ = den_ * r.den();
    }
    Rational value() const { return Rational(num_, den_); }

private:
    BigInt num_, den_;
};

}  // namespace cosmo

#endif
