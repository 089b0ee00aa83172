#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace defc {

// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs
// (little endian, no trailing zero limbs). Only the operations Rational
// needs are provided.
class BigInt {
  public:
    BigInt() = default;
    BigInt(long long v)
    {
        if (v < 0) {
            neg_ = true;
            // avoid overflow on LLONG_MIN
            unsigned long long m = ~static_cast<unsigned long long>(v) + 1ull;
            push_u64(m);
        }
        else
            push_u64(static_cast<unsigned long long>(v));
    }

    static BigInt from_string(const std::string& s)
    {
        BigInt r;
        size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size())
            throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in \"" + s + "\"");
            r.mul_small(10);
            r.add_small(static_cast<uint32_t>(s[i] - '0'));
        }
        r.neg_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return limbs_.empty(); }
    bool negative() const { return neg_; }

    friend BigInt operator-(const BigInt& a)
    {
        BigInt r = a;
        if (!r.is_zero())
            r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b)
    {
        if (a.neg_ == b.neg_) {
            BigInt r = add_mag(a, b);
            r.neg_ = a.neg_ && !r.is_zero();
            return r;
        }
        int c = cmp_mag(a, b);
        if (c == 0)
            return BigInt();
        BigInt r = c > 0 ? sub_mag(a, b) : sub_mag(b, a);
        r.neg_ = (c > 0 ? a.neg_ : b.neg_) && !r.is_zero();
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b)
    {
        if (a.is_zero() || b.is_zero())
            return BigInt();
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (size_t i = 0; i < a.limbs_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limbs_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                               r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            r.limbs_[i + b.limbs_.size()] += static_cast<uint32_t>(carry);
        }
        r.trim();
        r.neg_ = a.neg_ != b.neg_;
        return r;
    }

    // Truncated quotient and remainder (remainder has the sign of the dividend).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r)
    {
        if (b.is_zero())
            throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a, b);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        divmod_mag(a, b, q, r);
        q.neg_ = (a.neg_ != b.neg_) && !q.is_zero();
        r.neg_ = a.neg_ && !r.is_zero();
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b)
    {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend bool operator==(const BigInt& a, const BigInt& b)
    {
        return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    friend bool operator<(const BigInt& a, const BigInt& b)
    {
        if (a.neg_ != b.neg_)
            return a.neg_;
        int c = cmp_mag(a, b);
        return a.neg_ ? c > 0 : c < 0;
    }

    static BigInt gcd(BigInt a, BigInt b)
    {
        a.neg_ = false;
        b.neg_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    std::string str() const
    {
        if (is_zero())
            return "0";
        BigInt t = *this;
        t.neg_ = false;
        std::string digits;
        while (!t.is_zero())
            digits.push_back(static_cast<char>('0' + t.divmod_small(10)));
        if (neg_)
            digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    bool fits_int() const
    {
        if (limbs_.size() > 1)
            return false;
        if (limbs_.empty())
            return true;
        return limbs_[0] <= (neg_ ? 0x80000000u : 0x7fffffffu);
    }
    long long to_ll() const
    {
        unsigned long long m = 0;
        for (size_t i = limbs_.size(); i-- > 0;)
            m = (m << 32) | limbs_[i];
        return neg_ ? -static_cast<long long>(m) : static_cast<long long>(m);
    }

  private:
    std::vector<uint32_t> limbs_;
    bool neg_ = false;

    void trim()
    {
        while (!limbs_.empty() && limbs_.back() == 0)
            limbs_.pop_back();
        if (limbs_.empty())
            neg_ = false;
    }
    void push_u64(unsigned long long v)
    {
        while (v) {
            limbs_.push_back(static_cast<uint32_t>(v));
            v >>= 32;
        }
    }
    void mul_small(uint32_t m)
    {
        uint64_t carry = 0;
        for (auto& l : limbs_) {
            uint64_t cur = static_cast<uint64_t>(l) * m + carry;
            l = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry)
            limbs_.push_back(static_cast<uint32_t>(carry));
    }
    void add_small(uint32_t v)
    {
        uint64_t carry = v;
        for (size_t i = 0; carry && i < limbs_.size(); ++i) {
            uint64_t cur = limbs_[i] + carry;
            limbs_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry)
            limbs_.push_back(static_cast<uint32_t>(carry));
    }
    uint32_t divmod_small(uint32_t d)
    {
        uint64_t rem = 0;
        for (size_t i = limbs_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | limbs_[i];
            limbs_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        trim();
        return static_cast<uint32_t>(rem);
    }

    static int cmp_mag(const BigInt& a, const BigInt& b)
    {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i])
                return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        return 0;
    }
    static BigInt add_mag(const BigInt& a, const BigInt& b)
    {
        BigInt r;
        const auto &x = a.limbs_, &y = b.limbs_;
        size_t n = std::max(x.size(), y.size());
        r.limbs_.resize(n, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t cur = carry;
            if (i < x.size())
                cur += x[i];
            if (i < y.size())
                cur += y[i];
            r.limbs_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry)
            r.limbs_.push_back(static_cast<uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static BigInt sub_mag(const BigInt& a, const BigInt& b)
    {
        BigInt r;
        r.limbs_ = a.limbs_;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.limbs_.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r.limbs_[i]) - borrow -
                          (i < b.limbs_.size() ? b.limbs_[i] : 0);
            borrow = cur < 0;
            if (cur < 0)
                cur += (1ll << 32);
            r.limbs_[i] = static_cast<uint32_t>(cur);
        }
        r.trim();
        return r;
    }
    // schoolbook long division on magnitudes, |a| >= |b| > 0
    static void divmod_mag(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r)
    {
        q = BigInt();
        r = BigInt();
        q.limbs_.assign(a.limbs_.size(), 0);
        for (size_t i = a.limbs_.size(); i-- > 0;) {
            // r = (r << 32) + limb
            r.limbs_.insert(r.limbs_.begin(), a.limbs_[i]);
            r.trim();
            // binary search the quotient digit
            uint64_t lo = 0, hi = 0xffffffffull;
            while (lo < hi) {
                uint64_t mid = (lo + hi + 1) >> 1;
                BigInt t = b;
                t.neg_ = false;
                t.mul_small(static_cast<uint32_t>(mid));
                if (cmp_mag(t, r) <= 0)
                    lo = mid;
                else
                    hi = mid - 1;
            }
            if (lo) {
                BigInt t = b;
                t.neg_ = false;
                t.mul_small(static_cast<uint32_t>(lo));
                r = sub_mag(r, t);
            }
            q.limbs_[i] = static_cast<uint32_t>(lo);
        }
        q.trim();
        r.trim();
    }
};

// Exact rational scalar, always in lowest terms with positive denominator.
// Equality is structural; there is no tolerance anywhere.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    // parses "p", "p/q", with optional sign
    static Rational parse(const std::string& s)
    {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(BigInt::from_string(s), BigInt(1));
        return Rational(BigInt::from_string(s.substr(0, slash)),
                        BigInt::from_string(s.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b)
    {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string str() const
    {
        if (den_ == BigInt(1))
            return num_.str();
        return num_.str() + "/" + den_.str();
    }

  private:
    BigInt num_, den_;

    void normalize()
    {
        if (den_.is_zero())
            throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

// sign as a rational, s in {-1,+1} encoded by parity of the exponent
inline Rational sign_pow(long long exponent)
{
    return (exponent % 2 == 0) ? Rational(1) : Rational(-1);
}

} // namespace defc
