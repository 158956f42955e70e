#pragma once
// Arbitrary-precision signed integer: sign + base-2^32 magnitude.
// Exact arithmetic throughout; values stay small (a few hundred bits) in
// this project, so schoolbook algorithms are enough.

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hilbert {

class Int {
public:
    Int() = default;
    Int(int v) : Int(static_cast<long long>(v)) {}
    Int(unsigned v) : Int(static_cast<unsigned long long>(v)) {}
    Int(long v) : Int(static_cast<long long>(v)) {}
    Int(long long v) {
        neg_ = v < 0;
        unsigned long long m = neg_ ? -static_cast<unsigned long long>(v)
                                    : static_cast<unsigned long long>(v);
        assign_u64(m);
    }
    Int(unsigned long v) : Int(static_cast<unsigned long long>(v)) {}
    Int(unsigned long long v) { assign_u64(v); }

    explicit Int(std::string_view s) { *this = from_string(s); }

    static Int from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Int: empty string");
        bool neg = false;
        size_t i = 0;
        if (s[0] == '+' || s[0] == '-') { neg = s[0] == '-'; i = 1; }
        if (i == s.size()) throw std::invalid_argument("Int: no digits");
        Int r;
        // consume 9 decimal digits at a time
        while (i < s.size()) {
            size_t take = std::min<size_t>(9, s.size() - i);
            uint32_t chunk = 0, scale = 1;
            for (size_t k = 0; k < take; ++k) {
                char c = s[i + k];
                if (c < '0' || c > '9') throw std::invalid_argument("Int: bad digit");
                chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
                scale *= 10;
            }
            r.mul_small(scale);
            r.add_small(chunk);
            i += take;
        }
        r.neg_ = neg && !r.mag_.empty();
        return r;
    }

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return neg_; }
    int signum() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }
    bool odd() const { return !mag_.empty() && (mag_[0] & 1u); }
    bool even() const { return !odd(); }

    bool fits_uint64() const { return !neg_ && mag_.size() <= 2; }
    uint64_t to_uint64() const {
        if (!fits_uint64()) throw std::overflow_error("Int: does not fit uint64");
        return u64_value();
    }
    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        uint64_t m = u64_value();
        return neg_ ? m <= (1ull << 63) : m < (1ull << 63);
    }
    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("Int: does not fit int64");
        uint64_t m = u64_value();
        return neg_ ? -static_cast<long long>(m) : static_cast<long long>(m);
    }
    double to_double() const {
        double r = 0;
        for (size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
        return neg_ ? -r : r;
    }
    size_t bit_length() const {
        if (mag_.empty()) return 0;
        uint32_t top = mag_.back();
        size_t b = 0;
        while (top) { top >>= 1; ++b; }
        return (mag_.size() - 1) * 32 + b;
    }

    friend bool operator==(const Int& a, const Int& b) {
        return a.neg_ == b.neg_ && a.mag_ == b.mag_;
    }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
        if (a.neg_ != b.neg_) return a.neg_ ? std::strong_ordering::less
                                            : std::strong_ordering::greater;
        int c = cmp_mag(a.mag_, b.mag_);
        if (a.neg_) c = -c;
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    Int operator-() const {
        Int r = *this;
        if (!r.mag_.empty()) r.neg_ = !r.neg_;
        return r;
    }
    Int abs() const {
        Int r = *this;
        r.neg_ = false;
        return r;
    }

    Int& operator+=(const Int& o) {
        if (neg_ == o.neg_) {
            add_mag(mag_, o.mag_);
        } else if (cmp_mag(mag_, o.mag_) >= 0) {
            sub_mag(mag_, o.mag_);
            if (mag_.empty()) neg_ = false;
        } else {
            std::vector<uint32_t> m = o.mag_;
            sub_mag(m, mag_);
            mag_ = std::move(m);
            neg_ = o.neg_;
        }
        return *this;
    }
    Int& operator-=(const Int& o) { return *this += -o; }
    Int& operator*=(const Int& o) { *this = *this * o; return *this; }
    Int& operator/=(const Int& o) { *this = divmod(*this, o).first; return *this; }
    Int& operator%=(const Int& o) { *this = divmod(*this, o).second; return *this; }

    friend Int operator+(Int a, const Int& b) { a += b; return a; }
    friend Int operator-(Int a, const Int& b) { a -= b; return a; }
    friend Int operator*(const Int& a, const Int& b) {
        if (a.is_zero() || b.is_zero()) return Int{};
        Int r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a.mag_[i];
            for (size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = r.mag_[i + j] + ai * b.mag_[j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.mag_.size();
            while (carry) {
                uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.neg_ = a.neg_ != b.neg_ && !r.mag_.empty();
        return r;
    }
    friend Int operator/(const Int& a, const Int& b) { return divmod(a, b).first; }
    friend Int operator%(const Int& a, const Int& b) { return divmod(a, b).second; }

    // truncated division: quotient toward zero, remainder carries dividend sign
    static std::pair<Int, Int> divmod(const Int& a, const Int& b) {
        if (b.is_zero()) throw std::domain_error("Int: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) return {Int{}, a};
        Int q, r;
        if (b.mag_.size() == 1) {
            uint32_t rem = 0;
            q.mag_.assign(a.mag_.size(), 0);
            uint64_t d = b.mag_[0];
            for (size_t i = a.mag_.size(); i-- > 0;) {
                uint64_t cur = (static_cast<uint64_t>(rem) << 32) | a.mag_[i];
                q.mag_[i] = static_cast<uint32_t>(cur / d);
                rem = static_cast<uint32_t>(cur % d);
            }
            if (rem) r.mag_.push_back(rem);
        } else {
            divmod_knuth(a.mag_, b.mag_, q.mag_, r.mag_);
        }
        q.trim(); r.trim();
        q.neg_ = (a.neg_ != b.neg_) && !q.mag_.empty();
        r.neg_ = a.neg_ && !r.mag_.empty();
        return {q, r};
    }

    Int pow(uint64_t e) const {
        Int base = *this, r = 1;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    std::string to_string() const {
        if (mag_.empty()) return "0";
        std::vector<uint32_t> m = mag_;
        std::string out;
        while (!m.empty()) {
            uint32_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (static_cast<uint64_t>(rem) << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = static_cast<uint32_t>(cur % 1000000000u);
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            if (m.empty()) {
                for (; rem; rem /= 10) out.push_back(char('0' + rem % 10));
            } else {
                for (int k = 0; k < 9; ++k) { out.push_back(char('0' + rem % 10)); rem /= 10; }
            }
        }
        if (neg_) out.push_back('-');
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    std::vector<uint32_t> mag_;   // little-endian, trimmed
    bool neg_ = false;

    uint64_t u64_value() const {
        uint64_t m = 0;
        if (mag_.size() > 1) m = static_cast<uint64_t>(mag_[1]) << 32;
        if (!mag_.empty()) m |= mag_[0];
        return m;
    }
    void assign_u64(uint64_t v) {
        mag_.clear();
        if (v) mag_.push_back(static_cast<uint32_t>(v));
        if (v >> 32) mag_.push_back(static_cast<uint32_t>(v >> 32));
    }
    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) neg_ = false;
    }
    void mul_small(uint32_t f) {
        uint64_t carry = 0;
        for (auto& w : mag_) {
            uint64_t cur = static_cast<uint64_t>(w) * f + carry;
            w = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }
    void add_small(uint32_t v) {
        uint64_t carry = v;
        for (size_t i = 0; carry && i < mag_.size(); ++i) {
            uint64_t cur = mag_[i] + carry;
            mag_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static void add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(a[i]) + (i < b.size() ? b[i] : 0) + carry;
            a[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) a.push_back(static_cast<uint32_t>(carry));
    }
    // requires |a| >= |b|
    static void sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
            borrow = cur < 0;
            if (cur < 0) cur += (1ll << 32);
            a[i] = static_cast<uint32_t>(cur);
        }
        assert(borrow == 0);
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    // Knuth algorithm D on magnitudes; |u| >= |v|, v has >= 2 limbs
    static void divmod_knuth(const std::vector<uint32_t>& u_in,
                             const std::vector<uint32_t>& v_in,
                             std::vector<uint32_t>& q,
                             std::vector<uint32_t>& r) {
        const size_t n = v_in.size();
        // normalize so the divisor's top limb has its high bit set
        int shift = 0;
        for (uint32_t top = v_in.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        std::vector<uint32_t> v = shl(v_in, shift);
        std::vector<uint32_t> u = shl(u_in, shift);
        u.push_back(0);   // room for the virtual top limb
        const size_t m = u.size() - 1 - n;
        q.assign(m + 1, 0);
        const uint64_t vtop = v[n - 1], vsec = v[n - 2];

        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / vtop, rhat = num % vtop;
            if (qhat > 0xFFFFFFFFull) { qhat = 0xFFFFFFFFull; rhat = num - qhat * vtop; }
            while (rhat <= 0xFFFFFFFFull &&
                   qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += vtop;
            }
            // multiply-subtract
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t prod = qhat * v[i] + carry;
                carry = prod >> 32;
                int64_t cur = static_cast<int64_t>(u[i + j]) -
                              static_cast<int64_t>(prod & 0xFFFFFFFFull) - borrow;
                borrow = cur < 0;
                if (cur < 0) cur += (1ll << 32);
                u[i + j] = static_cast<uint32_t>(cur);
            }
            int64_t cur = static_cast<int64_t>(u[j + n]) -
                          static_cast<int64_t>(carry) - borrow;
            borrow = cur < 0;
            if (cur < 0) cur += (1ll << 32);
            u[j + n] = static_cast<uint32_t>(cur);

            if (borrow) {   // qhat was one too large: add back
                --qhat;
                uint64_t c2 = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<uint32_t>(s);
                    c2 = s >> 32;
                }
                u[j + n] = static_cast<uint32_t>(u[j + n] + c2);
            }
            q[j] = static_cast<uint32_t>(qhat);
        }
        u.resize(n);
        r = shr(u, shift);
    }
    static std::vector<uint32_t> shl(const std::vector<uint32_t>& a, int bits) {
        if (bits == 0 || a.empty()) return a;
        std::vector<uint32_t> r(a.size() + 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << bits;
            r[i + 1] = static_cast<uint32_t>(static_cast<uint64_t>(a[i]) >> (32 - bits));
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static std::vector<uint32_t> shr(const std::vector<uint32_t>& a, int bits) {
        if (bits == 0 || a.empty()) return a;
        std::vector<uint32_t> r(a.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            r[i] = a[i] >> bits;
            if (i + 1 < a.size())
                r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(a[i + 1]) << (32 - bits));
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

inline Int operator""_I(const char* s) { return Int::from_string(s); }

inline std::string to_string(const Int& v) { return v.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const Int& v) {
    return os << v.to_string();
}

inline Int gcd(Int a, Int b) {
    a = a.abs(); b = b.abs();
    while (!b.is_zero()) {
        Int r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace hilbert
