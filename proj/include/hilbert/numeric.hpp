#pragma once
// Integer square root, perfect-square testing, divisor enumeration and
// counting. Provided both for Int and for uint64_t (used in search kernels).

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hilbert/int.hpp"

namespace hilbert {

// floor sqrt of a 64-bit value, exact
inline uint64_t isqrt_u64(uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && (static_cast<__uint128_t>(r) * r) > n) --r;
    while (static_cast<__uint128_t>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline std::optional<uint64_t> is_square_u64(uint64_t n) {
    uint64_t r = isqrt_u64(n);
    if (r * r == n) return r;
    return std::nullopt;
}

// floor sqrt: Newton iteration with final correction
inline Int isqrt(const Int& n) {
    if (n.is_negative()) throw std::domain_error("isqrt: negative argument");
    if (n.fits_uint64()) return Int(isqrt_u64(n.to_uint64()));
    Int x = Int(2).pow((n.bit_length() + 1) / 2);   // x^2 >= n
    for (;;) {
        Int y = (x + n / x) / 2;
        if (y >= x) break;
        x = std::move(y);
    }
    while (x * x > n) x -= 1;
    return x;
}

inline std::optional<Int> is_square(const Int& n) {
    if (n.is_negative()) return std::nullopt;
    if (n.fits_uint64()) {
        auto r = is_square_u64(n.to_uint64());
        if (r) return Int(*r);
        return std::nullopt;
    }
    Int r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

// divisors d of n with d^2 < n, ascending
inline std::vector<uint64_t> small_divisors_u64(uint64_t n) {
    if (n == 0) throw std::domain_error("small_divisors: zero argument");
    std::vector<uint64_t> out;
    for (uint64_t d = 1; d * d < n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

inline std::vector<Int> small_divisors(const Int& n) {
    if (n.signum() <= 0) throw std::domain_error("small_divisors: nonpositive argument");
    if (n.fits_uint64()) {
        std::vector<Int> out;
        for (uint64_t d : small_divisors_u64(n.to_uint64())) out.emplace_back(d);
        return out;
    }
    std::vector<Int> out;
    for (Int d = 1; d * d < n; d += 1)
        if ((n % d).is_zero()) out.push_back(d);
    return out;
}

inline uint64_t tau_u64(uint64_t n) {
    if (n == 0) throw std::domain_error("tau: zero argument");
    uint64_t count = 0;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) count += (d * d == n) ? 1 : 2;
    }
    return count;
}

inline Int tau(const Int& n) {
    if (n.signum() <= 0) throw std::domain_error("tau: nonpositive argument");
    if (n.fits_uint64()) return Int(tau_u64(n.to_uint64()));
    Int count = 0;
    for (Int d = 1; d * d <= n; d += 1)
        if ((n % d).is_zero()) count += (d * d == n) ? Int(1) : Int(2);
    return count;
}

inline uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) { uint64_t t = a % b; a = b; b = t; }
    return a;
}

// largest m with m^2 | n. Trial division up to a budget, then the leftover
// cofactor (at most two primes above the budget) can only contribute a
// square factor when it is itself a perfect square.
inline Int largest_square_divisor_root(const Int& n_in) {
    if (n_in.signum() <= 0) throw std::domain_error("largest_square_divisor_root: nonpositive");
    Int n = n_in, m = 1;
    uint64_t budget = 1u << 20;
    for (uint64_t p = 2; Int(p) * Int(p) <= n && p <= budget; p += (p == 2 ? 1 : 2)) {
        if (!(n % Int(p)).is_zero()) continue;
        unsigned e = 0;
        while ((n % Int(p)).is_zero()) { n /= Int(p); ++e; }
        m *= Int(p).pow(e / 2);
    }
    if (auto r = is_square(n)) m *= *r;
    return m;
}

}  // namespace hilbert
