#pragma once
// Parametric families of Hilbert cubes in the squares, the triangular-number
// family, quadratic-progression membership, and the monotone-ratio parameter
// finder. Generators return raw tuples (entries may be negative outside the
// documented parameter regions); canonicalize() repairs sign patterns where
// an all-positive orbit representative exists.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hilbert/cube.hpp"
#include "hilbert/int.hpp"
#include "hilbert/numeric.hpp"
#include "hilbert/rational.hpp"

namespace hilbert {

// four-parameter family; homogeneous of degree 20 in (c,d) and 8 in (G,H)
inline CubeTuple family_general(const Int& c, const Int& d, const Int& G, const Int& H) {
    const Int c2 = c * c, d2 = d * d, c4 = c2 * c2, d4 = d2 * d2;
    const Int c8 = c4 * c4, d8 = d4 * d4;
    const Int G2 = G * G, H2 = H * H, GH = G * H;
    const Int s = c2 + d2, m = c2 - d2, w = c4 - d4;
    const Int k = c8 - Int(18) * c4 * d4 + d8;

    Int a0_core = Int(-4) * c2 * d4 * m * G2 * G2 + k * G2 * GH +
                  Int(8) * c2 * d2 * m * (Int(2) * c2 + d2) * GH * GH -
                  k * GH * H2 - Int(4) * c2 * d4 * m * H2 * H2;
    Int a0 = s * s * a0_core * a0_core;

    Int a1 = Int(8) * c2 * d2 * w * w * (G2 + H2) * (G2 + H2) *
             (Int(2) * c2 * d2 * G2 - w * GH - Int(2) * c2 * d2 * H2) *
             (w * G2 + Int(8) * c2 * d2 * GH - w * H2);

    Int a2 = m * m *
             (d * (c + d) * G - c * (c - d) * H) *
             (d * (c - d) * G + c * (c + d) * H) *
             ((c2 - Int(2) * c * d - d2) * G + s * H) *
             ((c2 + Int(2) * c * d - d2) * G + s * H) *
             (s * G - (c2 + Int(2) * c * d - d2) * H) *
             (c * (c + d) * G - d * (c - d) * H) *
             (c * (c - d) * G + d * (c + d) * H) *
             (s * G - (c2 - Int(2) * c * d - d2) * H);

    Int a3 = Int(4) * c2 * d2 * GH * (G2 - H2) *
             (w * G + Int(4) * c2 * d2 * H) *
             (Int(4) * c2 * d2 * G - w * H) *
             ((c4 - Int(4) * c2 * d2 - d4) * G + (c4 + Int(4) * c2 * d2 - d4) * H) *
             ((c4 + Int(4) * c2 * d2 - d4) * G - (c4 - Int(4) * c2 * d2 - d4) * H);

    return {std::move(a0), {std::move(a1), std::move(a2), std::move(a3)}};
}

// single-parameter family; entries positive and strictly increasing for t >= 7
inline CubeTuple family_t(const Int& t) {
    Int core = Int(18) * t.pow(4) - Int(319) * t.pow(3) - Int(684) * t * t +
               Int(319) * t + Int(18);
    Int a0 = Int(25) * core * core;
    Int a1 = Int(9) * (t - 1) * t * (t + 1) * (Int(9) * t - 20) * (Int(11) * t + 29) *
             (Int(20) * t + 9) * (Int(29) * t - 11);
    Int a2 = Int(16) * (t + 5) * (t + 6) * (Int(2) * t - 3) * (Int(3) * t + 2) *
             (Int(5) * t - 7) * (Int(5) * t - 1) * (Int(6) * t - 1) * (Int(7) * t + 5);
    Int t2p1 = t * t + 1;
    Int a3 = Int(7200) * t2p1 * t2p1 * (Int(9) * t * t - Int(40) * t - 9) *
             (Int(10) * t * t + Int(9) * t - 10);
    return {std::move(a0), {std::move(a1), std::move(a2), std::move(a3)}};
}

// two-parameter family with a1 = a2
inline CubeTuple family_a1a2(const Int& c, const Int& d) {
    const Int c2 = c * c, d2 = d * d;
    Int core = Int(7) * c2 * c2 + Int(12) * c2 * c * d - Int(22) * c2 * d2 +
               Int(12) * c * d2 * d + Int(7) * d2 * d2;
    Int a0 = (c - d) * (c - d) * core * core;
    Int a1 = Int(-24) * (c - d) * (c - d) * (c + d) * (c + d) * (c2 + d2) *
             (c2 - Int(6) * c * d + d2) * (c2 + Int(6) * c * d + d2);
    Int a3 = Int(-4) * c * d * (c2 - Int(5) * d2) * (Int(5) * c2 - d2) *
             (Int(7) * c2 + d2) * (c2 + Int(7) * d2);
    return {std::move(a0), {a1, a1, std::move(a3)}};
}

// pair of cubes sharing (a0, a1, a2); the prefix equality is a polynomial
// identity in (u, v)
inline std::pair<CubeTuple, CubeTuple> family_same_prefix(const Int& u, const Int& v) {
    Int core = Int(2) * u.pow(4) - Int(5) * u * u * v * v - Int(4) * u * v.pow(3) -
               Int(2) * v.pow(4);
    Int a0 = core * core;
    Int a12 = Int(4) * u * (u - v) * v * (u + v) * (Int(2) * u + v) * (u + Int(2) * v) *
              (u * u + u * v + v * v);
    Int a3 = -u * (u + Int(2) * v) * (u * u - Int(2) * u * v - Int(2) * v * v) *
             (u * u + Int(2) * v * v) * (Int(3) * u * u + Int(4) * u * v + Int(2) * v * v);
    Int A3 = v * (Int(2) * u + v) * (Int(2) * u * u + Int(2) * u * v - v * v) *
             (Int(2) * u * u + v * v) * (Int(2) * u * u + Int(4) * u * v + Int(3) * v * v);
    CubeTuple first{a0, {a12, a12, std::move(a3)}};
    CubeTuple second{std::move(a0), {a12, a12, std::move(A3)}};
    return {std::move(first), std::move(second)};
}

// n in a*x^2 + b*x = value for integer x >= 0, coefficients given as exact
// fractions; solved with the quadratic formula and an exact square-root test
inline std::optional<Int> is_member_quadratic(const Int& a_num, const Int& a_den,
                                              const Int& b_num, const Int& b_den,
                                              const Int& value) {
    if (a_den.is_zero() || b_den.is_zero())
        throw std::invalid_argument("is_member_quadratic: zero denominator");
    Int alpha = a_num * b_den, beta = b_num * a_den, delta = a_den * b_den;
    if (delta.is_negative()) { alpha = -alpha; beta = -beta; delta = -delta; }
    if (alpha.signum() <= 0) throw std::invalid_argument("is_member_quadratic: need a > 0");
    // alpha n^2 + beta n - value*delta = 0
    Int disc = beta * beta + Int(4) * alpha * value * delta;
    auto s = is_square(disc);
    if (!s) return std::nullopt;
    for (const Int& root_num : {*s - beta, -*s - beta}) {
        if (root_num.is_negative()) continue;
        auto [n, rem] = Int::divmod(root_num, Int(2) * alpha);
        if (rem.is_zero()) return n;
    }
    return std::nullopt;
}

struct TriangularCube {
    CubeTuple tuple;
    std::array<std::optional<Int>, 8> member_index;   // m with m(m+1)/2 = sum
    bool all_member = false;
};

// cubes in the triangular numbers: a0 = n(n+1)/2, a1 = 66(2n+1)^2,
// a2 = a3 = 105(2n+1)^2
inline TriangularCube family_triangular(const Int& n) {
    if (n.is_negative()) throw std::invalid_argument("family_triangular: n must be >= 0");
    Int odd = Int(2) * n + 1;
    Int sq = odd * odd;
    TriangularCube out;
    out.tuple = {n * (n + 1) / 2, {Int(66) * sq, Int(105) * sq, Int(105) * sq}};
    out.all_member = true;
    for (uint32_t mask = 0; mask < 8; ++mask) {
        out.member_index[mask] = is_member_quadratic(1, 2, 1, 2, out.tuple.subset_sum(mask));
        if (!out.member_index[mask]) out.all_member = false;
    }
    return out;
}

struct Near4Result {
    CubeTuple tuple;        // 4 parts; 16 subset sums
    bool scaled_by_4 = false;
    Score score;            // 13 for nondegenerate parameters
};

// near-miss 4-dimensional family: a4 carries a 1/4 factor, so the whole
// tuple is scaled by 4 whenever that quarter is not an integer
inline Near4Result family_near4(const Int& c) {
    Int cm1 = c - 1;
    Int core = Int(7) * c.pow(4) + Int(12) * c.pow(3) - Int(22) * c * c + Int(12) * c + 7;
    Int a0 = cm1.pow(4) * core * core;
    Int a12 = Int(-24) * cm1.pow(4) * (c + 1) * (c + 1) * (c * c + 1) *
              (c * c - Int(6) * c + 1) * (c * c + Int(6) * c + 1);
    Int a3 = Int(-4) * c * cm1 * cm1 * (c * c - 5) * (c * c + 7) *
             (Int(5) * c * c - 1) * (Int(7) * c * c + 1);
    Int a4_num = -((c.pow(3) + c * c + Int(19) * c - 5) *
                   (Int(3) * c.pow(3) - c * c + Int(9) * c + 5) *
                   (Int(5) * c.pow(3) - Int(19) * c * c - c - 1) *
                   (Int(5) * c.pow(3) + Int(9) * c * c - c + 3));
    Near4Result out;
    if ((a4_num % 4).is_zero()) {
        out.tuple = {std::move(a0), {a12, a12, std::move(a3), a4_num / 4}};
    } else {
        out.scaled_by_4 = true;
        out.tuple = {Int(4) * a0, {Int(4) * a12, Int(4) * a12, Int(4) * a3, std::move(a4_num)}};
    }
    out.score = square_score(out.tuple);
    return out;
}

// ---- ratio_parameter: hit a target a_i/a_j by bisection on a monotone
// ratio function over a rational grid with denominator 10^6 ----

struct RatioResult {
    Rational parameter;   // family argument x = c/d
    CubeTuple cube;       // family tuple at (c, d), family labeling
    Rational achieved;    // a_i / a_j of that tuple
};

namespace detail_ratio {

inline constexpr int64_t kGridDen = 1000000;

struct RatioFamily {
    bool increasing;
    int64_t n_lo, n_hi;                  // grid numerators, strictly inside the interval
    CubeTuple (*tuple)(int64_t);         // family tuple at x = n / kGridDen
    int idx_i, idx_j;                    // ratio = entry(idx_i) / entry(idx_j)
};

inline std::pair<Int, Int> grid_cd(int64_t n) {
    Int c{n}, d{kGridDen};
    Int g = gcd(c, d);
    return {c / g, d / g};
}

inline CubeTuple tuple_a1a2(int64_t n) {
    auto [c, d] = grid_cd(n);
    return family_a1a2(c, d);
}
inline CubeTuple tuple_general21(int64_t n) {
    auto [c, d] = grid_cd(n);
    return family_general(c, d, 2, 1);
}

inline Rational entry_ratio(const CubeTuple& t, int i, int j) {
    auto pick = [&](int k) -> const Int& { return k == 0 ? t.a0 : t.parts[k - 1]; };
    return {pick(i), pick(j)};
}

inline RatioFamily select(int i, int j) {
    // interval endpoints as exact grid bounds (strictly inside; verified by
    // integer square-root comparisons):
    //   (-3-2*sqrt(2), -2.9416)  for a0/a1 (= a0/a2), decreasing
    //   (1, sqrt(5))             for a0/a3 and a1/a3 (= a2/a3), increasing
    //   ((2+sqrt(7))/3, sqrt((3+sqrt(13))/2)) for a1/a2, decreasing
    const int64_t D = kGridDen;
    const int64_t lo_sqrt8 =
        -(3 * D + static_cast<int64_t>(isqrt_u64(8ull * D * D)));   // > -3-2*sqrt(2)
    const int64_t hi_xmin = -2941600;   // < the local minimum of a0/a1
    const int64_t lo_one = D + 1;
    const int64_t hi_sqrt5 = static_cast<int64_t>(isqrt_u64(5ull * D * D));   // < sqrt(5)

    switch (i * 10 + j) {
        case 1:   // (0,1)
        case 2:   // (0,2): a1 = a2 in this family
            return {false, lo_sqrt8, hi_xmin, &tuple_a1a2, 0, 1};
        case 3:   // (0,3)
            return {true, lo_one, hi_sqrt5, &tuple_a1a2, 0, 3};
        case 13:  // (1,3)
        case 23:  // (2,3)
            return {true, lo_one, hi_sqrt5, &tuple_a1a2, 1, 3};
        case 12: {  // (1,2): the four-parameter family at (G,H) = (2,1)
            int64_t lo = (2 * D + static_cast<int64_t>(isqrt_u64(7ull * D * D))) / 3;
            for (;; ++lo) {   // smallest grid point with (3x-2)^2 > 7, x > 2/3
                Int t = Int(3) * Int(lo) - Int(2) * Int(D);
                if (t.signum() > 0 && t * t > Int(7) * Int(D) * Int(D)) break;
            }
            Int d2{D};
            d2 = d2 * d2;
            Int w = (Int(3) * d2 + isqrt(Int(13) * d2 * d2)) / 2;   // floor((3+sqrt13)/2 D^2)
            int64_t hi = isqrt(w).to_int64();
            for (;; --hi) {   // largest grid point with x^2 < (3+sqrt(13))/2
                Int t = Int(2) * Int(hi) * Int(hi) - Int(3) * d2;
                if (t.signum() < 0 || t * t < Int(13) * d2 * d2) break;
            }
            return {false, lo, hi, &tuple_general21, 1, 2};
        }
        default:
            throw std::invalid_argument("ratio_parameter: unsupported index pair");
    }
}

}  // namespace detail_ratio

inline RatioResult ratio_parameter(int i, int j, const Rational& target, const Rational& eps) {
    if (target.signum() <= 0 || eps.signum() <= 0)
        throw std::invalid_argument("ratio_parameter: target and eps must be positive");
    auto fam = detail_ratio::select(i, j);
    auto f = [&](int64_t n) { return detail_ratio::entry_ratio(fam.tuple(n), fam.idx_i, fam.idx_j); };
    int64_t lo = fam.n_lo, hi = fam.n_hi;
    if (!fam.increasing) std::swap(lo, hi);   // now f(lo) <= f(hi)
    if (f(lo) <= target && target <= f(hi)) {
        while ((lo < hi ? hi - lo : lo - hi) > 1) {
            int64_t mid = lo + (hi - lo) / 2;
            if (f(mid) <= target)
                lo = mid;
            else
                hi = mid;
        }
    }   // otherwise the closest grid point is an endpoint; checked below
    RatioResult best;
    bool have = false;
    for (int64_t n : {lo, hi}) {
        CubeTuple t = fam.tuple(n);
        Rational r = detail_ratio::entry_ratio(t, fam.idx_i, fam.idx_j);
        if (!have || (r - target).abs() < (best.achieved - target).abs()) {
            best = {Rational(Int(n), Int(detail_ratio::kGridDen)), std::move(t), std::move(r)};
            have = true;
        }
    }
    if ((best.achieved - target).abs() >= eps)
        throw std::runtime_error(
            "ratio_parameter: eps below the achievable resolution of the 10^-6 grid");
    return best;
}

}  // namespace hilbert
