#pragma once
// Hilbert cube data model: H(a0; a1..ad) = {a0 + sum_{i in I} ai}, the
// square-system verification, the order-24 symmetry group, and the
// canonical (reduced, sorted) representative.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbert/int.hpp"
#include "hilbert/numeric.hpp"

namespace hilbert {

struct CubeTuple {
    Int a0;
    std::vector<Int> parts;   // (a1, .., a_d)

    int dim() const { return static_cast<int>(parts.size()); }

    // subset sum for a bitmask over parts (bit i selects a_{i+1})
    Int subset_sum(uint32_t mask) const {
        Int s = a0;
        for (size_t i = 0; i < parts.size(); ++i)
            if (mask >> i & 1u) s += parts[i];
        return s;
    }

    friend bool operator==(const CubeTuple& a, const CubeTuple& b) = default;
    friend auto operator<=>(const CubeTuple& a, const CubeTuple& b) = default;
};

struct Witness {
    std::vector<Int> roots;   // 2^d roots in binary-index order

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerifyOutcome {
    std::optional<Witness> witness;  // set on success
    uint32_t failed_mask = 0;        // first violating subset on failure
    Int failed_sum;

    bool ok() const { return witness.has_value(); }
};

// succeeds iff every subset sum is a nonnegative perfect square
inline VerifyOutcome verify_cube(const CubeTuple& t) {
    VerifyOutcome out;
    Witness w;
    const uint32_t count = 1u << t.parts.size();
    w.roots.reserve(count);
    for (uint32_t mask = 0; mask < count; ++mask) {
        Int s = t.subset_sum(mask);
        auto root = is_square(s);
        if (!root) {
            out.failed_mask = mask;
            out.failed_sum = std::move(s);
            return out;
        }
        w.roots.push_back(std::move(*root));
    }
    out.witness = std::move(w);
    return out;
}

struct Score {
    int square_sums = 0;                     // in [0, 2^d]
    std::vector<uint32_t> nonsquare_masks;   // subsets whose sum is not a square
};

inline Score square_score(const CubeTuple& t) {
    Score sc;
    const uint32_t count = 1u << t.parts.size();
    for (uint32_t mask = 0; mask < count; ++mask) {
        if (is_square(t.subset_sum(mask)))
            ++sc.square_sums;
        else
            sc.nonsquare_masks.push_back(mask);
    }
    return sc;
}

inline size_t distinct_count(const CubeTuple& t) {
    std::set<Int> vals;
    const uint32_t count = 1u << t.parts.size();
    for (uint32_t mask = 0; mask < count; ++mask) vals.insert(t.subset_sum(mask));
    return vals.size();
}

// ---- symmetry group on dimension-3 tuples ----
//   phi1 : (a0, a1, a2, a3) -> (a0+a1, -a1, a2, a3)
//   phi2 : (a0, a1, a2, a3) -> (a0+a2+a3, a1, -a3, -a2)
//   sigma: permutes (a1, a2, a3)
//   psi_m: multiplies every entry by m^2 (any dimension)
struct GroupElement {
    enum class Kind { phi1, phi2, sigma, psi } kind;
    std::array<int, 3> perm{0, 1, 2};   // for sigma
    Int m;                              // for psi

    static GroupElement Phi1() { return {Kind::phi1, {0, 1, 2}, 0}; }
    static GroupElement Phi2() { return {Kind::phi2, {0, 1, 2}, 0}; }
    static GroupElement Sigma(std::array<int, 3> p) { return {Kind::sigma, p, 0}; }
    static GroupElement Psi(Int m) {
        if (m.signum() <= 0) throw std::invalid_argument("psi: m must be positive");
        return {Kind::psi, {0, 1, 2}, std::move(m)};
    }
};

inline CubeTuple apply(const GroupElement& g, const CubeTuple& t) {
    if (g.kind != GroupElement::Kind::psi && t.dim() != 3)
        throw std::invalid_argument("group action requires dimension 3");
    switch (g.kind) {
        case GroupElement::Kind::phi1:
            return {t.a0 + t.parts[0], {-t.parts[0], t.parts[1], t.parts[2]}};
        case GroupElement::Kind::phi2:
            return {t.a0 + t.parts[1] + t.parts[2], {t.parts[0], -t.parts[2], -t.parts[1]}};
        case GroupElement::Kind::sigma:
            return {t.a0, {t.parts[g.perm[0]], t.parts[g.perm[1]], t.parts[g.perm[2]]}};
        case GroupElement::Kind::psi: {
            Int f = g.m * g.m;
            CubeTuple r{t.a0 * f, t.parts};
            for (auto& p : r.parts) p *= f;
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

// all 24 group elements built from generators (identity included)
inline std::vector<GroupElement> group_elements() {
    std::vector<GroupElement> out;
    static const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms) out.push_back(GroupElement::Sigma(p));
    out.push_back(GroupElement::Phi1());
    out.push_back(GroupElement::Phi2());
    return out;   // generators; closure is taken by orbit()
}

// orbit of t under the order-24 group (psi excluded)
inline std::vector<CubeTuple> orbit(const CubeTuple& t) {
    if (t.dim() != 3) throw std::invalid_argument("orbit requires dimension 3");
    std::set<CubeTuple> seen;
    std::vector<CubeTuple> frontier{t};
    seen.insert(t);
    auto gens = group_elements();
    while (!frontier.empty()) {
        CubeTuple cur = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& g : gens) {
            CubeTuple next = apply(g, cur);
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

struct Canonical {
    CubeTuple cube;
    bool reduced = false;      // gcd of all entries is 1 after square reduction
    bool degenerate = false;   // no all-positive orbit representative
};

// Orbit representative with 0 < a1 <= a2 <= a3, lexicographically smallest,
// after dividing out the largest m with m^2 | gcd(a0,a1,a2,a3). A square gcd
// factor is the only scaling the psi maps can undo; a residual non-square
// gcd leaves the cube non-reduced.
inline Canonical canonicalize(const CubeTuple& t_in) {
    if (t_in.dim() != 3) throw std::invalid_argument("canonicalize requires dimension 3");
    if (!verify_cube(t_in).ok())
        throw std::invalid_argument("canonicalize: tuple is not a Hilbert cube in the squares");

    CubeTuple t = t_in;
    Int g = gcd(gcd(t.a0, t.parts[0]), gcd(t.parts[1], t.parts[2]));
    if (g > Int(1)) {
        Int m = largest_square_divisor_root(g);
        if (m > Int(1)) {
            Int f = m * m;
            t.a0 /= f;
            for (auto& p : t.parts) p /= f;
            g /= f;
        }
    }

    Canonical out;
    out.reduced = g == Int(1);   // the all-zero tuple (g = 0) stays non-reduced

    std::optional<CubeTuple> best;
    for (const auto& cand : orbit(t)) {
        if (cand.a0.is_negative()) continue;
        if (cand.parts[0].signum() <= 0 || cand.parts[1].signum() <= 0 ||
            cand.parts[2].signum() <= 0)
            continue;
        if (!(cand.parts[0] <= cand.parts[1] && cand.parts[1] <= cand.parts[2])) continue;
        if (!best || cand < *best) best = cand;
    }
    if (best) {
        out.cube = std::move(*best);
    } else {
        out.degenerate = true;
        out.cube = t;
        std::sort(out.cube.parts.begin(), out.cube.parts.end());
    }
    return out;
}

// ceil(C_d1 * (k/(k-1))^d2) in exact rational arithmetic
inline Int size_lower_bound(uint64_t k, uint64_t d1, uint64_t d2, const Int& c_d1) {
    (void)d1;   // enters only through the caller's choice of c_d1
    if (k < 3) throw std::invalid_argument("size_lower_bound: k must be >= 3");
    if (c_d1.signum() <= 0) throw std::invalid_argument("size_lower_bound: C must be positive");
    Int num = c_d1 * Int(k).pow(d2);
    Int den = Int(k - 1).pow(d2);
    auto [q, r] = Int::divmod(num, den);
    return r.is_zero() ? q : q + 1;
}

// floor((a1-1)^2 / 4) - a0
inline Int extension_bound(const Int& a0, const Int& a1) {
    if (a1.signum() <= 0) throw std::invalid_argument("extension_bound: a1 must be positive");
    Int d = a1 - 1;
    return (d * d) / 4 - a0;
}

}  // namespace hilbert
