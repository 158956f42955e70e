#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilbert/families.hpp"

using hilbert::CubeTuple;
using hilbert::Int;
using hilbert::Rational;

namespace {
CubeTuple make(long long a0, std::vector<long long> parts) {
    CubeTuple t{Int(a0), {}};
    for (long long p : parts) t.parts.emplace_back(p);
    return t;
}
}  // namespace

TEST_CASE("family_general at sample parameters") {
    auto t = hilbert::family_general(2, 1, 3, 1);
    CHECK(hilbert::verify_cube(t).ok());
    CHECK(t.a0 == Int(239630400));

    // degenerate locus: c = d kills a2 via the (c^2-d^2)^2 factor
    auto degen = hilbert::family_general(1, 1, 5, 2);
    CHECK(degen.parts[1].is_zero());
}

TEST_CASE("family_general homogeneity") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 5; ++i) {
        Int c{1 + rng() % 20}, d{1 + rng() % 20}, G{1 + rng() % 20}, H{1 + rng() % 20};
        Int lam{2 + rng() % 5}, mu{2 + rng() % 5};
        auto base = hilbert::family_general(c, d, G, H);
        auto sc = hilbert::family_general(lam * c, lam * d, G, H);
        auto sg = hilbert::family_general(c, d, mu * G, mu * H);
        Int f20 = lam.pow(20), f8 = mu.pow(8);
        CHECK(sc.a0 == base.a0 * f20);
        CHECK(sg.a0 == base.a0 * f8);
        for (int k = 0; k < 3; ++k) {
            CHECK(sc.parts[k] == base.parts[k] * f20);
            CHECK(sg.parts[k] == base.parts[k] * f8);
        }
    }
}

TEST_CASE("family_t values and verification") {
    auto t7 = hilbert::family_t(7);
    CHECK(t7.a0 == Int(25) * Int(97464) * Int(97464));
    CHECK(t7.a0 == Int("237480782400"));
    CHECK(hilbert::verify_cube(t7).ok());

    auto t1 = hilbert::family_t(1);
    CHECK(t1.parts[0].is_zero());   // factor (t-1)

    auto t10 = hilbert::family_t(10);
    CHECK(hilbert::verify_cube(t10).ok());
    CHECK(t10.parts[0] > Int(0));
    CHECK(t10.parts[0] < t10.parts[1]);
    CHECK(t10.parts[1] < t10.parts[2]);
}

TEST_CASE("family_t equals the specialized general family up to the group") {
    // (c,d) = (3,1), (G,H) = (t,1): same orbit-and-scaling class
    for (long long t : {2, 5, 7, 11, 13}) {
        auto chain = hilbert::canonicalize(hilbert::family_general(3, 1, t, 1));
        auto direct = hilbert::canonicalize(hilbert::family_t(t));
        CHECK(chain.cube == direct.cube);
    }
}

TEST_CASE("family_t gcd divides M on a sample range") {
    Int M = Int(2).pow(45) * Int(3).pow(18) * Int(5).pow(2) * Int(13).pow(16) * Int(37).pow(16);
    for (long long t = 7; t <= 60; ++t) {
        auto cube = hilbert::family_t(t);
        Int g = gcd(gcd(cube.a0, cube.parts[0]), gcd(cube.parts[1], cube.parts[2]));
        CHECK((M % g).is_zero());
    }
    // frozen regression: gcd at t = 7
    auto c7 = hilbert::family_t(7);
    CHECK(gcd(gcd(c7.a0, c7.parts[0]), gcd(c7.parts[1], c7.parts[2])) == Int(576));
}

TEST_CASE("family_a1a2") {
    auto t = hilbert::family_a1a2(2, 1);
    CHECK(t == make(22801, {128520, 128520, 48488}));
    auto canon = hilbert::canonicalize(t);
    CHECK(canon.cube == make(22801, {48488, 128520, 128520}));
    CHECK(canon.reduced);

    // degenerate at c = d: the (c-d)^2 factor kills a0, a1, a2 (a3 = 4096
    // survives, so the tuple has zero entries and cannot verify as a 3-cube)
    auto z = hilbert::family_a1a2(1, 1);
    CHECK(z.a0.is_zero());
    CHECK(z.parts[0].is_zero());
    CHECK(z.parts[1].is_zero());
    CHECK(z.parts[2] == Int(4096));

    auto t32 = hilbert::family_a1a2(3, 2);
    CHECK(hilbert::verify_cube(t32).ok());
    for (const auto& p : t32.parts) CHECK(p > Int(0));
}

TEST_CASE("family_a1a2 positive region sample: 1/sqrt5 < c/d < sqrt5") {
    for (auto [c, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 4}, {7, 4}, {9, 5}}) {
        auto t = hilbert::family_a1a2(c, d);
        auto v = hilbert::verify_cube(t);
        CHECK(v.ok());
    }
}

TEST_CASE("family_same_prefix") {
    auto [first, second] = hilbert::family_same_prefix(2, 1);
    CHECK(first == make(4, {3360, 3360, 2112}));
    CHECK(second == make(4, {3360, 3360, 9405}));
    // the first cube is psi_2 of (1; 528, 840, 840), so canonical form divides
    // out the square gcd; the second is already reduced
    CHECK(hilbert::canonicalize(first).cube == make(1, {528, 840, 840}));
    CHECK(hilbert::canonicalize(second).cube == make(4, {3360, 3360, 9405}));

    auto [d1, d2] = hilbert::family_same_prefix(1, 1);
    CHECK(d1.parts[0].is_zero());   // factor (u - v)

    auto [p1, p2] = hilbert::family_same_prefix(3, 1);
    CHECK(hilbert::verify_cube(p1).ok());
    CHECK(hilbert::verify_cube(p2).ok());
}

TEST_CASE("same-prefix identity holds at random integer points") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        Int u{int64_t(rng() % 2001) - 1000}, v{int64_t(rng() % 2001) - 1000};
        auto [a, b] = hilbert::family_same_prefix(u, v);
        CHECK(a.a0 == b.a0);
        CHECK(a.parts[0] == b.parts[0]);
        CHECK(a.parts[1] == b.parts[1]);
    }
}

TEST_CASE("triangular family") {
    auto r1 = hilbert::family_triangular(1);
    CHECK(r1.tuple == make(1, {594, 945, 945}));
    CHECK(r1.all_member);
    CHECK(*r1.member_index[1] == Int(34));   // 1 + 594 = 595 = 34*35/2

    auto r0 = hilbert::family_triangular(0);
    CHECK(r0.tuple == make(0, {66, 105, 105}));
    CHECK(r0.all_member);

    CHECK(hilbert::family_triangular(5).all_member);
    CHECK_THROWS_AS(hilbert::family_triangular(Int(-1)), std::invalid_argument);
}

TEST_CASE("is_member_quadratic") {
    CHECK(*hilbert::is_member_quadratic(1, 2, 1, 2, 595) == Int(34));
    CHECK(!hilbert::is_member_quadratic(1, 1, 0, 1, 10));
    CHECK(*hilbert::is_member_quadratic(1, 1, 0, 1, 49) == Int(7));
    CHECK(*hilbert::is_member_quadratic(1, 1, 0, 1, 0) == Int(0));
    CHECK_THROWS_AS(hilbert::is_member_quadratic(-1, 1, 0, 1, 9), std::invalid_argument);
}

TEST_CASE("near-miss 4-dimensional family") {
    for (long long c : {2, 3, 4, 5, 7}) {
        auto r = hilbert::family_near4(c);
        CHECK(r.score.square_sums == 13);
        REQUIRE(r.score.nonsquare_masks.size() == 3);
        CHECK(r.score.nonsquare_masks[0] == 0b1000);   // a0+a4
        CHECK(r.score.nonsquare_masks[1] == 0b1011);   // a0+a1+a2+a4
        CHECK(r.score.nonsquare_masks[2] == 0b1111);   // all five
    }
    auto degen = hilbert::family_near4(1);
    CHECK(degen.tuple.a0.is_zero());   // (c-1)^4 factor
}

TEST_CASE("ratio_parameter hits targets on each branch") {
    Rational eps{Int(1), Int(1000)};
    for (auto [i, j] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3},
                                                        {1, 3}, {2, 3}, {1, 2}}) {
        auto res = hilbert::ratio_parameter(i, j, Rational(1), eps);
        CHECK((res.achieved - Rational(1)).abs() < eps);
        CHECK(hilbert::verify_cube(res.cube).ok());
        auto entry = [&](int k) { return k == 0 ? res.cube.a0 : res.cube.parts[k - 1]; };
        Rational actual{entry(i), entry(j)};
        CHECK((actual - Rational(1)).abs() < eps);
    }
}

TEST_CASE("ratio_parameter reaches extreme targets near interval ends") {
    // large a0/a1 requires the parameter pushed toward the pole
    auto big = hilbert::ratio_parameter(0, 1, Rational(Int(1000000)), Rational(Int(400000)));
    CHECK(big.achieved > Rational(Int(600000)));
    CHECK(hilbert::verify_cube(big.cube).ok());
    // small a1/a3 pins the parameter near 1
    auto small = hilbert::ratio_parameter(1, 3, Rational(Int(1), Int(1000)),
                                          Rational(Int(1), Int(10000)));
    CHECK(small.parameter > Rational(1));
    CHECK(small.parameter < Rational(Int(11), Int(10)));
}

TEST_CASE("ratio_parameter rejects unreachable eps") {
    CHECK_THROWS_AS(
        hilbert::ratio_parameter(0, 3, Rational(1), Rational(Int(1), Int("1000000000000000000"))),
        std::runtime_error);
    CHECK_THROWS_AS(hilbert::ratio_parameter(3, 0, Rational(1), Rational(1)),
                    std::invalid_argument);
}
