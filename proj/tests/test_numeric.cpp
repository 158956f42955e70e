#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilbert/numeric.hpp"

using hilbert::Int;

TEST_CASE("isqrt basics") {
    CHECK(hilbert::isqrt(Int(0)) == Int(0));
    CHECK(hilbert::isqrt(Int(1)) == Int(1));
    CHECK(hilbert::isqrt(Int(16394401)) == Int(4049));
    CHECK(hilbert::isqrt(Int(8099)) == Int(89));   // 89^2 = 7921 <= 8099 < 8100
    CHECK_THROWS_AS(hilbert::isqrt(Int(-1)), std::domain_error);
}

TEST_CASE("isqrt invariant r^2 <= n < (r+1)^2") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        Int n{uint64_t(rng() >> (rng() % 40))};
        if (i % 3 == 0) n = n * n + Int(uint64_t(rng() % 1000));   // multi-limb
        Int r = hilbert::isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
}

namespace {
struct SqrtVec { const char *n, *root; };
const SqrtVec kSqrtVectors[] = {
    {"70827672650425457646630645402596247385324805514247", "8415917813906303686405145"},
    {"59636641250529511247051380167776884700404935422733", "7722476367754679716942268"},
    {"85706624027491355230864881324760497504936052760241", "9257787210100011541032972"},
    {"9873586687607164401945406876042854966545703613828", "3142226390253758339462137"},
    {"70714416645454595033299344535033889940736696386644", "8409186443732508600401998"},
    {"81965928619624092705806731447728176716153836611025", "9053503665411755534460105"},
};
}  // namespace

TEST_CASE("isqrt against frozen wide vectors") {
    for (const auto& v : kSqrtVectors) CHECK(hilbert::isqrt(Int(v.n)) == Int(v.root));
}

TEST_CASE("is_square") {
    CHECK(*hilbert::is_square(Int(1369)) == Int(37));
    CHECK(!hilbert::is_square(Int(2)));
    CHECK(*hilbert::is_square(Int(16129)) == Int(127));
    CHECK(!hilbert::is_square(Int(-4)));
    CHECK(*hilbert::is_square(Int(0)) == Int(0));
    CHECK(*hilbert::is_square(Int("81965928619624092705806731447728176716153836611025")) ==
          Int("9053503665411755534460105"));
    CHECK(!hilbert::is_square(Int("81965928619624092705806731447728176716153836611026")));
}

TEST_CASE("small_divisors") {
    auto eq = [](const std::vector<Int>& got, std::vector<long long> want) {
        if (got.size() != want.size()) return false;
        for (size_t i = 0; i < got.size(); ++i)
            if (got[i] != Int(want[i])) return false;
        return true;
    };
    CHECK(eq(hilbert::small_divisors(Int(8099)), {1, 7, 13, 89}));
    CHECK(eq(hilbert::small_divisors(Int(3360)),
             {1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 14, 15, 16, 20, 21, 24, 28, 30, 32, 35,
              40, 42, 48, 56}));
    CHECK(eq(hilbert::small_divisors(Int(4)), {1}));
    CHECK(eq(hilbert::small_divisors(Int(1)), {}));
    CHECK_THROWS_AS(hilbert::small_divisors(Int(0)), std::domain_error);
}

TEST_CASE("small_divisors equals brute-force filter up to 1e5") {
    for (uint64_t n = 1; n <= 100000; n += 997) {   // sampled lattice
        auto fast = hilbert::small_divisors_u64(n);
        std::vector<uint64_t> brute;
        for (uint64_t d = 1; d <= hilbert::isqrt_u64(n); ++d)
            if (n % d == 0 && d * d < n) brute.push_back(d);
        CHECK(fast == brute);
    }
}

TEST_CASE("tau") {
    CHECK(hilbert::tau(Int(1)) == Int(1));
    CHECK(hilbert::tau(Int(12)) == Int(6));
    CHECK(hilbert::tau(Int(8099)) == Int(8));   // 7 * 13 * 89
    CHECK_THROWS_AS(hilbert::tau(Int(0)), std::domain_error);
    // brute-force comparison over a sample
    for (uint64_t n = 1; n <= 100000; n += 1013) {
        uint64_t brute = 0;
        for (uint64_t d = 1; d <= n; ++d)
            if (n % d == 0) ++brute;
        CHECK(hilbert::tau_u64(n) == brute);
    }
}

TEST_CASE("is_square iff isqrt squares back") {
    for (uint64_t n = 0; n < 3000; ++n) {
        bool is_sq = hilbert::is_square_u64(n).has_value();
        uint64_t r = hilbert::isqrt_u64(n);
        CHECK(is_sq == (r * r == n));
    }
}

TEST_CASE("largest square divisor root") {
    CHECK(hilbert::largest_square_divisor_root(Int(4)) == Int(2));
    CHECK(hilbert::largest_square_divisor_root(Int(12)) == Int(2));
    CHECK(hilbert::largest_square_divisor_root(Int(7)) == Int(1));
    CHECK(hilbert::largest_square_divisor_root(Int(1)) == Int(1));
    CHECK(hilbert::largest_square_divisor_root(Int(576)) == Int(24));
    // big square times squarefree
    Int m = Int("123456789123456789");
    CHECK(hilbert::largest_square_divisor_root(m * m * Int(10)) == m);
}
