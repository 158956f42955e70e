#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hilbert/numeric.hpp"

#include "hilbert/int.hpp"

using hilbert::Int;

TEST_CASE("construction and string round trip") {
    CHECK(Int(0).to_string() == "0");
    CHECK(Int(-1).to_string() == "-1");
    CHECK(Int(1234567890123456789ll).to_string() == "1234567890123456789");
    CHECK(Int::from_string("-000123").to_string() == "-123");
    CHECK(Int::from_string("99999999999999999999999999999999").to_string() ==
          "99999999999999999999999999999999");
    CHECK_THROWS_AS(Int::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Int::from_string("12x"), std::invalid_argument);
}

TEST_CASE("comparisons") {
    CHECK(Int(-5) < Int(3));
    CHECK(Int(3) < Int(5));
    CHECK(Int(-5) < Int(-3));
    CHECK(Int::from_string("100000000000000000000") > Int::from_string("99999999999999999999"));
    CHECK(Int(0) == -Int(0));
}

TEST_CASE("small arithmetic matches built-in") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 2000; ++iter) {
        long long a = static_cast<long long>(rng() % 2000001) - 1000000;
        long long b = static_cast<long long>(rng() % 2000001) - 1000000;
        CHECK(Int(a) + Int(b) == Int(a + b));
        CHECK(Int(a) - Int(b) == Int(a - b));
        CHECK(Int(a) * Int(b) == Int(a * b));
        if (b != 0) {
            CHECK(Int(a) / Int(b) == Int(a / b));
            CHECK(Int(a) % Int(b) == Int(a % b));
        }
    }
}

namespace {
struct MulDivVec {
    const char *a, *b, *prod, *quot, *rem;
};
// independently generated with arbitrary-precision arithmetic
const MulDivVec kVectors[] = {
    {"392535018392410783709490494531629109759539613", "94807740763120220126", "37215358264194309197905586250228675436795299658093904400976851238", "4140326678315966371094383", "67517250151277387355"},
    {"-124083129829235826085733402574291325249400173", "549661728570919411", "-68203747628427576482935546615269967912735617208475918872458103", "-225744532281414162201152820", "-210077733734011153"},
    {"801035589797353315707662497516923273543133720", "-26185518834160970230", "-20975532523471836374943209983465597658084335504675073629829155600", "-30590785497530123520570469", "6678175489416995850"},
    {"9275372282735663422461778230522260447960492", "-44689347821370811514", "-414510338115876230926656518837452689234849897461698480250704888", "-207552196102985073329446", "2620324401555919248"},
    {"480403759492865263264130608839202594421047600", "-7008421793232065041", "-3366872177580412457216281190713892159052234730211973582556951600", "-68546639124486551097238509", "4660446707843183731"},
    {"-178157737929356985835299642605171662651363683", "-47076840423964156136", "8387103398794765145369142107740167592976220471807192232732008888", "3784403038201071806558546", "-41972196677482225427"},
    {"65402634872963332657068194871800618162149823", "34224571169202446385", "2238377131863095379448758667210276988218962172891945662494739855", "1910984787789451957150108", "18519908151895190243"},
    {"-299018486870993556220608329687355168548824129", "75104120133203494571", "-22457520360007831958168339409246469983138105564453564815685303659", "-3981385925840806571767522", "-58504018929947701067"},
};
}  // namespace

TEST_CASE("large multiply and divide against frozen vectors") {
    for (const auto& v : kVectors) {
        Int a(v.a), b(v.b);
        CHECK((a * b).to_string() == v.prod);
        auto [q, r] = Int::divmod(a, b);
        CHECK(q.to_string() == v.quot);
        CHECK(r.to_string() == v.rem);
        CHECK(q * b + r == a);
    }
}

TEST_CASE("division invariants on random multi-limb values") {
    std::mt19937_64 rng(99);
    auto random_int = [&](int limbs) {
        Int v = 0;
        for (int i = 0; i < limbs; ++i) v = v * Int(1ull << 32) + Int(uint64_t(rng() & 0xFFFFFFFFull));
        return rng() & 1 ? -v : v;
    };
    for (int iter = 0; iter < 400; ++iter) {
        Int a = random_int(1 + int(rng() % 6));
        Int b = random_int(1 + int(rng() % 4));
        if (b.is_zero()) continue;
        auto [q, r] = Int::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        // truncated semantics: remainder carries the dividend sign
        if (!r.is_zero()) CHECK(r.is_negative() == a.is_negative());
    }
    CHECK_THROWS_AS(Int(1) / Int(0), std::domain_error);
}

TEST_CASE("division with boundary-value limbs") {
    // limb patterns chosen to stress the trial-quotient correction paths of
    // the long division, which uniform random operands almost never reach
    const uint32_t edge[] = {0u,          1u,          2u,          0x7FFFFFFFu,
                             0x80000000u, 0x80000001u, 0xFFFFFFFEu, 0xFFFFFFFFu};
    auto build = [](std::initializer_list<uint32_t> limbs) {
        Int v = 0;
        for (auto it = std::rbegin(limbs); it != std::rend(limbs); ++it)
            v = v * Int(1ull << 32) + Int(uint64_t(*it));
        return v;
    };
    std::vector<Int> divisors;
    for (uint32_t hi : edge)
        for (uint32_t lo : edge) {
            Int v = build({lo, hi});
            if (!v.is_zero()) divisors.push_back(v);
        }
    std::mt19937_64 rng(2718);
    for (int iter = 0; iter < 40; ++iter) {
        uint32_t l0 = edge[rng() % 8], l1 = edge[rng() % 8], l2 = edge[rng() % 8],
                 l3 = edge[rng() % 8];
        Int a = build({l0, l1, l2, l3});
        for (const Int& b : divisors) {
            auto [q, r] = Int::divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.abs() < b.abs());
        }
    }
    // a classic add-back trigger: numerator just below divisor * B^k
    Int b = build({0xFFFFFFFFu, 0x80000000u});
    Int shifted = b * Int(1ull << 32) * Int(1ull << 32);
    for (long long delta : {-3ll, -2ll, -1ll, 0ll, 1ll, 2ll, 3ll}) {
        Int a = shifted + Int(delta);
        auto [q, r] = Int::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
    }
}

TEST_CASE("isqrt boundaries around exact squares") {
    Int x("987654321987654321987654321");
    Int sq = x * x;
    CHECK(hilbert::isqrt(sq - 1) == x - 1);
    CHECK(hilbert::isqrt(sq) == x);
    CHECK(hilbert::isqrt(sq + 1) == x);
    CHECK(*hilbert::is_square(sq) == x);
    CHECK(!hilbert::is_square(sq - 1));
    CHECK(!hilbert::is_square(sq + 1));
}

TEST_CASE("pow and bit length") {
    CHECK(Int(2).pow(100).to_string() == "1267650600228229401496703205376");
    CHECK(Int(10).pow(0) == Int(1));
    CHECK(Int(0).pow(5) == Int(0));
    CHECK(Int(2).pow(100).bit_length() == 101);
    CHECK(Int(255).bit_length() == 8);
}

TEST_CASE("fits and conversions") {
    CHECK(Int(42).to_uint64() == 42);
    CHECK(Int(-42).to_int64() == -42);
    CHECK(!Int("18446744073709551616").fits_uint64());
    CHECK(Int("18446744073709551615").fits_uint64());
    CHECK(Int("18446744073709551615").to_uint64() == 18446744073709551615ull);
    CHECK(!Int("9223372036854775808").fits_int64());
    CHECK(Int("-9223372036854775808").fits_int64());
}

TEST_CASE("gcd") {
    using hilbert::gcd;
    CHECK(gcd(Int(12), Int(18)) == Int(6));
    CHECK(gcd(Int(-12), Int(18)) == Int(6));
    CHECK(gcd(Int(0), Int(5)) == Int(5));
    CHECK(gcd(Int("123456789012345678901234567890"), Int("9876543210")) ==
          Int(hilbert::gcd(Int("123456789012345678901234567890"), Int("9876543210"))));
    // gcd(a,b) divides both
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        Int a{uint64_t(rng())}, b{uint64_t(rng())};
        Int g = gcd(a, b);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
    }
}
