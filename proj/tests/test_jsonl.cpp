#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hilbert/jsonl.hpp"

using hilbert::Int;

TEST_CASE("record serialization round trip") {
    auto recs = search_cubes(hilbert::SearchConfig::for_entry_max(1u << 15));
    REQUIRE(!recs.empty());
    for (const auto& r : recs) {
        auto line = hilbert::record_to_jsonl(r);
        auto back = hilbert::record_from_jsonl(line);
        CHECK(back.cube == r.cube);
        CHECK(back.witness == r.witness);
        CHECK(back.reduced == r.reduced);
        // every parsed record re-verifies through the cube module
        auto v = hilbert::verify_cube(back.cube);
        REQUIRE(v.ok());
        CHECK(*v.witness == back.witness);
    }
}

TEST_CASE("known line shape") {
    auto recs = search_cubes(hilbert::SearchConfig::for_entry_max(1024));
    REQUIRE(recs.size() == 1);
    CHECK(hilbert::record_to_jsonl(recs[0]) ==
          "{\"a0\": 1, \"a\": [528, 840, 840], \"witness\": [1, 23, 29, 37, 29, 37, 41, 47], "
          "\"reduced\": true, \"sum\": 2209}");
}

TEST_CASE("parser rejects corrupted lines") {
    auto recs = search_cubes(hilbert::SearchConfig::for_entry_max(1024));
    auto line = hilbert::record_to_jsonl(recs[0]);
    CHECK_THROWS_AS(hilbert::record_from_jsonl(line.substr(1)), std::invalid_argument);
    auto tampered = line;
    tampered.replace(tampered.find("2209"), 4, "2210");
    CHECK_THROWS_AS(hilbert::record_from_jsonl(tampered), std::invalid_argument);
}
