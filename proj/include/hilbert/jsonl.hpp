#pragma once
// Machine-readable record output: one JSON object per cube, exact decimal
// integers of any size (formatted by hand so nothing is rounded through a
// double). Parsing accepts exactly what the writer emits.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbert/cube.hpp"
#include "hilbert/search.hpp"

namespace hilbert {

// {"a0": .., "a": [..], "witness": [..], "reduced": .., "sum": ..}
inline std::string record_to_jsonl(const CubeRecord& rec) {
    std::ostringstream os;
    os << "{\"a0\": " << rec.cube.a0.to_string() << ", \"a\": [";
    for (size_t i = 0; i < rec.cube.parts.size(); ++i) {
        if (i) os << ", ";
        os << rec.cube.parts[i].to_string();
    }
    os << "], \"witness\": [";
    for (size_t i = 0; i < rec.witness.roots.size(); ++i) {
        if (i) os << ", ";
        os << rec.witness.roots[i].to_string();
    }
    Int sum = rec.cube.a0;
    for (const auto& p : rec.cube.parts) sum += p;
    os << "], \"reduced\": " << (rec.reduced ? "true" : "false")
       << ", \"sum\": " << sum.to_string() << "}";
    return os.str();
}

namespace detail_jsonl {

inline void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}
inline void expect(const std::string& s, size_t& i, std::string_view tok) {
    skip_ws(s, i);
    if (s.compare(i, tok.size(), tok) != 0)
        throw std::invalid_argument("record parse: expected '" + std::string(tok) + "'");
    i += tok.size();
}
inline Int parse_int(const std::string& s, size_t& i) {
    skip_ws(s, i);
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
    if (j == i) throw std::invalid_argument("record parse: expected integer");
    Int v = Int::from_string(s.substr(i, j - i));
    i = j;
    return v;
}
inline std::vector<Int> parse_array(const std::string& s, size_t& i) {
    expect(s, i, "[");
    std::vector<Int> out;
    skip_ws(s, i);
    if (i < s.size() && s[i] == ']') { ++i; return out; }
    for (;;) {
        out.push_back(parse_int(s, i));
        skip_ws(s, i);
        if (i < s.size() && s[i] == ',') { ++i; continue; }
        expect(s, i, "]");
        return out;
    }
}

}  // namespace detail_jsonl

inline CubeRecord record_from_jsonl(const std::string& line) {
    using namespace detail_jsonl;
    size_t i = 0;
    CubeRecord rec;
    expect(line, i, "{");
    expect(line, i, "\"a0\":");
    rec.cube.a0 = parse_int(line, i);
    expect(line, i, ",");
    expect(line, i, "\"a\":");
    rec.cube.parts = parse_array(line, i);
    expect(line, i, ",");
    expect(line, i, "\"witness\":");
    rec.witness.roots = parse_array(line, i);
    expect(line, i, ",");
    expect(line, i, "\"reduced\":");
    skip_ws(line, i);
    if (line.compare(i, 4, "true") == 0) { rec.reduced = true; i += 4; }
    else if (line.compare(i, 5, "false") == 0) { rec.reduced = false; i += 5; }
    else throw std::invalid_argument("record parse: expected boolean");
    expect(line, i, ",");
    expect(line, i, "\"sum\":");
    Int sum = parse_int(line, i);
    expect(line, i, "}");
    Int expect_sum = rec.cube.a0;
    for (const auto& p : rec.cube.parts) expect_sum += p;
    if (sum != expect_sum) throw std::invalid_argument("record parse: sum mismatch");
    return rec;
}

}  // namespace hilbert
