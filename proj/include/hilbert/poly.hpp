#pragma once
// Sparse multivariate polynomials over Int. Monomials are exponent vectors
// of fixed arity ordered lexicographically (std::map keeps the leading term
// at rbegin). Supports the exact square-root extraction used by the
// identity checker.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbert/int.hpp"
#include "hilbert/numeric.hpp"

namespace hilbert {

class MultiPoly {
public:
    using Monomial = std::vector<uint32_t>;

    explicit MultiPoly(size_t nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(size_t nvars, Int c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(Monomial(nvars, 0), std::move(c));
        return p;
    }
    static MultiPoly variable(size_t nvars, size_t idx) {
        if (idx >= nvars) throw std::invalid_argument("MultiPoly: variable index out of range");
        MultiPoly p(nvars);
        Monomial m(nvars, 0);
        m[idx] = 1;
        p.terms_.emplace(std::move(m), Int(1));
        return p;
    }

    size_t nvars() const { return nvars_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_arity(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_arity(b);
        MultiPoly r(a.nvars_);
        for (const auto& [m1, c1] : a.terms_)
            for (const auto& [m2, c2] : b.terms_) {
                Monomial m(a.nvars_);
                for (size_t i = 0; i < a.nvars_; ++i) m[i] = m1[i] + m2[i];
                r.add_term(m, c1 * c2);
            }
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const Int& c) {
        return a * MultiPoly::constant(a.nvars_, c);
    }
    friend MultiPoly operator*(const Int& c, const MultiPoly& a) { return a * c; }
    friend MultiPoly operator+(MultiPoly a, const Int& c) { return a + constant(a.nvars_, c); }
    friend MultiPoly operator-(MultiPoly a, const Int& c) { return a - constant(a.nvars_, c); }

    MultiPoly pow(uint32_t e) const {
        MultiPoly r = constant(nvars_, 1);
        MultiPoly base = *this;
        while (e) {
            if (e & 1) r = r * base;
            if (e >>= 1) base = base * base;
        }
        return r;
    }

    Int eval(std::span<const Int> point) const {
        if (point.size() != nvars_) throw std::invalid_argument("eval: arity mismatch");
        Int total = 0;
        for (const auto& [m, c] : terms_) {
            Int v = c;
            for (size_t i = 0; i < nvars_; ++i)
                for (uint32_t k = 0; k < m[i]; ++k) v *= point[i];
            total += v;
        }
        return total;
    }

    // substitute a polynomial for variable idx (same arity result)
    MultiPoly subst(size_t idx, const MultiPoly& value) const {
        if (idx >= nvars_) throw std::invalid_argument("subst: variable index out of range");
        value.check_arity(*this);
        MultiPoly r(nvars_);
        for (const auto& [m, c] : terms_) {
            Monomial rest = m;
            uint32_t e = rest[idx];
            rest[idx] = 0;
            MultiPoly part(nvars_);
            part.terms_.emplace(std::move(rest), c);
            r += part * value.pow(e);
        }
        return r;
    }

    uint32_t degree_in(size_t idx) const {
        uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[idx]);
        return d;
    }
    // total degree over a subset of variables, max across terms
    uint32_t degree_over(std::span<const size_t> idxs) const {
        uint32_t d = 0;
        for (const auto& [m, c] : terms_) {
            uint32_t s = 0;
            for (size_t i : idxs) s += m[i];
            d = std::max(d, s);
        }
        return d;
    }
    // true when every term has the same total degree over the given variables
    bool homogeneous_over(std::span<const size_t> idxs, uint32_t expect) const {
        for (const auto& [m, c] : terms_) {
            uint32_t s = 0;
            for (size_t i : idxs) s += m[i];
            if (s != expect) return false;
        }
        return true;
    }

    // exact square root in lex order; nullopt when no polynomial square root
    // exists. Iterates w += LT(rem)/(2 LT(w)) against rem = f - w^2.
    std::optional<MultiPoly> sqrt() const {
        if (is_zero()) return MultiPoly(nvars_);
        auto lead = terms_.rbegin();
        for (uint32_t e : lead->first)
            if (e & 1) return std::nullopt;
        auto root = is_square(lead->second);
        if (!root) return std::nullopt;
        MultiPoly w(nvars_);
        Monomial half(nvars_);
        for (size_t i = 0; i < nvars_; ++i) half[i] = lead->first[i] / 2;
        w.terms_.emplace(half, *root);
        Int twice = Int(2) * *root;
        MultiPoly rem = *this - w * w;
        // each step eliminates the current leading term of rem
        for (size_t guard = 0; guard < 200000 && !rem.is_zero(); ++guard) {
            auto lt = rem.terms_.rbegin();
            Monomial q(nvars_);
            for (size_t i = 0; i < nvars_; ++i) {
                if (lt->first[i] < half[i]) return std::nullopt;
                q[i] = lt->first[i] - half[i];
            }
            auto [qc, qr] = Int::divmod(lt->second, twice);
            if (!qr.is_zero()) return std::nullopt;
            MultiPoly u(nvars_);
            u.terms_.emplace(std::move(q), std::move(qc));
            rem -= Int(2) * (u * w) + u * u;
            w += u;
        }
        if (!rem.is_zero()) return std::nullopt;
        return w;
    }

    std::string to_string(std::span<const std::string> names) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            if (!out.empty()) out += c.is_negative() ? " - " : " + ";
            else if (c.is_negative()) out += "-";
            Int a = c.abs();
            std::string vars;
            for (size_t i = 0; i < nvars_; ++i) {
                if (!m[i]) continue;
                if (!vars.empty()) vars += "*";
                vars += names[i];
                if (m[i] > 1) vars += "^" + std::to_string(m[i]);
            }
            if (vars.empty()) {
                out += a.to_string();
            } else {
                if (a != Int(1)) out += a.to_string() + "*";
                out += vars;
            }
        }
        return out;
    }

private:
    size_t nvars_;
    std::map<Monomial, Int> terms_;

    void check_arity(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
    }
    void add_term(const Monomial& m, Int c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

}  // namespace hilbert
