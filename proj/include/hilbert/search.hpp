#pragma once
// Exhaustive divisor-pair search for Hilbert cubes in the squares.
//
// Scan: a0 = p^2 <= a0_max; pivot a1 <= a1_max with a0 + a1 = q^2; for
// divisors d_i <= d_j of a1 with d^2 < a1, r = (a1/d - d)/2 reconstructs the
// remaining parts a2 = r_i^2 - a0, a3 = r_j^2 - a0; two square tests close
// the system. Hot loop runs in uint64 (bounds are checked so nothing can
// overflow), results are canonicalized exactly.

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hilbert/cube.hpp"
#include "hilbert/int.hpp"
#include "hilbert/numeric.hpp"

namespace hilbert {

struct SearchConfig {
    uint64_t a0_max = 0;
    uint64_t a1_max = 0;
    std::optional<uint64_t> entry_max;   // filter: max canonical entry
    bool reduced_only = false;
    unsigned worker_count = 1;
    std::optional<std::filesystem::path> checkpoint_path;
    // called after each completed p; return false to interrupt (a valid
    // checkpoint is left behind)
    std::function<bool(uint64_t)> progress;

    static SearchConfig for_entry_max(uint64_t n, bool reduced = true) {
        SearchConfig cfg;
        cfg.a0_max = n;
        cfg.a1_max = n;
        cfg.entry_max = n;
        cfg.reduced_only = reduced;
        return cfg;
    }
};

struct Provenance {
    uint64_t p = 0, q = 0, di = 0, dj = 0;
};

struct CubeRecord {
    CubeTuple cube;      // canonical form
    Witness witness;     // roots for the canonical form
    bool reduced = false;
    Provenance prov;     // first discovery coordinates
};

struct SearchInterrupted : std::runtime_error {
    uint64_t p_completed;
    explicit SearchInterrupted(uint64_t p)
        : std::runtime_error("search interrupted at p=" + std::to_string(p)),
          p_completed(p) {}
};

// c1 = r_i^2 + r_j^2 - a0 and c2 = c1 + a1; empty on parity failure
inline std::optional<std::pair<Int, Int>> c1c2(const Int& a0, const Int& a1,
                                               const Int& di, const Int& dj) {
    if (a1.signum() <= 0) throw std::invalid_argument("c1c2: a1 must be positive");
    if (di.signum() <= 0 || dj.signum() <= 0 || di > dj)
        throw std::invalid_argument("c1c2: need 0 < di <= dj");
    if (!(a1 % di).is_zero() || !(a1 % dj).is_zero())
        throw std::invalid_argument("c1c2: di and dj must divide a1");
    if (di * di >= a1 || dj * dj >= a1)
        throw std::invalid_argument("c1c2: divisors must satisfy d^2 < a1");
    Int ti = a1 / di - di, tj = a1 / dj - dj;
    if (ti.odd() || tj.odd()) return std::nullopt;
    Int ri = ti / 2, rj = tj / 2;
    Int c1 = ri * ri + rj * rj - a0;
    return std::make_pair(c1, c1 + a1);
}

namespace detail {

struct RawHit {
    uint64_t p, q, di, dj;
    uint64_t a0, a1, a2, a3;
};

inline constexpr uint64_t kA1Cap = 1ull << 31;
inline constexpr uint64_t kA0Cap = 1ull << 62;

// all raw hits for one p, in (q, di, dj) order
inline void scan_p(uint64_t p, uint64_t a1_max, std::vector<RawHit>& out) {
    const uint64_t a0 = p * p;
    std::vector<uint64_t> divs;
    for (uint64_t q = p + 1;; ++q) {
        const uint64_t a1 = q * q - a0;
        if (a1 > a1_max) break;
        divs.clear();
        for (uint64_t d = 1; d * d < a1; ++d)
            if (a1 % d == 0) divs.push_back(d);
        for (size_t i = 0; i < divs.size(); ++i) {
            const uint64_t ti = a1 / divs[i] - divs[i];
            if (ti & 1) continue;
            const uint64_t ri = ti / 2;
            const uint64_t ri2 = ri * ri;
            if (ri2 <= a0) continue;   // a2 must be positive
            for (size_t j = i; j < divs.size(); ++j) {
                const uint64_t tj = a1 / divs[j] - divs[j];
                if (tj & 1) continue;
                const uint64_t rj = tj / 2;
                const uint64_t rj2 = rj * rj;
                if (rj2 <= a0) continue;
                const uint64_t c1 = ri2 + rj2 - a0;
                if (!is_square_u64(c1)) continue;
                if (!is_square_u64(c1 + a1)) continue;
                out.push_back({p, q, divs[i], divs[j], a0, a1, ri2 - a0, rj2 - a0});
            }
        }
    }
}

inline void write_file_atomic(const std::filesystem::path& path, const std::string& data) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc | std::ios::binary);
        os << data;
    }
    std::filesystem::rename(tmp, path);
}

struct CheckpointState {
    std::filesystem::path checkpoint;
    std::filesystem::path partial;
    uint64_t a0_max = 0, a1_max = 0;

    std::optional<uint64_t> load(std::vector<RawHit>& hits) const {
        std::ifstream cs(checkpoint);
        if (!cs) return std::nullopt;
        std::string line;
        std::getline(cs, line);
        const std::string tag = "p_completed=";
        if (line.rfind(tag, 0) != 0) throw std::runtime_error("bad checkpoint file");
        uint64_t p_done = std::stoull(line.substr(tag.size()));
        std::ifstream ps(partial);
        if (ps) {
            std::getline(ps, line);
            std::ostringstream expect;
            expect << "# search a0_max=" << a0_max << " a1_max=" << a1_max;
            if (line != expect.str())
                throw std::runtime_error("checkpoint belongs to a different search");
            RawHit h;
            while (ps >> h.p >> h.q >> h.di >> h.dj >> h.a0 >> h.a1 >> h.a2 >> h.a3)
                if (h.p <= p_done) hits.push_back(h);
        }
        return p_done;
    }

    void save(uint64_t p_done, const std::vector<RawHit>& hits) const {
        std::ostringstream ps;
        ps << "# search a0_max=" << a0_max << " a1_max=" << a1_max << "\n";
        for (const auto& h : hits)
            ps << h.p << ' ' << h.q << ' ' << h.di << ' ' << h.dj << ' '
               << h.a0 << ' ' << h.a1 << ' ' << h.a2 << ' ' << h.a3 << "\n";
        write_file_atomic(partial, ps.str());
        write_file_atomic(checkpoint, "p_completed=" + std::to_string(p_done) + "\n");
    }
};

// raw hits over p in [p_lo, p_max], merged in p order; deterministic for any
// worker count
inline std::vector<RawHit> run_scan(uint64_t p_lo, uint64_t p_max, uint64_t a1_max,
                                    unsigned workers,
                                    const std::function<bool(uint64_t)>& progress,
                                    const CheckpointState* ckpt,
                                    std::vector<RawHit> hits) {
    if (p_lo > p_max) return hits;
    if (workers <= 1) {
        std::vector<RawHit> batch;
        for (uint64_t p = p_lo; p <= p_max; ++p) {
            batch.clear();
            scan_p(p, a1_max, batch);
            hits.insert(hits.end(), batch.begin(), batch.end());
            if (ckpt) ckpt->save(p, hits);
            if (progress && !progress(p)) throw SearchInterrupted(p);
        }
        return hits;
    }

    std::mutex mu;
    std::condition_variable cv;
    std::map<uint64_t, std::vector<RawHit>> done;
    std::atomic<uint64_t> next{p_lo};
    std::atomic<bool> stop{false};
    auto work = [&] {
        for (;;) {
            uint64_t p = next.fetch_add(1);
            if (p > p_max || stop.load()) return;
            std::vector<RawHit> batch;
            scan_p(p, a1_max, batch);
            std::lock_guard lk(mu);
            done.emplace(p, std::move(batch));
            cv.notify_one();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);

    std::optional<uint64_t> interrupted;
    for (uint64_t frontier = p_lo; frontier <= p_max && !interrupted; ++frontier) {
        std::vector<RawHit> batch;
        {
            std::unique_lock lk(mu);
            cv.wait(lk, [&] { return done.count(frontier) > 0; });
            batch = std::move(done[frontier]);
            done.erase(frontier);
        }
        hits.insert(hits.end(), batch.begin(), batch.end());
        if (ckpt) ckpt->save(frontier, hits);
        if (progress && !progress(frontier)) {
            stop.store(true);
            interrupted = frontier;
        }
    }
    for (auto& t : pool) t.join();
    if (interrupted) throw SearchInterrupted(*interrupted);
    return hits;
}

inline std::vector<CubeRecord> assemble(const std::vector<RawHit>& hits,
                                        const std::optional<uint64_t>& entry_max,
                                        bool reduced_only) {
    std::vector<CubeRecord> records;
    std::set<CubeTuple> seen;
    for (const auto& h : hits) {
        CubeTuple raw{Int(h.a0), {Int(h.a1), Int(h.a2), Int(h.a3)}};
        Canonical canon = canonicalize(raw);
        if (!seen.insert(canon.cube).second) continue;
        if (reduced_only && !canon.reduced) continue;
        if (entry_max) {
            Int cap{*entry_max};
            if (canon.cube.a0 > cap || canon.cube.parts[2] > cap) continue;
        }
        auto verified = verify_cube(canon.cube);
        if (!verified.ok())
            throw std::logic_error("search: canonical form failed re-verification");
        records.push_back({canon.cube, std::move(*verified.witness), canon.reduced,
                           {h.p, h.q, h.di, h.dj}});
    }
    std::sort(records.begin(), records.end(), [](const CubeRecord& a, const CubeRecord& b) {
        Int sa = a.cube.a0 + a.cube.parts[0] + a.cube.parts[1] + a.cube.parts[2];
        Int sb = b.cube.a0 + b.cube.parts[0] + b.cube.parts[1] + b.cube.parts[2];
        if (sa != sb) return sa < sb;
        return a.cube < b.cube;
    });
    return records;
}

}  // namespace detail

inline std::vector<CubeRecord> search_cubes(const SearchConfig& cfg_in) {
    SearchConfig cfg = cfg_in;
    if (cfg.entry_max && cfg.a0_max == 0 && cfg.a1_max == 0) {
        cfg.a0_max = *cfg.entry_max;
        cfg.a1_max = *cfg.entry_max;
    }
    if (cfg.a1_max > detail::kA1Cap)
        throw std::invalid_argument("search: a1_max above the supported 2^31 desk-scale cap");
    if (cfg.a0_max > detail::kA0Cap)
        throw std::invalid_argument("search: a0_max above the supported 2^62 cap");
    if (cfg.a0_max == 0 || cfg.a1_max == 0) return {};

    uint64_t p_max = isqrt_u64(cfg.a0_max);
    uint64_t p_lo = 0;
    std::vector<detail::RawHit> hits;
    std::optional<detail::CheckpointState> ckpt;
    if (cfg.checkpoint_path) {
        auto partial = *cfg.checkpoint_path;
        partial += ".partial";
        ckpt = detail::CheckpointState{*cfg.checkpoint_path, partial, cfg.a0_max, cfg.a1_max};
        if (auto p_done = ckpt->load(hits)) p_lo = *p_done + 1;
    }
    hits = detail::run_scan(p_lo, p_max, cfg.a1_max, cfg.worker_count, cfg.progress,
                            ckpt ? &*ckpt : nullptr, std::move(hits));
    return detail::assemble(hits, cfg.entry_max, cfg.reduced_only);
}

struct CountRow {
    uint64_t n = 0;
    uint64_t h3 = 0;   // reduced cubes with every entry <= n
    uint64_t c3 = 0;   // reduced cubes whose smallest part is <= n
};

// One wide scan serves all thresholds. A cube whose smallest part is s has
// a0 = p^2 with 2p + 1 <= s, so scanning p <= (max_n - 1) / 2 is exhaustive
// for the c3 column; the h3 column only needs a0 <= max_n.
inline std::vector<CountRow> count_tables(const std::vector<uint64_t>& thresholds,
                                          unsigned workers = 1) {
    if (thresholds.empty()) return {};
    for (size_t i = 1; i < thresholds.size(); ++i)
        if (thresholds[i] < thresholds[i - 1])
            throw std::invalid_argument("count_tables: thresholds must ascend");
    const uint64_t max_n = thresholds.back();
    SearchConfig cfg;
    cfg.a1_max = max_n;
    const uint64_t p_max = max_n >= 1 ? (max_n - 1) / 2 : 0;
    cfg.a0_max = std::max(max_n, p_max * p_max);
    cfg.worker_count = workers;
    auto records = search_cubes(cfg);

    std::vector<CountRow> rows;
    for (uint64_t n : thresholds) {
        CountRow row{n, 0, 0};
        Int cap{n};
        for (const auto& r : records) {
            if (!r.reduced) continue;
            if (r.cube.parts[0] <= cap) ++row.c3;
            if (r.cube.a0 <= cap && r.cube.parts[2] <= cap) ++row.h3;
        }
        rows.push_back(row);
    }
    return rows;
}

// dimension-2 count: a0 = p^2 <= N, 1 <= a1 <= a2 <= N with a0 + a1,
// a0 + a2, a0 + a1 + a2 all square
inline uint64_t count_H2(uint64_t n) {
    if (n > detail::kA1Cap) throw std::invalid_argument("count_H2: N above 2^31 cap");
    uint64_t count = 0;
    for (uint64_t p = 0; p * p <= n; ++p) {
        const uint64_t a0 = p * p;
        for (uint64_t q = p + 1; q * q - a0 <= n; ++q) {
            const uint64_t a1 = q * q - a0;
            for (uint64_t r = q; r * r - a0 <= n; ++r) {
                if (is_square_u64(r * r + a1)) ++count;
            }
        }
    }
    return count;
}

// reduced canonical cubes with a0 = n^2 and smallest part <= a1_max
inline std::vector<CubeRecord> search_fixed_a0(uint64_t n, uint64_t a1_max,
                                               unsigned workers = 1) {
    if (n == 0) throw std::invalid_argument("search_fixed_a0: n must be positive");
    if (a1_max > detail::kA1Cap)
        throw std::invalid_argument("search_fixed_a0: a1_max above 2^31 cap");
    (void)workers;   // single p value; nothing to parallelize
    std::vector<detail::RawHit> hits;
    detail::scan_p(n, a1_max, hits);
    auto records = detail::assemble(hits, std::nullopt, true);
    Int a0{n * n};
    Int cap{a1_max};
    std::erase_if(records, [&](const CubeRecord& r) {
        return r.cube.a0 != a0 || r.cube.parts[0] > cap;
    });
    return records;
}

struct PrefixGroup {
    Int a0, a1, a2;
    std::vector<Int> a3_values;   // >= 2 distinct values, ascending
};

// groups of canonical records sharing (a0, a1, a2) with distinct a3
inline std::vector<PrefixGroup> find_same_prefix_pairs(const std::vector<CubeRecord>& records) {
    std::map<std::tuple<Int, Int, Int>, std::set<Int>> buckets;
    for (const auto& r : records)
        buckets[{r.cube.a0, r.cube.parts[0], r.cube.parts[1]}].insert(r.cube.parts[2]);
    std::vector<PrefixGroup> out;
    for (auto& [key, vals] : buckets) {
        if (vals.size() < 2) continue;
        out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                       {vals.begin(), vals.end()}});
    }
    return out;   // map iteration is already sorted by (a0, a1, a2)
}

// score of (a0; a1, a2, a3, X) for each X in [x_min, x_max]; emits rows with
// score >= min_score. The 8 base sums are square by assumption, so only the
// 8 shifted sums need testing.
inline std::vector<std::pair<Int, int>> extend4_scan(const CubeTuple& base,
                                                     const Int& x_min, const Int& x_max,
                                                     int min_score = 12) {
    if (base.dim() != 3) throw std::invalid_argument("extend4_scan: base must be a 3-cube");
    auto v = verify_cube(base);
    if (!v.ok()) throw std::invalid_argument("extend4_scan: base does not verify");
    std::vector<Int> sums;
    for (uint32_t mask = 0; mask < 8; ++mask) sums.push_back(base.subset_sum(mask));
    std::vector<std::pair<Int, int>> out;
    for (Int x = x_min; x <= x_max; x += 1) {
        int score = 8;
        for (const auto& s : sums)
            if (is_square(s + x)) ++score;
        if (score >= min_score) out.emplace_back(x, score);
    }
    return out;
}

}  // namespace hilbert
