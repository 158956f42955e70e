// Command-line toolkit for Hilbert cubes in the set of squares: verify
// candidate tuples, run the divisor-pair search with checkpointing, count
// H2/H3/C3, generate the parametric families, check the symbolic identities
// and curve constructions, scan for dimension-4 extensions, and fit a power
// law to count data.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hilbert/ecurve.hpp"
#include "hilbert/families.hpp"
#include "hilbert/fit.hpp"
#include "hilbert/identities.hpp"
#include "hilbert/jsonl.hpp"
#include "hilbert/search.hpp"

namespace {

using hilbert::CubeTuple;
using hilbert::Int;

std::vector<Int> parse_ints(const std::string& csv) {
    std::vector<Int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty() && item.front() == ' ') item.erase(0, item.find_first_not_of(' '));
        out.push_back(Int::from_string(item));
    }
    return out;
}

std::string tuple_json(const CubeTuple& t) {
    std::string s = "\"a0\": " + t.a0.to_string() + ", \"a\": [";
    for (size_t i = 0; i < t.parts.size(); ++i) {
        if (i) s += ", ";
        s += t.parts[i].to_string();
    }
    return s + "]";
}

int run_verify(const std::vector<std::string>& values) {
    CubeTuple t;
    t.a0 = Int::from_string(values[0]);
    for (size_t i = 1; i < values.size(); ++i) t.parts.push_back(Int::from_string(values[i]));
    auto v = hilbert::verify_cube(t);
    if (!v.ok()) {
        std::cerr << "{\"valid\": false, " << tuple_json(t)
                  << ", \"first_violation\": {\"mask\": " << v.failed_mask << ", \"subset\": [";
        bool first = true;
        for (size_t i = 0; i < t.parts.size(); ++i)
            if (v.failed_mask >> i & 1) {
                if (!first) std::cerr << ", ";
                std::cerr << i + 1;
                first = false;
            }
        std::cerr << "], \"sum\": " << v.failed_sum.to_string() << "}}\n";
        return 1;
    }
    Int g = t.a0;
    for (const auto& p : t.parts) g = gcd(g, p);
    hilbert::CubeRecord rec{t, *v.witness, g == Int(1), {}};
    std::cout << hilbert::record_to_jsonl(rec) << "\n";
    return 0;
}

int run_search(uint64_t a0_max, uint64_t a1_max, uint64_t entry_max, bool reduced,
               unsigned threads, const std::string& checkpoint, const std::string& output) {
    hilbert::SearchConfig cfg;
    cfg.a0_max = a0_max;
    cfg.a1_max = a1_max;
    if (entry_max) cfg.entry_max = entry_max;
    cfg.reduced_only = reduced;
    cfg.worker_count = threads;
    if (!checkpoint.empty()) cfg.checkpoint_path = checkpoint;
    auto records = search_cubes(cfg);
    if (output.empty()) {
        for (const auto& r : records) std::cout << hilbert::record_to_jsonl(r) << "\n";
    } else {
        std::ofstream os(output, std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open output file: " + output);
        for (const auto& r : records) os << hilbert::record_to_jsonl(r) << "\n";
    }
    return 0;
}

int run_count(const std::string& thresholds_csv, bool plot, uint64_t plot_max,
              uint64_t plot_min, unsigned threads) {
    std::vector<uint64_t> thresholds;
    if (plot) {
        if (plot_max < plot_min) throw CLI::ValidationError("--max must be >= --min");
        for (uint64_t n = plot_min; n < plot_max; n *= 2) thresholds.push_back(n);
        thresholds.push_back(plot_max);
    } else {
        for (const auto& v : parse_ints(thresholds_csv)) thresholds.push_back(v.to_uint64());
    }
    for (const auto& row : hilbert::count_tables(thresholds, threads))
        std::cout << row.n << "," << row.h3 << "," << row.c3 << "\n";
    return 0;
}

int run_count_h2(uint64_t n) {
    std::cout << n << "," << hilbert::count_H2(n) << "\n";
    return 0;
}

void print_tuple_result(const char* family, const std::string& params, const CubeTuple& t) {
    auto v = hilbert::verify_cube(t);
    std::cout << "{\"family\": \"" << family << "\", \"params\": [" << params << "], "
              << tuple_json(t) << ", \"verified\": " << (v.ok() ? "true" : "false");
    if (v.ok() && t.dim() == 3) {
        bool degenerate = false;
        for (const auto& p : t.parts) degenerate |= p.is_zero();
        if (!degenerate) {
            auto canon = hilbert::canonicalize(t);
            std::cout << ", \"canonical\": {" << tuple_json(canon.cube)
                      << "}, \"reduced\": " << (canon.reduced ? "true" : "false");
        } else {
            std::cout << ", \"degenerate\": true";
        }
    }
    std::cout << "}\n";
}

int run_family(const std::string& name, const std::string& params_csv) {
    auto params = parse_ints(params_csv);
    auto need = [&](size_t n) {
        if (params.size() != n)
            throw CLI::ValidationError("--family " + name + " needs " + std::to_string(n) +
                                       " parameters");
    };
    std::string plist;
    for (size_t i = 0; i < params.size(); ++i)
        plist += (i ? ", " : "") + params[i].to_string();

    if (name == "general") {
        need(4);
        print_tuple_result("general", plist,
                           hilbert::family_general(params[0], params[1], params[2], params[3]));
    } else if (name == "t") {
        need(1);
        print_tuple_result("t", plist, hilbert::family_t(params[0]));
    } else if (name == "a1a2") {
        need(2);
        print_tuple_result("a1a2", plist, hilbert::family_a1a2(params[0], params[1]));
    } else if (name == "pair") {
        need(2);
        auto [first, second] = hilbert::family_same_prefix(params[0], params[1]);
        auto v1 = hilbert::verify_cube(first), v2 = hilbert::verify_cube(second);
        std::cout << "{\"family\": \"pair\", \"params\": [" << plist << "], \"first\": {"
                  << tuple_json(first) << ", \"verified\": " << (v1.ok() ? "true" : "false")
                  << "}, \"second\": {" << tuple_json(second)
                  << ", \"verified\": " << (v2.ok() ? "true" : "false")
                  << "}, \"shared_prefix\": "
                  << ((first.a0 == second.a0 && first.parts[0] == second.parts[0] &&
                       first.parts[1] == second.parts[1])
                          ? "true"
                          : "false")
                  << "}\n";
    } else if (name == "triangular") {
        need(1);
        auto r = hilbert::family_triangular(params[0]);
        std::cout << "{\"family\": \"triangular\", \"params\": [" << plist << "], "
                  << tuple_json(r.tuple) << ", \"member_index\": [";
        for (int i = 0; i < 8; ++i) {
            if (i) std::cout << ", ";
            if (r.member_index[i])
                std::cout << r.member_index[i]->to_string();
            else
                std::cout << "null";
        }
        std::cout << "], \"all_member\": " << (r.all_member ? "true" : "false") << "}\n";
    } else if (name == "near4") {
        need(1);
        auto r = hilbert::family_near4(params[0]);
        std::cout << "{\"family\": \"near4\", \"params\": [" << plist << "], "
                  << tuple_json(r.tuple)
                  << ", \"scaled_by_4\": " << (r.scaled_by_4 ? "true" : "false")
                  << ", \"score\": " << r.score.square_sums << ", \"nonsquare_masks\": [";
        for (size_t i = 0; i < r.score.nonsquare_masks.size(); ++i)
            std::cout << (i ? ", " : "") << r.score.nonsquare_masks[i];
        std::cout << "]}\n";
    } else {
        throw CLI::ValidationError("unknown family: " + name);
    }
    return 0;
}

int run_identity(const std::string& id_name) {
    std::vector<hilbert::IdentityId> ids;
    if (id_name == "all") {
        ids = {hilbert::IdentityId::SixSums, hilbert::IdentityId::Residual, hilbert::IdentityId::Substitution,
               hilbert::IdentityId::General, hilbert::IdentityId::A1A2, hilbert::IdentityId::Prefix};
    } else {
        auto id = hilbert::identity_from_name(id_name);
        if (!id) throw CLI::ValidationError("unknown identity: " + id_name);
        ids = {*id};
    }
    bool all_ok = true;
    for (auto id : ids) {
        auto rep = hilbert::verify_identity(id);
        all_ok &= rep.ok;
        std::cout << "identity " << identity_name(id) << ": " << (rep.ok ? "OK" : "FAILED")
                  << "\n";
        for (const auto& e : rep.equalities)
            std::cout << "  equality " << e.name << ": " << (e.holds ? "holds" : "FAILS") << "\n";
        for (const auto& w : rep.squares) {
            std::cout << "  sum " << w.sum_name << ": ";
            if (!w.ok) {
                std::cout << "NOT a square\n";
                continue;
            }
            std::cout << "D * sum = W^2 with D = " << w.denom.to_string(rep.var_names)
                      << ", W = " << w.witness.to_string(rep.var_names) << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

int run_curve(const std::string& which, const std::string& params_csv, uint64_t bound) {
    auto params = parse_ints(params_csv);
    auto fmt_pt = [](const hilbert::CurvePoint& p) {
        if (p.is_infinity()) return std::string("infinity");
        return "(" + p.x().to_string() + ", " + p.y().to_string() + ")";
    };
    if (which == "E") {
        if (params.size() != 3) throw CLI::ValidationError("--curve E needs params u,x,z");
        auto e = hilbert::build_curve_E(params[0], params[1], params[2]);
        std::cout << "curve E: Y^2 = X^3 + (" << e.model.A.to_string() << ") X^2 + ("
                  << e.model.B.to_string() << ") X\n";
        std::cout << "Q0 = " << fmt_pt(e.q0) << " on-curve=" << on_curve(e.q0, e.model) << "\n";
        std::cout << "Q1 = " << fmt_pt(e.q1) << " on-curve=" << on_curve(e.q1, e.model) << "\n";
        std::cout << "Q2 = " << fmt_pt(e.q2) << " on-curve=" << on_curve(e.q2, e.model) << "\n";
        auto t0 = hilbert::torsion_order(e.q0, e.model, bound);
        std::cout << "torsion(Q0, bound " << bound << ") = "
                  << (t0 ? std::to_string(*t0) : std::string("none")) << "\n";
        std::cout << "2*Q0 = " << fmt_pt(ec_double(e.q0, e.model)) << "\n";
        std::cout << "Q1+Q2 = " << fmt_pt(ec_add(e.q1, e.q2, e.model)) << "\n";
        return 0;
    }
    if (which == "a1a2") {
        if (params.size() != 2) throw CLI::ValidationError("--curve a1a2 needs params c,d");
        auto curve = hilbert::build_curve_a1a2(params[0], params[1]);
        std::cout << "curve: Y^2 = X^3 + (" << curve.model.A.to_string() << ") X^2 + ("
                  << curve.model.B.to_string() << ") X\n";
        std::cout << "P0 = " << fmt_pt(curve.p0) << " on-curve=" << on_curve(curve.p0, curve.model)
                  << "\n";
        std::cout << "P1 = " << fmt_pt(curve.p1) << " on-curve=" << on_curve(curve.p1, curve.model)
                  << "\n";
        auto t1 = hilbert::torsion_order(curve.p1, curve.model, bound);
        auto t0 = hilbert::torsion_order(curve.p0, curve.model, bound);
        std::cout << "torsion(P1, bound " << bound << ") = "
                  << (t1 ? std::to_string(*t1) : std::string("none")) << "\n";
        std::cout << "torsion(P0, bound " << bound << ") = "
                  << (t0 ? std::to_string(*t0) : std::string("none")) << "\n";
        auto pb = hilbert::pullback_2P0(params[0], params[1]);
        std::cout << "2*P0 pullback (a,b,r,u) = (" << pb.a.to_string() << ", "
                  << pb.b.to_string() << ", " << pb.r.to_string() << ", " << pb.u.to_string()
                  << ")\n";
        std::cout << "cube {" << tuple_json(pb.cube) << "} agrees with the a1=a2 family\n";
        return 0;
    }
    throw CLI::ValidationError("unknown curve: " + which);
}

int run_extend4(const std::string& base_csv, const std::string& xmin, const std::string& xmax,
                int min_score) {
    auto vals = parse_ints(base_csv);
    if (vals.size() != 4) throw CLI::ValidationError("--base needs a0,a1,a2,a3");
    CubeTuple base{vals[0], {vals[1], vals[2], vals[3]}};
    auto rows = hilbert::extend4_scan(base, Int::from_string(xmin), Int::from_string(xmax),
                                      min_score);
    for (const auto& [x, score] : rows) std::cout << x.to_string() << "," << score << "\n";
    return 0;
}

int run_fit(const std::string& input, int x_col, int y_col) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!input.empty()) {
        file.open(input);
        if (!file) throw std::runtime_error("cannot open input file: " + input);
        in = &file;
    }
    std::vector<std::pair<double, double>> pts;
    std::string line;
    while (std::getline(*in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(std::stod(cell));
        if (int(cells.size()) < std::max(x_col, y_col)) continue;
        pts.push_back({cells[x_col - 1], cells[y_col - 1]});
    }
    auto f = hilbert::fit_power_law(pts);
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", f.a, f.b);
    std::cout << buf;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert cubes in the set of squares: search, verify, generate, count"};
    app.require_subcommand(1);

    // verify
    std::vector<std::string> verify_values;
    auto* sc_verify = app.add_subcommand("verify", "check a0 a1 .. ad against the square system");
    sc_verify->add_option("values", verify_values, "a0 then the parts")
        ->required()
        ->expected(3, 17);

    // search
    uint64_t a0_max = 0, a1_max = 0, entry_max = 0;
    bool reduced = false;
    unsigned threads = 1;
    std::string checkpoint, output;
    auto* sc_search = app.add_subcommand("search", "exhaustive divisor-pair search");
    sc_search->add_option("--a0-max", a0_max, "largest base a0 = p^2");
    sc_search->add_option("--a1-max", a1_max, "largest pivot a1");
    sc_search->add_option("--entry-max", entry_max, "filter: max canonical entry");
    sc_search->add_flag("--reduced", reduced, "emit reduced cubes only");
    sc_search->add_option("--threads", threads, "worker count (default 1)");
    sc_search->add_option("--checkpoint", checkpoint, "checkpoint file (p_completed=<n>)");
    sc_search->add_option("--output", output, "write records to a file instead of stdout");

    // count
    std::string thresholds;
    bool plot = false;
    uint64_t plot_max = 0, plot_min = 1024, h2_n = 0;
    bool h2 = false;
    auto* sc_count = app.add_subcommand("count", "H3/C3 counting tables as CSV N,H3,C3");
    sc_count->add_option("--thresholds", thresholds, "comma-separated ascending N values");
    sc_count->add_flag("--plot", plot, "geometric grid of N for plot data");
    sc_count->add_option("--max", plot_max, "largest N for --plot");
    sc_count->add_option("--min", plot_min, "smallest N for --plot (default 1024)");
    sc_count->add_flag("--h2", h2, "count dimension-2 cubes instead (prints N,H2)");
    sc_count->add_option("--n", h2_n, "threshold for --h2");
    sc_count->add_option("--threads", threads, "worker count");

    // family
    std::string family_name, family_params;
    auto* sc_family = app.add_subcommand("family", "evaluate a parametric generator");
    sc_family->add_option("--family", family_name, "general|t|a1a2|pair|triangular|near4")
        ->required();
    sc_family->add_option("--params", family_params, "comma-separated integer parameters")
        ->required();

    // identity
    std::string identity_id{"all"};
    auto* sc_identity = app.add_subcommand("identity", "verify the symbolic square identities");
    sc_identity->add_option("--id", identity_id, "sixsums|residual|subst|general|a1a2|prefix|all");

    // curve
    std::string curve_name, curve_params;
    uint64_t torsion_bound = 16;
    auto* sc_curve = app.add_subcommand("curve", "curve models, points and torsion checks");
    sc_curve->add_option("--curve", curve_name, "E|a1a2")->required();
    sc_curve->add_option("--params", curve_params, "u,x,z for E; c,d for a1a2")->required();
    sc_curve->add_option("--torsion-bound", torsion_bound, "multiple bound (default 16)");

    // extend4
    std::string base_csv, xmin, xmax;
    int min_score = 12;
    auto* sc_extend = app.add_subcommand("extend4", "scan a4 = X candidates for a 3-cube");
    sc_extend->add_option("--base", base_csv, "a0,a1,a2,a3")->required();
    sc_extend->add_option("--x-min", xmin)->required();
    sc_extend->add_option("--x-max", xmax)->required();
    sc_extend->add_option("--min-score", min_score, "emit rows with score >= this (default 12)");

    // fit
    std::string fit_input;
    int x_col = 1, y_col = 2;
    auto* sc_fit = app.add_subcommand("fit", "power-law fit a*x^b over CSV rows, prints a,b");
    sc_fit->add_option("--input", fit_input, "CSV file (default: stdin)");
    sc_fit->add_option("--x-col", x_col, "1-based x column (default 1)");
    sc_fit->add_option("--y-col", y_col, "1-based y column (default 2)");

    try {
        app.parse(argc, argv);
        if (*sc_verify) return run_verify(verify_values);
        if (*sc_search)
            return run_search(a0_max, a1_max, entry_max, reduced, threads, checkpoint, output);
        if (*sc_count) {
            if (h2) return run_count_h2(h2_n);
            return run_count(thresholds, plot, plot_max, plot_min, threads);
        }
        if (*sc_family) return run_family(family_name, family_params);
        if (*sc_identity) return run_identity(identity_id);
        if (*sc_curve) return run_curve(curve_name, curve_params, torsion_bound);
        if (*sc_extend) return run_extend4(base_csv, xmin, xmax, min_score);
        if (*sc_fit) return run_fit(fit_input, x_col, y_col);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        app.exit(e);
        return 2;
    } catch (const CLI::Error& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
