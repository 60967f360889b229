#pragma once

#include "dsg/census_t12060.hpp"
#include "dsg/io.hpp"
#include "dsg/obstruction.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace dsg {

// Outcome of one CLI invocation. Exit codes: 0 ok, 1 domain error or failed
// certification, 2 usage/input error.
struct CommandResult {
    int exit_code{0};
    std::string status{"ok"};
    Json payload;
    std::vector<std::string> diagnostics;
    std::string text;  // human-readable rendering
};

namespace cli_detail {

inline std::vector<std::string> split_csv(const std::string& csv, const char* what) {
    std::vector<std::string> items;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw input_error(std::string("empty entry in ") + what + " list '" + csv + "'");
        items.push_back(item.substr(a, b - a + 1));
    }
    if (items.empty()) throw input_error(std::string("empty ") + what + " list");
    return items;
}

inline std::vector<Int> parse_primes(const std::string& csv) {
    std::vector<Int> primes;
    for (const std::string& item : split_csv(csv, "prime")) {
        try {
            primes.emplace_back(item);
        } catch (const std::exception&) {
            throw input_error("cannot parse prime '" + item + "'");
        }
    }
    return primes;
}

inline std::vector<Rational> parse_fractions(const std::string& csv) {
    std::vector<Rational> fractions;
    for (const std::string& item : split_csv(csv, "fraction"))
        fractions.push_back(Rational::parse(item));
    return fractions;
}

inline std::vector<long long> parse_coeffs(const std::string& csv) {
    std::vector<long long> coeffs;
    for (const std::string& item : split_csv(csv, "coefficient")) {
        try {
            std::size_t used = 0;
            coeffs.push_back(std::stoll(item, &used));
            if (used != item.size()) throw input_error("");
        } catch (const std::exception&) {
            throw input_error("cannot parse coefficient '" + item + "'");
        }
    }
    return coeffs;
}

inline Json int_to_json(const Int& v) {
    if (v <= Int(INT64_MAX) && v >= Int(INT64_MIN)) return Json(to_ll(v));
    return Json(v.str());  // decimal string once past 64 bits
}

inline Json group_to_json(const AbelianGroup& g) {
    Json torsion = Json::array();
    for (const Int& d : g.torsion) torsion.push_back(int_to_json(d));
    return Json{{"free_rank", g.free_rank}, {"torsion", torsion}, {"group", g.str()}};
}

inline Json witnesses_to_json(const std::vector<BoundWitness>& ws) {
    Json arr = Json::array();
    for (const BoundWitness& w : ws) arr.push_back(w.str());
    return arr;
}

inline GluingSystem resolve_system(const std::string& spec) {
    if (spec.empty() || spec == "builtin") return t12060_gluing_system();
    return load_gluing(spec);
}

inline ShapeVector resolve_shapes(const std::string& spec) {
    if (spec.empty() || spec == "builtin") return t12060_shapes();
    return load_shapes(spec);
}

inline std::string format_complex(const Complex& z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

inline void write_grid_csv(std::ostream& out, const GridTable& table) {
    out << "point1,point2,lower,upper\n";
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = i; j < table.size(); ++j) {
            DistanceBound b = table.bound(i, j);
            out << '"' << table.point(i).str() << "\",\"" << table.point(j).str() << "\","
                << b.lower << ',' << *b.upper << '\n';
        }
}

}  // namespace cli_detail

inline CommandResult run_cli(const std::vector<std::string>& args) {
    CommandResult result;
    CLI::App app{"Dehn surgery graph toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    unsigned threads = 1;
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", threads, "worker threads for grid certification")
        ->check(CLI::Range(1u, 256u));

    std::ostringstream text;

    // ---- homology ----------------------------------------------------------
    auto* homology_cmd = app.add_subcommand("homology", "H_1 of a surgery description");
    std::string homology_in;
    homology_cmd->add_option("--in", homology_in, "surgery description JSON file")->required();
    homology_cmd->callback([&]() {
        AbelianGroup g = homology(load_surgery(homology_in));
        result.payload = cli_detail::group_to_json(g);
        text << "H_1 = " << g.str() << "\n";
    });

    // ---- distance ----------------------------------------------------------
    auto* distance_cmd = app.add_subcommand("distance", "Lickorish path length bounds");
    distance_cmd->require_subcommand(1);

    auto* dist_pair = distance_cmd->add_subcommand("pair", "bounds between two descriptions");
    std::string dp_in1, dp_in2;
    dist_pair->add_option("--in1", dp_in1, "first surgery description")->required();
    dist_pair->add_option("--in2", dp_in2, "second surgery description")->required();
    dist_pair->callback([&]() {
        SurgeryDescription d1 = load_surgery(dp_in1);
        SurgeryDescription d2 = load_surgery(dp_in2);
        DistanceBound b = distance_bound(d1, d2);
        result.payload["lower"] = b.lower;
        if (b.upper) result.payload["upper"] = *b.upper;
        else result.payload["upper"] = nullptr;
        result.payload["witnesses"] = cli_detail::witnesses_to_json(b.witnesses);
        text << "lower bound: " << b.lower << "\n";
        if (b.upper) text << "upper bound: " << *b.upper << "\n";
        else text << "upper bound: unknown (different underlying links)\n";
        for (const BoundWitness& w : b.witnesses) text << "  via " << w.str() << "\n";
    });

    long long g_k = 2, g_N = 1, g_blocksize = 0, g_myers_q = 0;
    std::string g_primes = "2,3", g_out;
    auto add_grid_options = [&](CLI::App* cmd) {
        cmd->add_option("--k", g_k, "flat dimension (number of blocks)")->check(CLI::Range(1, 16));
        cmd->add_option("--N", g_N, "grid radius")->required();
        cmd->add_option("--primes", g_primes, "comma-separated primes, one per block");
        cmd->add_option("--blocksize", g_blocksize, "components per block (default N)");
        cmd->add_option("--myers-q", g_myers_q,
                        "augment with a Myers component of slope 1/q (0 = none)");
    };

    auto make_table = [&]() {
        std::vector<Int> primes = cli_detail::parse_primes(g_primes);
        if (static_cast<long long>(primes.size()) != g_k)
            throw input_error("need exactly k primes, got " + std::to_string(primes.size()));
        long long bs = g_blocksize > 0 ? g_blocksize : g_N;
        return grid_distance_table(g_k, bs, primes, g_N, Int(g_myers_q));
    };

    auto* dist_grid = distance_cmd->add_subcommand("grid", "distance-bound table over the flat grid");
    add_grid_options(dist_grid);
    dist_grid->add_option("--out", g_out, "write CSV here instead of stdout");
    dist_grid->callback([&]() {
        GridTable table = make_table();
        if (format == "json") {
            Json rows = Json::array();
            for (std::size_t i = 0; i < table.size(); ++i)
                for (std::size_t j = i; j < table.size(); ++j) {
                    DistanceBound b = table.bound(i, j);
                    rows.push_back({table.point(i).str(), table.point(j).str(), b.lower, *b.upper});
                }
            result.payload["points"] = table.size();
            result.payload["rows"] = rows;
            return;
        }
        if (g_out.empty()) {
            cli_detail::write_grid_csv(text, table);
        } else {
            std::ofstream out(g_out, std::ios::binary);
            if (!out) throw input_error("cannot write '" + g_out + "'");
            cli_detail::write_grid_csv(out, table);
            text << "wrote " << (table.size() * (table.size() + 1) / 2) << " pairs to " << g_out
                 << "\n";
        }
    });

    auto* dist_mont = distance_cmd->add_subcommand("montesinos", "SFS upper bound to S^3");
    std::string dm_in;
    dist_mont->add_option("--in", dm_in, "Seifert data JSON file")->required();
    dist_mont->callback([&]() {
        SeifertData s = load_sfs(dm_in);
        long long bound = montesinos_upper_bound(s);
        result.payload["upper"] = bound;
        result.payload["space"] = s.str();
        text << "p_L(" << s.str() << ", S^3) <= " << bound << "\n";
    });

    auto* dist_solv = distance_cmd->add_subcommand("solv", "solv-manifold upper bound to S^3");
    std::string ds_kind;
    dist_solv->add_option("--kind", ds_kind, "torus-bundle or twisted-I-bundles")->required();
    dist_solv->callback([&]() {
        long long bound = solv_upper_bound(parse_solv_kind(ds_kind));
        result.payload["upper"] = bound;
        result.payload["kind"] = ds_kind;
        text << "p_L(M, S^3) <= " << bound << "\n";
    });

    // ---- quasiflat ---------------------------------------------------------
    auto* quasi_cmd = app.add_subcommand("quasiflat", "certify a quasi-flat grid");
    add_grid_options(quasi_cmd);
    std::string q_csv;
    quasi_cmd->add_option("--csv", q_csv, "also write the pair table as CSV");
    quasi_cmd->callback([&]() {
        GridTable table = make_table();
        QuasiflatReport rep = certify_quasiflat(table, threads);
        if (!q_csv.empty()) {
            std::ofstream out(q_csv, std::ios::binary);
            if (!out) throw input_error("cannot write '" + q_csv + "'");
            cli_detail::write_grid_csv(out, table);
        }
        result.payload["pass"] = rep.pass;
        result.payload["k"] = rep.k;
        result.payload["pairs_checked"] = rep.pairs_checked;
        result.payload["min_ratio"] = {rep.min_ratio_num, rep.min_ratio_den};
        result.payload["required_ratio"] = {1, 2 * static_cast<long long>(rep.k) - 1};
        result.payload["violations"] = rep.violations;
        text << "quasi-flat certification: " << (rep.pass ? "PASS" : "FAIL") << "\n";
        text << "  pairs checked: " << rep.pairs_checked << "\n";
        text << "  upper bound = L1 distance on every pair"
             << (rep.pass ? "" : " -- VIOLATIONS FOUND") << "\n";
        text << "  min lower/L1 = " << rep.min_ratio_num << "/" << rep.min_ratio_den
             << " (required >= 1/" << (2 * rep.k - 1) << ") at "
             << table.point(rep.worst_i).str() << " vs " << table.point(rep.worst_j).str() << "\n";
        for (const std::string& v : rep.violations) result.diagnostics.push_back(v);
        if (!rep.pass) {
            result.exit_code = 1;
            result.status = "error";
            result.diagnostics.push_back("certification failed");
        }
    });

    // ---- sfs ----------------------------------------------------------------
    auto* sfs_cmd = app.add_subcommand("sfs", "Seifert fibered space calculus");
    sfs_cmd->require_subcommand(1);

    auto* sfs_iso = sfs_cmd->add_subcommand("iso", "fiber-isomorphism test");
    std::string si_in1, si_in2;
    sfs_iso->add_option("--in1", si_in1, "Seifert data JSON")->required();
    sfs_iso->add_option("--in2", si_in2, "Seifert data JSON")->required();
    sfs_iso->callback([&]() {
        SeifertData s1 = load_sfs(si_in1), s2 = load_sfs(si_in2);
        bool iso = homeomorphic_fibrations(s1, s2);
        result.payload["isomorphic"] = iso;
        text << s1.str() << " and " << s2.str() << ": "
             << (iso ? "isomorphic fibrations" : "not isomorphic") << "\n";
    });

    auto* sfs_rel = sfs_cmd->add_subcommand("related", "fiber-surgery adjacency test");
    std::string sr_in1, sr_in2;
    sfs_rel->add_option("--in1", sr_in1, "Seifert data JSON")->required();
    sfs_rel->add_option("--in2", sr_in2, "Seifert data JSON")->required();
    sfs_rel->callback([&]() {
        SeifertData s1 = load_sfs(sr_in1), s2 = load_sfs(sr_in2);
        FiberRelation rel = fiber_surgery_relation(s1, s2);
        result.payload["related"] = rel.related;
        result.payload["edge_verified"] = rel.edge_verified;
        text << s1.str() << " and " << s2.str() << ": " << rel.str() << "\n";
    });

    auto* sfs_kinfty = sfs_cmd->add_subcommand("kinfty", "generate the K_infinity family");
    long long sk_J = 0;
    std::string sk_fractions = "1/5,2/7,3/8,4/9";
    bool sk_certify = false;
    sfs_kinfty->add_option("--J", sk_J, "largest twist parameter j")->required();
    sfs_kinfty->add_option("--fractions", sk_fractions, "four seed fractions a_i/b_i");
    sfs_kinfty->add_flag("--certify", sk_certify,
                         "check all pairs are related and pairwise non-isomorphic");
    sfs_kinfty->callback([&]() {
        std::vector<Rational> a = cli_detail::parse_fractions(sk_fractions);
        std::vector<SeifertData> family = kinfty_family(a, sk_J);
        Json spaces = Json::array();
        for (std::size_t idx = 0; idx < family.size(); ++idx) {
            long long j = static_cast<long long>(idx) / 4;
            int i = static_cast<int>(idx % 4) + 1;
            spaces.push_back({{"i", i}, {"j", j}, {"space", family[idx].str()}});
            text << "M_{" << i << "," << j << "} = " << family[idx].str() << "\n";
        }
        result.payload["spaces"] = spaces;
        if (sk_certify) {
            bool all_related = true, all_distinct = true;
            for (std::size_t x = 0; x < family.size(); ++x)
                for (std::size_t y = x + 1; y < family.size(); ++y) {
                    if (!fiber_surgery_related(family[x], family[y])) all_related = false;
                    if (homeomorphic_fibrations(family[x], family[y])) all_distinct = false;
                }
            result.payload["pairwise_related"] = all_related;
            result.payload["pairwise_distinct"] = all_distinct;
            bool ok = all_related && all_distinct;
            text << "K_infinity certificate: " << (ok ? "PASS" : "FAIL")
                 << " (pairwise related: " << (all_related ? "yes" : "no")
                 << ", pairwise distinct: " << (all_distinct ? "yes" : "no") << ")\n";
            if (!ok) {
                result.exit_code = 1;
                result.status = "error";
                result.diagnostics.push_back("K_infinity certificate failed");
            }
        }
    });

    // ---- gluing --------------------------------------------------------------
    auto* gluing_cmd = app.add_subcommand("gluing", "hyperbolic gluing equations");
    gluing_cmd->require_subcommand(1);
    std::string gl_sys = "builtin", gl_shapes = "builtin";
    double gl_tol = 1e-10;
    int gl_max_iter = 100;

    auto* gl_verify = gluing_cmd->add_subcommand("verify", "evaluate residuals at given shapes");
    gl_verify->add_option("--sys", gl_sys, "gluing system JSON or 'builtin' (t12060)");
    gl_verify->add_option("--shapes", gl_shapes, "shape vector JSON or 'builtin'");
    double gv_tol = 1e-9;
    gl_verify->add_option("--tol", gv_tol, "acceptance threshold on the reduced residual");
    gl_verify->callback([&]() {
        GluingSystem sys = cli_detail::resolve_system(gl_sys);
        ShapeVector z = cli_detail::resolve_shapes(gl_shapes);
        ResidualReport rep = residual(sys, z);
        bool geometric = z.all_upper_half_plane();
        bool pass = rep.max_reduced < gv_tol;
        result.payload["max_raw_residual"] = rep.max_raw;
        result.payload["max_reduced_residual"] = rep.max_reduced;
        result.payload["branch_multiples"] = rep.branch;
        result.payload["geometric"] = geometric;
        result.payload["pass"] = pass;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.3e", rep.max_reduced);
        text << "max residual (mod 2*pi*i): " << buf << "\n";
        std::snprintf(buf, sizeof(buf), "%.3e", rep.max_raw);
        text << "max raw residual:         " << buf << " (branch multiples: ";
        for (std::size_t i = 0; i < rep.branch.size(); ++i)
            text << (i ? "," : "") << rep.branch[i];
        text << ")\n";
        text << "all shapes in upper half plane: " << (geometric ? "yes" : "no") << "\n";
        text << "verification: " << (pass && geometric ? "PASS" : "FAIL") << "\n";
        if (!pass || !geometric) {
            result.exit_code = 1;
            result.status = "error";
            result.diagnostics.push_back("gluing verification failed");
        }
    });

    auto* gl_solve = gluing_cmd->add_subcommand("solve", "Newton solve from a starting vector");
    std::string gs_start = "regular";
    gl_solve->add_option("--sys", gl_sys, "gluing system JSON or 'builtin'");
    gl_solve->add_option("--start", gs_start,
                         "'regular' (all shapes exp(i*pi/3)), 'builtin', or a shapes JSON file");
    gl_solve->add_option("--tol", gl_tol, "residual tolerance");
    gl_solve->add_option("--max-iter", gl_max_iter, "iteration cap");
    gl_solve->callback([&]() {
        GluingSystem sys = cli_detail::resolve_system(gl_sys);
        ShapeVector start;
        if (gs_start == "regular")
            start = ShapeVector(std::vector<Complex>(sys.tetrahedra, Complex(0.5, 0.8660254037844386)));
        else
            start = cli_detail::resolve_shapes(gs_start);
        NewtonResult nr = newton_solve(sys, start, gl_tol, gl_max_iter);
        result.payload["status"] =
            nr.status == NewtonResult::Status::converged          ? "converged"
            : nr.status == NewtonResult::Status::singular_jacobian ? "singular-jacobian"
            : nr.status == NewtonResult::Status::degenerate        ? "degenerate"
                                                                   : "diverged";
        result.payload["iterations"] = nr.iterations;
        result.payload["geometric"] = nr.geometric;
        result.payload["residual_trace"] = nr.residual_trace;
        Json shapes = Json::array();
        for (const Complex& s : nr.shapes.z) shapes.push_back({s.real(), s.imag()});
        result.payload["shapes"] = shapes;
        text << nr.message << "\n";
        for (std::size_t i = 0; i < nr.shapes.size(); ++i)
            text << "  z" << (i + 1) << " = " << cli_detail::format_complex(nr.shapes.z[i]) << "\n";
        if (nr.converged()) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6f", volume(nr.shapes));
            text << "  volume = " << buf << "\n";
            result.payload["volume"] = volume(nr.shapes);
        } else {
            result.exit_code = 1;
            result.status = "error";
            result.diagnostics.push_back(nr.message);
        }
    });

    auto* gl_vol = gluing_cmd->add_subcommand("volume", "Bloch-Wigner volume of a shape vector");
    gl_vol->add_option("--shapes", gl_shapes, "shape vector JSON or 'builtin'");
    gl_vol->callback([&]() {
        ShapeVector z = cli_detail::resolve_shapes(gl_shapes);
        double v = volume(z);
        result.payload["volume"] = v;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12f", v);
        text << "volume = " << buf << "\n";
    });

    // ---- group ---------------------------------------------------------------
    auto* group_cmd = app.add_subcommand("group", "finitely presented groups");
    group_cmd->require_subcommand(1);
    std::string gr_in;
    long long gr_cap = kDefaultCosetCap;

    auto* gr_abel = group_cmd->add_subcommand("abel", "abelianization");
    gr_abel->add_option("--in", gr_in, "presentation text file")->required();
    gr_abel->callback([&]() {
        GroupPresentation p = parse_presentation(read_file(gr_in));
        AbelianGroup g = abelianization(p);
        result.payload = cli_detail::group_to_json(g);
        text << "H_1 = " << g.str() << "\n";
    });

    auto* gr_quot = group_cmd->add_subcommand("quotient", "quotient by a normal closure");
    std::string gq_word;
    gr_quot->add_option("--in", gr_in, "presentation text file")->required();
    gr_quot->add_option("-w,--word", gq_word, "word to kill")->required();
    gr_quot->callback([&]() {
        GroupPresentation p = parse_presentation(read_file(gr_in));
        GroupPresentation q = quotient_by_normal_closure(p, parse_word(p, gq_word));
        result.payload["presentation"] = print_presentation(q);
        result.payload["abelianization"] = cli_detail::group_to_json(abelianization(q));
        text << print_presentation(q);
    });

    auto* gr_enum = group_cmd->add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
    std::string ge_subgroup;
    gr_enum->add_option("--in", gr_in, "presentation text file")->required();
    gr_enum->add_option("--subgroup", ge_subgroup, "semicolon-separated subgroup generator words");
    gr_enum->add_option("--cap", gr_cap, "maximum live cosets");
    gr_enum->callback([&]() {
        GroupPresentation p = parse_presentation(read_file(gr_in));
        std::vector<Word> sub;
        if (!ge_subgroup.empty()) {
            std::stringstream ss(ge_subgroup);
            std::string piece;
            while (std::getline(ss, piece, ';'))
                if (piece.find_first_not_of(" \t") != std::string::npos)
                    sub.push_back(parse_word(p, piece));
        }
        CosetTable t = coset_enumerate(p, sub, gr_cap);
        result.payload["status"] = t.complete() ? "complete" : "exceeded-cap";
        result.payload["cosets"] = t.cosets;
        if (t.complete()) {
            text << "complete: index " << t.cosets << "\n";
        } else {
            text << "exceeded cap (" << gr_cap << " cosets); no conclusion\n";
            result.exit_code = 1;
            result.status = "error";
            result.diagnostics.push_back("coset cap exceeded");
        }
    });

    auto* gr_weight = group_cmd->add_subcommand("weight", "weight-one certification");
    std::string gw_candidates;
    gr_weight->add_option("--in", gr_in, "presentation text file")->required();
    gr_weight->add_option("--candidates", gw_candidates,
                          "semicolon-separated candidate words (default: generators and pairs)");
    gr_weight->add_option("--cap", gr_cap, "coset cap per enumeration");
    gr_weight->callback([&]() {
        GroupPresentation p = parse_presentation(read_file(gr_in));
        WeightReport rep;
        if (gw_candidates.empty()) {
            rep = certify_weight_one(p, gr_cap);
        } else {
            std::vector<Word> cands;
            std::stringstream ss(gw_candidates);
            std::string piece;
            while (std::getline(ss, piece, ';'))
                if (piece.find_first_not_of(" \t") != std::string::npos)
                    cands.push_back(parse_word(p, piece));
            rep = certify_weight_one(p, cands, gr_cap);
        }
        const char* verdict =
            rep.verdict == WeightReport::Verdict::weight_zero    ? "weight 0"
            : rep.verdict == WeightReport::Verdict::weight_one   ? "weight exactly 1"
            : rep.verdict == WeightReport::Verdict::at_most_one  ? "weight <= 1"
            : rep.verdict == WeightReport::Verdict::at_least_two ? "weight >= 2"
                                                                 : "inconclusive";
        result.payload["verdict"] = verdict;
        result.payload["abelianization"] = cli_detail::group_to_json(rep.abelianized);
        result.payload["explanation"] = rep.explanation;
        if (rep.witness) result.payload["witness"] = p.word_str(*rep.witness);
        Json outcomes = Json::array();
        for (const WeightCandidateOutcome& o : rep.outcomes)
            outcomes.push_back({{"word", p.word_str(o.word)},
                                {"status", o.status == CosetTable::Status::complete
                                               ? "complete"
                                               : "exceeded-cap"},
                                {"cosets", o.cosets}});
        result.payload["candidates"] = outcomes;
        text << verdict << ": " << rep.explanation << "\n";
    });

    auto* gr_kane = group_cmd->add_subcommand("kanenobu",
                                              "fundamental group of the Kanenobu double cover");
    long long gk_n = 1;
    bool gk_mod = false;
    gr_kane->add_option("--n", gk_n, "family parameter n >= 1")->required();
    gr_kane->add_flag("--mod-a1", gk_mod, "adjoin the relator a1 (quotient by <<a1>>)");
    gr_kane->callback([&]() {
        GroupPresentation p = kanenobu_presentation(gk_n);
        if (gk_mod) {
            Word a1;
            a1.append(0, 1);
            p = quotient_by_normal_closure(p, a1);
        }
        result.payload["presentation"] = print_presentation(p);
        result.payload["abelianization"] = cli_detail::group_to_json(abelianization(p));
        text << print_presentation(p);
    });

    // ---- obstruct --------------------------------------------------------------
    auto* obstruct_cmd = app.add_subcommand("obstruct", "L-space surgery obstruction arithmetic");
    obstruct_cmd->require_subcommand(1);

    auto* ob_test = obstruct_cmd->add_subcommand("test", "alternating +-1 coefficient test");
    std::string ot_coeffs;
    ob_test->add_option("--coeffs", ot_coeffs, "a_0,a_1,...,a_g")->required();
    ob_test->callback([&]() {
        AlexanderCoefficients c(cli_detail::parse_coeffs(ot_coeffs));
        bool ok = lspace_alternating_test(c);
        result.payload["coefficients"] = c.str();
        result.payload["alternating"] = ok;
        text << "[" << c.str() << "]: "
             << (ok ? "alternating +-1s (L-space surgeries not excluded)"
                    : "not alternating +-1s (no L-space surgery on such a knot)")
             << "\n";
    });

    auto* ob_budget = obstruct_cmd->add_subcommand("budget", "correction-term budget for p = 25");
    long long ob_q = 1;
    ob_budget->add_option("--q", ob_q, "surgery denominator q >= 1")->required();
    ob_budget->callback([&]() {
        ObstructionBudget b = obstruction_budget(ob_q);
        result.payload["q"] = b.q;
        result.payload["genus_cap"] = b.genus_cap;
        result.payload["budget"] = b.budget;
        result.payload["vectors_checked"] = b.vectors_checked;
        result.payload["worst_coefficients"] = b.worst.str();
        result.payload["worst_i"] = b.worst_i;
        result.payload["note"] = b.note;
        text << "q = " << b.q << ": genus cap " << b.genus_cap << ", |delta| <= " << b.budget
             << " over " << b.vectors_checked << " coefficient vectors\n";
        text << "  worst case a = [" << b.worst.str() << "] at i = " << b.worst_i << "\n";
        text << "  " << b.note << "\n";
    });

    // ---- dispatch ---------------------------------------------------------------
    // let the global --format/--threads appear after a subcommand too
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    std::vector<const char*> argv;
    argv.push_back("dsg");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        result.text = text.str();
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help;
        help << app.help();
        result.text = help.str();
        result.exit_code = 0;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.status = "error";
        result.diagnostics.push_back(e.what());
        result.text = std::string(e.what()) + "\n";
    } catch (const input_error& e) {
        result.exit_code = 2;
        result.status = "error";
        result.diagnostics.push_back(e.what());
        result.text = std::string(e.what()) + "\n";
    } catch (const domain_error& e) {
        result.exit_code = 1;
        result.status = "error";
        result.diagnostics.push_back(e.what());
        result.text = std::string(e.what()) + "\n";
    }
    return result;
}

inline std::string render_result(const CommandResult& result, const std::string& format) {
    if (format == "json") {
        Json out;
        out["status"] = result.status;
        out["payload"] = result.payload;
        out["diagnostics"] = result.diagnostics;
        return out.dump(2) + "\n";
    }
    std::string s = result.text;
    if (result.exit_code != 0 && result.status == "error" && s.empty())
        for (const std::string& d : result.diagnostics) s += d + "\n";
    return s;
}

// Extract --format before full parsing so error renderings honor it too.
inline std::string peek_format(const std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--format" && i + 1 < args.size()) return args[i + 1];
        if (args[i].rfind("--format=", 0) == 0) return args[i].substr(9);
    }
    return "text";
}

}  // namespace dsg
