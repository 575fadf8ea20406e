#include "commands.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "acceptance.hpp"
#include "trgr/bwb.hpp"
#include "trgr/fibers.hpp"
#include "trgr/groebner.hpp"
#include "trgr/index_set.hpp"
#include "trgr/json_io.hpp"
#include "trgr/plucker.hpp"
#include "trgr/resolution.hpp"
#include "trgr/vanish.hpp"
#include "trgr/version.hpp"
#include "trgr/weyl.hpp"

namespace trgr::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["n"] = cfg.n;
    j["d"] = cfg.d;
    if (cfg.r >= 0) j["r"] = cfg.r;
    if (cfg.r_list_given) j["r_list"] = cfg.r_list;
    j["seeds"] = cfg.seeds;
    j["samples"] = cfg.samples;
    j["curves"] = cfg.curves;
    j["budget"] = cfg.budget;
    j["var_cap"] = cfg.var_cap;
    j["format"] = cfg.format;
    return j;
}

ordered_json report_header(const RunConfig& cfg) {
    ordered_json j;
    j["version"] = kVersion;
    j["config"] = config_json(cfg);
    return j;
}

ordered_json weight_json(const GLWeight& w) {
    ordered_json j = ordered_json::array();
    for (long e : w.entries()) j.push_back(e);
    return j;
}

ordered_json partition_json(const Partition& p) {
    ordered_json j = ordered_json::array();
    for (long e : p.parts()) j.push_back(e);
    return j;
}

ordered_json groth_json(const GrothElement& g) {
    ordered_json j = ordered_json::array();
    for (const auto& [key, c] : g.coeffs()) {
        ordered_json term;
        term["coeff"] = c.get_str();
        term["levi"] = weight_json(key.first);
        term["other"] = weight_json(key.second);
        j.push_back(std::move(term));
    }
    return j;
}

/// Atomic publication: write aside, then rename over the target.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text << "\n";
        return;
    }
    const std::string tmp = cfg.out_path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp);
        f << text << "\n";
    }
    if (std::rename(tmp.c_str(), cfg.out_path.c_str()) != 0)
        throw std::runtime_error("cannot publish " + cfg.out_path);
}

/// Leading comment block so tabular reports also carry the version, config
/// and seeds.
std::string tsv_header(const RunConfig& cfg) {
    std::ostringstream h;
    h << "# " << kVersion << "\n# config " << config_json(cfg).dump() << "\n";
    return h.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stol(item));
    return out;
}

void require_nd(const RunConfig& cfg) {
    if (cfg.d < 1 || cfg.d > cfg.n - cfg.d)
        throw CLI::ValidationError("--d", "need 1 <= d <= n-d");
}

std::vector<int> resolved_r_range(const RunConfig& cfg) {
    if (cfg.r_list_given) return cfg.r_list;
    if (cfg.r >= 0) return {cfg.r};
    std::vector<int> all;
    for (int r = 0; r <= cfg.d; ++r) all.push_back(r);
    return all;
}

int cmd_dims(const RunConfig& cfg, std::ostream& out) {
    require_nd(cfg);
    const auto rs = resolved_r_range(cfg);
    for (int r : rs)
        if (r < 0 || r > cfg.d) throw CLI::ValidationError("--r", "need 0 <= r <= d");

    if (cfg.format == "tsv") {
        std::ostringstream t;
        t << tsv_header(cfg) << "n\td\tr\tdim\n";
        for (int r : rs)
            t << cfg.n << "\t" << cfg.d << "\t" << r << "\t"
              << truncated_dim(cfg.n, cfg.d, r).get_str() << "\n";
        std::string s = t.str();
        s.pop_back();
        emit(cfg, s, out);
        return 0;
    }
    ordered_json j = report_header(cfg);
    j["rows"] = ordered_json::array();
    for (int r : rs) {
        ordered_json row;
        row["n"] = cfg.n;
        row["d"] = cfg.d;
        row["r"] = r;
        row["dim"] = truncated_dim(cfg.n, cfg.d, r).get_str();
        j["rows"].push_back(std::move(row));
    }
    emit(cfg, j.dump(), out);
    return 0;
}

int cmd_resolution(const RunConfig& cfg, std::ostream& out) {
    require_nd(cfg);
    const int r = cfg.r >= 0 ? cfg.r : cfg.d;
    if (r < 1 || r > cfg.d) throw CLI::ValidationError("--r", "need 1 <= r <= d");

    const auto layers = build_complex(cfg.n, cfg.d, r);
    long terms = 0;
    for (const auto& l : layers) terms += static_cast<long>(l.terms.size());
    const bool count_ok = (binomial(2 * r, r) == terms);
    const bool boundary_ok =
        layers.front().terms.size() == 1 && layers.back().terms.size() == 1 &&
        layers.front().terms[0].source_lambda.empty() &&
        layers.back().terms[0].source_lambda ==
            Partition(std::vector<long>(static_cast<std::size_t>(r), cfg.n - cfg.d));
    const Int euler = euler_char_sections(cfg.n, cfg.d, r);
    const bool euler_ok = euler == truncated_dim(cfg.n, cfg.d, r - 1);

    if (cfg.format == "tsv") {
        std::ostringstream t;
        t << tsv_header(cfg) << "layer\tsource\tlevi_weight\tbundle\tlevi_dim\n";
        for (const auto& l : layers)
            for (const auto& term : l.terms)
                t << l.index << "\t" << term.source_lambda.str() << "\t"
                  << term.levi_weight.str() << "\t" << term.bundle_partition.str() << "\t"
                  << term.levi_dim.get_str() << "\n";
        std::string s = t.str();
        s.pop_back();
        emit(cfg, s, out);
        return (count_ok && boundary_ok && euler_ok) ? 0 : 1;
    }

    ordered_json j = report_header(cfg);
    j["r"] = r;
    j["layers"] = ordered_json::array();
    for (const auto& l : layers) {
        ordered_json lj;
        lj["k"] = l.index;
        lj["terms"] = ordered_json::array();
        for (const auto& term : l.terms) {
            ordered_json tj;
            tj["source"] = partition_json(term.source_lambda);
            tj["levi_weight"] = weight_json(term.levi_weight);
            tj["bundle"] = partition_json(term.bundle_partition);
            tj["levi_dim"] = term.levi_dim.get_str();
            lj["terms"].push_back(std::move(tj));
        }
        j["layers"].push_back(std::move(lj));
    }
    j["term_count"] = terms;
    j["term_count_ok"] = count_ok;
    j["boundary_ok"] = boundary_ok;
    j["twisted_sections"] = ordered_json::array();
    for (const auto& t : twisted_h0_terms(cfg.n, cfg.d, r)) {
        ordered_json tj;
        tj["m"] = t.m;
        tj["layer"] = t.layer;
        tj["levi_weight"] = weight_json(t.term.levi_weight);
        tj["section_dim"] = t.section_dim.get_str();
        j["twisted_sections"].push_back(std::move(tj));
    }
    j["euler"] = euler.get_str();
    j["euler_matches_truncated_dim"] = euler_ok;
    emit(cfg, j.dump(), out);
    return (count_ok && boundary_ok && euler_ok) ? 0 : 1;
}

int cmd_bwb(const RunConfig& cfg, const std::string& a_text, const std::string& b_text,
            std::ostream& out) {
    if (cfg.d < 1 || cfg.d >= cfg.n) throw CLI::ValidationError("--d", "need 1 <= d < n");
    const std::vector<long> a = parse_long_list(a_text);
    std::vector<long> b = parse_long_list(b_text);
    if (b.empty()) b.assign(static_cast<std::size_t>(cfg.n - cfg.d), 0);
    if (static_cast<int>(a.size()) != cfg.d || static_cast<int>(b.size()) != cfg.n - cfg.d)
        throw CLI::ValidationError("--a/--b", "weight lengths must be d and n-d");

    CohomologyResult res;
    try {
        res = bwb({GLWeight(a), GLWeight(b), cfg.n, cfg.d});
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("--a/--b", e.what());
    }
    ordered_json j = report_header(cfg);
    j["a"] = a;
    j["b"] = b;
    j["vanishes"] = res.vanishes;
    if (!res.vanishes) {
        j["degree"] = res.degree;
        j["weight"] = weight_json(*res.weight);
        j["dimension"] = res.dimension.get_str();
    }
    emit(cfg, j.dump(), out);
    return 0;
}

int cmd_euler(const RunConfig& cfg, std::ostream& out) {
    require_nd(cfg);
    const int r = cfg.r >= 0 ? cfg.r : cfg.d;
    if (r < 1 || r > cfg.d) throw CLI::ValidationError("--r", "need 1 <= r <= d");
    const EulerIdentity id = appendix_euler(cfg.n, cfg.d, r);
    const Int expected = truncated_dim(cfg.n, cfg.d, r - 1);
    ordered_json j = report_header(cfg);
    j["r"] = r;
    j["equal"] = id.equal;
    j["lhs"] = groth_json(id.lhs);
    j["rhs"] = groth_json(id.rhs);
    j["dimension"] = id.rhs.dimension().get_str();
    j["matches_truncated_dim"] = (id.lhs.dimension() == expected && id.rhs.dimension() == expected);
    emit(cfg, j.dump(), out);
    return id.equal ? 0 : 1;
}

int cmd_ideal(const RunConfig& cfg, const std::string& op, std::ostream& out) {
    require_nd(cfg);
    ordered_json j = report_header(cfg);
    j["op"] = op;
    int exit_code = 0;

    if (op == "implicitize") {
        // Homogenized chart parametrization of the coordinate variety.
        std::vector<std::string> src_names{"z0"};
        for (int i = 0; i < cfg.n - cfg.d; ++i)
            for (int k = 0; k < cfg.d; ++k)
                src_names.push_back("z" + std::to_string(cfg.d + i + 1) + "_" +
                                    std::to_string(k + 1));
        auto src = PolyRing::make(src_names);
        std::vector<std::vector<MultiPoly>> Z(static_cast<std::size_t>(cfg.n));
        for (int i = 0; i < cfg.n; ++i)
            for (int k = 0; k < cfg.d; ++k) {
                MultiPoly entry(src);
                if (i < cfg.d) {
                    if (i == k) entry = MultiPoly::variable(src, 0);
                } else {
                    entry = MultiPoly::variable(
                        src, static_cast<std::size_t>(1 + (i - cfg.d) * cfg.d + k));
                }
                Z[static_cast<std::size_t>(i)].push_back(entry);
            }
        std::vector<int> all_cols;
        for (int k = 0; k < cfg.d; ++k) all_cols.push_back(k);
        std::vector<std::pair<std::string, MultiPoly>> param;
        for (const IndexSet& I : enumerate_index_sets(cfg.n, cfg.d, cfg.d)) {
            std::vector<int> rows;
            for (int e : I.elements()) rows.push_back(e - 1);
            std::string name = "p";
            bool first = true;
            for (int e : I.elements()) {
                if (!first) name += "_";
                name += std::to_string(e);
                first = false;
            }
            param.emplace_back(name, poly_minor(Z, rows, all_cols, src));
        }
        GroebnerOptions gopts;
        gopts.step_budget = cfg.budget;
        ImplicitizeResult res;
        try {
            res = implicitize(param, gopts, cfg.var_cap);
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError("ideal", e.what());
        }
        j["status"] = res.status == GbStatus::Ok ? "ok" : "DIVERGED";
        j["steps"] = res.steps;
        j["relations"] = ordered_json::array();
        for (const auto& rel : res.relations) j["relations"].push_back(rel.str());
        if (res.status == GbStatus::Diverged) exit_code = 3;
    } else if (op == "vanish") {
        const int r = cfg.r >= 0 ? cfg.r : cfg.d;
        if (r < 1 || r > cfg.d) throw CLI::ValidationError("--r", "need 1 <= r <= d");
        const Int euler = euler_char_sections(cfg.n, cfg.d, r);
        j["euler"] = euler.get_str();
        j["truncated_dim"] = truncated_dim(cfg.n, cfg.d, r - 1).get_str();
        j["per_seed"] = ordered_json::array();
        bool all_match = true;
        for (std::uint64_t seed : cfg.seeds) {
            std::uint64_t counter = 0;
            auto sampler = [&]() {
                std::vector<std::vector<Rat>> batch;
                for (int i = 0; i < 40; ++i) {
                    const auto U =
                        sample_schubert(cfg.n, cfg.d, r, r, seed * 1000003ULL + (++counter));
                    batch.push_back(plucker(U, cfg.d).coords);
                }
                return batch;
            };
            const auto stab = stabilized_vanishing_dim(sampler, 1, cfg.samples, cfg.samples + 80);
            ordered_json sj;
            sj["seed"] = seed;
            sj["dim"] = stab.dim;
            sj["stabilized"] = stab.stabilized;
            sj["history"] = stab.history;
            sj["points"] = stab.points_used;
            j["per_seed"].push_back(std::move(sj));
            all_match = all_match && stab.stabilized && Int(stab.dim) == euler;
        }
        j["matches_euler"] = all_match;
        if (!all_match) exit_code = 1;
    } else {
        throw CLI::ValidationError("--op", "expected implicitize or vanish");
    }
    emit(cfg, j.dump(), out);
    return exit_code;
}

int cmd_fiber(const RunConfig& cfg, int m_arg, std::ostream& out) {
    require_nd(cfg);
    std::vector<int> r_list = cfg.r_list_given ? cfg.r_list
                              : cfg.r >= 0     ? std::vector<int>{cfg.r}
                                               : std::vector<int>{2};
    const int m = m_arg >= 0 ? m_arg : (r_list.empty() ? 0 : r_list.front());
    CollineationSpec spec;
    try {
        spec = fiber_classifier(m, r_list, cfg.d);
    } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("fiber", e.what());
    }

    ordered_json j = report_header(cfg);
    j["m"] = m;
    j["r_list"] = r_list;
    j["s_list"] = spec.s_list;
    j["point_fiber"] = spec.s_list.empty();
    j["blocks"] = ordered_json::array();
    for (int s : spec.s_list) {
        ordered_json b;
        b["s"] = s;
        b["coordinates"] = Int(binomial(m, s) * binomial(m, s)).get_str();
        j["blocks"].push_back(std::move(b));
    }

    int exit_code = 0;
    if (cfg.curves > 0 && r_list.size() == 1 && m >= r_list.front() && r_list.front() >= 1) {
        const int r = r_list.front();
        const int s = m + 1 - r;
        // Known fiber dimension: a point when s = m, otherwise m^2 - 1,
        // certified by the generic Jacobian rank of the s-minor map rather
        // than assumed.
        long expected = 0;
        bool certified = true;
        if (s < m) {
            auto ring = PolyRing::standard(m * m, "x");
            std::vector<std::vector<MultiPoly>> mat(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < m; ++k)
                    mat[static_cast<std::size_t>(i)].push_back(
                        MultiPoly::variable(ring, static_cast<std::size_t>(i * m + k)));
            std::vector<MultiPoly> minors;
            for (const auto& rows : subsets_lex(m, s))
                for (const auto& cols : subsets_lex(m, s))
                    minors.push_back(poly_minor(mat, rows, cols, ring));
            SeededRng rng(cfg.seeds.empty() ? 1 : cfg.seeds[0]);
            const GenericRank gr = generic_jacobian_rank(minors, rng);
            certified = gr.agreed && gr.rank == static_cast<long>(m) * m;
            expected = static_cast<long>(m) * m - 1;
        }
        j["expected_dim"] = expected;
        j["expected_dim_certified"] = certified;
        j["probes"] = ordered_json::array();
        bool pass = certified;
        for (std::uint64_t seed : cfg.seeds) {
            const auto U = sample_schubert(cfg.n, cfg.d, r, m, seed);
            const auto probe = exceptional_probe(U, r, cfg.curves, seed);
            pass = pass && probe.proj_dim == expected;
            j["probes"].push_back(ordered_json::parse(to_json(probe)));
        }
        j["pass"] = pass;
        if (!pass) exit_code = 1;
    }
    emit(cfg, j.dump(), out);
    return exit_code;
}

int cmd_smooth(const RunConfig& cfg, std::ostream& out) {
    require_nd(cfg);
    ordered_json j = report_header(cfg);
    j["reports"] = ordered_json::array();
    bool pass = true;
    for (std::uint64_t seed : cfg.seeds) {
        SmoothnessReport rep;
        try {
            rep = smoothness_probe(cfg.n, cfg.d, cfg.samples, seed);
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError("smooth", e.what());
        }
        pass = pass && rep.pass;
        j["reports"].push_back(ordered_json::parse(to_json(rep)));
    }
    j["pass"] = pass;
    emit(cfg, j.dump(), out);
    return pass ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    checks::AcceptanceOptions opts;
    opts.seeds = cfg.seeds;
    opts.groebner_budget = cfg.budget;
    opts.groebner_var_cap = cfg.var_cap;
    opts.vanish_samples = cfg.samples;
    const auto results = checks::run_acceptance(opts);

    ordered_json j = report_header(cfg);
    j["checks"] = ordered_json::array();
    bool failed = false, diverged = false;
    for (const auto& r : results) {
        ordered_json cj;
        cj["id"] = r.id;
        cj["name"] = r.name;
        cj["status"] = checks::status_name(r.status);
        cj["details"] = r.details;
        j["checks"].push_back(std::move(cj));
        failed = failed || r.status == checks::CheckStatus::Fail;
        diverged = diverged || r.status == checks::CheckStatus::Diverged;
        // Timing goes to the log stream, not the report, which must be
        // byte-identical across runs.
        err << r.name << ": " << checks::status_name(r.status) << " (" << r.seconds << "s)\n";
    }
    j["pass"] = !failed && !diverged;
    emit(cfg, j.dump(), out);
    if (failed) return 1;
    if (diverged) return 3;
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact computations for truncated coordinate varieties of the Grassmannian: "
                 "dimensions, weight cohomology, resolution layers, collineation fibers and "
                 "geometric verification."};
    app.set_config("--config", "", "Configuration file (key=value lines)");
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--n", cfg.n, "Ambient dimension n");
    app.add_option("--d", cfg.d, "Subspace dimension d (1 <= d <= n-d)");
    app.add_option("--r", cfg.r, "Schubert index r");
    std::string r_list_text;
    auto* r_list_opt =
        app.add_option("--r-list", r_list_text, "Comma separated r values (may be empty)");
    app.add_option("--seed", cfg.seeds, "Seeds for randomized checks (repeatable)");
    app.add_option("--samples", cfg.samples, "Sample count for randomized checks");
    app.add_option("--curves", cfg.curves, "Curves per fiber probe");
    app.add_option("--budget", cfg.budget, "Reduction step budget for elimination");
    app.add_option("--var-cap", cfg.var_cap, "Variable cap for elimination");
    app.add_option("--format", cfg.format, "Output format: json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--out", cfg.out_path, "Write the report to this path (atomic)");

    auto* dims = app.add_subcommand("dims", "Dimension table of the truncated spaces");
    auto* resolution =
        app.add_subcommand("resolution", "Layers and twisted sections of the ideal resolution");
    auto* bwb_cmd = app.add_subcommand("bwb", "Weight cohomology of a homogeneous bundle");
    std::string a_text, b_text;
    bwb_cmd->add_option("--a", a_text, "Comma separated weight on the d factor")->required();
    bwb_cmd->add_option("--b", b_text, "Comma separated weight on the n-d factor");
    auto* euler = app.add_subcommand("euler", "Section identity in the representation ring");
    auto* ideal = app.add_subcommand("ideal", "Implicitization / vanishing-space oracles");
    std::string op = "implicitize";
    ideal->add_option("--op", op, "implicitize or vanish")
        ->check(CLI::IsMember({"implicitize", "vanish"}));
    auto* fiber = app.add_subcommand("fiber", "Fiber classifier and exceptional probe");
    int m_arg = -1;
    fiber->add_option("--m", m_arg, "Intersection dimension of the base point");
    auto* smooth = app.add_subcommand("smooth", "Chart smoothness spot check");
    auto* verify = app.add_subcommand("verify", "Run the full acceptance battery");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    if (r_list_opt->count() > 0) {
        cfg.r_list_given = true;
        cfg.r_list = parse_int_list(r_list_text);
    }

    try {
        if (dims->parsed()) return cmd_dims(cfg, out);
        if (resolution->parsed()) return cmd_resolution(cfg, out);
        if (bwb_cmd->parsed()) return cmd_bwb(cfg, a_text, b_text, out);
        if (euler->parsed()) return cmd_euler(cfg, out);
        if (ideal->parsed()) return cmd_ideal(cfg, op, out);
        if (fiber->parsed()) return cmd_fiber(cfg, m_arg, out);
        if (smooth->parsed()) return cmd_smooth(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace trgr::cli
