#include "nbrw/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nbrw/density.hpp"
#include "nbrw/diameter.hpp"
#include "nbrw/generators.hpp"
#include "nbrw/graph_io.hpp"
#include "nbrw/mixing.hpp"
#include "nbrw/spectral.hpp"
#include "nbrw/variance.hpp"
#include "nbrw/verify.hpp"

namespace nbrw {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct Context {
    std::string command_line;
    bool timing = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

struct Input {
    Graph graph;
    std::string hash;
};

Input load_graph(const std::string& path) {
    auto text = read_text_file(path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError("cannot parse '" + path + "': " + e.what());
    }
    return {graph_from_json(j), fnv1a_hex(text)};
}

json manifest(const Context& ctx, const std::string& hash = {}, std::vector<std::uint64_t> seeds = {}) {
    json m;
    m["command"] = ctx.command_line;
    m["seeds"] = seeds;
    if (!hash.empty()) m["graph_fnv1a"] = hash;
    m["tool_version"] = kVersion;
    if (ctx.timing) {
        m["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.start).count();
    }
    return m;
}

void emit(const json& j, const std::string& out) {
    auto text = j.dump(2) + "\n";
    if (out.empty() || out == "-") std::cout << text;
    else write_text_file(out, text);
}

std::string g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json opt_num(std::optional<double> v) { return v ? json(*v) : json(nullptr); }

const char* theta_kind(ThetaKind k) {
    switch (k) {
        case ThetaKind::inside: return "theta";
        case ThetaKind::above: return "phi";
        case ThetaKind::below: return "psi";
    }
    return "?";
}

Spectrum spectrum_for(const Graph& g, bool vectors = false, EigenMethod method = EigenMethod::automatic) {
    EigenOptions eo;
    eo.want_vectors = vectors;
    eo.method = method;
    return parametrize_thetas(eigendecompose(g, eo), g.branching());
}

json classification_json(const Classification& c) {
    json j;
    j["claim"] = "ramanujan_classification";
    j["lambda"] = c.lambda;
    j["ramanujan_bound"] = c.ramanujan_bound;
    j["is_ramanujan"] = c.is_ramanujan;
    j["bipartite"] = c.bipartite;
    j["bipartite_excluded"] = c.bipartite_excluded;
    j["expander"] = c.expander;
    j["exceptional"] = c.exceptional;
    return j;
}

Spectrum read_spectrum_file(const std::string& path) {
    auto text = read_text_file(path);
    try {
        auto j = nlohmann::json::parse(text);
        auto values = j.at("eigenvalues").get<std::vector<double>>();
        auto n = j.value("n", values.size());
        return Spectrum::synthetic(n, j.at("d").get<int>(), std::move(values), j.value("bipartite", false));
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed spectrum file '" + path + "': " + e.what());
    }
}

// ---- subcommands ----

int cmd_gen_fixture(const Context& ctx, const std::string& name, const std::string& out) {
    auto j = graph_to_json(gen_fixture(name));
    j["manifest"] = manifest(ctx);
    emit(j, out);
    return 0;
}

int cmd_gen_lps(const Context& ctx, int p, int q, const std::string& out) {
    auto j = graph_to_json(gen_lps({p, q}));
    j["manifest"] = manifest(ctx);
    emit(j, out);
    return 0;
}

int cmd_gen_random(const Context& ctx, std::size_t n, int d, std::uint64_t seed, const std::string& out) {
    auto j = graph_to_json(gen_random_regular({.n = n, .d = d, .seed = seed}));
    j["manifest"] = manifest(ctx, {}, {seed});
    emit(j, out);
    return 0;
}

int cmd_spectrum(const Context& ctx, const std::string& path, bool vectors, const std::string& method,
                 const std::string& out) {
    auto in = load_graph(path);
    EigenMethod m = EigenMethod::automatic;
    if (method == "jacobi") m = EigenMethod::jacobi;
    else if (method == "tridiagonal") m = EigenMethod::tridiagonal;
    auto s = spectrum_for(in.graph, vectors, m);
    const int p = in.graph.branching();

    json j;
    j["manifest"] = manifest(ctx, in.hash);
    j["claim"] = "adjacency_spectrum";
    j["n"] = s.size();
    j["d"] = s.degree();
    j["method"] = s.method();
    j["sweeps"] = s.sweeps();
    j["eigenvalues"] = s.eigenvalues();
    auto th = json::array();
    for (const auto& t : s.thetas()) th.push_back({{"kind", theta_kind(t.kind)}, {"value", t.value}});
    j["thetas"] = std::move(th);
    j["classification"] = classification_json(classify(s, p));
    std::vector<double> alphas;
    for (int k = 1; k <= 10; ++k) alphas.push_back(0.05 * k);
    auto curve = density_curve(s, p, alphas);
    json dc;
    dc["claim"] = "density_hypothesis_count";
    dc["alphas"] = curve.alphas;
    dc["counts"] = curve.counts;
    auto ex = json::array();
    for (double e : curve.exponents) ex.push_back(std::isnan(e) ? json(nullptr) : json(e));
    dc["exponents"] = std::move(ex);
    j["density_curve"] = std::move(dc);
    if (vectors) {
        auto vs = json::array();
        for (std::size_t k = 0; k < s.size(); ++k) {
            auto v = s.vector(k);
            vs.push_back(std::vector<double>(v.begin(), v.end()));
        }
        j["vectors"] = std::move(vs);
    }
    emit(j, out);
    return 0;
}

int cmd_mix(const Context& ctx, const std::string& path, int t_min, int t_max, const std::vector<double>& etas,
            std::size_t sample_size, std::size_t sample_threshold, std::uint64_t seed, const std::string& csv,
            const std::string& out) {
    auto in = load_graph(path);
    const auto& g = in.graph;
    ProfileOptions po;
    po.t_min = t_min;
    po.t_max = t_max;
    po.seed = seed;
    po.sample_size = sample_size;
    po.sample_threshold = sample_threshold;
    po.starts = StartMode::sample;
    auto prof = mixing_profile(g, po);

    json j;
    j["manifest"] = manifest(ctx, in.hash, prof.sampled ? std::vector<std::uint64_t>{seed} : std::vector<std::uint64_t>{});
    j["n"] = prof.n;
    j["p"] = prof.p;
    j["sampled"] = prof.sampled;
    j["starts"] = prof.starts.size();
    j["parity_warning"] = prof.parity_warning;
    auto recs = json::array();
    for (const auto& r : prof.records) {
        json row;
        row["t"] = r.t;
        row["d_max"] = r.d_max;
        row["d_mean"] = r.d_mean;
        row["d2"] = r.d2;
        row["N_t"] = r.n_t;
        row["argmax"] = r.argmax;
        row["lower_bound"] = {{"claim", "nbrw_tv_lower_bound"}, {"value", r.lower_bound}};
        row["l2_bound"] = {{"claim", "l2_tv_bound"}, {"value", r.l2_bound}};
        recs.push_back(std::move(row));
    }
    j["records"] = std::move(recs);

    auto lb = json::array();
    bool all = true;
    for (const auto& c : check_lower_bound(prof)) {
        lb.push_back({{"t", c.t}, {"d_max", c.d_max}, {"bound", c.bound}, {"pass", c.pass}});
        all = all && c.pass;
    }
    j["lower_bound_check"] = {{"claim", "nbrw_tv_lower_bound"}, {"exact", !prof.sampled}, {"pass", all}, {"rows", lb}};

    auto mixes = json::array();
    std::optional<Spectrum> spec;
    for (double eta : etas) {
        json m;
        m["eta"] = eta;
        try {
            m["t_mix"] = t_mix(prof, eta).t_mix;
        } catch (const std::domain_error&) {
            m["t_mix"] = nullptr;
        }
        if (eta > 0.0 && eta < 1.0 && !prof.sampled) {
            if (!spec) spec = spectrum_for(g);
            auto th = check_mixing_time_bound(g, *spec, eta);
            json b;
            b["claim"] = "ramanujan_mixing_time";
            b["status"] = to_string(th.status);
            if (th.status == CheckStatus::inapplicable) {
                b["reason"] = th.reason;
            } else {
                b["girth"] = th.girth;
                b["delta"] = th.delta;
                b["bound"] = th.bound;
                b["t_mix_observed"] = th.t_mix_observed ? json(*th.t_mix_observed) : json(nullptr);
            }
            m["bound"] = std::move(b);
        }
        mixes.push_back(std::move(m));
    }
    j["t_mix"] = std::move(mixes);

    if (!csv.empty()) {
        std::ostringstream os;
        os << "t,d_max,d_mean,d2,N_t,lower_bound\n";
        for (const auto& r : prof.records) {
            os << r.t << ',' << g17(r.d_max) << ',' << g17(r.d_mean) << ',' << g17(r.d2) << ',' << r.n_t << ','
               << g17(r.lower_bound) << '\n';
        }
        write_text_file(csv, os.str());
    }
    emit(j, out);
    return 0;
}

int cmd_variance(const Context& ctx, const std::string& path, const std::vector<int>& ts, const std::string& out) {
    auto in = load_graph(path);
    auto s = spectrum_for(in.graph);
    json j;
    j["manifest"] = manifest(ctx, in.hash);
    auto rows = json::array();
    for (int t : ts) {
        auto r = variance_report(in.graph, s, t);
        json row;
        row["t"] = t;
        row["N_t"] = r.n_t;
        row["w2"] = {{"claim", "variance_spectral_expansion"}, {"direct", r.w2}, {"spectral", r.spectral_w2}};
        row["w_max"] = r.w_max;
        row["ratio"] = r.ratio;
        auto ram_check = check_ramanujan_variance_bound(in.graph, s, t);
        row["ramanujan_bound"] = {{"claim", "variance_ramanujan_bound"}, {"value", r.bound_ramanujan},
                                  {"status", to_string(ram_check.status)}};
        auto girth_check = check_girth_variance_bound(in.graph, s, t);
        json g44 = {{"claim", "variance_girth_bound"}, {"status", to_string(girth_check.status)}};
        if (girth_check.status == CheckStatus::inapplicable) g44["reason"] = girth_check.reason;
        else g44["value"] = girth_check.bound;
        row["girth_bound"] = std::move(g44);
        row["w_per_x"] = r.w_per_x;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    emit(j, out);
    return 0;
}

int cmd_conjecture(const Context& ctx, const std::string& path, int t_max, const std::string& csv,
                   const std::string& out) {
    auto in = load_graph(path);
    const auto& g = in.graph;
    const int p = g.branching();
    if (t_max <= 0) {
        t_max = static_cast<int>(std::floor(2.0 * std::log(static_cast<double>(g.size())) / std::log(p)));
        t_max = std::max(1, t_max);
    }
    auto s = spectrum_for(g);
    auto rows = conjecture_report(g, s, t_max);
    json j;
    j["manifest"] = manifest(ctx, in.hash);
    j["claim"] = "variance_asymptotic_conjecture";
    j["asserted"] = false;
    j["girth"] = girth(g);
    auto arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"t", r.t}, {"W2", r.w2}, {"Nt", r.n_t}, {"ratio", r.ratio}, {"muR2", r.mu_r2},
                       {"kestenR2", r.kesten_r2}, {"girth_regime", r.girth_regime}});
    }
    j["rows"] = std::move(arr);
    if (!csv.empty()) {
        std::ostringstream os;
        os << "t,W2,Nt,ratio,muR2,kestenR2\n";
        for (const auto& r : rows) {
            os << r.t << ',' << g17(r.w2) << ',' << r.n_t << ',' << g17(r.ratio) << ',' << g17(r.mu_r2) << ','
               << g17(r.kesten_r2) << '\n';
        }
        write_text_file(csv, os.str());
    }
    emit(j, out);
    return 0;
}

int cmd_diameter(const Context& ctx, const std::string& path, const std::vector<double>& xis,
                 const std::vector<double>& fs, const std::string& out) {
    auto in = load_graph(path);
    auto s = spectrum_for(in.graph);
    auto r = almost_diameter_report(in.graph, s, xis);
    json j;
    j["manifest"] = manifest(ctx, in.hash);
    j["lambda"] = r.lambda;
    j["b"] = r.b;
    j["expander"] = r.expander;
    j["ramanujan"] = r.ramanujan;
    j["bipartite_excluded"] = r.bipartite_excluded;
    if (!r.reason.empty()) j["reason"] = r.reason;
    j["xi_grid"] = r.xi_grid;
    auto tails = json::array();
    for (const auto& t : r.tails) {
        tails.push_back({{"claim", "almost_diameter_tail"}, {"xi", t.xi}, {"radius", t.radius},
                         {"tail_fraction", t.tail_fraction}, {"worst", t.worst}, {"bound", t.bound},
                         {"integer_degree_bound", t.integer_degree_bound}, {"status", to_string(t.status)}});
    }
    j["tails"] = std::move(tails);
    auto rt = json::array();
    for (const auto& t : r.ramanujan_tails) {
        rt.push_back({{"claim", "ramanujan_almost_diameter"}, {"xi", t.xi}, {"radius", t.radius},
                      {"tail_fraction", t.tail_fraction}, {"bound", t.bound}, {"status", to_string(t.status)}});
    }
    j["ramanujan_tails"] = std::move(rt);
    j["diameter"] = {{"claim", "diameter_bound"},
                     {"measured", r.diameter_measured},
                     {"xi_star", opt_num(r.xi_star)},
                     {"bound", opt_num(r.diameter_bound)},
                     {"status", to_string(r.diameter_status)}};
    auto ct = json::array();
    for (double f : fs) {
        auto c = centered_tail(in.graph, f);
        ct.push_back({{"claim", "centered_distance_tail"}, {"f", c.f}, {"fraction", c.fraction}, {"bound", c.bound}});
    }
    j["centered_tails"] = std::move(ct);
    emit(j, out);
    return 0;
}

json bound_json(const DensityBound& b) {
    return {{"claim", "cutoff_bound"}, {"t", b.t},         {"first_term", b.first}, {"second_term", b.second},
            {"dx_bound", b.dx},        {"variance_envelope", b.envelope}, {"I_n", b.i_n}};
}

int cmd_density(const Context& ctx, const std::string& path, const std::string& spectrum_path,
                const std::vector<double>& etas, const std::string& out) {
    json j;
    if (path.empty()) {
        if (spectrum_path.empty()) throw CLI::ValidationError("density", "need a graph file or --spectrum");
        auto s = read_spectrum_file(spectrum_path);
        const int p = s.degree() - 1;
        auto params = exceptional_parameters(s, p);
        j["manifest"] = manifest(ctx, fnv1a_hex(read_text_file(spectrum_path)));
        j["n"] = s.size();
        j["exceptional"] = params.size();
        j["delta1"] = params.empty() ? json(nullptr) : json(0.5 - *std::max_element(params.begin(), params.end()));
        auto rows = json::array();
        for (double eta : etas) {
            json row;
            row["eta"] = eta;
            row["bound"] = bound_json(density_bound(s, p, cutoff_time(s.size(), p, eta)));
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        emit(j, out);
        return 0;
    }
    auto in = load_graph(path);
    auto s = spectrum_path.empty() ? spectrum_for(in.graph) : read_spectrum_file(spectrum_path);
    auto r = density_cutoff_report(in.graph, s, etas);
    j["manifest"] = manifest(ctx, in.hash);
    j["homogeneous"] = r.homogeneous;
    j["expander"] = r.expander;
    j["bipartite"] = r.bipartite;
    j["lambda"] = r.lambda;
    j["exceptional"] = r.exceptional;
    j["delta1"] = opt_num(r.delta1);
    if (!r.reason.empty()) j["reason"] = r.reason;
    auto rows = json::array();
    for (const auto& row : r.rows) {
        json o;
        o["eta"] = row.eta;
        o["t"] = row.bound.t;
        o["d_max"] = row.d_max;
        o["d_mean"] = row.d_mean;
        o["w2"] = row.w2;
        o["N_t"] = row.n_t;
        o["bound"] = bound_json(row.bound);
        o["chain_status"] = to_string(row.chain);
        o["bound_status"] = to_string(row.bound_status);
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    emit(j, out);
    return 0;
}

int cmd_verify(const Context& ctx, const std::vector<std::string>& fixtures, const std::vector<int>& kesten_ps,
               const std::string& out) {
    std::vector<VerifyRow> rows;
    for (const auto& name : fixtures) {
        auto part = verify_graph(gen_fixture(name), name);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    for (int p : kesten_ps) {
        auto part = verify_kesten(p);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    std::size_t wf = 7, wc = 5;
    for (const auto& r : rows) {
        wf = std::max(wf, r.fixture.size());
        wc = std::max(wc, r.check.size());
    }
    for (const auto& r : rows) {
        std::printf("%-*s  %-*s  %-12s  %s\n", static_cast<int>(wf), r.fixture.c_str(), static_cast<int>(wc),
                    r.check.c_str(), to_string(r.status), r.detail.c_str());
    }
    const bool failed = any_failed(rows);
    std::printf("%s\n", failed ? "verify: FAILED" : "verify: all applicable checks passed");
    if (!out.empty()) {
        json j;
        j["manifest"] = manifest(ctx);
        auto arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"fixture", r.fixture}, {"claim", r.check}, {"status", to_string(r.status)},
                           {"detail", r.detail}});
        }
        j["rows"] = std::move(arr);
        j["pass"] = !failed;
        emit(j, out);
    }
    return failed ? 1 : 0;
}

}  // namespace

int run(int argc, char** argv) {
    Context ctx;
    for (int i = 0; i < argc; ++i) {
        if (i) ctx.command_line += ' ';
        ctx.command_line += i == 0 ? std::string("nbrw") : std::string(argv[i]);
    }

    CLI::App app{"Non-backtracking random walks on regular graphs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.add_flag("--timing", ctx.timing, "Record wall time in the run manifest");

    std::string out, graph_path, csv;

    auto* gen = app.add_subcommand("gen", "Generate a graph file");
    gen->require_subcommand(1);
    auto* gen_fix = gen->add_subcommand("fixture", "Named small graph");
    std::string fixture;
    gen_fix->add_option("name,--name", fixture, "k4, k5, petersen, heawood or cube3")->required();
    gen_fix->add_option("-o,--out", out, "Output file (default stdout)");
    auto* gen_lps_cmd = gen->add_subcommand("lps", "LPS Ramanujan graph X^{p,q}");
    int p = 5, q = 13;
    gen_lps_cmd->add_option("--p", p, "Prime p = 1 mod 4")->capture_default_str();
    gen_lps_cmd->add_option("--q", q, "Odd prime q != p, q > 2 sqrt(p)")->capture_default_str();
    gen_lps_cmd->add_option("-o,--out", out, "Output file (default stdout)");
    auto* gen_rand = gen->add_subcommand("random", "Random regular graph (configuration model)");
    std::size_t rn = 100;
    int rd = 3;
    std::uint64_t seed = 0;
    gen_rand->add_option("--n", rn, "Vertex count")->capture_default_str();
    gen_rand->add_option("--d", rd, "Degree")->capture_default_str();
    gen_rand->add_option("--seed", seed, "RNG seed")->capture_default_str();
    gen_rand->add_option("-o,--out", out, "Output file (default stdout)");

    auto* spec = app.add_subcommand("spectrum", "Adjacency spectrum and Ramanujan classification");
    bool vectors = false;
    std::string method = "auto";
    spec->add_option("graph", graph_path, "Graph JSON file")->required();
    spec->add_flag("--vectors", vectors, "Include eigenvectors");
    spec->add_option("--method", method, "auto, jacobi or tridiagonal")
        ->check(CLI::IsMember({"auto", "jacobi", "tridiagonal"}))
        ->capture_default_str();
    spec->add_option("-o,--out", out, "Output file (default stdout)");

    auto* mix = app.add_subcommand("mix", "Total variation profile of the walk");
    int t_min = 1, t_max = 12;
    std::vector<double> etas = {0.25};
    std::size_t sample_size = 64, sample_threshold = 2048;
    mix->add_option("graph", graph_path, "Graph JSON file")->required();
    mix->add_option("--t-min", t_min)->capture_default_str();
    mix->add_option("--t-max", t_max)->capture_default_str();
    mix->add_option("--eta", etas, "Mixing thresholds")->delimiter(',');
    mix->add_option("--sample-size", sample_size, "Starts sampled on large graphs")->capture_default_str();
    mix->add_option("--sample-threshold", sample_threshold, "Sample starts above this n")->capture_default_str();
    mix->add_option("--seed", seed, "Seed for start sampling")->capture_default_str();
    mix->add_option("--csv", csv, "Also write t,d_max,d_mean,d2,N_t,lower_bound");
    mix->add_option("-o,--out", out, "Output file (default stdout)");

    auto* var = app.add_subcommand("variance", "Variance of walk counts, direct and spectral");
    std::vector<int> ts = {1, 2, 3, 4, 5, 6};
    var->add_option("graph", graph_path, "Graph JSON file")->required();
    var->add_option("--t", ts, "Walk lengths")->delimiter(',');
    var->add_option("-o,--out", out, "Output file (default stdout)");

    auto* conj = app.add_subcommand("conjecture", "W_2(t)/N(t) table (report only)");
    int conj_t_max = 0;
    conj->add_option("graph", graph_path, "Graph JSON file")->required();
    conj->add_option("--t-max", conj_t_max, "Default floor(2 log_p n)");
    conj->add_option("--csv", csv, "Also write t,W2,Nt,ratio,muR2,kestenR2");
    conj->add_option("-o,--out", out, "Output file (default stdout)");

    auto* diam = app.add_subcommand("diameter", "Almost-diameter tails and diameter bound");
    std::vector<double> xis = kDefaultXiGrid;
    std::vector<double> fs;
    diam->add_option("graph", graph_path, "Graph JSON file")->required();
    diam->add_option("--xi", xis, "xi grid")->delimiter(',');
    diam->add_option("--f", fs, "Widths for the centered distance readout")->delimiter(',');
    diam->add_option("-o,--out", out, "Output file (default stdout)");

    auto* dens = app.add_subcommand("density", "Cutoff bound from the exceptional spectrum");
    std::vector<double> dens_etas = kDefaultEtaGrid;
    std::string spectrum_path;
    dens->add_option("graph", graph_path, "Graph JSON file");
    dens->add_option("--eta", dens_etas, "eta grid")->delimiter(',');
    dens->add_option("--spectrum", spectrum_path, "Spectrum JSON {n, d, eigenvalues, bipartite?}");
    dens->add_option("-o,--out", out, "Output file (default stdout)");

    auto* ver = app.add_subcommand("verify", "Run the property suite on built-in fixtures");
    std::vector<std::string> fixtures;
    for (auto name : fixture_names()) fixtures.emplace_back(name);
    std::vector<int> kesten_ps = {2, 3, 4, 6, 12};
    ver->add_option("--fixtures", fixtures, "Fixture names")->delimiter(',');
    ver->add_option("--kesten", kesten_ps, "p values for the Kesten measure checks")->delimiter(',');
    ver->add_option("-o,--out", out, "Also write the table as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen_fix->parsed()) return cmd_gen_fixture(ctx, fixture, out);
        if (gen_lps_cmd->parsed()) return cmd_gen_lps(ctx, p, q, out);
        if (gen_rand->parsed()) return cmd_gen_random(ctx, rn, rd, seed, out);
        if (spec->parsed()) return cmd_spectrum(ctx, graph_path, vectors, method, out);
        if (mix->parsed()) {
            return cmd_mix(ctx, graph_path, t_min, t_max, etas, sample_size, sample_threshold, seed, csv, out);
        }
        if (var->parsed()) return cmd_variance(ctx, graph_path, ts, out);
        if (conj->parsed()) return cmd_conjecture(ctx, graph_path, conj_t_max, csv, out);
        if (diam->parsed()) return cmd_diameter(ctx, graph_path, xis, fs, out);
        if (dens->parsed()) return cmd_density(ctx, graph_path, spectrum_path, dens_etas, out);
        if (ver->parsed()) return cmd_verify(ctx, fixtures, kesten_ps, out);
    } catch (const std::exception& e) {
        std::cerr << "nbrw: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace nbrw
