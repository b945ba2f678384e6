#include "spinwire/experiment.hpp"

#include <nlohmann/json.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "spinwire/encoding.hpp"
#include "spinwire/evolution.hpp"
#include "spinwire/fidelity.hpp"
#include "spinwire/optimal_encoding.hpp"
#include "spinwire/oracle.hpp"
#include "spinwire/serialize.hpp"

namespace spinwire {

namespace {

using nlohmann::json;

// Forward cyclic distance from Alice's centre to Bob's, in ring lengths.
double travel_distance(const ExperimentConfig& cfg, int n) {
    const int sites = ((cfg.bob.center - cfg.alice.center) % n + n) % n;
    return static_cast<double>(sites) / n;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

struct OutputSink {
    std::filesystem::path dir;
    bool csv = true;
    bool json_out = true;

    explicit OutputSink(const ExperimentConfig& cfg) : dir(cfg.out_dir) {
        std::filesystem::create_directories(dir);
        csv = cfg.format == "csv" || cfg.format == "both";
        json_out = cfg.format == "json" || cfg.format == "both";
        write_text(dir / "config.json", config_to_json(cfg).dump(2) + "\n");
    }

    void emit(const std::string& stem, const std::string& csv_text,
              const json& json_value) const {
        if (csv) write_text(dir / (stem + ".csv"), csv_text);
        if (json_out) write_text(dir / (stem + ".json"), json_value.dump(2) + "\n");
    }
};

int sweep_workers(std::size_t jobs) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SPINWIRE_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    }
    return static_cast<int>(std::min<std::size_t>(hw, jobs));
}

// Fig. 3 recipe: Gaussian of variance N^{1/3} sites at the fastest
// wavenumber N/4, truncated 2 N^{1/3} sites either side of the centre
// (support = N L(0) with the L = 4*delta convention).
WavepacketSpec scaling_packet(int n, int center_site) {
    const double delta_sites = std::cbrt(static_cast<double>(n));
    const int support = std::clamp<int>(
        static_cast<int>(std::llround(4.0 * delta_sites)), 3, n);
    return WavepacketSpec{
        .center_x = static_cast<double>(center_site - 1) / n,
        .wavenumber_k0 = n / 4.0,
        .variance_delta = delta_sites / n,
        .window = SiteWindow(n, center_site, support),
    };
}

OneParticleState initial_state(const ExperimentConfig& cfg, int n,
                               const DispersionRelation& d) {
    const EncodeConfig& enc = cfg.encode;
    if (enc.mode == "packet") {
        WavepacketSpec packet{
            .center_x = enc.center_x,
            .wavenumber_k0 = enc.k0,
            .variance_delta = enc.delta,
            .window = SiteWindow(n, cfg.alice.center, cfg.alice.width),
        };
        return gaussian_packet(packet, n);
    }
    if (enc.mode == "design") {
        const WavepacketSpec packet = design_packet(
            d, cfg.alice.center, enc.kappa, travel_distance(cfg, n), enc.k0_override);
        return gaussian_packet(packet, n);
    }
    if (enc.mode == "optimal") {
        const SiteWindow alice(n, cfg.alice.center, cfg.alice.width);
        const SiteWindow bob(n, cfg.bob.center, cfg.bob.width);
        return encode(optimize_arrival(d, alice, bob, {enc.t_min, enc.t_max},
                                       enc.samples));
    }
    throw config_error("encode.mode: unknown mode '" + enc.mode + "'");
}

struct VerifyRow {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

}  // namespace

std::vector<double> TimesConfig::grid() const {
    if (!list.empty()) return list;
    std::vector<double> out(count);
    for (int i = 0; i < count; ++i)
        out[i] = count == 1 ? start : start + (stop - start) * i / (count - 1);
    return out;
}

HamiltonianSpec ExperimentConfig::model_spec(int n) const {
    if (model_preset == "heisenberg") return heisenberg(chi, n);
    if (model_preset == "custom") {
        HamiltonianSpec spec = custom;
        spec.n_sites = n;
        return spec;
    }
    throw config_error("model.preset: unknown preset '" + model_preset + "'");
}

DispersionRelation ExperimentConfig::dispersion(int n) const {
    return dispersion_from_spec(model_spec(n));
}

ExperimentConfig config_from_json(const json& j) {
    ExperimentConfig cfg;
    if (j.contains("model")) {
        const json& m = j.at("model");
        cfg.model_preset = m.value("preset", cfg.model_preset);
        cfg.chi = m.value("chi", cfg.chi);
        if (cfg.model_preset == "custom") {
            json coeffs = m;
            coeffs["n_sites"] = j.value("n_sites", cfg.n_sites);
            coeffs.erase("preset");
            coeffs.erase("chi");
            cfg.custom = spec_from_json(coeffs);
        }
    }
    cfg.n_sites = j.value("n_sites", cfg.n_sites);
    cfg.n_list = j.value("n_list", cfg.n_list);
    if (j.contains("alice")) {
        cfg.alice.center = j["alice"].value("center", cfg.alice.center);
        cfg.alice.width = j["alice"].value("width", cfg.alice.width);
    }
    if (j.contains("bob")) {
        cfg.bob.center = j["bob"].value("center", cfg.bob.center);
        cfg.bob.width = j["bob"].value("width", cfg.bob.width);
    }
    if (j.contains("encode")) {
        const json& e = j["encode"];
        cfg.encode.mode = e.value("mode", cfg.encode.mode);
        cfg.encode.center_x = e.value("center_x", cfg.encode.center_x);
        cfg.encode.k0 = e.value("k0", cfg.encode.k0);
        cfg.encode.delta = e.value("delta", cfg.encode.delta);
        cfg.encode.kappa = e.value("kappa", cfg.encode.kappa);
        if (e.contains("k0_override") && !e["k0_override"].is_null())
            cfg.encode.k0_override = e["k0_override"].get<double>();
        cfg.encode.t_min = e.value("t_min", cfg.encode.t_min);
        cfg.encode.t_max = e.value("t_max", cfg.encode.t_max);
        cfg.encode.samples = e.value("samples", cfg.encode.samples);
    }
    if (j.contains("times")) {
        const json& t = j["times"];
        cfg.times.start = t.value("start", cfg.times.start);
        cfg.times.stop = t.value("stop", cfg.times.stop);
        cfg.times.count = t.value("count", cfg.times.count);
        cfg.times.list = t.value("list", cfg.times.list);
    }
    if (j.contains("decode_time") && !j["decode_time"].is_null())
        cfg.decode_time = j["decode_time"].get<double>();
    cfg.tau = j.value("tau", cfg.tau);
    cfg.width_mass = j.value("width_mass", cfg.width_mass);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.negative_control = j.value("negative_control", cfg.negative_control);
    cfg.out_dir = j.value("out_dir", cfg.out_dir);
    cfg.format = j.value("format", cfg.format);
    cfg.quiet = j.value("quiet", cfg.quiet);
    return cfg;
}

json config_to_json(const ExperimentConfig& cfg) {
    json model{{"preset", cfg.model_preset}, {"chi", cfg.chi}};
    if (cfg.model_preset == "custom") {
        json coeffs = spec_json(cfg.custom);
        coeffs.erase("n_sites");
        model.update(coeffs);
    }
    json encode{{"mode", cfg.encode.mode},
                {"center_x", cfg.encode.center_x},
                {"k0", cfg.encode.k0},
                {"delta", cfg.encode.delta},
                {"kappa", cfg.encode.kappa},
                {"k0_override", cfg.encode.k0_override
                                    ? json(*cfg.encode.k0_override)
                                    : json(nullptr)},
                {"t_min", cfg.encode.t_min},
                {"t_max", cfg.encode.t_max},
                {"samples", cfg.encode.samples}};
    json times{{"start", cfg.times.start},
               {"stop", cfg.times.stop},
               {"count", cfg.times.count},
               {"list", cfg.times.list}};
    return json{{"model", model},
                {"n_sites", cfg.n_sites},
                {"n_list", cfg.n_list},
                {"alice", {{"center", cfg.alice.center}, {"width", cfg.alice.width}}},
                {"bob", {{"center", cfg.bob.center}, {"width", cfg.bob.width}}},
                {"encode", encode},
                {"times", times},
                {"decode_time", cfg.decode_time ? json(*cfg.decode_time) : json(nullptr)},
                {"tau", cfg.tau},
                {"width_mass", cfg.width_mass},
                {"seed", cfg.seed},
                {"negative_control", cfg.negative_control},
                {"out_dir", cfg.out_dir},
                {"format", cfg.format},
                {"quiet", cfg.quiet}};
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("config: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw config_error("config: parse error in '" + path + "': " + e.what());
    }
    return config_from_json(j);
}

ExperimentConfig preset_config(const std::string& name) {
    ExperimentConfig cfg;
    cfg.model_preset = "heisenberg";
    cfg.chi = 0.25;
    if (name == "fig1") {
        // Point source |N/2> on the 100-site ring.
        cfg.n_sites = 100;
        cfg.alice = {50, 1};
        cfg.bob = {51, 10};
        cfg.encode.mode = "packet";
        cfg.encode.center_x = 0.49;
        cfg.encode.k0 = 0.0;
        cfg.encode.delta = 0.025;
        cfg.times = {0.0, 100.0, 101, {}};
        cfg.out_dir = "out_fig1";
        return cfg;
    }
    if (name == "fig2") {
        // Width-10 Gaussian at wavenumber N/4.
        cfg.n_sites = 100;
        cfg.alice = {1, 10};
        cfg.bob = {51, 10};
        cfg.encode.mode = "packet";
        cfg.encode.center_x = 0.0;
        cfg.encode.k0 = 25.0;
        cfg.encode.delta = 0.025;
        cfg.times = {0.0, 100.0, 101, {}};
        cfg.out_dir = "out_fig2";
        return cfg;
    }
    if (name == "fig3") {
        cfg.n_list = {50, 100, 200, 500, 1000, 2000, 5000};
        cfg.alice = {1, 1};
        cfg.bob = {1, 1};  // unused by the sweep
        cfg.out_dir = "out_fig3";
        return cfg;
    }
    throw config_error("preset: unknown preset '" + name + "'");
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.n_sites < 2) throw config_error("n_sites: must be >= 2");
    if (cfg.model_preset != "heisenberg" && cfg.model_preset != "custom")
        throw config_error("model.preset: unknown preset '" + cfg.model_preset + "'");
    auto check_window = [&](const WindowConfig& w, const char* name) {
        if (w.center < 1 || w.center > cfg.n_sites)
            throw config_error(std::string(name) + ".center: site out of range [1, N]");
        if (w.width < 1 || w.width > cfg.n_sites)
            throw config_error(std::string(name) + ".width: must be in [1, N]");
    };
    check_window(cfg.alice, "alice");
    check_window(cfg.bob, "bob");
    if (cfg.encode.mode != "packet" && cfg.encode.mode != "design" &&
        cfg.encode.mode != "optimal")
        throw config_error("encode.mode: unknown mode '" + cfg.encode.mode + "'");
    if (cfg.encode.mode == "packet" && !(cfg.encode.delta > 0.0))
        throw config_error("encode.delta: must be > 0");
    if (cfg.encode.mode == "design" && !(cfg.encode.kappa > 1.0))
        throw config_error("encode.kappa: must be > 1");
    if (cfg.encode.mode == "optimal") {
        if (!(cfg.encode.t_min <= cfg.encode.t_max))
            throw config_error("encode.t_min: time range is empty");
        if (cfg.encode.samples < 2 && cfg.encode.t_min != cfg.encode.t_max)
            throw config_error("encode.samples: must be >= 2");
    }
    if (cfg.times.list.empty()) {
        if (cfg.times.count < 1) throw config_error("times.count: must be >= 1");
    }
    const std::vector<double> grid = cfg.times.grid();
    if (grid.empty()) throw config_error("times: empty time grid");
    for (size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw config_error("times: grid must be strictly ascending");
    if (!(cfg.tau >= 0.5 && cfg.tau <= 1.0))
        throw config_error("tau: must be in [1/2, 1]");
    if (!(cfg.width_mass > 0.0 && cfg.width_mass < 1.0))
        throw config_error("width_mass: must be in (0, 1)");
    if (cfg.format != "csv" && cfg.format != "json" && cfg.format != "both")
        throw config_error("format: must be csv, json or both");
}

int cmd_propagate(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const int n = cfg.n_sites;
    const DispersionRelation d = cfg.dispersion(n);
    const OneParticleState psi0 = initial_state(cfg, n, d);
    const SiteWindow bob(n, cfg.bob.center, cfg.bob.width);
    const PropagationTrace trace =
        run_trace(psi0, d, cfg.times.grid(), bob, cfg.width_mass);

    OutputSink sink(cfg);
    sink.emit("trace", trace_csv(trace), trace_json(trace));
    sink.emit("trace_summary", trace_summary_csv(trace), trace_json(trace)["samples"]);
    if (!cfg.quiet)
        std::cout << "propagate: " << trace.times.size() << " samples, final capture "
                  << format_sci(trace.captures.back()) << ", final width "
                  << trace.widths.back() << "\n";
    return 0;
}

int cmd_scaling(const ExperimentConfig& cfg) {
    validate_config(cfg);
    if (cfg.n_list.empty()) throw config_error("n_list: must be nonempty for scaling");

    std::vector<int> ns = cfg.n_list;
    std::sort(ns.begin(), ns.end());
    const auto last = std::unique(ns.begin(), ns.end());
    if (last != ns.end()) {
        ns.erase(last, ns.end());
        if (!cfg.quiet)
            std::cerr << "warning: duplicate n_list entries deduplicated\n";
    }
    for (int n : ns)
        if (n < 4) throw config_error("n_list: ring sizes must be >= 4");

    struct Row {
        int n;
        int initial_width;
        int final_width;
        double ratio;
        double access_fraction;
    };
    std::vector<Row> rows(ns.size());

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < ns.size(); i = next.fetch_add(1)) {
            const int n = ns[i];
            const DispersionRelation d = cfg.dispersion(n);
            const OneParticleState psi0 = gaussian_packet(scaling_packet(n, 1), n);
            const int w0 = width(occupation_graph(psi0), cfg.width_mass);
            const OneParticleState psiT = evolve(psi0, d, static_cast<double>(n));
            const int wf = width(occupation_graph(psiT), cfg.width_mass);
            rows[i] = Row{n, w0, wf, wf / std::cbrt(static_cast<double>(n)),
                          static_cast<double>(wf) / n};
        }
    };
    std::vector<std::thread> pool;
    const int workers = sweep_workers(ns.size());
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();

    std::ostringstream csv;
    csv << "n,initial_width,final_width,ratio_to_cuberoot,access_fraction\n";
    json jrows = json::array();
    for (const Row& r : rows) {
        csv << r.n << ',' << r.initial_width << ',' << r.final_width << ','
            << format_sci(r.ratio) << ',' << format_sci(r.access_fraction) << '\n';
        jrows.push_back({{"n", r.n},
                         {"initial_width", r.initial_width},
                         {"final_width", r.final_width},
                         {"ratio_to_cuberoot", r.ratio},
                         {"access_fraction", r.access_fraction}});
    }
    OutputSink sink(cfg);
    sink.emit("scaling", csv.str(), jrows);
    if (!cfg.quiet)
        for (const Row& r : rows)
            std::cout << "scaling: N=" << r.n << " F=" << r.final_width
                      << " F/N^(1/3)=" << format_sci(r.ratio) << "\n";
    return 0;
}

int cmd_fidelity(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const int n = cfg.n_sites;
    const DispersionRelation d = cfg.dispersion(n);
    const SiteWindow bob(n, cfg.bob.center, cfg.bob.width);

    double transit;
    OneParticleState psi0;
    if (cfg.encode.mode == "optimal") {
        const SiteWindow alice(n, cfg.alice.center, cfg.alice.width);
        const OptimalEncoding enc = optimize_arrival(
            d, alice, bob, {cfg.encode.t_min, cfg.encode.t_max}, cfg.encode.samples);
        psi0 = encode(enc);
        transit = enc.arrival_time;
    } else {
        psi0 = initial_state(cfg, n, d);
        if (cfg.decode_time) {
            transit = *cfg.decode_time;
        } else {
            try {
                transit = arrival_time(d, travel_distance(cfg, n));
            } catch (const no_propagation_error&) {
                throw config_error(
                    "decode_time: required for a flat band (no propagation)");
            }
        }
    }
    if (!(transit > 0.0)) throw config_error("decode_time: must be > 0");

    const OneParticleState psiT = evolve(psi0, d, transit);
    const double capture = capture_probability(psiT, bob);
    const ChannelReport report = make_channel_report(capture, cfg.tau, transit, n);

    OutputSink sink(cfg);
    sink.emit("report", report_csv(report), report_json(report));
    if (!cfg.quiet)
        std::cout << "fidelity: capture " << format_sci(report.capture)
                  << ", average fidelity " << format_sci(report.avg_fidelity)
                  << (report.success ? " (success)" : " (below tau)") << "\n";
    return 0;
}

int cmd_optimize(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const int n = cfg.n_sites;
    const DispersionRelation d = cfg.dispersion(n);
    const SiteWindow alice(n, cfg.alice.center, cfg.alice.width);
    const SiteWindow bob(n, cfg.bob.center, cfg.bob.width);

    const OptimalEncoding enc = optimize_arrival(
        d, alice, bob, {cfg.encode.t_min, cfg.encode.t_max}, cfg.encode.samples);

    // Gaussian baseline: packet with the same support (L0 = width/N) riding
    // the fastest wavenumber, decoded at the optimiser's arrival time.
    const VelocityExtremum ext = max_group_velocity(d);
    const WavepacketSpec baseline_packet{
        .center_x = static_cast<double>(cfg.alice.center - 1) / n,
        .wavenumber_k0 = ext.k_star,
        .variance_delta = static_cast<double>(cfg.alice.width) / n / 4.0,
        .window = alice,
    };
    const OneParticleState baseline =
        evolve(gaussian_packet(baseline_packet, n), d, enc.arrival_time);
    const double baseline_capture = capture_probability(baseline, bob);

    const ChannelReport report =
        make_channel_report(enc.capture, cfg.tau, enc.arrival_time, n);

    json out = encoding_json(enc);
    out["gaussian_baseline_capture"] = baseline_capture;
    out["improvement_factor"] =
        baseline_capture > 0.0 ? enc.capture / baseline_capture : 0.0;
    out["report"] = report_json(report);

    OutputSink sink(cfg);
    sink.emit("optimal", amplitudes_csv(enc), out);
    if (sink.csv) write_text(sink.dir / "report.csv", report_csv(report));
    if (!cfg.quiet)
        std::cout << "optimize: C_max " << format_sci(enc.capture) << " at t "
                  << format_sci(enc.arrival_time) << " (gaussian baseline "
                  << format_sci(baseline_capture) << ")\n";
    return 0;
}

int cmd_verify(const ExperimentConfig& cfg) {
    validate_config(cfg);
    const int n = cfg.n_sites;
    if (n > oracle::kMaxEvolveSites)
        throw config_error("n_sites: verify requires N <= 10");
    const HamiltonianSpec spec = cfg.model_spec(n);
    const DispersionRelation d = dispersion_from_spec(spec);
    const long dim = 1L << n;

    Eigen::MatrixXcd h = oracle::build_full_hamiltonian(spec);
    if (cfg.negative_control) h += oracle::sigma_z_site(n, 1);

    std::vector<VerifyRow> rows;
    auto add = [&](const std::string& name, double residual, double tol) {
        rows.push_back({name, residual, tol, residual <= tol});
    };

    add("hermitian", (h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    add("vacuum_fixed_zero", (h.col(0)).norm(), 1e-12);

    {  // [H, S^z] via the diagonal magnetisation
        Eigen::VectorXd sz(dim);
        for (long b = 0; b < dim; ++b)
            sz(b) = n - 2 * std::popcount(static_cast<unsigned long>(b));
        double worst = 0.0;
        for (long c = 0; c < dim; ++c)
            for (long r = 0; r < dim; ++r)
                worst = std::max(worst, std::abs(h(r, c)) * std::abs(sz(r) - sz(c)));
        add("sz_commutes", worst, 1e-12);
    }

    {  // H |W(k)> = omega(k) |W(k)>
        double worst = 0.0;
        for (int k = 0; k < n; ++k) {
            const auto w = oracle::embed(twisted_w(n, k));
            worst = std::max(
                worst, (h * w.amplitudes - omega(d, k) * w.amplitudes).norm());
        }
        add("w_eigenstates", worst, 1e-10);
    }

    {
        const Eigen::MatrixXcd t = oracle::translation_matrix(n);
        add("translation_commutes", (h * t - t * h).cwiseAbs().maxCoeff(), 1e-12);
    }

    {  // one-particle eigenvalues vs the dispersion relation
        Eigen::MatrixXcd block(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) block(r, c) = h(1L << r, 1L << c);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block);
        std::vector<double> omegas(n);
        for (int k = 0; k < n; ++k) omegas[k] = omega(d, k);
        std::sort(omegas.begin(), omegas.end());
        double worst = 0.0;
        for (int k = 0; k < n; ++k)
            worst = std::max(worst, std::abs(solver.eigenvalues()(k) - omegas[k]));
        add("one_particle_eigenvalues", worst, 1e-10);
    }

    {  // sector evolution equivalence and leakage on random states
        std::mt19937 rng(cfg.seed);
        std::normal_distribution<double> gauss;
        double worst_diff = 0.0, worst_leak = 0.0;
        for (int trial = 0; trial < 10; ++trial) {
            OneParticleState psi;
            psi.n_sites = n;
            psi.site_amps.resize(n);
            for (cplx& c : psi.site_amps) c = cplx{gauss(rng), gauss(rng)};
            const double inv = 1.0 / std::sqrt(psi.one_particle_mass());
            for (cplx& c : psi.site_amps) c *= inv;
            for (double t : {0.5, 1.0, 5.0}) {
                const OneParticleState sector = evolve(psi, d, t);
                const auto full = oracle::full_evolve(oracle::embed(psi), h, t);
                worst_leak = std::max(worst_leak, oracle::sector_leakage(full));
                const OneParticleState back = oracle::restrict_to_sector(full);
                double diff = std::norm(back.vacuum_amp - sector.vacuum_amp);
                for (int j = 0; j < n; ++j)
                    diff += std::norm(back.site_amps[j] - sector.site_amps[j]);
                worst_diff = std::max(worst_diff, std::sqrt(diff));
            }
        }
        add("sector_evolution", worst_diff, 1e-10);
        add("sector_leakage", worst_leak, 1e-12);
    }

    bool all_pass = true;
    std::ostringstream csv;
    csv << "check,residual,tolerance,pass\n";
    json jrows = json::array();
    for (const VerifyRow& r : rows) {
        all_pass = all_pass && r.pass;
        csv << r.name << ',' << format_sci(r.residual) << ',' << format_sci(r.tolerance)
            << ',' << (r.pass ? 1 : 0) << '\n';
        jrows.push_back({{"check", r.name},
                         {"residual", r.residual},
                         {"tolerance", r.tolerance},
                         {"pass", r.pass}});
        if (!cfg.quiet)
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  residual "
                      << format_sci(r.residual) << "  tol " << format_sci(r.tolerance)
                      << "\n";
    }
    OutputSink sink(cfg);
    sink.emit("verify", csv.str(), jrows);
    return all_pass ? 0 : 2;
}

}  // namespace spinwire
