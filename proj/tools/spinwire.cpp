#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "spinwire/experiment.hpp"

namespace {

struct Overrides {
    std::optional<std::string> config_file;
    std::optional<std::string> preset;
    std::optional<std::string> model_preset;
    std::optional<double> chi;
    std::optional<int> n_sites;
    std::vector<int> n_list;
    std::optional<int> alice_center, alice_width, bob_center, bob_width;
    std::optional<std::string> encode_mode;
    std::optional<double> center_x, k0, delta, kappa, k0_override;
    std::optional<double> t_min, t_max;
    std::optional<int> samples;
    std::optional<double> times_start, times_stop;
    std::optional<int> times_count;
    std::optional<double> decode_time, tau, width_mass;
    std::optional<unsigned> seed;
    std::optional<std::string> out_dir, format;
    bool negative_control = false;
    bool quiet = false;
    std::optional<double> c0, c1, c2, d1, d2, e1, f1;
};

spinwire::ExperimentConfig resolve(const Overrides& o) {
    spinwire::ExperimentConfig cfg;
    if (o.preset) cfg = spinwire::preset_config(*o.preset);
    if (o.config_file) cfg = spinwire::load_config_file(*o.config_file);
    if (o.model_preset) cfg.model_preset = *o.model_preset;
    if (o.chi) cfg.chi = *o.chi;
    if (o.n_sites) cfg.n_sites = *o.n_sites;
    if (!o.n_list.empty()) cfg.n_list = o.n_list;
    if (o.alice_center) cfg.alice.center = *o.alice_center;
    if (o.alice_width) cfg.alice.width = *o.alice_width;
    if (o.bob_center) cfg.bob.center = *o.bob_center;
    if (o.bob_width) cfg.bob.width = *o.bob_width;
    if (o.encode_mode) cfg.encode.mode = *o.encode_mode;
    if (o.center_x) cfg.encode.center_x = *o.center_x;
    if (o.k0) cfg.encode.k0 = *o.k0;
    if (o.delta) cfg.encode.delta = *o.delta;
    if (o.kappa) cfg.encode.kappa = *o.kappa;
    if (o.k0_override) cfg.encode.k0_override = *o.k0_override;
    if (o.t_min) cfg.encode.t_min = *o.t_min;
    if (o.t_max) cfg.encode.t_max = *o.t_max;
    if (o.samples) cfg.encode.samples = *o.samples;
    if (o.times_start) cfg.times.start = *o.times_start;
    if (o.times_stop) cfg.times.stop = *o.times_stop;
    if (o.times_count) cfg.times.count = *o.times_count;
    if (o.decode_time) cfg.decode_time = *o.decode_time;
    if (o.tau) cfg.tau = *o.tau;
    if (o.width_mass) cfg.width_mass = *o.width_mass;
    if (o.seed) cfg.seed = *o.seed;
    if (o.out_dir) cfg.out_dir = *o.out_dir;
    if (o.format) cfg.format = *o.format;
    if (o.negative_control) cfg.negative_control = true;
    if (o.quiet) cfg.quiet = true;
    if (o.c0 || o.c1 || o.c2 || o.d1 || o.d2 || o.e1 || o.f1) {
        cfg.model_preset = "custom";
        if (o.c0) cfg.custom.c0 = *o.c0;
        if (o.c1) cfg.custom.c1 = *o.c1;
        if (o.c2) cfg.custom.c2 = *o.c2;
        if (o.d1) cfg.custom.d1 = *o.d1;
        if (o.d2) cfg.custom.d2 = *o.d2;
        if (o.e1) cfg.custom.e1 = *o.e1;
        if (o.f1) cfg.custom.f1 = *o.f1;
        cfg.custom.n_sites = cfg.n_sites;
    }
    return cfg;
}

void add_common_options(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config_file, "JSON config file");
    cmd->add_option("--preset", o.preset, "figure preset: fig1, fig2 or fig3");
    cmd->add_option("--model-preset", o.model_preset, "heisenberg or custom");
    cmd->add_option("--chi", o.chi, "Heisenberg coupling chi");
    cmd->add_option("--n-sites", o.n_sites, "ring size N");
    cmd->add_option("--n-list", o.n_list, "ring sizes for scaling sweeps");
    cmd->add_option("--alice-center", o.alice_center);
    cmd->add_option("--alice-width", o.alice_width);
    cmd->add_option("--bob-center", o.bob_center);
    cmd->add_option("--bob-width", o.bob_width);
    cmd->add_option("--encode-mode", o.encode_mode, "packet, design or optimal");
    cmd->add_option("--center-x", o.center_x, "packet centre in ring lengths");
    cmd->add_option("--k0", o.k0, "packet carrier wavenumber");
    cmd->add_option("--delta", o.delta, "packet variance in ring lengths");
    cmd->add_option("--kappa", o.kappa, "design spread budget (> 1)");
    cmd->add_option("--k0-override", o.k0_override, "design carrier wavenumber override");
    cmd->add_option("--t-min", o.t_min, "optimal-encoding scan start");
    cmd->add_option("--t-max", o.t_max, "optimal-encoding scan stop");
    cmd->add_option("--samples", o.samples, "optimal-encoding scan samples");
    cmd->add_option("--times-start", o.times_start);
    cmd->add_option("--times-stop", o.times_stop);
    cmd->add_option("--times-count", o.times_count);
    cmd->add_option("--decode-time", o.decode_time, "explicit decode time T");
    cmd->add_option("--tau", o.tau, "average-fidelity threshold");
    cmd->add_option("--width-mass", o.width_mass, "mass for width measurements");
    cmd->add_option("--seed", o.seed, "seed for randomised verification checks");
    cmd->add_option("--out-dir", o.out_dir, "output directory");
    cmd->add_option("--format", o.format, "csv, json or both");
    cmd->add_flag("--negative-control", o.negative_control,
                  "verify: inject a sigma^z perturbation that must fail");
    cmd->add_flag("--quiet", o.quiet, "suppress progress output");
    cmd->add_option("--c0", o.c0, "custom model coefficient");
    cmd->add_option("--c1", o.c1, "custom model coefficient");
    cmd->add_option("--c2", o.c2, "custom model coefficient");
    cmd->add_option("--d1", o.d1, "custom model coefficient");
    cmd->add_option("--d2", o.d2, "custom model coefficient");
    cmd->add_option("--e1", o.e1, "custom model coefficient");
    cmd->add_option("--f1", o.f1, "custom model coefficient");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spinwire: quantum state transfer through 1D spin rings"};
    app.require_subcommand(1);

    Overrides o;
    int (*run)(const spinwire::ExperimentConfig&) = nullptr;

    auto* propagate =
        app.add_subcommand("propagate", "evolve an encoding and record the trace");
    auto* scaling =
        app.add_subcommand("scaling", "final-width scaling sweep over ring sizes");
    auto* fid = app.add_subcommand("fidelity", "encode, evolve, decode, report");
    auto* opt =
        app.add_subcommand("optimize", "capture-optimal encoding via the propagator SVD");
    auto* verify =
        app.add_subcommand("verify", "exact small-ring checks of the sector reduction");
    for (CLI::App* cmd : {propagate, scaling, fid, opt, verify})
        add_common_options(cmd, o);

    propagate->callback([&] { run = spinwire::cmd_propagate; });
    scaling->callback([&] { run = spinwire::cmd_scaling; });
    fid->callback([&] { run = spinwire::cmd_fidelity; });
    opt->callback([&] { run = spinwire::cmd_optimize; });
    verify->callback([&] { run = spinwire::cmd_verify; });

    CLI11_PARSE(app, argc, argv);

    try {
        return run(resolve(o));
    } catch (const spinwire::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
