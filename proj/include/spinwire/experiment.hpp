#ifndef SPINWIRE_EXPERIMENT_HPP
#define SPINWIRE_EXPERIMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "spinwire/ring_model.hpp"

namespace spinwire {

// Raised on malformed configuration; the message names the offending field.
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct WindowConfig {
    int center = 1;
    int width = 1;
};

struct EncodeConfig {
    std::string mode = "packet";  // packet | design | optimal
    // packet
    double center_x = 0.0;
    double k0 = 0.0;
    double delta = 0.01;
    // design
    double kappa = 1.4142135623730951;
    std::optional<double> k0_override;
    // optimal
    double t_min = 0.0;
    double t_max = 0.0;
    int samples = 21;
};

struct TimesConfig {
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
    std::vector<double> list;  // non-empty list overrides start/stop/count

    std::vector<double> grid() const;
};

struct ExperimentConfig {
    std::string model_preset = "heisenberg";  // heisenberg | custom
    double chi = 0.25;
    HamiltonianSpec custom;  // used when model_preset == "custom"

    int n_sites = 100;
    std::vector<int> n_list;  // scaling sweeps

    WindowConfig alice{1, 1};
    WindowConfig bob{1, 1};
    EncodeConfig encode;
    TimesConfig times;
    std::optional<double> decode_time;
    double tau = 0.95;
    double width_mass = 0.95;
    unsigned seed = 12345;
    bool negative_control = false;

    std::string out_dir = "out";
    std::string format = "both";  // csv | json | both
    bool quiet = false;

    HamiltonianSpec model_spec(int n) const;
    DispersionRelation dispersion(int n) const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config_file(const std::string& path);

// Figure presets: fig1 (point source), fig2 (shaped packet), fig3 (scaling
// sweep over N = 50..5000).
ExperimentConfig preset_config(const std::string& name);

// Field-level checks shared by every command; throws config_error.
void validate_config(const ExperimentConfig& cfg);

// Commands. Each writes its outputs plus the normalised effective config
// under cfg.out_dir and returns the process exit code (0 success,
// 1 validation error, 2 numerical verification failure).
int cmd_propagate(const ExperimentConfig& cfg);
int cmd_scaling(const ExperimentConfig& cfg);
int cmd_fidelity(const ExperimentConfig& cfg);
int cmd_optimize(const ExperimentConfig& cfg);
int cmd_verify(const ExperimentConfig& cfg);

}  // namespace spinwire

#endif
