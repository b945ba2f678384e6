#include "spinwire/serialize.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <sstream>

namespace spinwire {

std::string format_sci(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", value);
    return buf;
}

std::string state_csv(const OneParticleState& s) {
    std::ostringstream out;
    out << "site,re,im\n";
    for (int j = 0; j < s.n_sites; ++j)
        out << (j + 1) << ',' << format_sci(s.site_amps[j].real()) << ','
            << format_sci(s.site_amps[j].imag()) << '\n';
    return out.str();
}

std::string graph_csv(const OccupationGraph& g) {
    std::ostringstream out;
    out << "site,nu\n";
    for (size_t j = 0; j < g.values.size(); ++j)
        out << (j + 1) << ',' << format_sci(g.values[j]) << '\n';
    return out.str();
}

std::string trace_csv(const PropagationTrace& t) {
    std::ostringstream out;
    out << "t,site,nu\n";
    for (size_t i = 0; i < t.times.size(); ++i)
        for (size_t j = 0; j < t.graphs[i].values.size(); ++j)
            out << format_sci(t.times[i]) << ',' << (j + 1) << ','
                << format_sci(t.graphs[i].values[j]) << '\n';
    return out.str();
}

std::string trace_summary_csv(const PropagationTrace& t) {
    std::ostringstream out;
    out << "t,capture,width,centre_of_mass\n";
    for (size_t i = 0; i < t.times.size(); ++i)
        out << format_sci(t.times[i]) << ',' << format_sci(t.captures[i]) << ','
            << t.widths[i] << ',' << format_sci(centre_of_mass(t.graphs[i])) << '\n';
    return out.str();
}

std::string report_csv(const ChannelReport& r) {
    std::ostringstream out;
    out << "capture,avg_fidelity,threshold_tau,success,transit_time,qubit_rate_lower_bound\n"
        << format_sci(r.capture) << ',' << format_sci(r.avg_fidelity) << ','
        << format_sci(r.threshold_tau) << ',' << (r.success ? 1 : 0) << ','
        << format_sci(r.transit_time) << ',' << format_sci(r.qubit_rate_lower_bound)
        << '\n';
    return out.str();
}

std::string amplitudes_csv(const OptimalEncoding& e) {
    std::ostringstream out;
    out << "site,re,im\n";
    const std::vector<int> sites = e.alice.sites();
    for (size_t i = 0; i < sites.size(); ++i)
        out << sites[i] << ',' << format_sci(e.amplitudes[i].real()) << ','
            << format_sci(e.amplitudes[i].imag()) << '\n';
    return out.str();
}

nlohmann::json spec_json(const HamiltonianSpec& spec) {
    return {{"n_sites", spec.n_sites}, {"c0", spec.c0}, {"c1", spec.c1},
            {"c2", spec.c2},           {"d1", spec.d1}, {"d2", spec.d2},
            {"e1", spec.e1},           {"f1", spec.f1}};
}

HamiltonianSpec spec_from_json(const nlohmann::json& j) {
    HamiltonianSpec spec;
    spec.n_sites = j.at("n_sites").get<int>();
    spec.c0 = j.value("c0", 0.0);
    spec.c1 = j.value("c1", 0.0);
    spec.c2 = j.value("c2", 0.0);
    spec.d1 = j.value("d1", 0.0);
    spec.d2 = j.value("d2", 0.0);
    spec.e1 = j.value("e1", 0.0);
    spec.f1 = j.value("f1", 0.0);
    validate(spec);
    return spec;
}

nlohmann::json packet_json(const WavepacketSpec& p) {
    return {{"center_x", p.center_x},
            {"k0", p.wavenumber_k0},
            {"delta", p.variance_delta},
            {"window_center", p.window.center()},
            {"window_width", p.window.width_sites()}};
}

nlohmann::json report_json(const ChannelReport& r) {
    return {{"capture", r.capture},
            {"avg_fidelity", r.avg_fidelity},
            {"threshold_tau", r.threshold_tau},
            {"success", r.success},
            {"transit_time", r.transit_time},
            {"qubit_rate_lower_bound", r.qubit_rate_lower_bound}};
}

nlohmann::json trace_json(const PropagationTrace& t) {
    nlohmann::json samples = nlohmann::json::array();
    for (size_t i = 0; i < t.times.size(); ++i) {
        samples.push_back({{"t", t.times[i]},
                           {"capture", t.captures[i]},
                           {"width", t.widths[i]},
                           {"centre_of_mass", centre_of_mass(t.graphs[i])},
                           {"nu", t.graphs[i].values}});
    }
    return {{"samples", samples}};
}

nlohmann::json encoding_json(const OptimalEncoding& e) {
    nlohmann::json amps = nlohmann::json::array();
    const std::vector<int> sites = e.alice.sites();
    for (size_t i = 0; i < sites.size(); ++i)
        amps.push_back({{"site", sites[i]},
                        {"re", e.amplitudes[i].real()},
                        {"im", e.amplitudes[i].imag()}});
    return {{"capture", e.capture},
            {"arrival_time", e.arrival_time},
            {"alice", {{"center", e.alice.center()}, {"width", e.alice.width_sites()}}},
            {"bob", {{"center", e.bob.center()}, {"width", e.bob.width_sites()}}},
            {"amplitudes", amps}};
}

}  // namespace spinwire
