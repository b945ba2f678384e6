#ifndef SPINWIRE_SERIALIZE_HPP
#define SPINWIRE_SERIALIZE_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "spinwire/encoding.hpp"
#include "spinwire/evolution.hpp"
#include "spinwire/fidelity.hpp"
#include "spinwire/optimal_encoding.hpp"
#include "spinwire/ring_model.hpp"
#include "spinwire/state.hpp"

namespace spinwire {

// Fixed 12-significant-digit scientific notation, for reproducible diffs.
std::string format_sci(double value);

// CSV emitters (header + rows, '\n' line endings, no trailing spaces).
std::string state_csv(const OneParticleState& s);            // site,re,im
std::string graph_csv(const OccupationGraph& g);             // site,nu
std::string trace_csv(const PropagationTrace& t);            // t,site,nu
std::string trace_summary_csv(const PropagationTrace& t);    // t,capture,width,centre_of_mass
std::string report_csv(const ChannelReport& r);              // one data row
std::string amplitudes_csv(const OptimalEncoding& e);        // site,re,im

// JSON builders.
nlohmann::json spec_json(const HamiltonianSpec& spec);
HamiltonianSpec spec_from_json(const nlohmann::json& j);
nlohmann::json packet_json(const WavepacketSpec& p);
nlohmann::json report_json(const ChannelReport& r);
nlohmann::json trace_json(const PropagationTrace& t);
nlohmann::json encoding_json(const OptimalEncoding& e);

}  // namespace spinwire

#endif
