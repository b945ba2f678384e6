#ifndef SPINWIRE_OPTIMAL_ENCODING_HPP
#define SPINWIRE_OPTIMAL_ENCODING_HPP

#include <utility>
#include <vector>

#include "spinwire/evolution.hpp"
#include "spinwire/ring_model.hpp"
#include "spinwire/state.hpp"

namespace spinwire {

// Capture-optimal one-particle encoding for a window pair and arrival time.
// amplitudes[i] belongs to alice.sites()[i].
struct OptimalEncoding {
    std::vector<cplx> amplitudes;
    double capture = 0.0;       // C_max
    double arrival_time = 0.0;
    SiteWindow alice;
    SiteWindow bob;
};

// The capture of an encoding c supported on Alice's window is the quadratic
// form ||U_{B,A} c||^2 with U_{B,A} the propagator block from Alice's sites
// to Bob's, so the maximum over unit vectors is the largest squared singular
// value and the optimiser its right-singular vector. The singular vector's
// first nonzero component is made real positive for reproducible output.
OptimalEncoding optimal_amplitudes(const DispersionRelation& d, double t,
                                   const SiteWindow& alice, const SiteWindow& bob);

// Embeds the encoding's amplitudes as a one-particle state on the ring.
OneParticleState encode(const OptimalEncoding& enc);

// Grid scan of optimal_amplitudes over [t_range.first, t_range.second] with
// `samples` points, then golden-section refinement around the best grid
// point to 1e-4 in t. Deterministic; capture ties resolve to the lower t.
OptimalEncoding optimize_arrival(const DispersionRelation& d, const SiteWindow& alice,
                                 const SiteWindow& bob,
                                 std::pair<double, double> t_range, int samples);

}  // namespace spinwire

#endif
