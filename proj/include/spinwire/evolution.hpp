#ifndef SPINWIRE_EVOLUTION_HPP
#define SPINWIRE_EVOLUTION_HPP

#include <Eigen/Core>
#include <vector>

#include "spinwire/ring_model.hpp"
#include "spinwire/state.hpp"

namespace spinwire {

// Exact spectral evolution e^{-iHt} on the zero/one-particle sector:
// momentum transform, phase e^{-i omega(k) t} per integer mode, inverse
// transform. The vacuum amplitude is untouched (vacuum eigenvalue 0).
// Cost O(N log N).
OneParticleState evolve(const OneParticleState& s, const DispersionRelation& d,
                        double t);

// Block of the one-particle propagator: entry (r, c) is the amplitude on
// to.sites()[r] after evolving site_basis(N, from.sites()[c]) for time t.
Eigen::MatrixXcd propagator_submatrix(const DispersionRelation& d, double t,
                                      const SiteWindow& from, const SiteWindow& to);

// Cyclic translation T^steps restricted to the sector: the excitation at
// site j moves to site j-steps; the vacuum amplitude is unchanged.
OneParticleState translate(const OneParticleState& s, long steps);

struct PropagationTrace {
    std::vector<double> times;
    std::vector<OccupationGraph> graphs;
    std::vector<double> captures;
    std::vector<int> widths;
};

// Samples the evolution at the given ascending times, each evolved directly
// from t = 0, recording occupation graph, capture in `bob`, and 95%-mass
// width.
PropagationTrace run_trace(const OneParticleState& s, const DispersionRelation& d,
                           const std::vector<double>& times, const SiteWindow& bob,
                           double width_mass = 0.95);

}  // namespace spinwire

#endif
