#ifndef SPINWIRE_RING_MODEL_HPP
#define SPINWIRE_RING_MODEL_HPP

#include <stdexcept>
#include <utility>

namespace spinwire {

// Thrown when an operation needs a propagating band but the model is flat
// (b_cos == b_sin == 0, zero group velocity everywhere).
class no_propagation_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Coupling coefficients of the general rotationally invariant
// nearest-neighbour ring Hamiltonian
//
//   H = c0 I + sum_j [ c1 P0_j + c2 P1_j
//                      + d1 (hop_j + hop_j^dag) + d2 (hop_j + hop_j^dag)^2
//                      + e1 i (hop_j^dag - hop_j) + f1 (current x hop) ]
//
// where P0/P1 project onto empty/occupied sites and hop_j moves an
// excitation from site j to site j+1 (cyclic, site N+1 == site 1).
// The vacuum |00...0> has energy c0 + c1*N; the protocol formulas assume
// that value is zero (the Heisenberg preset satisfies it identically).
// f1 does not enter the dispersion relation: it annihilates the whole
// zero/one-particle sector.
struct HamiltonianSpec {
    int n_sites = 2;
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double e1 = 0.0;
    double f1 = 0.0;
};

void validate(const HamiltonianSpec& spec);

// Isotropic Heisenberg ring  H = chi*(N/2)*I - (chi/2) * sum_j sigma_j.sigma_{j+1},
// expressed in the coupling basis above (d1 = -chi, d2 = chi, rest zero).
HamiltonianSpec heisenberg(double chi, int n_sites);

// Energy of the vacuum |00...0> for a given spec.
double vacuum_energy(const HamiltonianSpec& spec);

// One-particle band  omega(k) = A + B cos(2 pi k / N) + B' sin(2 pi k / N),
// evaluable at fractional k, periodic with period N. The vacuum eigenvalue
// is 0 by convention.
struct DispersionRelation {
    int n_sites = 2;
    double a_const = 0.0;  // A
    double b_cos = 0.0;    // B
    double b_sin = 0.0;    // B'
};

// Coefficient map A = c0 + c1 (N-1) + c2 + 2 d2, B = 2 d1, B' = -2 e1.
DispersionRelation dispersion_from_spec(const HamiltonianSpec& spec);

double omega(const DispersionRelation& d, double k);

// Group velocity v(k) = (1/2pi) domega/dk, in ring lengths per unit time.
double group_velocity(const DispersionRelation& d, double k);

// Analytic d^2 omega/dk^2 (order 2) or d^3 omega/dk^3 (order 3).
double dispersion_derivative(const DispersionRelation& d, double k, int order);

struct VelocityExtremum {
    double k_star = 0.0;  // wavenumber in [0, N) with the largest positive v
    double v_star = 0.0;  // max |group velocity|, > 0
};

// Closed-form maximiser of |v(k)| over k in [0, N). Returns the extremum
// with positive velocity. Throws no_propagation_error on a flat band.
VelocityExtremum max_group_velocity(const DispersionRelation& d);

// Time for a packet at the fastest wavenumber to cover `distance` ring
// lengths: distance / v_star. Throws no_propagation_error on a flat band.
double arrival_time(const DispersionRelation& d, double distance);

}  // namespace spinwire

#endif
