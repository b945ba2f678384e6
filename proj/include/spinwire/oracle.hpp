#ifndef SPINWIRE_ORACLE_HPP
#define SPINWIRE_ORACLE_HPP

#include <Eigen/Core>

#include "spinwire/ring_model.hpp"
#include "spinwire/state.hpp"

namespace spinwire {

// Dense full-Hilbert-space simulator for small rings; validates the
// one-particle-sector reduction against exact 2^N linear algebra.
//
// Basis ordering: site j is bit j-1 of the basis index, so
// |a_1 a_2 ... a_N> <-> index sum_j a_j 2^{j-1}.
namespace oracle {

inline constexpr int kMaxBuildSites = 12;   // 2^12 dense Hermitian matrix
inline constexpr int kMaxEvolveSites = 10;  // dense eigendecomposition

struct FullStateVector {
    int n_sites = 0;
    Eigen::VectorXcd amplitudes;
};

// Assembles the seven coupling families over cyclic bonds (site N+1 == 1).
// `pair_term` optionally adds the S^z-breaking pair creation/annihilation
// coupling (sigma-sigma- + h.c.) used only to verify that it annihilates
// the zero/one-particle sector.
Eigen::MatrixXcd build_full_hamiltonian(const HamiltonianSpec& spec,
                                        double pair_term = 0.0);

// Permutation matrix of the cyclic shift |a_1,...,a_N> -> |a_2,...,a_N,a_1>.
Eigen::MatrixXcd translation_matrix(int n_sites);

// sigma^z on one site (useful as a rotational-invariance-breaking
// perturbation in negative controls).
Eigen::MatrixXcd sigma_z_site(int n_sites, int site);

// max_k || H |W(k)> - omega(k) |W(k)> ||_2 over the twisted W-states.
double verify_w_eigenstates(const HamiltonianSpec& spec);

// max-norm of the commutator [H, T].
double verify_translation_commutes(const HamiltonianSpec& spec);

// Exact e^{-iHt} via dense eigendecomposition (N <= kMaxEvolveSites).
FullStateVector full_evolve(const FullStateVector& v, const HamiltonianSpec& spec,
                            double t);
FullStateVector full_evolve(const FullStateVector& v, const Eigen::MatrixXcd& h,
                            double t);

// Zero/one-particle sector <-> full space.
FullStateVector embed(const OneParticleState& s);
OneParticleState restrict_to_sector(const FullStateVector& v);
// Probability weight outside the zero/one-particle sector.
double sector_leakage(const FullStateVector& v);

}  // namespace oracle
}  // namespace spinwire

#endif
