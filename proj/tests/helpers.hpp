#ifndef SPINWIRE_TEST_HELPERS_HPP
#define SPINWIRE_TEST_HELPERS_HPP

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "spinwire/ring_model.hpp"
#include "spinwire/state.hpp"

namespace spinwire::test {

inline constexpr double kPi = 3.14159265358979323846;

// Random unit-norm state in the one-particle sector (alpha = 0).
inline OneParticleState random_one_particle(int n, std::mt19937& rng) {
    std::normal_distribution<double> gauss;
    OneParticleState s;
    s.n_sites = n;
    s.site_amps.resize(n);
    for (cplx& c : s.site_amps) c = cplx{gauss(rng), gauss(rng)};
    const double inv = 1.0 / std::sqrt(s.one_particle_mass());
    for (cplx& c : s.site_amps) c *= inv;
    return s;
}

// Random state with a vacuum component, normalised.
inline OneParticleState random_sector_state(int n, std::mt19937& rng) {
    std::normal_distribution<double> gauss;
    OneParticleState s = random_one_particle(n, rng);
    s.vacuum_amp = cplx{gauss(rng), gauss(rng)};
    const double inv = 1.0 / std::sqrt(s.norm_squared());
    s.vacuum_amp *= inv;
    for (cplx& c : s.site_amps) c *= inv;
    return s;
}

inline HamiltonianSpec random_spec(int n, std::mt19937& rng, bool with_f1 = false) {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    HamiltonianSpec spec;
    spec.n_sites = n;
    spec.c1 = coeff(rng);
    spec.c0 = -spec.c1 * n;  // vacuum-normalised
    spec.c2 = coeff(rng);
    spec.d1 = coeff(rng);
    spec.d2 = coeff(rng);
    spec.e1 = coeff(rng);
    spec.f1 = with_f1 ? coeff(rng) : 0.0;
    return spec;
}

// Direct O(N^2) evolution straight from the mode-sum formula
//   c_j(t) = (1/sqrt N) sum_k c~_k e^{-i omega(k) t} mu^{(j-1)k},
//   c~_k  = (1/sqrt N) sum_j mu^{-(j-1)k} c_j(0).
// Test-only second implementation, independent of the FFT path.
inline OneParticleState direct_evolve(const OneParticleState& s,
                                      const DispersionRelation& d, double t) {
    const int n = s.n_sites;
    std::vector<cplx> tilde(n, cplx{0.0, 0.0});
    const double root = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            tilde[k] += root * std::polar(1.0, -2.0 * kPi * j * k / n) * s.site_amps[j];
    OneParticleState out;
    out.n_sites = n;
    out.vacuum_amp = s.vacuum_amp;
    out.site_amps.assign(n, cplx{0.0, 0.0});
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            out.site_amps[j] += root * tilde[k] *
                                std::polar(1.0, -omega(d, k) * t + 2.0 * kPi * j * k / n);
    return out;
}

inline double state_distance(const OneParticleState& a, const OneParticleState& b) {
    double acc = std::norm(a.vacuum_amp - b.vacuum_amp);
    for (size_t j = 0; j < a.site_amps.size(); ++j)
        acc += std::norm(a.site_amps[j] - b.site_amps[j]);
    return std::sqrt(acc);
}

// Haar-uniform qubit (alpha real >= 0).
inline std::pair<cplx, cplx> haar_qubit(std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double cos_theta = 2.0 * uni(rng) - 1.0;
    const double half = std::acos(cos_theta) / 2.0;
    const double phi = 2.0 * kPi * uni(rng);
    return {cplx{std::cos(half), 0.0}, std::polar(std::sin(half), phi)};
}

}  // namespace spinwire::test

#endif
