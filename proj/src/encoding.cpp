#include "spinwire/encoding.hpp"

#include <cmath>
#include <stdexcept>

namespace spinwire {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

OneParticleState gaussian_packet(const WavepacketSpec& spec, int n_sites) {
    if (spec.window.n_sites() != n_sites)
        throw std::invalid_argument("gaussian_packet: window ring size mismatch");
    if (!(spec.variance_delta > 0.0))
        throw std::invalid_argument("gaussian_packet: variance_delta must be > 0");

    OneParticleState s;
    s.n_sites = n_sites;
    s.site_amps.assign(n_sites, cplx{0.0, 0.0});
    double norm_sq = 0.0;
    for (int site : spec.window.sites()) {
        const double x = static_cast<double>(site - 1) / n_sites;
        // minimal cyclic displacement, in [-1/2, 1/2]
        const double dx = std::remainder(x - spec.center_x, 1.0);
        const double mag = std::exp(-dx * dx / (2.0 * spec.variance_delta * spec.variance_delta));
        const double phase = kTwoPi * spec.wavenumber_k0 * x;
        s.site_amps[site - 1] = mag * cplx{std::cos(phase), std::sin(phase)};
        norm_sq += mag * mag;
    }
    if (norm_sq <= 1e-290)
        throw std::domain_error("gaussian_packet: all retained amplitudes underflow");
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (cplx& c : s.site_amps) c *= inv;
    return s;
}

double broadening_second_order(double L0, double omega2, double t) {
    if (!(L0 > 0.0))
        throw std::invalid_argument("broadening_second_order: L0 must be > 0");
    const double arg = omega2 * t / (L0 * L0);
    return std::sqrt(1.0 + arg * arg);
}

double broadening_third_order(double L0, double omega3, double t) {
    if (!(L0 > 0.0))
        throw std::invalid_argument("broadening_third_order: L0 must be > 0");
    const double arg = omega3 * t / (std::sqrt(2.0) * L0 * L0 * L0);
    return std::sqrt(1.0 + 0.5 * arg * arg);
}

WavepacketSpec design_packet(const DispersionRelation& d, int alice_center,
                             double spread_budget_kappa, double travel_distance,
                             std::optional<double> k0_override) {
    if (!(spread_budget_kappa > 1.0))
        throw std::invalid_argument("design_packet: spread budget kappa must be > 1");
    if (!(travel_distance >= 0.0))
        throw std::invalid_argument("design_packet: travel_distance must be >= 0");

    const VelocityExtremum ext = max_group_velocity(d);  // rejects flat bands
    const double k0 = k0_override.value_or(ext.k_star);
    const double v0 = std::abs(k0_override ? group_velocity(d, k0) : ext.v_star);
    if (v0 <= 0.0)
        throw std::invalid_argument("design_packet: zero group velocity at override k0");

    const double t = travel_distance / v0;
    const double om2 = std::abs(dispersion_derivative(d, k0, 2));
    const double om3 = std::abs(dispersion_derivative(d, k0, 3));
    const double slack = std::sqrt(spread_budget_kappa * spread_budget_kappa - 1.0);

    // At the velocity maximum of this band family the quadratic term is an
    // exact zero; the threshold only has to separate that from roundoff.
    const double characteristic_k = d.n_sites / kTwoPi;
    const bool third_order = om2 < 1e-9 * om3 * characteristic_k;

    double L0 = third_order ? std::cbrt(om3 * t / (2.0 * slack))
                            : std::sqrt(om2 * t / slack);
    L0 = std::max(L0, 3.0 / d.n_sites);  // keep the window physical at tiny t
    if (L0 > 0.5)
        throw std::domain_error("design_packet: spread budget unattainable for any L0 <= 1/2");

    const int width = std::max<int>(3, static_cast<int>(std::llround(L0 * d.n_sites)));
    WavepacketSpec spec{
        .center_x = static_cast<double>(alice_center - 1) / d.n_sites,
        .wavenumber_k0 = k0,
        .variance_delta = L0 / 4.0,
        .window = SiteWindow(d.n_sites, alice_center, std::min(width, d.n_sites)),
    };
    return spec;
}

}  // namespace spinwire
