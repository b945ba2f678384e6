#include "spinwire/ring_model.hpp"

#include <cmath>

namespace spinwire {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void validate(const HamiltonianSpec& spec) {
    if (spec.n_sites < 2)
        throw std::invalid_argument("HamiltonianSpec: n_sites must be >= 2");
    for (double c : {spec.c0, spec.c1, spec.c2, spec.d1, spec.d2, spec.e1, spec.f1})
        if (!std::isfinite(c))
            throw std::invalid_argument("HamiltonianSpec: coefficients must be finite");
}

HamiltonianSpec heisenberg(double chi, int n_sites) {
    if (n_sites < 2)
        throw std::invalid_argument("heisenberg: n_sites must be >= 2");
    if (!std::isfinite(chi))
        throw std::invalid_argument("heisenberg: chi must be finite");
    HamiltonianSpec spec;
    spec.n_sites = n_sites;
    spec.d1 = -chi;
    spec.d2 = chi;
    return spec;
}

double vacuum_energy(const HamiltonianSpec& spec) {
    return spec.c0 + spec.c1 * spec.n_sites;
}

DispersionRelation dispersion_from_spec(const HamiltonianSpec& spec) {
    validate(spec);
    DispersionRelation d;
    d.n_sites = spec.n_sites;
    d.a_const = spec.c0 + spec.c1 * (spec.n_sites - 1) + spec.c2 + 2.0 * spec.d2;
    d.b_cos = 2.0 * spec.d1;
    d.b_sin = -2.0 * spec.e1;
    return d;
}

double omega(const DispersionRelation& d, double k) {
    const double theta = kTwoPi * k / d.n_sites;
    return d.a_const + d.b_cos * std::cos(theta) + d.b_sin * std::sin(theta);
}

double group_velocity(const DispersionRelation& d, double k) {
    // (1/2pi) domega/dk; the 2pi/N from the chain rule cancels to 1/N.
    const double theta = kTwoPi * k / d.n_sites;
    return (-d.b_cos * std::sin(theta) + d.b_sin * std::cos(theta)) / d.n_sites;
}

double dispersion_derivative(const DispersionRelation& d, double k, int order) {
    const double theta = kTwoPi * k / d.n_sites;
    const double scale = kTwoPi / d.n_sites;
    switch (order) {
        case 2:
            return scale * scale *
                   (-d.b_cos * std::cos(theta) - d.b_sin * std::sin(theta));
        case 3:
            return scale * scale * scale *
                   (d.b_cos * std::sin(theta) - d.b_sin * std::cos(theta));
        default:
            throw std::invalid_argument("dispersion_derivative: order must be 2 or 3");
    }
}

VelocityExtremum max_group_velocity(const DispersionRelation& d) {
    const double amp = std::hypot(d.b_cos, d.b_sin);
    if (amp == 0.0)
        throw no_propagation_error("max_group_velocity: flat band, no propagation");
    // N*v(k) = -B sin(theta) + B' cos(theta) = amp * cos(theta + delta),
    // delta = atan2(B, B'); the positive extremum sits at theta = -delta.
    double theta = -std::atan2(d.b_cos, d.b_sin);
    if (theta < 0.0) theta += kTwoPi;
    VelocityExtremum ext;
    ext.k_star = d.n_sites * (theta / kTwoPi);
    if (ext.k_star >= d.n_sites) ext.k_star -= d.n_sites;
    ext.v_star = amp / d.n_sites;
    return ext;
}

double arrival_time(const DispersionRelation& d, double distance) {
    return distance / max_group_velocity(d).v_star;
}

}  // namespace spinwire
