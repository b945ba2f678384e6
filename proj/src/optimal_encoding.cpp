#include "spinwire/optimal_encoding.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace spinwire {

OptimalEncoding optimal_amplitudes(const DispersionRelation& d, double t,
                                   const SiteWindow& alice, const SiteWindow& bob) {
    if (alice.n_sites() != d.n_sites || bob.n_sites() != d.n_sites)
        throw std::invalid_argument("optimal_amplitudes: ring size mismatch");

    const Eigen::MatrixXcd block = propagator_submatrix(d, t, alice, bob);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(block, Eigen::ComputeThinV);
    const double sigma = svd.singularValues()(0);
    Eigen::VectorXcd v = svd.matrixV().col(0);

    // Fix the global phase: first nonzero component real positive.
    for (int i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-14) {
            v *= std::conj(v(i)) / std::abs(v(i));
            break;
        }
    }

    OptimalEncoding enc{{}, sigma * sigma, t, alice, bob};
    enc.amplitudes.assign(v.data(), v.data() + v.size());
    return enc;
}

OneParticleState encode(const OptimalEncoding& enc) {
    OneParticleState s;
    s.n_sites = enc.alice.n_sites();
    s.site_amps.assign(s.n_sites, cplx{0.0, 0.0});
    const std::vector<int> sites = enc.alice.sites();
    for (size_t i = 0; i < sites.size(); ++i)
        s.site_amps[sites[i] - 1] = enc.amplitudes[i];
    return s;
}

OptimalEncoding optimize_arrival(const DispersionRelation& d, const SiteWindow& alice,
                                 const SiteWindow& bob,
                                 std::pair<double, double> t_range, int samples) {
    const auto [t_lo, t_hi] = t_range;
    if (!(t_lo <= t_hi))
        throw std::invalid_argument("optimize_arrival: empty time range");
    if (samples < 2 && t_lo != t_hi)
        throw std::invalid_argument("optimize_arrival: need at least 2 samples");

    if (t_lo == t_hi) return optimal_amplitudes(d, t_lo, alice, bob);

    auto capture_at = [&](double t) {
        return optimal_amplitudes(d, t, alice, bob).capture;
    };

    double best_t = t_lo;
    double best_c = -1.0;
    int best_i = 0;
    for (int i = 0; i < samples; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / (samples - 1);
        const double c = capture_at(t);
        if (c > best_c) {
            best_c = c;
            best_t = t;
            best_i = i;
        }
    }

    // Golden-section refinement on the bracket around the best grid point.
    double a = t_lo + (t_hi - t_lo) * std::max(0, best_i - 1) / (samples - 1);
    double b = t_lo + (t_hi - t_lo) * std::min(samples - 1, best_i + 1) / (samples - 1);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = capture_at(x1), f2 = capture_at(x2);
    while (b - a > 1e-4) {
        if (f1 > f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = capture_at(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = capture_at(x2);
        }
    }
    const double t_ref = 0.5 * (a + b);
    const double c_ref = capture_at(t_ref);
    if (c_ref > best_c) {
        best_c = c_ref;
        best_t = t_ref;
    }
    return optimal_amplitudes(d, best_t, alice, bob);
}

}  // namespace spinwire
