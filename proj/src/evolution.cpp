#include "spinwire/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fft.hpp"

namespace spinwire {

OneParticleState evolve(const OneParticleState& s, const DispersionRelation& d,
                        double t) {
    if (s.n_sites != d.n_sites)
        throw std::invalid_argument("evolve: ring size mismatch");
    const int n = s.n_sites;
    std::vector<cplx> momentum(n);
    detail::unitary_dft(s.site_amps.data(), momentum.data(), n, /*forward=*/true);
    for (int k = 0; k < n; ++k) {
        const double phase = -omega(d, static_cast<double>(k)) * t;
        momentum[k] *= cplx{std::cos(phase), std::sin(phase)};
    }
    OneParticleState out;
    out.n_sites = n;
    out.vacuum_amp = s.vacuum_amp;
    out.site_amps.resize(n);
    detail::unitary_dft(momentum.data(), out.site_amps.data(), n, /*forward=*/false);
    return out;
}

Eigen::MatrixXcd propagator_submatrix(const DispersionRelation& d, double t,
                                      const SiteWindow& from, const SiteWindow& to) {
    if (from.n_sites() != d.n_sites || to.n_sites() != d.n_sites)
        throw std::invalid_argument("propagator_submatrix: ring size mismatch");
    const std::vector<int> rows = to.sites();
    const std::vector<int> cols = from.sites();
    Eigen::MatrixXcd block(rows.size(), cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        const OneParticleState col = evolve(site_basis(d.n_sites, cols[c]), d, t);
        for (size_t r = 0; r < rows.size(); ++r)
            block(r, c) = col.site_amps[rows[r] - 1];
    }
    return block;
}

OneParticleState translate(const OneParticleState& s, long steps) {
    const int n = s.n_sites;
    OneParticleState out = s;
    if (n == 0) return out;
    // T moves the excitation at site j to site j-1, so c'[i] = c[i+steps].
    long shift = steps % n;
    if (shift < 0) shift += n;
    std::rotate(out.site_amps.begin(), out.site_amps.begin() + shift,
                out.site_amps.end());
    return out;
}

PropagationTrace run_trace(const OneParticleState& s, const DispersionRelation& d,
                           const std::vector<double>& times, const SiteWindow& bob,
                           double width_mass) {
    for (size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("run_trace: times must be strictly ascending");
    PropagationTrace trace;
    trace.times = times;
    trace.graphs.reserve(times.size());
    trace.captures.reserve(times.size());
    trace.widths.reserve(times.size());
    for (double t : times) {
        const OneParticleState st = evolve(s, d, t);
        trace.graphs.push_back(occupation_graph(st));
        trace.captures.push_back(capture_probability(st, bob));
        trace.widths.push_back(width(trace.graphs.back(), width_mass));
    }
    return trace;
}

}  // namespace spinwire
