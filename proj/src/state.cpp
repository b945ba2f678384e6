#include "spinwire/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fft.hpp"

namespace spinwire {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kZeroMass = 1e-30;

void check_site(int n_sites, int site, const char* where) {
    if (site < 1 || site > n_sites)
        throw std::invalid_argument(std::string(where) + ": site out of range [1, N]");
}

}  // namespace

double OneParticleState::norm_squared() const {
    return std::norm(vacuum_amp) + one_particle_mass();
}

double OneParticleState::one_particle_mass() const {
    double m = 0.0;
    for (const cplx& c : site_amps) m += std::norm(c);
    return m;
}

OneParticleState site_basis(int n_sites, int site) {
    if (n_sites < 1) throw std::invalid_argument("site_basis: n_sites must be >= 1");
    check_site(n_sites, site, "site_basis");
    OneParticleState s;
    s.n_sites = n_sites;
    s.site_amps.assign(n_sites, cplx{0.0, 0.0});
    s.site_amps[site - 1] = cplx{1.0, 0.0};
    return s;
}

OneParticleState twisted_w(int n_sites, int k) {
    if (n_sites < 1) throw std::invalid_argument("twisted_w: n_sites must be >= 1");
    if (k < 0 || k >= n_sites)
        throw std::invalid_argument("twisted_w: k out of range [0, N)");
    OneParticleState s;
    s.n_sites = n_sites;
    s.site_amps.resize(n_sites);
    const double root = 1.0 / std::sqrt(static_cast<double>(n_sites));
    for (int j = 0; j < n_sites; ++j) {
        const double phase = kTwoPi * static_cast<double>(j) * k / n_sites;
        s.site_amps[j] = root * cplx{std::cos(phase), std::sin(phase)};
    }
    return s;
}

QubitSplit split_qubit(const OneParticleState& s) {
    QubitSplit q;
    q.alpha = s.vacuum_amp;
    const double mass = s.one_particle_mass();
    const double beta_mag = std::sqrt(mass);
    q.beta = cplx{beta_mag, 0.0};
    q.unit_site_amps = s.site_amps;
    if (mass > kZeroMass)
        for (cplx& c : q.unit_site_amps) c /= beta_mag;
    return q;
}

std::vector<cplx> to_momentum(const OneParticleState& s) {
    std::vector<cplx> out(s.site_amps.size());
    detail::unitary_dft(s.site_amps.data(), out.data(),
                        static_cast<int>(s.site_amps.size()), /*forward=*/true);
    return out;
}

OneParticleState from_momentum(const std::vector<cplx>& momentum_amps, cplx vacuum_amp) {
    OneParticleState s;
    s.n_sites = static_cast<int>(momentum_amps.size());
    s.vacuum_amp = vacuum_amp;
    s.site_amps.resize(momentum_amps.size());
    detail::unitary_dft(momentum_amps.data(), s.site_amps.data(), s.n_sites,
                        /*forward=*/false);
    return s;
}

SiteWindow::SiteWindow(int n_sites, int center, int width_sites)
    : n_sites_(n_sites), center_(center), width_sites_(width_sites) {
    if (n_sites < 1) throw std::invalid_argument("SiteWindow: n_sites must be >= 1");
    check_site(n_sites, center, "SiteWindow");
    if (width_sites < 1 || width_sites > n_sites)
        throw std::invalid_argument("SiteWindow: width must be in [1, N]");
    // Block boundaries from the nearest-to-center rule. Growth alternates
    // between the two ends; a distance tie goes to the lower site index.
    int lo = center, hi = center;  // inclusive, hi may exceed N (cyclic)
    for (int added = 1; added < width_sites_; ++added) {
        const int cand_lo = lo - 1, cand_hi = hi + 1;
        const int d_lo = center - cand_lo, d_hi = cand_hi - center;
        bool take_lo;
        if (d_lo < d_hi) take_lo = true;
        else if (d_hi < d_lo) take_lo = false;
        else {
            const int site_lo = (cand_lo - 1 + n_sites_) % n_sites_ + 1;
            const int site_hi = (cand_hi - 1) % n_sites_ + 1;
            take_lo = site_lo < site_hi;
        }
        if (take_lo) lo = cand_lo; else hi = cand_hi;
    }
    first_ = (lo - 1 + n_sites_) % n_sites_ + 1;
}

SiteWindow SiteWindow::from_block(int n_sites, int first_site, int width_sites) {
    SiteWindow w(n_sites, first_site, width_sites);
    w.first_ = first_site;
    w.center_ = (first_site - 1 + (width_sites - 1) / 2) % n_sites + 1;
    return w;
}

bool SiteWindow::contains(int site) const {
    check_site(n_sites_, site, "SiteWindow::contains");
    const int offset = (site - first_ + n_sites_) % n_sites_;
    return offset < width_sites_;
}

std::vector<int> SiteWindow::sites() const {
    std::vector<int> out(width_sites_);
    for (int i = 0; i < width_sites_; ++i)
        out[i] = (first_ - 1 + i) % n_sites_ + 1;
    return out;
}

SiteWindow complement(const SiteWindow& w) {
    const int n = w.n_sites();
    const int cwidth = n - w.width_sites();
    if (cwidth == 0)
        throw std::invalid_argument("complement: window covers the whole ring");
    const int cfirst = (w.first_site() - 1 + w.width_sites()) % n + 1;
    return SiteWindow::from_block(n, cfirst, cwidth);
}

double capture_probability(const OneParticleState& s, const SiteWindow& w) {
    if (s.n_sites != w.n_sites())
        throw std::invalid_argument("capture_probability: ring size mismatch");
    const double mass = s.one_particle_mass();
    if (mass <= kZeroMass)
        throw std::domain_error("capture_probability: zero one-particle component");
    double inside = 0.0;
    for (int site : w.sites()) inside += std::norm(s.site_amps[site - 1]);
    return inside / mass;
}

SchmidtForm schmidt_decompose(const OneParticleState& s, const SiteWindow& w) {
    if (s.n_sites != w.n_sites())
        throw std::invalid_argument("schmidt_decompose: ring size mismatch");
    if (std::abs(s.vacuum_amp) > 1e-12)
        throw std::invalid_argument("schmidt_decompose: vacuum amplitude must be 0");

    SchmidtForm form;
    form.capture = capture_probability(s, w);

    const double mass = s.one_particle_mass();
    const double in_mass = form.capture * mass;
    const double out_mass = mass - in_mass;

    auto restrict_normalised = [&](bool inside, double part_mass) {
        OneParticleState r;
        r.n_sites = s.n_sites;
        r.site_amps.assign(s.n_sites, cplx{0.0, 0.0});
        const double scale = 1.0 / std::sqrt(part_mass);
        for (int site = 1; site <= s.n_sites; ++site)
            if (w.contains(site) == inside)
                r.site_amps[site - 1] = s.site_amps[site - 1] * scale;
        return r;
    };

    if (in_mass > kZeroMass) form.inside = restrict_normalised(true, in_mass);
    if (out_mass > kZeroMass) form.outside = restrict_normalised(false, out_mass);
    return form;
}

OccupationGraph occupation_graph(const OneParticleState& s) {
    const double mass = s.one_particle_mass();
    if (mass <= kZeroMass)
        throw std::domain_error("occupation_graph: zero one-particle component");
    OccupationGraph g;
    g.one_particle_mass = mass;
    g.values.resize(s.site_amps.size());
    for (size_t j = 0; j < s.site_amps.size(); ++j)
        g.values[j] = std::norm(s.site_amps[j]) / mass;
    return g;
}

int width(const OccupationGraph& g, double mass) {
    if (mass <= 0.0 || mass >= 1.0)
        throw std::invalid_argument("width: mass must be in (0, 1)");
    const int n = static_cast<int>(g.values.size());
    // Two-pointer scan over the doubled array; values are nonnegative so the
    // end pointer never retreats. Tiny slack absorbs summation roundoff.
    const double target = mass - 1e-12;
    int best_len = n;
    double run = 0.0;
    int end = 0;
    for (int start = 0; start < n; ++start) {
        while (end < start + n && run < target) {
            run += g.values[end % n];
            ++end;
        }
        if (run >= target) best_len = std::min(best_len, end - start);
        run -= g.values[start];
    }
    return best_len;
}

double centre_of_mass(const OccupationGraph& g) {
    const int n = static_cast<int>(g.values.size());
    cplx acc{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
        const double angle = kTwoPi * j / n;
        acc += g.values[j] * cplx{std::cos(angle), std::sin(angle)};
    }
    double x = std::arg(acc) / kTwoPi;
    if (x < 0.0) x += 1.0;
    return x;
}

}  // namespace spinwire
