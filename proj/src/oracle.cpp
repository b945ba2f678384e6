#include "spinwire/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <bit>
#include <cmath>
#include <stdexcept>

namespace spinwire::oracle {

namespace {

void check_sites(int n, int cap, const char* where) {
    if (n < 2) throw std::invalid_argument(std::string(where) + ": n_sites must be >= 2");
    if (n > cap)
        throw std::invalid_argument(std::string(where) + ": ring too large for the dense oracle");
}

}  // namespace

Eigen::MatrixXcd build_full_hamiltonian(const HamiltonianSpec& spec, double pair_term) {
    validate(spec);
    check_sites(spec.n_sites, kMaxBuildSites, "build_full_hamiltonian");
    const int n = spec.n_sites;
    const long dim = 1L << n;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

    // Site j <-> bit j-1. On each cyclic bond, `lo` is the occupation of the
    // lower site and `hi` of its successor. The f1 family is the literal
    // current-times-hop product: a purely imaginary diagonal that vanishes on
    // the zero/one-particle sector and is non-Hermitian on higher sectors,
    // kept to verify exactly that inertness. Same for the optional pair
    // annihilator (no h.c.): it maps the sector to zero but is one-sided.
    for (long b = 0; b < dim; ++b) {
        const int particles = std::popcount(static_cast<unsigned long>(b));
        cplx diag = spec.c0 + spec.c1 * (n - particles) + spec.c2 * particles;
        for (int i = 0; i < n; ++i) {
            const int j = (i + 1) % n;
            const int lo = (b >> i) & 1;
            const int hi = (b >> j) & 1;
            if (lo != hi) {
                diag += spec.d2;
                diag += cplx{0.0, spec.f1 * (lo == 1 ? 1.0 : -1.0)};
                const long flipped = b ^ (1L << i) ^ (1L << j);
                h(flipped, b) += spec.d1;
                // i e1 (hop_back - hop_fwd): +i e1 when the excitation sits
                // on the successor site, -i e1 when it sits on the lower one.
                h(flipped, b) += cplx{0.0, spec.e1 * (hi == 1 ? 1.0 : -1.0)};
            } else if (lo == 1 && pair_term != 0.0) {
                const long killed = b & ~(1L << i) & ~(1L << j);
                h(killed, b) += pair_term;
            }
        }
        h(b, b) += diag;
    }
    return h;
}

Eigen::MatrixXcd translation_matrix(int n_sites) {
    check_sites(n_sites, kMaxEvolveSites, "translation_matrix");
    const long dim = 1L << n_sites;
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(dim, dim);
    for (long b = 0; b < dim; ++b) {
        const long rotated = (b >> 1) | ((b & 1L) << (n_sites - 1));
        t(rotated, b) = 1.0;
    }
    return t;
}

Eigen::MatrixXcd sigma_z_site(int n_sites, int site) {
    check_sites(n_sites, kMaxBuildSites, "sigma_z_site");
    if (site < 1 || site > n_sites)
        throw std::invalid_argument("sigma_z_site: site out of range");
    const long dim = 1L << n_sites;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (long b = 0; b < dim; ++b)
        m(b, b) = ((b >> (site - 1)) & 1) ? -1.0 : 1.0;
    return m;
}

double verify_w_eigenstates(const HamiltonianSpec& spec) {
    check_sites(spec.n_sites, kMaxBuildSites, "verify_w_eigenstates");
    const Eigen::MatrixXcd h = build_full_hamiltonian(spec);
    const DispersionRelation d = dispersion_from_spec(spec);
    double worst = 0.0;
    for (int k = 0; k < spec.n_sites; ++k) {
        const FullStateVector w = embed(twisted_w(spec.n_sites, k));
        const double residual =
            (h * w.amplitudes - omega(d, k) * w.amplitudes).norm();
        worst = std::max(worst, residual);
    }
    return worst;
}

double verify_translation_commutes(const HamiltonianSpec& spec) {
    check_sites(spec.n_sites, kMaxEvolveSites, "verify_translation_commutes");
    const Eigen::MatrixXcd h = build_full_hamiltonian(spec);
    const Eigen::MatrixXcd t = translation_matrix(spec.n_sites);
    return (h * t - t * h).cwiseAbs().maxCoeff();
}

FullStateVector full_evolve(const FullStateVector& v, const Eigen::MatrixXcd& h,
                            double t) {
    if (v.amplitudes.size() != h.rows())
        throw std::invalid_argument("full_evolve: dimension mismatch");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("full_evolve: eigendecomposition failed");
    Eigen::VectorXcd coeffs = solver.eigenvectors().adjoint() * v.amplitudes;
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        const double phase = -solver.eigenvalues()(i) * t;
        coeffs(i) *= cplx{std::cos(phase), std::sin(phase)};
    }
    FullStateVector out;
    out.n_sites = v.n_sites;
    out.amplitudes = solver.eigenvectors() * coeffs;
    return out;
}

FullStateVector full_evolve(const FullStateVector& v, const HamiltonianSpec& spec,
                            double t) {
    check_sites(spec.n_sites, kMaxEvolveSites, "full_evolve");
    if (spec.f1 != 0.0)
        throw std::invalid_argument(
            "full_evolve: literal f1 family is non-Hermitian outside the protocol sector");
    return full_evolve(v, build_full_hamiltonian(spec), t);
}

FullStateVector embed(const OneParticleState& s) {
    check_sites(s.n_sites, kMaxBuildSites, "embed");
    FullStateVector v;
    v.n_sites = s.n_sites;
    v.amplitudes = Eigen::VectorXcd::Zero(1L << s.n_sites);
    v.amplitudes(0) = s.vacuum_amp;
    for (int j = 0; j < s.n_sites; ++j)
        v.amplitudes(1L << j) = s.site_amps[j];
    return v;
}

OneParticleState restrict_to_sector(const FullStateVector& v) {
    OneParticleState s;
    s.n_sites = v.n_sites;
    s.vacuum_amp = v.amplitudes(0);
    s.site_amps.resize(v.n_sites);
    for (int j = 0; j < v.n_sites; ++j)
        s.site_amps[j] = v.amplitudes(1L << j);
    return s;
}

double sector_leakage(const FullStateVector& v) {
    double inside = std::norm(v.amplitudes(0));
    for (int j = 0; j < v.n_sites; ++j)
        inside += std::norm(v.amplitudes(1L << j));
    return v.amplitudes.squaredNorm() - inside;
}

}  // namespace spinwire::oracle
