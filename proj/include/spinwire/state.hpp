#ifndef SPINWIRE_STATE_HPP
#define SPINWIRE_STATE_HPP

#include <complex>
#include <optional>
#include <vector>

namespace spinwire {

using cplx = std::complex<double>;

// State in the zero/one-particle sector of an N-site ring:
//   |Psi> = vacuum_amp |00...0> + sum_j site_amps[j-1] |j>
// Sites are labelled 1..N; site j is stored at index j-1. The single
// normalisation invariant is |vacuum_amp|^2 + sum |site_amps|^2 = 1.
struct OneParticleState {
    int n_sites = 0;
    cplx vacuum_amp{0.0, 0.0};
    std::vector<cplx> site_amps;

    double norm_squared() const;
    double one_particle_mass() const;  // sum |site_amps|^2
};

// |j>: single excitation at the given site (1-based).
OneParticleState site_basis(int n_sites, int site);

// Twisted W-state |W(k)> = (1/sqrt N) sum_j mu^{(j-1)k} |j>, mu = e^{2 pi i/N}.
OneParticleState twisted_w(int n_sites, int k);

// Splits the state into (alpha, beta, unit-norm site amplitudes), the
// two-constraint form used by the fidelity channel formulas.
struct QubitSplit {
    cplx alpha;
    cplx beta;
    std::vector<cplx> unit_site_amps;
};
QubitSplit split_qubit(const OneParticleState& s);

// Momentum coefficients c~_k = (1/sqrt N) sum_j mu^{-(j-1)k} c_j, k = 0..N-1.
std::vector<cplx> to_momentum(const OneParticleState& s);

// Inverse transform; exact round trip with to_momentum.
OneParticleState from_momentum(const std::vector<cplx>& momentum_amps,
                               cplx vacuum_amp = cplx{0.0, 0.0});

// Contiguous cyclic block of width_sites sites: the sites nearest to
// `center` (1-based), distance ties broken toward the lower site index.
class SiteWindow {
public:
    SiteWindow(int n_sites, int center, int width_sites);

    // Window whose member set is exactly the given contiguous block. Needed
    // because the tie rule above cannot reach every block (an even-width
    // block whose high end sits at site N resolves its distance tie the
    // other way); the stored center is the block's middle site.
    static SiteWindow from_block(int n_sites, int first_site, int width_sites);

    int n_sites() const { return n_sites_; }
    int center() const { return center_; }
    int width_sites() const { return width_sites_; }

    bool contains(int site) const;
    // Member sites in ring order starting at the block's first site.
    std::vector<int> sites() const;
    int first_site() const { return first_; }

private:
    int n_sites_;
    int center_;
    int width_sites_;
    int first_;  // first site of the contiguous block
};

// Window whose site set is exactly the complement block. Requires w to
// cover less than the whole ring.
SiteWindow complement(const SiteWindow& w);

// Probability mass of the normalised one-particle component inside w.
// Throws std::domain_error when the one-particle component vanishes.
double capture_probability(const OneParticleState& s, const SiteWindow& w);

// Two-term Schmidt form of a pure one-particle state (vacuum_amp must be 0)
// across the bipartition (w, complement):
//   |Psi> = sqrt(C) |phi_in>_w |0>_out + sqrt(1-C) |0>_w |phi_out>_out
// with C the capture probability in w. A side with zero mass is absent.
struct SchmidtForm {
    double capture = 0.0;
    std::optional<OneParticleState> inside;
    std::optional<OneParticleState> outside;
};
SchmidtForm schmidt_decompose(const OneParticleState& s, const SiteWindow& w);

// Site-occupation bar graph nu_j = |c_j|^2 / sum |c|^2.
struct OccupationGraph {
    std::vector<double> values;
    double one_particle_mass = 0.0;  // normalisation used to build values
};
OccupationGraph occupation_graph(const OneParticleState& s);

// Length of the minimal contiguous cyclic window holding at least `mass`
// of the graph; ties broken by smaller length, then smaller start index.
int width(const OccupationGraph& g, double mass = 0.95);

// Circular mean position in ring lengths: arg(sum nu_j e^{2 pi i x_j}) / 2pi,
// wrapped to [0, 1), with x_j = (j-1)/N.
double centre_of_mass(const OccupationGraph& g);

}  // namespace spinwire

#endif
