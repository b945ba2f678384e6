#ifndef SPINWIRE_FIDELITY_HPP
#define SPINWIRE_FIDELITY_HPP

#include <Eigen/Core>
#include <complex>
#include <utility>

namespace spinwire {

// Decoded single-qubit output for input alpha|0> + beta|1> after a
// transmission with capture probability C:
//   [[ |a|^2 + |b|^2 (1-C), sqrt(C) a b* ], [ sqrt(C) a* b, |b|^2 C ]]
Eigen::Matrix2cd decoded_density_matrix(std::complex<double> alpha,
                                        std::complex<double> beta, double capture);

// Amplitude-damping Kraus pair M0 = diag(1, sqrt C), M1 = [[0, sqrt(1-C)],[0,0]];
// applying them to |psi><psi| reproduces decoded_density_matrix.
std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> kraus_pair(double capture);

// <psi| rho |psi> in closed form:
// |a|^4 + (1 + 2 sqrt(C) - C) |a|^2 |b|^2 + C |b|^4.
double fidelity(std::complex<double> alpha, std::complex<double> beta,
                double capture);

// Bloch-sphere average of the fidelity: 1/2 + sqrt(C)/3 + C/6, strictly
// increasing in C.
double average_fidelity(double capture);

// Exact inverse of average_fidelity on tau in [1/2, 1].
double min_capture_for(double tau);

// Single-shot rate bound: 1/transit_time qubits per unit time when the
// achieved average fidelity clears tau, else 0. No tightness is claimed.
double qubit_rate_lower_bound(int n_sites, double tau, double achieved_avg_fidelity,
                              double transit_time);

// Summary of one transmission.
struct ChannelReport {
    double capture = 0.0;
    double avg_fidelity = 0.0;
    double threshold_tau = 0.95;
    bool success = false;
    double transit_time = 0.0;
    double qubit_rate_lower_bound = 0.0;
};

ChannelReport make_channel_report(double capture, double tau, double transit_time,
                                  int n_sites);

}  // namespace spinwire

#endif
