#include "spinwire/fidelity.hpp"

#include <cmath>
#include <stdexcept>

namespace spinwire {

namespace {

void check_capture(double c, const char* where) {
    if (!(c >= 0.0 && c <= 1.0))
        throw std::invalid_argument(std::string(where) + ": capture must be in [0, 1]");
}

void check_qubit(std::complex<double> alpha, std::complex<double> beta,
                 const char* where) {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-10)
        throw std::invalid_argument(std::string(where) + ": (alpha, beta) not normalised");
}

}  // namespace

Eigen::Matrix2cd decoded_density_matrix(std::complex<double> alpha,
                                        std::complex<double> beta, double capture) {
    check_qubit(alpha, beta, "decoded_density_matrix");
    check_capture(capture, "decoded_density_matrix");
    const double root_c = std::sqrt(capture);
    Eigen::Matrix2cd rho;
    rho(0, 0) = std::norm(alpha) + std::norm(beta) * (1.0 - capture);
    rho(0, 1) = root_c * alpha * std::conj(beta);
    rho(1, 0) = root_c * std::conj(alpha) * beta;
    rho(1, 1) = std::norm(beta) * capture;
    return rho;
}

std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> kraus_pair(double capture) {
    check_capture(capture, "kraus_pair");
    Eigen::Matrix2cd m0 = Eigen::Matrix2cd::Zero();
    Eigen::Matrix2cd m1 = Eigen::Matrix2cd::Zero();
    m0(0, 0) = 1.0;
    m0(1, 1) = std::sqrt(capture);
    m1(0, 1) = std::sqrt(1.0 - capture);
    return {m0, m1};
}

double fidelity(std::complex<double> alpha, std::complex<double> beta,
                double capture) {
    check_qubit(alpha, beta, "fidelity");
    check_capture(capture, "fidelity");
    const double a2 = std::norm(alpha);
    const double b2 = std::norm(beta);
    return a2 * a2 + (1.0 + 2.0 * std::sqrt(capture) - capture) * a2 * b2 +
           capture * b2 * b2;
}

double average_fidelity(double capture) {
    check_capture(capture, "average_fidelity");
    // grouped so both endpoints are exact: C = 0 -> 1/2, C = 1 -> 1
    return 0.5 + (2.0 * std::sqrt(capture) + capture) / 6.0;
}

double min_capture_for(double tau) {
    if (!(tau >= 0.5 && tau <= 1.0))
        throw std::invalid_argument("min_capture_for: tau must be in [1/2, 1]");
    // s^2 + 2 s + 3 - 6 tau = 0 for s = sqrt(C); the root in [0, 1].
    const double s = -1.0 + std::sqrt(6.0 * tau - 2.0);
    return s * s;
}

double qubit_rate_lower_bound(int n_sites, double tau, double achieved_avg_fidelity,
                              double transit_time) {
    (void)n_sites;  // the 1/N bound emerges from transit_time = N
    if (!(transit_time > 0.0))
        throw std::invalid_argument("qubit_rate_lower_bound: transit_time must be > 0");
    return achieved_avg_fidelity >= tau ? 1.0 / transit_time : 0.0;
}

ChannelReport make_channel_report(double capture, double tau, double transit_time,
                                  int n_sites) {
    ChannelReport r;
    r.capture = capture;
    r.avg_fidelity = average_fidelity(capture);
    r.threshold_tau = tau;
    r.success = r.avg_fidelity >= tau;
    r.transit_time = transit_time;
    r.qubit_rate_lower_bound =
        qubit_rate_lower_bound(n_sites, tau, r.avg_fidelity, transit_time);
    return r;
}

}  // namespace spinwire
