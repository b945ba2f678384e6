#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "spinwire/encoding.hpp"
#include "spinwire/evolution.hpp"

using namespace spinwire;

TEST_CASE("spectral evolution") {
    const DispersionRelation d = dispersion_from_spec(heisenberg(0.25, 16));
    std::mt19937 rng(101);

    SUBCASE("t = 0 is the identity") {
        const OneParticleState s = test::random_sector_state(16, rng);
        CHECK(test::state_distance(evolve(s, d, 0.0), s) < 1e-14);
    }
    SUBCASE("twisted W picks up only a global phase") {
        const OneParticleState w = twisted_w(16, 5);
        const double t = 3.7;
        const OneParticleState wt = evolve(w, d, t);
        const cplx expected = std::polar(1.0, -omega(d, 5) * t);
        for (int j = 0; j < 16; ++j)
            CHECK(std::abs(wt.site_amps[j] - expected * w.site_amps[j]) < 1e-13);
        const OccupationGraph g = occupation_graph(wt);
        for (double v : g.values) CHECK(v == doctest::Approx(1.0 / 16).epsilon(1e-12));
    }
    SUBCASE("agrees with the direct mode-sum oracle") {
        for (int n : {7, 16, 45}) {
            const DispersionRelation dn = dispersion_from_spec(heisenberg(0.25, n));
            for (int trial = 0; trial < 5; ++trial) {
                const OneParticleState s = test::random_sector_state(n, rng);
                const double t = 10.0 * trial;
                REQUIRE(test::state_distance(evolve(s, dn, t),
                                             test::direct_evolve(s, dn, t)) < 1e-12);
            }
        }
    }
    SUBCASE("norm preserved at long times") {
        const OneParticleState s = test::random_sector_state(16, rng);
        for (double t : {0.1, 10.0, 1234.5}) {
            CHECK(evolve(s, d, t).norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("composition evolve(t1) then evolve(t2) equals evolve(t1 + t2)") {
        for (int trial = 0; trial < 10; ++trial) {
            const OneParticleState s = test::random_sector_state(16, rng);
            const double t1 = 2.5 + trial, t2 = 7.1;
            CHECK(test::state_distance(evolve(evolve(s, d, t1), d, t2),
                                       evolve(s, d, t1 + t2)) < 1e-10);
        }
    }
    SUBCASE("ring size mismatch rejected") {
        const OneParticleState s = site_basis(8, 1);
        CHECK_THROWS_AS(evolve(s, d, 1.0), std::invalid_argument);
    }
}

TEST_CASE("translation") {
    SUBCASE("N steps is the identity") {
        std::mt19937 rng(103);
        const OneParticleState s = test::random_sector_state(12, rng);
        CHECK(test::state_distance(translate(s, 12), s) < 1e-15);
        CHECK(test::state_distance(translate(s, -12), s) < 1e-15);
    }
    SUBCASE("one step sends |j> to |j-1>") {
        CHECK(test::state_distance(translate(site_basis(10, 4), 1), site_basis(10, 3)) <
              1e-15);
        CHECK(test::state_distance(translate(site_basis(10, 1), 1), site_basis(10, 10)) <
              1e-15);
        CHECK(test::state_distance(translate(site_basis(10, 4), -1), site_basis(10, 5)) <
              1e-15);
    }
    SUBCASE("twisted W is an eigenstate: modulus profile invariant") {
        const OneParticleState w = twisted_w(12, 5);
        const OneParticleState shifted = translate(w, 1);
        const cplx ratio = shifted.site_amps[0] / w.site_amps[0];
        CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-13);
        for (int j = 0; j < 12; ++j)
            CHECK(std::abs(shifted.site_amps[j] - ratio * w.site_amps[j]) < 1e-13);
    }
    SUBCASE("commutes with evolution") {
        std::mt19937 rng(107);
        const DispersionRelation d = dispersion_from_spec(heisenberg(0.3, 24));
        for (int trial = 0; trial < 100; ++trial) {
            const OneParticleState s = test::random_sector_state(24, rng);
            const double t = 0.5 + trial * 0.25;
            const long steps = 1 + trial % 7;
            REQUIRE(test::state_distance(evolve(translate(s, steps), d, t),
                                         translate(evolve(s, d, t), steps)) < 1e-10);
        }
    }
}

TEST_CASE("propagator submatrix") {
    const DispersionRelation d = dispersion_from_spec(heisenberg(0.25, 20));
    SUBCASE("t = 0 identity block") {
        const SiteWindow w(20, 4, 5);
        const Eigen::MatrixXcd block = propagator_submatrix(d, 0.0, w, w);
        CHECK((block - Eigen::MatrixXcd::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-13);
    }
    SUBCASE("full-ring block is unitary") {
        const SiteWindow full(20, 1, 20);
        const Eigen::MatrixXcd u = propagator_submatrix(d, 3.3, full, full);
        CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(20, 20)).cwiseAbs().maxCoeff() <
              1e-10);
    }
    SUBCASE("singular values of any block stay at or below one") {
        std::mt19937 rng(109);
        std::uniform_int_distribution<int> cc(1, 20), wc(1, 20);
        for (int trial = 0; trial < 10; ++trial) {
            const SiteWindow from(20, cc(rng), wc(rng));
            const SiteWindow to(20, cc(rng), wc(rng));
            const Eigen::MatrixXcd block = propagator_submatrix(d, 5.0 + trial, from, to);
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(block);
            REQUIRE(svd.singularValues()(0) <= 1.0 + 1e-10);
        }
    }
    SUBCASE("columns match single-site evolution") {
        const SiteWindow from(20, 2, 3);
        const SiteWindow to(20, 11, 4);
        const Eigen::MatrixXcd block = propagator_submatrix(d, 7.0, from, to);
        const std::vector<int> cols = from.sites();
        const std::vector<int> rows = to.sites();
        for (size_t c = 0; c < cols.size(); ++c) {
            const OneParticleState evolved = evolve(site_basis(20, cols[c]), d, 7.0);
            for (size_t r = 0; r < rows.size(); ++r)
                CHECK(std::abs(block(r, c) - evolved.site_amps[rows[r] - 1]) < 1e-13);
        }
    }
}

TEST_CASE("propagation trace") {
    const int n = 100;
    const DispersionRelation d = dispersion_from_spec(heisenberg(0.25, n));
    const SiteWindow bob(n, 51, 10);

    SUBCASE("single time zero reproduces the initial state") {
        const OneParticleState s = site_basis(n, 5);
        const PropagationTrace trace = run_trace(s, d, {0.0}, bob);
        CHECK(trace.times.size() == 1);
        CHECK(trace.widths[0] == 1);
        CHECK(trace.captures[0] == 0.0);
    }
    SUBCASE("point source disperses while the shaped packet holds") {
        const PropagationTrace point =
            run_trace(site_basis(n, 50), d, {100.0}, bob);
        const WavepacketSpec packet{0.0, 25.0, 0.025, SiteWindow(n, 1, 10)};
        const PropagationTrace shaped =
            run_trace(gaussian_packet(packet, n), d, {100.0}, bob);
        CHECK(point.widths[0] > 2 * shaped.widths[0]);
    }
    SUBCASE("captures stay within [0, 1]") {
        std::mt19937 rng(113);
        const OneParticleState s = test::random_one_particle(n, rng);
        std::vector<double> times;
        for (int i = 0; i <= 20; ++i) times.push_back(5.0 * i);
        const PropagationTrace trace = run_trace(s, d, times, bob);
        for (double c : trace.captures) {
            CHECK(c >= 0.0);
            CHECK(c <= 1.0);
        }
    }
    SUBCASE("non-ascending times rejected") {
        CHECK_THROWS_AS(run_trace(site_basis(n, 1), d, {1.0, 1.0}, bob),
                        std::invalid_argument);
    }
}

TEST_CASE("packet centre of mass moves at the group velocity") {
    const int n = 100;
    const DispersionRelation d = dispersion_from_spec(heisenberg(0.25, n));
    const WavepacketSpec packet =
        design_packet(d, 1, std::sqrt(2.0), 0.5);
    const OneParticleState psi0 = gaussian_packet(packet, n);
    const double x0 = centre_of_mass(occupation_graph(psi0));
    const double v_star = max_group_velocity(d).v_star;

    // displacement over [0, N], unwrapped across the seam
    const double xT = centre_of_mass(occupation_graph(evolve(psi0, d, 100.0)));
    double moved = xT - x0;
    if (moved < 0.0) moved += 1.0;
    const double v_measured = moved / 100.0;
    CHECK(std::abs(v_measured - v_star) <= 0.05 * v_star);
}
