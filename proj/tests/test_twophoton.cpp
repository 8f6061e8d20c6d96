#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "lopsim/twophoton.hpp"

using namespace lopsim;

namespace {
const GaussianWavepacket kRef{0.0, 0.0};
}

TEST_CASE("propagate_basis_pair through the identity") {
    const TwoPhotonRailAmplitude amp =
        propagate_basis_pair(ModeUnitary::identity(), Mode::C0, Mode::T0, kRef, kRef);
    CHECK(std::abs(amp.direct[0] - cplx{1.0, 0.0}) < 1e-15);
    for (int n = 1; n < 4; ++n) {
        CHECK(std::abs(amp.direct[n]) == 0.0);
    }
    for (int n = 0; n < 4; ++n) {
        CHECK(std::abs(amp.exchange[n]) == 0.0);
    }
}

TEST_CASE("propagate_basis_pair rejects non-rail inputs") {
    CHECK_THROWS_AS(
        propagate_basis_pair(ModeUnitary::identity(), Mode::AncillaC, Mode::T0, kRef, kRef),
        std::invalid_argument);
    CHECK_THROWS_AS(
        propagate_basis_pair(ModeUnitary::identity(), Mode::C0, Mode::C1, kRef, kRef),
        std::invalid_argument);
}

TEST_CASE("CNOT flip amplitude has magnitude 1/3") {
    const ModeUnitary gate = coincidence_cnot_network();
    const TwoPhotonRailAmplitude amp =
        propagate_basis_pair(gate, Mode::C1, Mode::T0, kRef, kRef);
    // |10> -> |11>: rails (c1, t1), index 2*1+1
    CHECK(std::abs(amp.direct[3] + amp.exchange[3]) == Catch::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("propagate_logical") {
    const ModeUnitary gate = coincidence_cnot_network();

    SECTION("basis state reduces to propagate_basis_pair") {
        const TwoPhotonRailAmplitude a =
            propagate_logical(gate, LogicalState::basis(2), kRef, kRef);
        const TwoPhotonRailAmplitude b =
            propagate_basis_pair(gate, Mode::C1, Mode::T0, kRef, kRef);
        for (int n = 0; n < 4; ++n) {
            CHECK(std::abs(a.direct[n] - b.direct[n]) < 1e-15);
            CHECK(std::abs(a.exchange[n] - b.exchange[n]) < 1e-15);
        }
    }

    SECTION("equal superposition through the identity keeps the lambda pattern") {
        LogicalState s;
        s.amplitudes = {0.5, 0.5, 0.5, 0.5};
        const TwoPhotonRailAmplitude amp =
            propagate_logical(ModeUnitary::identity(), s, kRef, kRef);
        for (int n = 0; n < 4; ++n) {
            CHECK(std::abs(amp.direct[n] - cplx{0.5, 0.0}) < 1e-15);
            CHECK(std::abs(amp.exchange[n]) < 1e-15);
        }
    }

    SECTION("rejects unnormalized states") {
        LogicalState s;
        s.amplitudes = {0.5, 0.0, 0.0, 0.0};
        CHECK_THROWS_AS(propagate_logical(gate, s, kRef, kRef), std::invalid_argument);
    }
}

TEST_CASE("joint_density basics") {
    SECTION("product of peak densities") {
        TwoPhotonRailAmplitude amp;
        amp.control = kRef;
        amp.target = kRef;
        amp.direct[0] = 1.0;
        CHECK(joint_density(amp, Mode::C0, Mode::T0, 0.0, 0.0) ==
              Catch::Approx(2.0 / M_PI).epsilon(1e-12));
    }
    SECTION("HOM cancellation at equal times") {
        TwoPhotonRailAmplitude amp;
        amp.control = kRef;
        amp.target = kRef;
        amp.direct[0] = 1.0;
        amp.exchange[0] = -1.0;
        for (double t : {-1.0, 0.0, 0.4, 2.2}) {
            CHECK(joint_density(amp, Mode::C0, Mode::T0, t, t) < 1e-30);
        }
    }
    SECTION("matches the interference-term closed form on the flip input") {
        const ModeUnitary gate = coincidence_cnot_network();
        const double tau = 0.8, om = 2.3;
        const TwoPhotonRailAmplitude amp =
            propagate_basis_pair(gate, Mode::C1, Mode::T0, {0.0, 0.0}, {tau, om});
        for (auto [t1, t2] : {std::pair{0.3, -0.4}, {1.2, 0.9}, {-0.7, 1.5}}) {
            const cplx e1 = std::exp(cplx{-t1 * t1 - (tau - t2) * (tau - t2), -om * t2});
            const cplx e2 = std::exp(cplx{-(tau - t1) * (tau - t1) - t2 * t2, -om * t1});
            const double beta = 2.0 * std::norm(e1 - e2) / (9.0 * M_PI);
            CHECK(joint_density(amp, Mode::C1, Mode::T0, t1, t2) ==
                  Catch::Approx(beta).margin(1e-14));
        }
    }
}

TEST_CASE("exchange symmetry of the joint density") {
    const ModeUnitary gate = coincidence_cnot_network();
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int trial = 0; trial < 20; ++trial) {
        const double tau = u(rng), om = 3.0 * u(rng), t1 = u(rng), t2 = u(rng);
        const TwoPhotonRailAmplitude amp =
            propagate_basis_pair(gate, Mode::C1, Mode::T0, {0.0, 0.0}, {tau, om});
        TwoPhotonRailAmplitude swapped = amp;
        swapped.direct = amp.exchange;
        swapped.exchange = amp.direct;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                CHECK(joint_density(amp, kControlRails[i], kTargetRails[j], t1, t2) ==
                      Catch::Approx(joint_density(swapped, kControlRails[i], kTargetRails[j],
                                                  t2, t1))
                          .margin(1e-14));
    }
}

TEST_CASE("density is invariant under a common frequency shift") {
    const ModeUnitary gate = coincidence_cnot_network();
    const double tau = 0.6, om = 1.7;
    for (double shift : {1.0, 10.0, 100.0}) {
        for (int in = 0; in < 4; ++in) {
            const auto base = propagate_logical(gate, LogicalState::basis(in), {0.0, 0.0},
                                                {tau, om});
            const auto moved = propagate_logical(gate, LogicalState::basis(in), {0.0, shift},
                                                 {tau, om + shift});
            for (auto [t1, t2] : {std::pair{0.2, 0.9}, {-0.5, 0.1}}) {
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        CHECK(joint_density(base, kControlRails[i], kTargetRails[j], t1, t2) ==
                              Catch::Approx(joint_density(moved, kControlRails[i],
                                                          kTargetRails[j], t1, t2))
                                  .margin(1e-10));
            }
        }
    }
}

TEST_CASE("two-photon probability over all configurations sums to one") {
    // coefficient-level check: sum over ordered (r1,r2) of |U U|^2 terms
    const ModeUnitary gate = coincidence_cnot_network();
    for (Mode c_in : {Mode::C0, Mode::C1}) {
        for (Mode t_in : {Mode::T0, Mode::T1}) {
            double total = 0.0;
            for (int r1 = 0; r1 < kNumModes; ++r1)
                for (int r2 = 0; r2 < kNumModes; ++r2)
                    total += std::norm(gate.at(r1, index(c_in)) * gate.at(r2, index(t_in)));
            CHECK(total == Catch::Approx(1.0).margin(1e-12));
        }
    }
}
