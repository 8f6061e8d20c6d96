#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "lopsim/detection.hpp"
#include "lopsim/metrics.hpp"
#include "quadrature_oracle.hpp"

using namespace lopsim;

namespace {

const ModeUnitary kGate = coincidence_cnot_network();

// closed-form densities of the gate's pointwise table, with t_c the click
// time of the detector on the control output rails
double alpha_ref(double tau, double t_c, double t_t) {
    return 2.0 * std::exp(-2.0 * (t_c * t_c + (tau - t_t) * (tau - t_t))) / (9.0 * M_PI);
}
double gamma_ref(double tau, double t_c, double t_t) {
    return 2.0 * std::exp(-2.0 * ((tau - t_c) * (tau - t_c) + t_t * t_t)) / (9.0 * M_PI);
}
double beta_ref(double tau, double om, double t_c, double t_t) {
    const cplx e1 = std::exp(cplx{-t_c * t_c - (tau - t_t) * (tau - t_t), -om * t_t});
    const cplx e2 = std::exp(cplx{-(tau - t_c) * (tau - t_c) - t_t * t_t, -om * t_c});
    return 2.0 * std::norm(e1 - e2) / (9.0 * M_PI);
}

}  // namespace

TEST_CASE("DetectionConfig validation") {
    CHECK_THROWS_AS(DetectionConfig::time_resolved(0.0, 0.0, 0.0).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(DetectionConfig::time_resolved(0.0, 0.0, -1.0).validate(),
                    std::invalid_argument);
    DetectionConfig gated_bad{DetectorModel::Gated, 0.0, 1.0, 0.5};
    CHECK_THROWS_AS(gated_bad.validate(), std::invalid_argument);
    CHECK_NOTHROW(DetectionConfig::gated(0.3, 0.01).validate());
    CHECK_NOTHROW(DetectionConfig::full_line().validate());
}

TEST_CASE("pointwise table at the indistinguishable point") {
    const TruthTable t = pointwise_truth_table(kGate, 0.0, 0.0, 0.0, 0.0);
    const double peak = 2.0 / (9.0 * M_PI);
    CHECK(t.at(0, 0) == Catch::Approx(peak).epsilon(1e-12));
    CHECK(t.at(1, 1) == Catch::Approx(peak).epsilon(1e-12));
    CHECK(t.at(2, 3) == Catch::Approx(peak).epsilon(1e-12));
    CHECK(t.at(3, 2) == Catch::Approx(peak).epsilon(1e-12));
    CHECK(t.at(2, 2) < 1e-30);  // beta vanishes
    CHECK(t.at(3, 3) < 1e-30);
}

TEST_CASE("pointwise table keeps the structural sparsity pattern") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int trial = 0; trial < 10; ++trial) {
        const TruthTable t =
            pointwise_truth_table(kGate, u(rng), 4.0 * u(rng), u(rng), u(rng));
        for (int in = 0; in < 2; ++in)
            for (int out = 0; out < 4; ++out)
                if (out != in) CHECK(t.at(in, out) < 1e-30);
        for (int in = 2; in < 4; ++in)
            for (int out = 0; out < 2; ++out) CHECK(t.at(in, out) < 1e-30);
    }
}

TEST_CASE("pointwise table matches the closed-form densities") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int trial = 0; trial < 50; ++trial) {
        const double tau = u(rng), om = 4.0 * u(rng), t_c = u(rng), t_t = u(rng);
        const TruthTable t = pointwise_truth_table(kGate, tau, om, t_c, t_t);
        const double a = alpha_ref(tau, t_c, t_t);
        const double b = beta_ref(tau, om, t_c, t_t);
        const double g = gamma_ref(tau, t_c, t_t);
        CHECK(t.at(0, 0) == Catch::Approx(a).margin(1e-12));
        CHECK(t.at(1, 1) == Catch::Approx(a).margin(1e-12));
        CHECK(t.at(2, 2) == Catch::Approx(b).margin(1e-12));
        CHECK(t.at(3, 3) == Catch::Approx(b).margin(1e-12));
        CHECK(t.at(2, 3) == Catch::Approx(g).margin(1e-12));
        CHECK(t.at(3, 2) == Catch::Approx(g).margin(1e-12));
    }
}

TEST_CASE("equal click times give ideal operation for any mismatch") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double tau = u(rng), om = 4.0 * u(rng), t = u(rng);
        const TruthTable tab = pointwise_truth_table(kGate, tau, om, t, t);
        // proportional to the ideal pattern: beta terms vanish identically
        CHECK(tab.at(2, 2) <= 1e-30 * tab.at(0, 0) + 1e-300);
        CHECK(tab.at(3, 3) <= 1e-30 * tab.at(0, 0) + 1e-300);
        CHECK(tab.at(0, 0) == Catch::Approx(tab.at(1, 1)).epsilon(1e-12));
        CHECK(tab.at(2, 3) == Catch::Approx(tab.at(3, 2)).epsilon(1e-12));
    }
}

TEST_CASE("windowed table over the full line reproduces the 1/9 map") {
    const TruthTable t =
        windowed_truth_table(kGate, 0.0, 0.0, DetectionConfig::full_line());
    const TruthTable ideal = ideal_cnot_table();
    for (int n = 0; n < 16; ++n) {
        CHECK(t.p[n] == Catch::Approx(ideal.p[n] / 9.0).margin(1e-9));
    }
    for (double s : success_probabilities(t)) {
        CHECK(s == Catch::Approx(1.0 / 9.0).margin(1e-9));
    }
}

TEST_CASE("windowed entries match direct quadrature of the densities") {
    const double tau = 0.9, om = 2.1, t_c = 0.2, t_t = -0.4, t_w = 0.7;
    const TruthTable t = windowed_truth_table(
        kGate, tau, om, DetectionConfig::time_resolved(t_c, t_t, t_w));
    auto windowed = [&](auto density) {
        return oracle::integrate(
            [&](double x) {
                return oracle::integrate([&](double y) { return density(x, y); }, t_t,
                                         t_t + t_w);
            },
            t_c, t_c + t_w);
    };
    const double a = windowed([&](double x, double y) { return alpha_ref(tau, x, y); });
    const double b = windowed([&](double x, double y) { return beta_ref(tau, om, x, y); });
    const double g = windowed([&](double x, double y) { return gamma_ref(tau, x, y); });
    CHECK(t.at(0, 0) == Catch::Approx(a).margin(1e-9));
    CHECK(t.at(2, 2) == Catch::Approx(b).margin(1e-9));
    CHECK(t.at(2, 3) == Catch::Approx(g).margin(1e-9));
}

TEST_CASE("narrow-window entry approaches density times t_w^2") {
    const double t_w = 0.01;
    const TruthTable w = windowed_truth_table(
        kGate, 0.0, 0.0, DetectionConfig::time_resolved(0.0, 0.0, t_w));
    const double expected = 2.0 / (9.0 * M_PI) * t_w * t_w;
    CHECK(std::fabs(w.at(0, 0) - expected) / expected < 1e-3);

    // convergence: relative deviation shrinks linearly with t_w
    const TruthTable w2 = windowed_truth_table(
        kGate, 0.4, 1.0, DetectionConfig::time_resolved(0.1, 0.3, 1e-4));
    const TruthTable p = pointwise_truth_table(kGate, 0.4, 1.0, 0.1, 0.3);
    for (int n = 0; n < 16; ++n) {
        if (p.p[n] < 1e-20) continue;
        CHECK(std::fabs(w2.p[n] / (1e-4 * 1e-4) - p.p[n]) / p.p[n] < 1e-3);
    }
}

TEST_CASE("windowed entries grow monotonically with t_w") {
    double prev[16] = {0.0};
    for (double t_w : {0.2, 0.5, 1.0, 2.0, 4.0}) {
        const TruthTable t = windowed_truth_table(
            kGate, 0.8, 1.5, DetectionConfig::time_resolved(-0.2, 0.5, t_w));
        for (int n = 0; n < 16; ++n) {
            CHECK(t.p[n] >= prev[n] - 1e-15);
            prev[n] = t.p[n];
        }
    }
}

TEST_CASE("gated detection with a narrow window is near ideal") {
    for (double tau : {0.0, 1.0, 2.0}) {
        for (double om : {0.0, 4.0, 9.0}) {
            const TruthTable t = windowed_truth_table(
                kGate, tau, om, DetectionConfig::gated(0.0, 0.01));
            const double s = similarity(t, ideal_cnot_table());
            CHECK(s >= 0.999);
        }
    }
}

TEST_CASE("success_probabilities") {
    const TruthTable w =
        windowed_truth_table(kGate, 0.3, 0.7, DetectionConfig::time_resolved(0.0, 0.2, 1.0));
    const auto rows = success_probabilities(w);
    for (int in = 0; in < 4; ++in) {
        CHECK(rows[in] == Catch::Approx(w.row_sum(in)));
    }

    const TruthTable p = pointwise_truth_table(kGate, 0.0, 0.0, 0.0, 0.0);
    CHECK_THROWS_AS(success_probabilities(p), std::invalid_argument);

    // a gate far from the target packet collects almost no coincidences
    const TruthTable far =
        windowed_truth_table(kGate, 3.0, 0.0, DetectionConfig::gated(0.0, 0.1));
    const TruthTable near =
        windowed_truth_table(kGate, 0.0, 0.0, DetectionConfig::gated(0.0, 0.1));
    CHECK(far.total() < 1e-3 * near.total());
}

TEST_CASE("X-basis table at the ideal point") {
    const TruthTable t = windowed_truth_table(kGate, 0.0, 0.0, DetectionConfig::full_line(),
                                              Basis::X);
    const TruthTable ideal = ideal_cnot_table(Basis::X);
    for (int n = 0; n < 16; ++n) {
        CHECK(t.p[n] == Catch::Approx(ideal.p[n] / 9.0).margin(1e-9));
    }
}
