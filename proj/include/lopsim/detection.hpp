/**
 * Copyright 2026 The lopsim developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOPSIM_DETECTION_HPP
#define LOPSIM_DETECTION_HPP

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lopsim/network.hpp"
#include "lopsim/twophoton.hpp"
#include "lopsim/wavepacket.hpp"

namespace lopsim {

enum class DetectorModel { TimeResolved, Gated };
enum class Basis { Z, X };

inline constexpr double kFullWindow = std::numeric_limits<double>::infinity();

/// Detector model plus click times and shared integration window. A t_w of
/// kFullWindow integrates each detector over the whole line.
struct DetectionConfig {
    DetectorModel model = DetectorModel::TimeResolved;
    double t_c = 0.0;
    double t_t = 0.0;
    double t_w = kFullWindow;

    static DetectionConfig time_resolved(double t_c, double t_t, double t_w) {
        return {DetectorModel::TimeResolved, t_c, t_t, t_w};
    }
    static DetectionConfig gated(double t, double t_w) {
        return {DetectorModel::Gated, t, t, t_w};
    }
    static DetectionConfig full_line() {
        return {DetectorModel::TimeResolved, 0.0, 0.0, kFullWindow};
    }

    bool full_window() const { return std::isinf(t_w); }

    void validate() const {
        if (!(t_w > 0.0)) {
            throw std::invalid_argument("DetectionConfig: t_w must be positive");
        }
        if (model == DetectorModel::Gated && t_c != t_t) {
            throw std::invalid_argument("DetectionConfig: gated detection requires t_c == t_t");
        }
    }
};

/// 4x4 nonnegative table, rows = logical inputs, columns = logical outputs.
/// Pointwise tables hold densities per (time x time); windowed tables hold
/// probabilities.
struct TruthTable {
    enum class Kind { Density, Probability };

    std::array<double, 16> p{};
    Kind kind = Kind::Probability;

    double& at(int in, int out) { return p[in * 4 + out]; }
    const double& at(int in, int out) const { return p[in * 4 + out]; }

    double row_sum(int in) const {
        return p[in * 4] + p[in * 4 + 1] + p[in * 4 + 2] + p[in * 4 + 3];
    }
    double total() const {
        double s = 0.0;
        for (double x : p) s += x;
        return s;
    }
};

/// Reference tables with unit entries on the ideal coincidence map.
inline TruthTable ideal_cnot_table(Basis basis = Basis::Z) {
    TruthTable t;
    t.kind = TruthTable::Kind::Probability;
    if (basis == Basis::Z) {
        // |00>->|00>, |01>->|01>, |10>->|11>, |11>->|10>
        t.at(0, 0) = t.at(1, 1) = t.at(2, 3) = t.at(3, 2) = 1.0;
    } else {
        // |++>->|++>, |+->->|-->, |-+>->|-+>, |-->->|+->
        t.at(0, 0) = t.at(1, 3) = t.at(2, 2) = t.at(3, 1) = 1.0;
    }
    return t;
}

namespace detail {

inline std::array<LogicalState, 4> basis_inputs(Basis basis) {
    if (basis == Basis::Z) {
        return {LogicalState::basis(0), LogicalState::basis(1), LogicalState::basis(2),
                LogicalState::basis(3)};
    }
    return {LogicalState::diagonal(+1, +1), LogicalState::diagonal(+1, -1),
            LogicalState::diagonal(-1, +1), LogicalState::diagonal(-1, -1)};
}

inline ModeUnitary measured_network(const ModeUnitary& u, Basis basis) {
    if (basis == Basis::Z) return u;
    return compose({u, xbasis_analyzer()});
}

}  // namespace detail

/**
@brief Probability-density truth table for ideal time-resolving detectors
clicking at (t_c, t_t). In the X basis the network is extended with balanced
analysis splitters and driven with the four diagonal-basis inputs.
*/
inline TruthTable pointwise_truth_table(const ModeUnitary& u, double tau, double omega,
                                        double t_c, double t_t, Basis basis = Basis::Z) {
    const GaussianWavepacket control{0.0, 0.0};
    const GaussianWavepacket target{tau, omega};
    const ModeUnitary net = detail::measured_network(u, basis);
    const auto inputs = detail::basis_inputs(basis);

    TruthTable table;
    table.kind = TruthTable::Kind::Density;
    for (int in = 0; in < 4; ++in) {
        const TwoPhotonRailAmplitude amp = propagate_logical(net, inputs[in], control, target);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                table.at(in, 2 * i + j) =
                    joint_density(amp, kControlRails[i], kTargetRails[j], t_c, t_t);
    }
    return table;
}

/**
@brief Window-integrated truth table. Each entry is the double integral of the
coincidence density over [t_c, t_c+t_w] x [t_t, t_t+t_w], reduced to the three
closed-form Gaussian window integrals

    |u|^2 P_c(W1) P_t(W2) + |v|^2 P_t(W1) P_c(W2)
        + 2 Re[ u conj(v) C(W1) conj(C(W2)) ],

where P are single-photon click probabilities and C is the windowed overlap.
Entries are classical probabilities; phase relations between different rail
pairs are ignored.
*/
inline TruthTable windowed_truth_table(const ModeUnitary& u, double tau, double omega,
                                       const DetectionConfig& cfg, Basis basis = Basis::Z) {
    cfg.validate();
    const GaussianWavepacket control{0.0, 0.0};
    const GaussianWavepacket target{tau, omega};
    const ModeUnitary net = detail::measured_network(u, basis);
    const auto inputs = detail::basis_inputs(basis);

    const double c_lo = cfg.full_window() ? -kFullWindow : cfg.t_c;
    const double c_hi = cfg.full_window() ? kFullWindow : cfg.t_c + cfg.t_w;
    const double t_lo = cfg.full_window() ? -kFullWindow : cfg.t_t;
    const double t_hi = cfg.full_window() ? kFullWindow : cfg.t_t + cfg.t_w;

    const double pc1 = detection_probability(control, c_lo, c_hi);
    const double pc2 = detection_probability(control, t_lo, t_hi);
    const double pt1 = detection_probability(target, c_lo, c_hi);
    const double pt2 = detection_probability(target, t_lo, t_hi);
    const cplx ov1 = windowed_overlap(control, target, c_lo, c_hi);
    const cplx ov2 = windowed_overlap(control, target, t_lo, t_hi);

    TruthTable table;
    table.kind = TruthTable::Kind::Probability;
    for (int in = 0; in < 4; ++in) {
        const TwoPhotonRailAmplitude amp = propagate_logical(net, inputs[in], control, target);
        for (int n = 0; n < 4; ++n) {
            const cplx uu = amp.direct[n];
            const cplx vv = amp.exchange[n];
            double entry = std::norm(uu) * pc1 * pt2 + std::norm(vv) * pt1 * pc2 +
                           2.0 * (uu * std::conj(vv) * ov1 * std::conj(ov2)).real();
            if (entry < 0.0) entry = 0.0;  // clip roundoff at HOM zeros
            table.at(in, n) = entry;
        }
    }
    return table;
}

/// Per-basis-state post-selection success probability (row sums).
inline std::array<double, 4> success_probabilities(const TruthTable& t) {
    if (t.kind != TruthTable::Kind::Probability) {
        throw std::invalid_argument("success_probabilities: requires a windowed table");
    }
    return {t.row_sum(0), t.row_sum(1), t.row_sum(2), t.row_sum(3)};
}

}  // namespace lopsim

#endif
