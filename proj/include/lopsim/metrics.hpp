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

#ifndef LOPSIM_METRICS_HPP
#define LOPSIM_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lopsim/detection.hpp"
#include "lopsim/network.hpp"

namespace lopsim {

/// Similarity value plus the two table sums used for normalization.
struct SimilarityResult {
    double value;
    double sum_a;
    double sum_b;
};

/**
@brief Classical-fidelity overlap of two nonnegative tables,
(sum sqrt(a_ij b_ij))^2 / (sum a_ij * sum b_ij). Scale invariant; entries
below 1e-300 are treated as exact zeros. Throws if either table is all-zero.
*/
inline SimilarityResult similarity_detail(const TruthTable& a, const TruthTable& b) {
    double cross = 0.0, sum_a = 0.0, sum_b = 0.0;
    for (int n = 0; n < 16; ++n) {
        const double x = a.p[n] < 1e-300 ? 0.0 : a.p[n];
        const double y = b.p[n] < 1e-300 ? 0.0 : b.p[n];
        cross += std::sqrt(x * y);
        sum_a += x;
        sum_b += y;
    }
    if (sum_a == 0.0 || sum_b == 0.0) {
        throw std::invalid_argument("similarity: all-zero table, normalization undefined");
    }
    return {cross * cross / (sum_a * sum_b), sum_a, sum_b};
}

inline double similarity(const TruthTable& a, const TruthTable& b) {
    return similarity_detail(a, b).value;
}

/**
@brief Closed-form similarity of the gate's pointwise truth table with the
ideal coincidence map,

    (e^{2 tau t_c} + e^{2 tau t_t})^2 /
    (4 (e^{4 tau t_c} + e^{4 tau t_t}
        - e^{2 tau (t_c + t_t)} cos[omega (t_c - t_t)])),

evaluated with the largest exponent factored out so it stays finite for
|tau * t| well past the overflow threshold.
*/
inline double closed_form_similarity(double tau, double omega, double t_c, double t_t) {
    const double a = 2.0 * tau * t_c;
    const double b = 2.0 * tau * t_t;
    const double m = std::max(a, b);
    const double ea = std::exp(a - m);
    const double eb = std::exp(b - m);
    const double num = (ea + eb) * (ea + eb);
    const double den =
        4.0 * (ea * ea + eb * eb - ea * eb * std::cos(omega * (t_c - t_t)));
    return num / den;
}

/// Worst-case post-selection success probability over the logical basis
/// states: the minimum row sum of the windowed Z-basis table.
inline double p_min(const ModeUnitary& u, double tau, double omega,
                    const DetectionConfig& cfg) {
    const TruthTable t = windowed_truth_table(u, tau, omega, cfg, Basis::Z);
    const auto rows = success_probabilities(t);
    return *std::min_element(rows.begin(), rows.end());
}

}  // namespace lopsim

#endif
