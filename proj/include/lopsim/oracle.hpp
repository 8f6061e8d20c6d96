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

#ifndef LOPSIM_ORACLE_HPP
#define LOPSIM_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "lopsim/detection.hpp"
#include "lopsim/network.hpp"
#include "lopsim/twophoton.hpp"
#include "lopsim/wavepacket.hpp"

namespace lopsim {

/// Midpoint-rule discretization of the time axis. This module re-derives the
/// closed-form tables by brute force and optimizes for obviousness, not speed.
struct TimeGrid {
    double t_min;
    double t_max;
    int n_bins;

    double dt() const { return (t_max - t_min) / n_bins; }
    double center(int k) const { return t_min + (k + 0.5) * dt(); }

    void validate() const {
        if (n_bins < 1 || !(t_max > t_min)) {
            throw std::invalid_argument("TimeGrid: need t_max > t_min and n_bins >= 1");
        }
    }
};

/// Grid covering eight wavepacket widths beyond both photons' centers.
inline TimeGrid default_grid(double tau, int n_bins = 600) {
    return {std::min(0.0, tau) - 8.0, std::max(0.0, tau) + 8.0, n_bins};
}

/// Samples psi at bin centers scaled by sqrt(dt), so the squared entries are
/// Riemann weights of |psi|^2. Rejects grids that miss more than 1e-3 of the
/// wavepacket's norm.
inline std::vector<cplx> discretize(const GaussianWavepacket& wp, const TimeGrid& g) {
    g.validate();
    const double root_dt = std::sqrt(g.dt());
    std::vector<cplx> v(g.n_bins);
    double norm = 0.0;
    for (int k = 0; k < g.n_bins; ++k) {
        v[k] = amplitude(wp, g.center(k)) * root_dt;
        norm += std::norm(v[k]);
    }
    if (norm < 0.999) {
        throw std::invalid_argument("discretize: grid does not cover the wavepacket");
    }
    return v;
}

namespace detail {

/// Fraction of each bin lying inside [lo, hi]; 1 everywhere for full windows.
inline std::vector<double> window_weights(const TimeGrid& g, double lo, double hi) {
    std::vector<double> w(g.n_bins, 1.0);
    if (std::isinf(hi - lo)) return w;
    const double dt = g.dt();
    for (int k = 0; k < g.n_bins; ++k) {
        const double a = g.t_min + k * dt;
        const double b = a + dt;
        const double covered = std::min(b, hi) - std::max(a, lo);
        w[k] = std::clamp(covered / dt, 0.0, 1.0);
    }
    return w;
}

/// Two-point Gauss samples of psi restricted to [lo, hi], two entries per
/// bin scaled by sqrt(weight). Bins cut by a window edge use the covered
/// segment only. The higher-order rule keeps the heavily cancelled table
/// entries accurate at the default resolution.
inline std::vector<cplx> window_samples(const GaussianWavepacket& wp, const TimeGrid& g,
                                        double lo, double hi) {
    const double node = 0.5 / std::sqrt(3.0);
    const double dt = g.dt();
    std::vector<cplx> v(2 * g.n_bins);
    for (int k = 0; k < g.n_bins; ++k) {
        const double a = std::max(g.t_min + k * dt, lo);
        const double b = std::min(g.t_min + (k + 1) * dt, hi);
        if (b <= a) continue;
        const double mid = 0.5 * (a + b);
        const double half = (b - a) * node;
        const double root_w = std::sqrt(0.5 * (b - a));
        v[2 * k] = amplitude(wp, mid - half) * root_w;
        v[2 * k + 1] = amplitude(wp, mid + half) * root_w;
    }
    return v;
}

}  // namespace detail

/**
@brief Numerical re-derivation of the windowed truth table. The two-photon
amplitude is built over (rail, bin) pairs, the unitary acts on the rail
indices, and both photon-assignment paths are summed before squaring; the
squared amplitudes are then accumulated over the bins inside each detection
window.
*/
inline TruthTable brute_force_table(const ModeUnitary& u, double tau, double omega,
                                    const DetectionConfig& cfg, const TimeGrid& g) {
    cfg.validate();
    const GaussianWavepacket control{0.0, 0.0};
    const GaussianWavepacket target{tau, omega};
    discretize(control, g);  // coverage check
    discretize(target, g);

    const double c_lo = cfg.full_window() ? -kFullWindow : cfg.t_c;
    const double c_hi = cfg.full_window() ? kFullWindow : cfg.t_c + cfg.t_w;
    const double t_lo = cfg.full_window() ? -kFullWindow : cfg.t_t;
    const double t_hi = cfg.full_window() ? kFullWindow : cfg.t_t + cfg.t_w;
    const std::vector<cplx> c1 = detail::window_samples(control, g, c_lo, c_hi);
    const std::vector<cplx> t1 = detail::window_samples(target, g, c_lo, c_hi);
    const std::vector<cplx> c2 = detail::window_samples(control, g, t_lo, t_hi);
    const std::vector<cplx> t2 = detail::window_samples(target, g, t_lo, t_hi);

    TruthTable table;
    table.kind = TruthTable::Kind::Probability;
    for (int in = 0; in < 4; ++in) {
        const Mode c_in = kControlRails[in / 2];
        const Mode t_in = kTargetRails[in % 2];
        const TwoPhotonRailAmplitude amp =
            propagate_basis_pair(u, c_in, t_in, control, target);
        for (int n = 0; n < 4; ++n) {
            const cplx uu = amp.direct[n];
            const cplx vv = amp.exchange[n];
            if (uu == cplx{} && vv == cplx{}) continue;
            double sum = 0.0;
            const int n_samples = 2 * g.n_bins;
            for (int b1 = 0; b1 < n_samples; ++b1) {
                if (c1[b1] == cplx{} && t1[b1] == cplx{}) continue;
                const cplx uc = uu * c1[b1];
                const cplx vt = vv * t1[b1];
                for (int b2 = 0; b2 < n_samples; ++b2) {
                    sum += std::norm(uc * t2[b2] + vt * c2[b2]);
                }
            }
            table.at(in, n) = sum;
        }
    }
    return table;
}

/// Total two-photon probability over all (rail, bin) output configurations
/// for one basis input; equals 1 up to the discretization error of the norm.
inline double total_two_photon_probability(const ModeUnitary& u, double tau, double omega,
                                           const TimeGrid& g, Mode c_in, Mode t_in) {
    const std::vector<cplx> psi_c = discretize({0.0, 0.0}, g);
    const std::vector<cplx> psi_t = discretize({tau, omega}, g);
    const int nb = g.n_bins;

    // amplitude of the unordered configuration {(r1,b1),(r2,b2)}
    auto amp2 = [&](int r1, int b1, int r2, int b2) {
        return u.at(r1, index(c_in)) * psi_c[b1] * u.at(r2, index(t_in)) * psi_t[b2] +
               u.at(r2, index(c_in)) * psi_c[b2] * u.at(r1, index(t_in)) * psi_t[b1];
    };

    double total = 0.0;
    for (int r1 = 0; r1 < kNumModes; ++r1) {
        for (int r2 = r1; r2 < kNumModes; ++r2) {
            for (int b1 = 0; b1 < nb; ++b1) {
                const int b2_start = (r1 == r2) ? b1 : 0;
                for (int b2 = b2_start; b2 < nb; ++b2) {
                    if (r1 == r2 && b1 == b2) {
                        // both photons in one discrete mode: amplitude sqrt(2) U U psi psi
                        total += 0.5 * std::norm(amp2(r1, b1, r2, b2));
                    } else {
                        total += std::norm(amp2(r1, b1, r2, b2));
                    }
                }
            }
        }
    }
    return total;
}

}  // namespace lopsim

#endif
