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

#ifndef LOPSIM_WAVEPACKET_HPP
#define LOPSIM_WAVEPACKET_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "lopsim/faddeeva.hpp"

namespace lopsim {

using cplx = std::complex<double>;

inline constexpr double kSqrtPi = 1.7724538509055160273;
// (2/pi)^(1/4), the peak amplitude of a unit-width Gaussian wavepacket
inline constexpr double kGaussNorm = 0.89324384173800233140;

/// Unit-norm Gaussian single-photon amplitude with fixed unit width:
/// psi(t) = (2/pi)^{1/4} exp(-i w t) exp(-(t - tau)^2).
struct GaussianWavepacket {
    double center_time = 0.0;       ///< tau
    double center_frequency = 0.0;  ///< omega, relative to the common carrier
};

inline cplx amplitude(const GaussianWavepacket& wp, double t) {
    const double dt = t - wp.center_time;
    const double phase = -wp.center_frequency * t;
    return kGaussNorm * std::exp(-dt * dt) * cplx{std::cos(phase), std::sin(phase)};
}

/// Closed-form carrier for every windowed integral in the library:
/// constant * exp(-quadratic * t^2 + linear * t), Re(quadratic) > 0.
struct ComplexGaussianIntegrand {
    cplx quadratic;
    cplx linear;
    cplx constant;
};

namespace detail {

// One endpoint of the erf antiderivative, split as H(t) = 2*E*A + s*G so the
// caller can cancel the 2E parts exactly when both endpoints sit on the same
// side of the saddle. G is evaluated as exp(q t - p t^2) * w(...), which stays
// bounded whenever the integrand is bounded at t.
struct ErfEndpoint {
    int full_weight;  // coefficient of 2*exp(q^2/4p)
    cplx local;       // signed local term
};

inline ErfEndpoint erf_endpoint(double t, cplx p, cplx q, cplx sqrt_p) {
    if (std::isinf(t)) {
        return t > 0 ? ErfEndpoint{0, {0.0, 0.0}} : ErfEndpoint{1, {0.0, 0.0}};
    }
    const cplx zarg = sqrt_p * t - q / (2.0 * sqrt_p);
    const cplx scale = std::exp(q * t - p * t * t);
    if (zarg.real() >= 0.0) {
        return {0, scale * faddeeva_w(cplx{0.0, 1.0} * zarg)};
    }
    return {1, -scale * faddeeva_w(cplx{0.0, -1.0} * zarg)};
}

}  // namespace detail

/**
@brief Integral of constant * exp(-p t^2 + q t) over [lo, hi], evaluated in
closed form through the Faddeeva function. Infinite limits are resolved
analytically. Throws std::invalid_argument for Re(p) <= 0 or lo > hi.
*/
inline cplx window_integral(const ComplexGaussianIntegrand& g, double lo, double hi) {
    if (!(g.quadratic.real() > 0.0)) {
        throw std::invalid_argument("window_integral: Re(quadratic) must be positive");
    }
    if (lo > hi) {
        throw std::invalid_argument("window_integral: lo > hi");
    }
    if (lo == hi) return {0.0, 0.0};

    const cplx p = g.quadratic;
    const cplx q = g.linear;
    const cplx sp = std::sqrt(p);

    const auto a = detail::erf_endpoint(lo, p, q, sp);
    const auto b = detail::erf_endpoint(hi, p, q, sp);

    cplx diff = a.local - b.local;
    if (a.full_weight != b.full_weight) {
        diff += 2.0 * static_cast<double>(a.full_weight - b.full_weight) *
                std::exp(q * q / (4.0 * p));
    }
    return g.constant * kSqrtPi / (2.0 * sp) * diff;
}

/// Mode overlap integral over the full line, int conj(psi_a) psi_b dt.
inline cplx overlap(const GaussianWavepacket& a, const GaussianWavepacket& b) {
    ComplexGaussianIntegrand g;
    g.quadratic = 2.0;
    g.linear = cplx{2.0 * (a.center_time + b.center_time),
                    a.center_frequency - b.center_frequency};
    g.constant = kGaussNorm * kGaussNorm *
                 std::exp(-a.center_time * a.center_time - b.center_time * b.center_time);
    const double inf = std::numeric_limits<double>::infinity();
    return window_integral(g, -inf, inf);
}

/// |psi|^2 accumulated over [lo, hi]; equals 1 on the full line.
inline double detection_probability(const GaussianWavepacket& wp, double lo, double hi) {
    ComplexGaussianIntegrand g;
    g.quadratic = 2.0;
    g.linear = 4.0 * wp.center_time;
    g.constant = kGaussNorm * kGaussNorm * std::exp(-2.0 * wp.center_time * wp.center_time);
    return window_integral(g, lo, hi).real();
}

/// Windowed interference integral int_W psi_a(t) conj(psi_b(t)) dt.
inline cplx windowed_overlap(const GaussianWavepacket& a, const GaussianWavepacket& b,
                             double lo, double hi) {
    ComplexGaussianIntegrand g;
    g.quadratic = 2.0;
    g.linear = cplx{2.0 * (a.center_time + b.center_time),
                    b.center_frequency - a.center_frequency};
    g.constant = kGaussNorm * kGaussNorm *
                 std::exp(-a.center_time * a.center_time - b.center_time * b.center_time);
    return window_integral(g, lo, hi);
}

}  // namespace lopsim

#endif
