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

#ifndef LOPSIM_FADDEEVA_HPP
#define LOPSIM_FADDEEVA_HPP

#include <cmath>
#include <complex>

namespace lopsim {

/**
@brief Faddeeva function w(z) = exp(-z^2) erfc(-iz), following the
Gautschi/Koelbig rational-recursion scheme (ACM Algorithm 363 family).
Accurate to roughly 1e-13 over the whole plane; in the lower half-plane
the reflection formula is used and may overflow for large |Im z|.
*/
inline std::complex<double> faddeeva_w(std::complex<double> z) {
    constexpr double two_over_sqrt_pi = 1.1283791670955125739;
    constexpr double x_lim = 5.33;
    constexpr double y_lim = 4.29;

    const double x = std::fabs(z.real());
    const double y = std::fabs(z.imag());

    double wr, wi;
    if (y < y_lim && x < x_lim) {
        const double q = (1.0 - y / y_lim) * std::sqrt(1.0 - (x / x_lim) * (x / x_lim));
        const double h = 1.0 / (3.2 * q);
        const int nc = 7 + static_cast<int>(23.0 * q);
        const int nu = 10 + static_cast<int>(21.0 * q);

        double xl = std::pow(h, 1 - nc);
        const double xh = y + 0.5 / h;
        const double yh = x;

        double rx[34] = {0.0};
        double ry[34] = {0.0};
        for (int n = nu; n > 0; --n) {
            const double tx = xh + n * rx[n];
            const double ty = yh - n * ry[n];
            const double tn = tx * tx + ty * ty;
            rx[n - 1] = 0.5 * tx / tn;
            ry[n - 1] = 0.5 * ty / tn;
        }

        double sx = 0.0, sy = 0.0;
        for (int n = nc; n > 0; --n) {
            const double saux = sx + xl;
            sx = rx[n - 1] * saux - ry[n - 1] * sy;
            sy = rx[n - 1] * sy + ry[n - 1] * saux;
            xl = h * xl;
        }
        wr = two_over_sqrt_pi * sx;
        wi = two_over_sqrt_pi * sy;
    } else {
        // asymptotic continued fraction, nine levels
        double rx0 = 0.0, ry0 = 0.0;
        for (int n = 9; n > 0; --n) {
            const double tx = y + n * rx0;
            const double ty = x - n * ry0;
            const double tn = tx * tx + ty * ty;
            rx0 = 0.5 * tx / tn;
            ry0 = 0.5 * ty / tn;
        }
        wr = two_over_sqrt_pi * rx0;
        wi = two_over_sqrt_pi * ry0;
    }

    if (y == 0.0) {
        wr = std::exp(-x * x);
    }

    // continuation into the other quadrants
    if (z.imag() < 0.0) {
        const double e = std::exp(y * y - x * x);
        wr = 2.0 * e * std::cos(2.0 * x * y) - wr;
        wi = -2.0 * e * std::sin(2.0 * x * y) - wi;
        if (z.real() > 0.0) wi = -wi;
    } else if (z.real() < 0.0) {
        wi = -wi;
    }

    return {wr, wi};
}

}  // namespace lopsim

#endif
