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

#ifndef LOPSIM_TWOPHOTON_HPP
#define LOPSIM_TWOPHOTON_HPP

#include <array>
#include <cmath>
#include <stdexcept>

#include "lopsim/network.hpp"
#include "lopsim/wavepacket.hpp"

namespace lopsim {

/// Coefficients of the four logical basis states |00>,|01>,|10>,|11>.
struct LogicalState {
    std::array<cplx, 4> amplitudes{};

    static LogicalState basis(int k) {
        LogicalState s;
        s.amplitudes[k] = 1.0;
        return s;
    }

    /// |s_c s_t> in the diagonal basis; sign = +1 for plus, -1 for minus.
    static LogicalState diagonal(int sign_c, int sign_t) {
        LogicalState s;
        for (int c = 0; c < 2; ++c)
            for (int t = 0; t < 2; ++t)
                s.amplitudes[2 * c + t] =
                    0.5 * (c == 1 ? sign_c : 1) * (t == 1 ? sign_t : 1);
        return s;
    }

    double norm_sq() const {
        double n = 0.0;
        for (const cplx& a : amplitudes) n += std::norm(a);
        return n;
    }
};

/**
Direct/exchange coefficients per coincidence output rail pair. The joint
temporal amplitude at rails (i,j) is

    A_ij(t1, t2) = u_ij psi_c(t1) psi_t(t2) + v_ij psi_c(t2) psi_t(t1),

indexed by 2*i + j with i over {c0,c1} and j over {t0,t1}.
*/
struct TwoPhotonRailAmplitude {
    std::array<cplx, 4> direct{};    // u
    std::array<cplx, 4> exchange{};  // v
    GaussianWavepacket control;
    GaussianWavepacket target;
};

inline TwoPhotonRailAmplitude propagate_basis_pair(const ModeUnitary& u, Mode c_in, Mode t_in,
                                                   const GaussianWavepacket& control,
                                                   const GaussianWavepacket& target) {
    if (c_in != Mode::C0 && c_in != Mode::C1) {
        throw std::invalid_argument("propagate_basis_pair: c_in must be a control rail");
    }
    if (t_in != Mode::T0 && t_in != Mode::T1) {
        throw std::invalid_argument("propagate_basis_pair: t_in must be a target rail");
    }
    TwoPhotonRailAmplitude amp;
    amp.control = control;
    amp.target = target;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const Mode out_c = kControlRails[i];
            const Mode out_t = kTargetRails[j];
            amp.direct[2 * i + j] = u.at(out_c, c_in) * u.at(out_t, t_in);
            amp.exchange[2 * i + j] = u.at(out_t, c_in) * u.at(out_c, t_in);
        }
    }
    return amp;
}

/// Coefficient-wise lambda-weighted sum over the four basis inputs. Valid
/// because both control rails carry the same wavepacket, as do the targets.
inline TwoPhotonRailAmplitude propagate_logical(const ModeUnitary& u, const LogicalState& in,
                                                const GaussianWavepacket& control,
                                                const GaussianWavepacket& target) {
    if (std::fabs(in.norm_sq() - 1.0) > 1e-12) {
        throw std::invalid_argument("propagate_logical: state not normalized");
    }
    TwoPhotonRailAmplitude acc;
    acc.control = control;
    acc.target = target;
    const std::array<std::pair<Mode, Mode>, 4> basis = {{
        {Mode::C0, Mode::T0},
        {Mode::C0, Mode::T1},
        {Mode::C1, Mode::T0},
        {Mode::C1, Mode::T1},
    }};
    for (int k = 0; k < 4; ++k) {
        const cplx lambda = in.amplitudes[k];
        if (lambda == cplx{0.0, 0.0}) continue;
        const TwoPhotonRailAmplitude part =
            propagate_basis_pair(u, basis[k].first, basis[k].second, control, target);
        for (int n = 0; n < 4; ++n) {
            acc.direct[n] += lambda * part.direct[n];
            acc.exchange[n] += lambda * part.exchange[n];
        }
    }
    return acc;
}

/// Coincidence probability density at rails (i,j), times (t1, t2).
inline double joint_density(const TwoPhotonRailAmplitude& amp, Mode i, Mode j, double t1,
                            double t2) {
    if (i != Mode::C0 && i != Mode::C1) {
        throw std::invalid_argument("joint_density: i must be a control rail");
    }
    if (j != Mode::T0 && j != Mode::T1) {
        throw std::invalid_argument("joint_density: j must be a target rail");
    }
    const int n = 2 * (index(i) - index(Mode::C0)) + (index(j) - index(Mode::T0));
    const cplx a = amp.direct[n] * amplitude(amp.control, t1) * amplitude(amp.target, t2) +
                   amp.exchange[n] * amplitude(amp.control, t2) * amplitude(amp.target, t1);
    return std::norm(a);
}

}  // namespace lopsim

#endif
