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

#ifndef LOPSIM_NETWORK_HPP
#define LOPSIM_NETWORK_HPP

#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "lopsim/wavepacket.hpp"

namespace lopsim {

/// Spatial modes of the coincidence gate, in the fixed repo-wide order.
/// AncillaC and AncillaT are vacuum ports; their outputs are discarded.
enum class Mode : int {
    AncillaC = 0,
    C0 = 1,
    C1 = 2,
    T0 = 3,
    T1 = 4,
    AncillaT = 5,
};

inline constexpr int kNumModes = 6;

inline constexpr int index(Mode m) { return static_cast<int>(m); }

/// 6x6 complex unitary over the gate's spatial modes.
struct ModeUnitary {
    std::array<cplx, kNumModes * kNumModes> m{};

    static ModeUnitary identity() {
        ModeUnitary u;
        for (int i = 0; i < kNumModes; ++i) u.at(i, i) = 1.0;
        return u;
    }

    cplx& at(int row, int col) { return m[row * kNumModes + col]; }
    const cplx& at(int row, int col) const { return m[row * kNumModes + col]; }
    cplx& at(Mode row, Mode col) { return at(index(row), index(col)); }
    const cplx& at(Mode row, Mode col) const { return at(index(row), index(col)); }
};

inline ModeUnitary adjoint(const ModeUnitary& u) {
    ModeUnitary r;
    for (int i = 0; i < kNumModes; ++i)
        for (int j = 0; j < kNumModes; ++j) r.at(i, j) = std::conj(u.at(j, i));
    return r;
}

/// Frobenius distance of U†U from the identity.
inline double unitarity_defect(const ModeUnitary& u) {
    double sum = 0.0;
    for (int i = 0; i < kNumModes; ++i) {
        for (int j = 0; j < kNumModes; ++j) {
            cplx acc = 0.0;
            for (int k = 0; k < kNumModes; ++k) acc += std::conj(u.at(k, i)) * u.at(k, j);
            if (i == j) acc -= 1.0;
            sum += std::norm(acc);
        }
    }
    return std::sqrt(sum);
}

inline bool is_unitary(const ModeUnitary& u, double tol = 1e-12) {
    return unitarity_defect(u) <= tol;
}

/// Two-mode splitter with reflectivity eta. The mode on the dotted side picks
/// up the pi phase, giving the block [[sqrt(1-eta), sqrt(eta)],
/// [sqrt(eta), -sqrt(1-eta)]] with the minus sign on dotted_side.
struct BeamsplitterSpec {
    Mode mode_a;
    Mode mode_b;
    double reflectivity;
    Mode dotted_side;
};

inline ModeUnitary beamsplitter_unitary(const BeamsplitterSpec& spec) {
    if (spec.mode_a == spec.mode_b) {
        throw std::invalid_argument("beamsplitter_unitary: modes must differ");
    }
    if (!(spec.reflectivity >= 0.0 && spec.reflectivity <= 1.0)) {
        throw std::invalid_argument("beamsplitter_unitary: reflectivity outside [0,1]");
    }
    if (spec.dotted_side != spec.mode_a && spec.dotted_side != spec.mode_b) {
        throw std::invalid_argument("beamsplitter_unitary: dotted side not in the pair");
    }
    const double t = std::sqrt(1.0 - spec.reflectivity);
    const double r = std::sqrt(spec.reflectivity);
    ModeUnitary u = ModeUnitary::identity();
    u.at(spec.mode_a, spec.mode_a) = (spec.dotted_side == spec.mode_a) ? -t : t;
    u.at(spec.mode_b, spec.mode_b) = (spec.dotted_side == spec.mode_b) ? -t : t;
    u.at(spec.mode_a, spec.mode_b) = r;
    u.at(spec.mode_b, spec.mode_a) = r;
    return u;
}

/// Matrix product in application order: the first stage acts first.
inline ModeUnitary compose(const std::vector<ModeUnitary>& stages) {
    ModeUnitary result = ModeUnitary::identity();
    for (const ModeUnitary& stage : stages) {
        ModeUnitary next;
        for (int i = 0; i < kNumModes; ++i) {
            for (int j = 0; j < kNumModes; ++j) {
                cplx acc = 0.0;
                for (int k = 0; k < kNumModes; ++k) acc += stage.at(i, k) * result.at(k, j);
                next.at(i, j) = acc;
            }
        }
        result = next;
    }
    return result;
}

inline ModeUnitary compose(std::initializer_list<ModeUnitary> stages) {
    return compose(std::vector<ModeUnitary>(stages));
}

/**
@brief The six-mode coincidence CNOT. The target rails are sandwiched between
two balanced splitters, the central splitter mixes c1 with t0, and the two
outer splitters balance c0 and t1 against the vacuum ancillas. Every kept
amplitude is sqrt(1/3); the dotted sides are fixed so the logical action comes
out as +1/3 on the CNOT pattern with no stray phases.
*/
inline ModeUnitary coincidence_cnot_network() {
    const double third = 2.0 / 3.0;  // reflectivity leaving sqrt(1/3) on the diagonal
    return compose({
        beamsplitter_unitary({Mode::T0, Mode::T1, 0.5, Mode::T1}),
        beamsplitter_unitary({Mode::C1, Mode::T0, third, Mode::T0}),
        beamsplitter_unitary({Mode::AncillaC, Mode::C0, third, Mode::C0}),
        beamsplitter_unitary({Mode::T1, Mode::AncillaT, third, Mode::T1}),
        beamsplitter_unitary({Mode::T0, Mode::T1, 0.5, Mode::T1}),
    });
}

/// Balanced analysis splitters across (c0,c1) and (t0,t1); appending these to
/// a network converts rail-local detection into an X-basis measurement with
/// c0 -> plus and c1 -> minus (likewise for the target).
inline ModeUnitary xbasis_analyzer() {
    return compose({
        beamsplitter_unitary({Mode::C0, Mode::C1, 0.5, Mode::C1}),
        beamsplitter_unitary({Mode::T0, Mode::T1, 0.5, Mode::T1}),
    });
}

/// 4x4 coincidence amplitude for indistinguishable photons,
/// rows = logical inputs (c,t), columns = logical outputs (c',t'):
/// U[c',c] U[t',t] + U[t',c] U[c',t].
struct LogicalAction {
    std::array<cplx, 16> m{};
    cplx& at(int in, int out) { return m[in * 4 + out]; }
    const cplx& at(int in, int out) const { return m[in * 4 + out]; }
};

inline constexpr std::array<Mode, 2> kControlRails = {Mode::C0, Mode::C1};
inline constexpr std::array<Mode, 2> kTargetRails = {Mode::T0, Mode::T1};

inline LogicalAction ideal_logical_action(const ModeUnitary& u) {
    LogicalAction action;
    for (int ci = 0; ci < 2; ++ci) {
        for (int ti = 0; ti < 2; ++ti) {
            const Mode c = kControlRails[ci];
            const Mode t = kTargetRails[ti];
            for (int co = 0; co < 2; ++co) {
                for (int to = 0; to < 2; ++to) {
                    const Mode cp = kControlRails[co];
                    const Mode tp = kTargetRails[to];
                    action.at(2 * ci + ti, 2 * co + to) =
                        u.at(cp, c) * u.at(tp, t) + u.at(tp, c) * u.at(cp, t);
                }
            }
        }
    }
    return action;
}

}  // namespace lopsim

#endif
