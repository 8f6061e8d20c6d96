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

#ifndef LOPSIM_SWEEP_HPP
#define LOPSIM_SWEEP_HPP

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "lopsim/detection.hpp"
#include "lopsim/metrics.hpp"
#include "lopsim/network.hpp"

namespace lopsim {

enum class Param { Tau, Omega, Tc, Tt, Tw };

inline const char* param_name(Param p) {
    switch (p) {
        case Param::Tau: return "tau";
        case Param::Omega: return "omega";
        case Param::Tc: return "t_c";
        case Param::Tt: return "t_t";
        case Param::Tw: return "t_w";
    }
    return "?";
}

/// One sweep axis: a parameter and the grid values it takes, either a
/// uniform linspace or an explicit list (used for the t_w line sets).
struct SweepAxis {
    Param param;
    std::vector<double> values;

    static SweepAxis linspace(Param p, double start, double stop, int n_points) {
        if (n_points < 2) throw std::invalid_argument("SweepAxis: n_points must be >= 2");
        SweepAxis axis{p, {}};
        axis.values.reserve(n_points);
        for (int k = 0; k < n_points; ++k) {
            axis.values.push_back(start + (stop - start) * k / (n_points - 1));
        }
        return axis;
    }

    static SweepAxis list(Param p, std::vector<double> values) {
        if (values.size() < 2) throw std::invalid_argument("SweepAxis: need >= 2 values");
        return {p, std::move(values)};
    }
};

struct SweepOutputs {
    bool similarity = true;
    bool success_probs = false;
    bool p_min = false;
    bool truth_table = false;
};

/// Full description of a sweep: 1 or 2 axes, fixed values for the remaining
/// parameters, detector model, measurement basis, and requested outputs.
struct SweepSpec {
    std::vector<SweepAxis> axes;
    double tau = 0.0;
    double omega = 0.0;
    double t_c = 0.0;
    double t_t = 0.0;
    double t_w = kFullWindow;
    DetectorModel model = DetectorModel::TimeResolved;
    Basis basis = Basis::Z;
    SweepOutputs outputs;

    void validate() const {
        if (axes.empty() || axes.size() > 2) {
            throw std::invalid_argument("SweepSpec: need 1 or 2 axes");
        }
        if (axes.size() == 2 && axes[0].param == axes[1].param) {
            throw std::invalid_argument("SweepSpec: axis parameters must be distinct");
        }
        for (const SweepAxis& a : axes) {
            if (a.values.size() < 2) {
                throw std::invalid_argument("SweepSpec: axis needs >= 2 points");
            }
        }
    }
};

/// One evaluated grid point. When a point fails (e.g. an all-zero table at
/// extreme parameters) it is flagged instead of aborting the sweep.
struct SweepRow {
    double tau, omega, t_c, t_t, t_w;
    DetectorModel model;
    Basis basis;
    bool ok = true;
    double similarity = std::numeric_limits<double>::quiet_NaN();
    std::array<double, 4> success_probs{};
    double p_min = std::numeric_limits<double>::quiet_NaN();
    std::array<double, 16> table{};
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows;
};

/// Evaluates the coincidence CNOT over the grid, row-major over the axes.
/// Under gated detection the target click time is slaved to the control's.
inline SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    const ModeUnitary gate = coincidence_cnot_network();
    const TruthTable ideal = ideal_cnot_table(spec.basis);

    const std::size_t n0 = spec.axes[0].values.size();
    const std::size_t n1 = spec.axes.size() == 2 ? spec.axes[1].values.size() : 1;

    SweepResult result{spec, {}};
    result.rows.reserve(n0 * n1);

    for (std::size_t i0 = 0; i0 < n0; ++i0) {
        for (std::size_t i1 = 0; i1 < n1; ++i1) {
            SweepRow row{spec.tau, spec.omega, spec.t_c, spec.t_t, spec.t_w,
                         spec.model, spec.basis};
            auto assign = [&row](Param p, double v) {
                switch (p) {
                    case Param::Tau: row.tau = v; break;
                    case Param::Omega: row.omega = v; break;
                    case Param::Tc: row.t_c = v; break;
                    case Param::Tt: row.t_t = v; break;
                    case Param::Tw: row.t_w = v; break;
                }
            };
            assign(spec.axes[0].param, spec.axes[0].values[i0]);
            if (spec.axes.size() == 2) assign(spec.axes[1].param, spec.axes[1].values[i1]);
            if (spec.model == DetectorModel::Gated) row.t_t = row.t_c;

            try {
                const DetectionConfig cfg{spec.model, row.t_c, row.t_t, row.t_w};
                const TruthTable table =
                    windowed_truth_table(gate, row.tau, row.omega, cfg, spec.basis);
                if (spec.outputs.similarity) {
                    row.similarity = similarity(table, ideal);
                }
                if (spec.outputs.success_probs || spec.outputs.p_min) {
                    row.success_probs = success_probabilities(table);
                    row.p_min = *std::min_element(row.success_probs.begin(),
                                                  row.success_probs.end());
                }
                if (spec.outputs.truth_table) row.table = table.p;
            } catch (const std::exception&) {
                row.ok = false;
            }
            result.rows.push_back(row);
        }
    }
    return result;
}

/**
@brief Named presets for the standard similarity scans. Each preset fixes the
detector geometry; the t_w line values {0.01, 0.5, 1, 2} and the grid ranges
are defaults chosen here.

  fig2a  time-resolved, tau=0, t_c=0, t_t=1, S against omega per t_w line
  fig2b  gated, t_c=t_t=0, S against omega per t_w line
  fig3a  time-resolved, omega=0, t_c=0, t_t=1, S against tau per t_w line
  fig3b  gated, t_c=t_t=0, S against tau per t_w line
  fig4   gated, t_c=t_t=0, t_w=0.01, S over the (tau, omega) grid
  fig5   time-resolved, tau=0, t_c=0, t_w=0.01, S over the (omega, t_t) grid
*/
inline SweepSpec preset_sweep(const std::string& name) {
    const std::vector<double> tw_lines = {0.01, 0.5, 1.0, 2.0};
    const double four_pi = 4.0 * 3.14159265358979323846;
    SweepSpec spec;
    if (name == "fig2a") {
        spec.t_c = 0.0;
        spec.t_t = 1.0;
        spec.axes = {SweepAxis::list(Param::Tw, tw_lines),
                     SweepAxis::linspace(Param::Omega, 0.0, four_pi, 201)};
    } else if (name == "fig2b") {
        spec.model = DetectorModel::Gated;
        spec.axes = {SweepAxis::list(Param::Tw, tw_lines),
                     SweepAxis::linspace(Param::Omega, 0.0, four_pi, 201)};
    } else if (name == "fig3a") {
        spec.t_c = 0.0;
        spec.t_t = 1.0;
        spec.axes = {SweepAxis::list(Param::Tw, tw_lines),
                     SweepAxis::linspace(Param::Tau, 0.0, 3.0, 61)};
    } else if (name == "fig3b") {
        spec.model = DetectorModel::Gated;
        spec.axes = {SweepAxis::list(Param::Tw, tw_lines),
                     SweepAxis::linspace(Param::Tau, 0.0, 3.0, 61)};
    } else if (name == "fig4") {
        spec.model = DetectorModel::Gated;
        spec.t_w = 0.01;
        spec.axes = {SweepAxis::linspace(Param::Tau, 0.0, 2.0, 9),
                     SweepAxis::linspace(Param::Omega, 0.0, 10.0, 41)};
    } else if (name == "fig5") {
        spec.t_w = 0.01;
        spec.axes = {SweepAxis::linspace(Param::Omega, 0.0, four_pi, 101),
                     SweepAxis::linspace(Param::Tt, 0.0, 2.0, 41)};
    } else {
        throw std::invalid_argument("unknown sweep preset: " + name);
    }
    return spec;
}

}  // namespace lopsim

#endif
