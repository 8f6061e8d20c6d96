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

#ifndef LOPSIM_DATASET_IO_HPP
#define LOPSIM_DATASET_IO_HPP

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "lopsim/sweep.hpp"

namespace lopsim {

/// 17 significant digits: enough to round-trip an IEEE double exactly.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline const char* model_name(DetectorModel m) {
    return m == DetectorModel::Gated ? "gated" : "time-resolved";
}

inline const char* basis_name(Basis b) { return b == Basis::X ? "X" : "Z"; }

inline const std::array<const char*, 4> kLogicalLabels = {"00", "01", "10", "11"};

inline std::vector<std::string> dataset_columns(const SweepOutputs& out) {
    std::vector<std::string> cols = {"tau", "omega", "t_c", "t_t", "t_w", "model", "basis"};
    if (out.similarity) cols.push_back("S");
    if (out.success_probs || out.p_min) {
        for (const char* l : kLogicalLabels) cols.push_back(std::string("succ_") + l);
        cols.push_back("p_min");
    }
    if (out.truth_table) {
        for (const char* in : kLogicalLabels)
            for (const char* o : kLogicalLabels)
                cols.push_back(std::string("p_") + in + "_" + o);
    }
    cols.push_back("status");
    return cols;
}

inline std::vector<std::string> dataset_values(const SweepRow& row, const SweepOutputs& out) {
    std::vector<std::string> vals = {
        format_double(row.tau), format_double(row.omega), format_double(row.t_c),
        format_double(row.t_t), format_double(row.t_w),
        model_name(row.model), basis_name(row.basis)};
    if (out.similarity) vals.push_back(format_double(row.similarity));
    if (out.success_probs || out.p_min) {
        for (double s : row.success_probs) vals.push_back(format_double(s));
        vals.push_back(format_double(row.p_min));
    }
    if (out.truth_table) {
        for (double p : row.table) vals.push_back(format_double(p));
    }
    vals.push_back(row.ok ? "ok" : "error");
    return vals;
}

inline std::string to_csv(const SweepResult& result) {
    std::string out;
    const auto cols = dataset_columns(result.spec.outputs);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out += ',';
        out += cols[i];
    }
    out += '\n';
    for (const SweepRow& row : result.rows) {
        const auto vals = dataset_values(row, result.spec.outputs);
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (i) out += ',';
            out += vals[i];
        }
        out += '\n';
    }
    return out;
}

inline std::string to_json(const SweepResult& result) {
    nlohmann::json rows = nlohmann::json::array();
    const auto cols = dataset_columns(result.spec.outputs);
    for (const SweepRow& row : result.rows) {
        const auto vals = dataset_values(row, result.spec.outputs);
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < cols.size(); ++i) obj[cols[i]] = vals[i];
        rows.push_back(obj);
    }
    return rows.dump(2) + "\n";
}

}  // namespace lopsim

#endif
