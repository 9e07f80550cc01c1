// Copyright 2026 The covpovm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COVPOVM_SERIALIZE_HPP
#define COVPOVM_SERIALIZE_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "covpovm/covariant_povm.hpp"
#include "covpovm/cv_coherent.hpp"
#include "covpovm/linalg.hpp"
#include "covpovm/tomography.hpp"
#include "covpovm/weyl_system.hpp"

namespace covpovm {

// JSON documents are emitted with insertion-ordered keys so identical inputs
// produce byte-identical files.
using json = nlohmann::ordered_json;

/// Matrices serialize as an array of rows, each entry a [re, im] pair.
inline json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ComplexMatrix matrix_from_json(const json &rows) {
    if (!rows.is_array() || rows.empty()) {
        throw std::invalid_argument("matrix_from_json: expected a non-empty array of rows");
    }
    const Eigen::Index nrows = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index ncols = static_cast<Eigen::Index>(rows[0].size());
    ComplexMatrix m(nrows, ncols);
    for (Eigen::Index i = 0; i < nrows; ++i) {
        const json &row = rows[static_cast<std::size_t>(i)];
        if (static_cast<Eigen::Index>(row.size()) != ncols) {
            throw std::invalid_argument("matrix_from_json: ragged rows");
        }
        for (Eigen::Index j = 0; j < ncols; ++j) {
            const json &entry = row[static_cast<std::size_t>(j)];
            m(i, j) = cplx(entry.at(0).get<double>(), entry.at(1).get<double>());
        }
    }
    return m;
}

inline json vector_to_json(const StateVector &v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(json::array({v(i).real(), v(i).imag()}));
    }
    return out;
}

inline StateVector vector_from_json(const json &entries) {
    if (!entries.is_array()) {
        throw std::invalid_argument("vector_from_json: expected an array");
    }
    StateVector v(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) =
            cplx(entries[i].at(0).get<double>(), entries[i].at(1).get<double>());
    }
    return v;
}

/// Phase-space functions serialize as a flat list of [re, im] pairs in the
/// fixed phase-point enumeration.
inline json phase_function_to_json(const std::vector<cplx> &f) {
    json out = json::array();
    for (const cplx &value : f) {
        out.push_back(json::array({value.real(), value.imag()}));
    }
    return out;
}

inline std::vector<cplx> phase_function_from_json(const json &entries) {
    std::vector<cplx> f;
    f.reserve(entries.size());
    for (const json &entry : entries) {
        f.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
    return f;
}

inline json multiplier_table_to_json(const PhaseSpace &ps, const MultiplierTable &table) {
    json points = json::array();
    for (std::int64_t p = 0; p < ps.size(); ++p) {
        const PhasePoint point = ps.point_at(p);
        json entry;
        entry["chi"] = point.chi.coords;
        entry["g"] = point.g.coords;
        entry["re_f"] = table.values[static_cast<std::size_t>(p)].real();
        entry["im_f"] = table.values[static_cast<std::size_t>(p)].imag();
        entry["abs_f"] = table.modulus(p);
        points.push_back(std::move(entry));
    }
    json out;
    out["group"] = ps.spec().to_string();
    out["min_modulus"] = table.min_modulus;
    out["argmin_index"] = table.argmin_index;
    out["values"] = std::move(points);
    return out;
}

/// CSV with header chi_coords,g_coords,re_f,im_f,abs_f; tuple coordinates
/// are joined with ';' inside a cell.
inline std::string multiplier_table_to_csv(const PhaseSpace &ps, const MultiplierTable &table) {
    std::ostringstream out;
    out.precision(17);
    out << "chi_coords,g_coords,re_f,im_f,abs_f\n";
    for (std::int64_t p = 0; p < ps.size(); ++p) {
        const PhasePoint point = ps.point_at(p);
        const cplx f = table.values[static_cast<std::size_t>(p)];
        out << coords_to_string(point.chi.coords, ';') << ','
            << coords_to_string(point.g.coords, ';') << ',' << f.real() << ',' << f.imag() << ','
            << std::abs(f) << '\n';
    }
    return out.str();
}

inline json ic_report_to_json(const IcReport &report) {
    json out;
    out["complete"] = report.complete;
    out["min_modulus"] = report.min_modulus;
    out["tol"] = report.tol;
    out["worst_point"]["chi"] = report.worst_point.chi.coords;
    out["worst_point"]["g"] = report.worst_point.g.coords;
    return out;
}

inline json probability_table_to_json(const ProbabilityTable &table) {
    json out;
    out["kind"] = table.kind == TableKind::exact ? "exact" : "empirical";
    out["shots"] = table.shots;
    out["dim"] = table.dim;
    out["values"] = table.values;
    return out;
}

inline ProbabilityTable probability_table_from_json(const json &in) {
    ProbabilityTable table;
    const std::string kind = in.at("kind").get<std::string>();
    if (kind == "exact") {
        table.kind = TableKind::exact;
    } else if (kind == "empirical") {
        table.kind = TableKind::empirical;
    } else {
        throw std::invalid_argument("probability_table_from_json: bad kind '" + kind + "'");
    }
    table.shots = in.at("shots").get<std::int64_t>();
    table.dim = in.at("dim").get<std::int64_t>();
    table.values = in.at("values").get<std::vector<double>>();
    return table;
}

inline json gs_identity_report_to_json(const GsIdentityReport &report) {
    json out;
    out["levels"] = report.levels;
    out["per_level_errors"] = report.per_level_diag_error;
    out["max_offdiag"] = report.max_offdiag;
    out["max_error"] = report.max_error;
    return out;
}

inline json cv_consistency_to_json(const std::vector<CvConsistencyReport> &reports) {
    json out = json::array();
    for (const CvConsistencyReport &report : reports) {
        json entry;
        entry["d"] = report.d;
        entry["max_rel_deviation"] = report.max_rel_deviation;
        entry["origin_adjacent_rel_deviation"] = report.origin_adjacent_rel_deviation;
        json rows = json::array();
        for (const CvConsistencyEntry &row : report.entries) {
            rows.push_back(json{{"a", row.a},
                                {"g", row.g},
                                {"abs_f", row.abs_f},
                                {"predicted", row.predicted},
                                {"rel_deviation", row.rel_deviation}});
        }
        entry["points"] = std::move(rows);
        out.push_back(std::move(entry));
    }
    return out;
}

inline void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

inline std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace covpovm

#endif  // COVPOVM_SERIALIZE_HPP
