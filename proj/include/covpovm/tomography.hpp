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

#ifndef COVPOVM_TOMOGRAPHY_HPP
#define COVPOVM_TOMOGRAPHY_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "covpovm/covariant_povm.hpp"
#include "covpovm/errors.hpp"
#include "covpovm/linalg.hpp"
#include "covpovm/rng.hpp"

namespace covpovm {

/// A quantum state: Hermitian, unit trace, positive semidefinite (each
/// within the stated tolerance).  validated() is the checked constructor.
struct DensityMatrix {
    ComplexMatrix mat;

    static DensityMatrix validated(ComplexMatrix m, double herm_tol = 1e-12,
                                   double trace_tol = 1e-12, double eig_floor = -1e-10) {
        if (m.rows() != m.cols()) {
            throw std::invalid_argument("DensityMatrix: matrix must be square");
        }
        if (max_abs(ComplexMatrix(m - m.adjoint())) > herm_tol) {
            throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
        }
        if (std::abs(m.trace().real() - 1.0) > trace_tol || std::abs(m.trace().imag()) > trace_tol) {
            throw std::invalid_argument("DensityMatrix: trace must be 1");
        }
        const RealVector eigs = hermitian_eigenvalues(m);
        if (eigs.size() > 0 && eigs.minCoeff() < eig_floor) {
            throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                        std::to_string(eigs.minCoeff()));
        }
        return DensityMatrix{std::move(m)};
    }

    Eigen::Index dim() const { return mat.rows(); }
};

enum class TableKind { exact, empirical };

/// Values of the outcome density p(p) in phase-point order.  Under the
/// measure weight 1/d per point, an exact table integrates to 1.  Empirical
/// tables hold frequency * d so that they estimate the same density.
struct ProbabilityTable {
    std::vector<double> values;
    TableKind kind = TableKind::exact;
    std::int64_t shots = 0;  // 0 for exact tables
    std::int64_t dim = 0;    // d; values has d^2 entries
};

/// p(p) = <U_p psi0, rho U_p psi0>, the Born density of the covariant
/// measurement.  Exact up to roundoff; (1/d) sum_p p(p) = tr rho = 1.
inline ProbabilityTable forward_probabilities(const CovariantPovm &povm,
                                              const DensityMatrix &rho) {
    if (rho.dim() != povm.dim()) {
        throw std::invalid_argument("forward_probabilities: dimension mismatch");
    }
    ProbabilityTable table;
    table.kind = TableKind::exact;
    table.dim = povm.dim();
    table.values.resize(static_cast<std::size_t>(povm.size()));
    for (std::int64_t p = 0; p < povm.size(); ++p) {
        const StateVector &phi = povm.orbit_vector(p);
        table.values[static_cast<std::size_t>(p)] = phi.dot(rho.mat * phi).real();
    }
    return table;
}

/// Draws `shots` i.i.d. outcomes from the normalized distribution
/// weight * p(p) by inverse CDF over the fixed phase-point order, and
/// returns the empirical density estimate frequency * d.  Deterministic
/// given the seed.
inline ProbabilityTable sample_outcomes(const ProbabilityTable &exact, std::int64_t shots,
                                        std::uint64_t seed) {
    if (exact.kind != TableKind::exact) {
        throw std::invalid_argument("sample_outcomes: input table must be exact");
    }
    if (shots < 1) {
        throw std::invalid_argument("sample_outcomes: shots must be >= 1");
    }
    const std::size_t n = exact.values.size();
    if (exact.dim < 1 || static_cast<std::size_t>(exact.dim * exact.dim) != n) {
        throw std::invalid_argument("sample_outcomes: malformed table");
    }
    const double d = static_cast<double>(exact.dim);

    std::vector<double> cdf(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += std::max(exact.values[i], 0.0) / d;
        cdf[i] = acc;
    }
    if (acc <= 0.0) {
        throw std::invalid_argument("sample_outcomes: table carries no probability mass");
    }
    // acc == 1 up to roundoff; dividing it out makes the last bin exact.
    for (std::size_t i = 0; i < n; ++i) {
        cdf[i] /= acc;
    }

    std::vector<std::int64_t> counts(n, 0);
    Rng64 rng(seed);
    for (std::int64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform01();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx = std::min(static_cast<std::size_t>(it - cdf.begin()), n - 1);
        ++counts[idx];
    }

    ProbabilityTable out;
    out.kind = TableKind::empirical;
    out.shots = shots;
    out.dim = exact.dim;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = static_cast<double>(counts[i]) / static_cast<double>(shots) * d;
    }
    return out;
}

struct ReconstructOptions {
    double ic_tol = 1e-10;     // refuse below this multiplier modulus
    bool psd_project = false;  // project empirical estimates to the density cone
};

struct TomographyResult {
    ComplexMatrix rho_raw;          // linear inversion output, unprocessed
    ComplexMatrix rho_hat;          // hermitized (and optionally projected) estimate
    double condition_indicator;     // min |f| of the multiplier table used
    TableKind kind = TableKind::exact;
    std::int64_t shots = 0;
    bool projected = false;
};

/// Stage 1 of the inversion: for each (chi, g),
///   W(chi, g) = f(chi, g)^{-1} (1/d) sum_{(chi', g')} chi'(g) conj(chi(g')) p(chi', g'),
/// which recovers Tr(rho U_{chi,g}) exactly when the table is exact.
inline std::vector<cplx> reconstruction_kernel(const PhaseSpace &ps,
                                               const ProbabilityTable &table,
                                               const MultiplierTable &multipliers) {
    const std::int64_t d = ps.dim();
    if (static_cast<std::int64_t>(table.values.size()) != ps.size() ||
        static_cast<std::int64_t>(multipliers.values.size()) != ps.size()) {
        throw std::invalid_argument("reconstruction_kernel: table sizes must match the phase space");
    }
    std::vector<cplx> w(static_cast<std::size_t>(ps.size()));
    const double weight = 1.0 / static_cast<double>(d);
    for (std::int64_t a = 0; a < d; ++a) {
        for (std::int64_t g = 0; g < d; ++g) {
            cplx acc{0.0, 0.0};
            for (std::int64_t ap = 0; ap < d; ++ap) {
                const cplx left = ps.char_value(ap, g);
                for (std::int64_t gp = 0; gp < d; ++gp) {
                    acc += left * std::conj(ps.char_value(a, gp)) *
                           table.values[static_cast<std::size_t>(ap * d + gp)];
                }
            }
            const std::size_t p = static_cast<std::size_t>(a * d + g);
            w[p] = weight * acc / multipliers.values[p];
        }
    }
    return w;
}

/// Linear state reconstruction: stage 1 above, then the inverse Weyl
/// transform rho = (1/d) sum_p W(p) U_p*.  Exact tables reproduce rho to
/// machine precision; empirical estimates are hermitized and, when
/// requested, projected onto the trace-one PSD cone.  Refuses to run on a
/// multiplier table whose min modulus is at or below options.ic_tol, since
/// 1/f amplifies noise without bound there.
inline TomographyResult reconstruct(const CovariantPovm &povm, const ProbabilityTable &table,
                                    const MultiplierTable &multipliers,
                                    const ReconstructOptions &options = {}) {
    const PhaseSpace &ps = povm.phase_space();
    if (multipliers.min_modulus <= options.ic_tol) {
        const PhasePoint worst = ps.point_at(multipliers.argmin_index);
        throw ill_conditioned_error(
            "reconstruct: multiplier modulus " + detail::fmt_double(multipliers.min_modulus) +
            " at phase point (chi=[" + coords_to_string(worst.chi.coords) + "], g=[" +
            coords_to_string(worst.g.coords) +
            "]) is at or below the conditioning tolerance " + detail::fmt_double(options.ic_tol));
    }

    const std::vector<cplx> w = reconstruction_kernel(ps, table, multipliers);

    TomographyResult result;
    result.rho_raw = weyl_inverse_transform(ps, w);
    result.condition_indicator = multipliers.min_modulus;
    result.kind = table.kind;
    result.shots = table.shots;
    if (table.kind == TableKind::exact) {
        result.rho_hat = result.rho_raw;
    } else {
        result.rho_hat = hermitize(result.rho_raw);
        if (options.psd_project) {
            result.rho_hat = project_to_density_cone(result.rho_hat);
            result.projected = true;
        }
    }
    return result;
}

struct ErrorMetrics {
    double frobenius = 0.0;
    double trace_distance = 0.0;
};

/// Frobenius distance and trace distance (half the sum of the absolute
/// eigenvalues of the Hermitian difference).
inline ErrorMetrics error_metrics(const ComplexMatrix &rho_true, const ComplexMatrix &rho_hat) {
    if (rho_true.rows() != rho_hat.rows() || rho_true.cols() != rho_hat.cols()) {
        throw std::invalid_argument("error_metrics: dimension mismatch");
    }
    ErrorMetrics metrics;
    const ComplexMatrix diff = rho_hat - rho_true;
    metrics.frobenius = diff.norm();
    metrics.trace_distance = 0.5 * hermitian_eigenvalues(diff).cwiseAbs().sum();
    return metrics;
}

}  // namespace covpovm

#endif  // COVPOVM_TOMOGRAPHY_HPP
