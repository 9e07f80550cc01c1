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

#ifndef COVPOVM_CV_COHERENT_HPP
#define COVPOVM_CV_COHERENT_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "covpovm/abelian_group.hpp"
#include "covpovm/covariant_povm.hpp"
#include "covpovm/errors.hpp"
#include "covpovm/linalg.hpp"

namespace covpovm {

/// Fock space truncated at level N: dimension N+1, levels 0..N.
struct FockSpace {
    int truncation;

    explicit FockSpace(int n) : truncation(n) {
        if (n < 1) {
            throw std::invalid_argument("FockSpace: truncation must be >= 1");
        }
    }

    Eigen::Index dim() const { return truncation + 1; }
};

/// A coherent state truncated to the Fock levels 0..N.  The components are
/// the exact values c_n = beta^n e^{-|beta|^2/2} / sqrt(n!); truncation only
/// drops the tail, so the norm falls short of 1 by the Poisson(|beta|^2)
/// tail mass beyond N.
struct CoherentState {
    cplx amplitude;
    StateVector components;
    double truncation_tail;  // 1 - ||components||^2
};

inline CoherentState coherent_state(const FockSpace &space, cplx beta) {
    StateVector c(space.dim());
    c(0) = std::exp(-0.5 * std::norm(beta));
    for (int n = 1; n <= space.truncation; ++n) {
        c(n) = c(n - 1) * beta / std::sqrt(static_cast<double>(n));
    }
    const double tail = std::max(0.0, 1.0 - c.squaredNorm());
    return CoherentState{beta, std::move(c), tail};
}

/// A square lattice of cell midpoints clipped to the disk |beta| <= radius,
/// with weight step^2 per node; discretizes area integrals over the complex
/// plane.
struct QuadratureGrid {
    double radius;
    double step;
    std::vector<cplx> nodes;
    double node_weight;

    static QuadratureGrid disk(double radius, double step) {
        if (radius <= 0.0 || step <= 0.0 || step > radius) {
            throw std::invalid_argument("QuadratureGrid: need 0 < step <= radius");
        }
        QuadratureGrid grid;
        grid.radius = radius;
        grid.step = step;
        grid.node_weight = step * step;
        const std::int64_t extent = static_cast<std::int64_t>(std::ceil(radius / step)) + 1;
        for (std::int64_t j = -extent; j < extent; ++j) {
            const double re = (static_cast<double>(j) + 0.5) * step;
            for (std::int64_t k = -extent; k < extent; ++k) {
                const double im = (static_cast<double>(k) + 0.5) * step;
                if (re * re + im * im <= radius * radius) {
                    grid.nodes.emplace_back(re, im);
                }
            }
        }
        return grid;
    }
};

/// How badly a displacement by alpha is truncated at level N; above 1 the
/// displaced vacuum has substantial weight beyond the truncation and the
/// matrix is unusable.
inline double displacement_truncation_ratio(const FockSpace &space, cplx alpha) {
    return std::norm(alpha) * M_E / static_cast<double>(space.truncation);
}

namespace detail {

/// Generalized Laguerre values L_j^{(k)}(x) for j = 0..count-1 by the
/// three-term recurrence; stable for the arguments used here.
inline std::vector<double> laguerre_row(int count, int k, double x) {
    std::vector<double> l(static_cast<std::size_t>(count));
    if (count == 0) {
        return l;
    }
    l[0] = 1.0;
    if (count > 1) {
        l[1] = 1.0 + static_cast<double>(k) - x;
    }
    for (int j = 2; j < count; ++j) {
        l[static_cast<std::size_t>(j)] =
            ((static_cast<double>(2 * j - 1 + k) - x) * l[static_cast<std::size_t>(j - 1)] -
             static_cast<double>(j - 1 + k) * l[static_cast<std::size_t>(j - 2)]) /
            static_cast<double>(j);
    }
    return l;
}

}  // namespace detail

/// The displacement operator D(alpha) on the truncated Fock space, from the
/// closed-form matrix elements
///   <n+k|D(alpha)|n> = sqrt(n!/(n+k)!) alpha^k e^{-|alpha|^2/2} L_n^{(k)}(|alpha|^2)
/// together with <m|D(alpha)|n> = conj(<n|D(-alpha)|m>) for the upper
/// triangle.  Amplitudes are assembled in log space so large levels do not
/// overflow the factorials.  Throws truncation_error when
/// displacement_truncation_ratio exceeds 1.
inline ComplexMatrix displacement_operator(const FockSpace &space, cplx alpha) {
    if (displacement_truncation_ratio(space, alpha) > 1.0) {
        throw truncation_error("displacement_operator: |alpha|^2 e / N > 1, matrix badly truncated");
    }
    const Eigen::Index dim = space.dim();
    if (alpha == cplx{0.0, 0.0}) {
        return ComplexMatrix::Identity(dim, dim);
    }
    const double x = std::norm(alpha);
    const double log_abs_alpha = std::log(std::abs(alpha));
    const cplx phase_lower = alpha / std::abs(alpha);
    const cplx phase_upper = -std::conj(alpha) / std::abs(alpha);

    ComplexMatrix d(dim, dim);
    for (int k = 0; k < static_cast<int>(dim); ++k) {
        const std::vector<double> laguerre = detail::laguerre_row(static_cast<int>(dim) - k, k, x);
        cplx lower_k{1.0, 0.0};
        cplx upper_k{1.0, 0.0};
        for (int i = 0; i < k; ++i) {
            lower_k *= phase_lower;
            upper_k *= phase_upper;
        }
        for (int j = 0; j + k < static_cast<int>(dim); ++j) {
            const double log_amp = 0.5 * (std::lgamma(j + 1.0) - std::lgamma(j + k + 1.0)) +
                                   static_cast<double>(k) * log_abs_alpha - 0.5 * x;
            const double magnitude = std::exp(log_amp) * laguerre[static_cast<std::size_t>(j)];
            d(j + k, j) = magnitude * lower_k;
            if (k > 0) {
                d(j, j + k) = magnitude * upper_k;
            }
        }
    }
    return d;
}

/// Independent construction of D(alpha) as exp(alpha a* - conj(alpha) a) on
/// the truncated space: the generator is anti-Hermitian, so the exponential
/// is computed exactly from the eigendecomposition of its Hermitian multiple.
/// Used as an oracle for the closed form, not as the production path.
inline ComplexMatrix displacement_from_generator(const FockSpace &space, cplx alpha) {
    const Eigen::Index dim = space.dim();
    ComplexMatrix generator = ComplexMatrix::Zero(dim, dim);
    for (Eigen::Index n = 0; n + 1 < dim; ++n) {
        const double r = std::sqrt(static_cast<double>(n + 1));
        generator(n + 1, n) = alpha * r;              // alpha a*
        generator(n, n + 1) = -std::conj(alpha) * r;  // -conj(alpha) a
    }
    // exp(A) = exp(iH) with H = -iA Hermitian.
    const ComplexMatrix h = cplx{0.0, -1.0} * generator;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    const RealVector lambda = solver.eigenvalues();
    StateVector phases(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        phases(i) = std::polar(1.0, lambda(i));
    }
    return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

namespace detail {

/// (1/pi) sum_nodes weight * kernel(beta) * |beta><beta| over the grid.
template <typename Kernel>
ComplexMatrix coherent_quadrature(const FockSpace &space, const QuadratureGrid &grid,
                                  Kernel &&kernel) {
    ComplexMatrix acc = ComplexMatrix::Zero(space.dim(), space.dim());
    const double scale = grid.node_weight / M_PI;
    for (const cplx beta : grid.nodes) {
        const CoherentState state = coherent_state(space, beta);
        acc.noalias() += (scale * kernel(beta)) * (state.components * state.components.adjoint());
    }
    return acc;
}

}  // namespace detail

/// Deviation of the quadrature (1/pi) sum h^2 |beta><beta| from the identity,
/// restricted to Fock levels <= max_level.
struct GsIdentityReport {
    int levels;
    std::vector<double> per_level_diag_error;  // |M(n,n) - 1| for n = 0..levels
    double max_offdiag;                        // max |M(i,j)|, i != j, both <= levels
    double max_error;                          // max of the two above
};

inline GsIdentityReport gs_identity_check(const FockSpace &space, const QuadratureGrid &grid,
                                          int max_level) {
    if (max_level < 0 || max_level > space.truncation) {
        throw std::invalid_argument("gs_identity_check: max_level out of range");
    }
    const ComplexMatrix m = detail::coherent_quadrature(space, grid, [](cplx) { return cplx{1.0, 0.0}; });
    GsIdentityReport report;
    report.levels = max_level;
    report.max_offdiag = 0.0;
    report.max_error = 0.0;
    for (int n = 0; n <= max_level; ++n) {
        const double diag_err = std::abs(m(n, n) - cplx{1.0, 0.0});
        report.per_level_diag_error.push_back(diag_err);
        report.max_error = std::max(report.max_error, diag_err);
        for (int i = 0; i <= max_level; ++i) {
            if (i != n) {
                const double off = std::abs(m(i, n));
                report.max_offdiag = std::max(report.max_offdiag, off);
                report.max_error = std::max(report.max_error, off);
            }
        }
    }
    return report;
}

/// The phase-kernel quadrature
///   T_alpha = (1/pi) sum_nodes h^2 e^{2i Im(alpha conj(beta))} |beta><beta|,
/// the continuous-variable analog of contraction_at.  Requires
/// |alpha| <= radius/4 so the damped integrand is supported inside the grid.
inline ComplexMatrix cv_contraction(const FockSpace &space, const QuadratureGrid &grid,
                                    cplx alpha) {
    if (std::abs(alpha) > grid.radius / 4.0) {
        throw grid_too_small_error("cv_contraction: need |alpha| <= radius/4");
    }
    return detail::coherent_quadrature(space, grid, [alpha](cplx beta) {
        return std::polar(1.0, 2.0 * std::imag(alpha * std::conj(beta)));
    });
}

/// Max entry deviation of cv_contraction from its closed form
/// e^{-|alpha|^2/2} D(alpha) over the top-left (max_level+1)^2 block.  The
/// scalar damping factor is exactly the modulus of the finite-group
/// multiplier f at the matched phase-space point.
inline double cv_contraction_error(const FockSpace &space, const QuadratureGrid &grid, cplx alpha,
                                   int max_level) {
    if (max_level < 0 || max_level > space.truncation) {
        throw std::invalid_argument("cv_contraction_error: max_level out of range");
    }
    const ComplexMatrix t = cv_contraction(space, grid, alpha);
    const ComplexMatrix expected =
        std::exp(-0.5 * std::norm(alpha)) * displacement_operator(space, alpha);
    const Eigen::Index block = max_level + 1;
    return max_abs(ComplexMatrix(t.topLeftCorner(block, block) -
                                 expected.topLeftCorner(block, block)));
}

/// Wrapped (periodized) Gaussian fiducial on a finite Abelian group, the
/// product over factors of psi(h_j) ~ sum_w exp(-pi (h_j + w n_j)^2 / n_j),
/// normalized to unit norm.  For Z_d this is the discrete analog of the
/// vacuum state.
inline StateVector discrete_gaussian_fiducial(const GroupSpec &spec) {
    const auto elements = enumerate_elements(spec);
    StateVector psi(spec.order());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        double value = 1.0;
        for (std::size_t j = 0; j < spec.num_factors(); ++j) {
            const double n = static_cast<double>(spec.factors()[j]);
            const double h = static_cast<double>(elements[i].coords[j]);
            double theta = 0.0;
            for (int w = -8; w <= 8; ++w) {
                const double shifted = h + static_cast<double>(w) * n;
                theta += std::exp(-M_PI * shifted * shifted / n);
            }
            value *= theta;
        }
        psi(static_cast<Eigen::Index>(i)) = value;
    }
    psi /= psi.norm();
    return psi;
}

/// One row of the finite-vs-continuum multiplier comparison.
struct CvConsistencyEntry {
    std::int64_t a;          // character coordinate, folded to (-d/2, d/2]
    std::int64_t g;          // element coordinate, folded likewise
    double abs_f;            // |f| of the discrete Gaussian fiducial on Z_d
    double predicted;        // continuum value e^{-pi (a^2 + g^2) / (2 d)}
    double rel_deviation;    // | |f| - predicted | / predicted
};

struct CvConsistencyReport {
    std::int64_t d;
    std::vector<CvConsistencyEntry> entries;  // phase-point order, all d^2 points
    double max_rel_deviation = 0.0;           // over the window |a|, |g| <= d/4
    double origin_adjacent_rel_deviation = 0.0;  // at the point (a=0, g=1)
};

/// Tabulates |f(chi, g)| for the wrapped-Gaussian fiducial on Z_d against
/// the continuum law e^{-|alpha|^2/2} at the matched lattice point
/// alpha = sqrt(pi/d) (-g + i a) (both quadratures spaced sqrt(2 pi / d)).
///
/// The single-image law holds up to image terms e^{-pi(d-2|a|)/2}; at the
/// half-period fold (|a| = d/2) the neighboring lattice image contributes
/// equally and |f| is a small multiple of the single-image value.  All d^2
/// points are tabulated, while the headline max_rel_deviation is taken over
/// the quarter-period window where the matched-point comparison is the
/// meaningful one; that windowed deviation shrinks rapidly as d grows.
inline std::vector<CvConsistencyReport> finite_to_cv_consistency(
    const std::vector<std::int64_t> &dims) {
    std::vector<CvConsistencyReport> reports;
    reports.reserve(dims.size());
    for (const std::int64_t d : dims) {
        if (d < 4) {
            throw std::invalid_argument("finite_to_cv_consistency: need d >= 4");
        }
        const GroupSpec spec({d});
        const PhaseSpace ps(spec);
        const StateVector psi = discrete_gaussian_fiducial(spec);
        const MultiplierTable table = ambiguity_multipliers(ps, psi);

        CvConsistencyReport report;
        report.d = d;
        report.entries.reserve(static_cast<std::size_t>(ps.size()));
        for (std::int64_t p = 0; p < ps.size(); ++p) {
            const std::int64_t a_raw = ps.chi_index(p);
            const std::int64_t g_raw = ps.g_index(p);
            const std::int64_t a = a_raw > d / 2 ? a_raw - d : a_raw;
            const std::int64_t g = g_raw > d / 2 ? g_raw - d : g_raw;
            const double predicted =
                std::exp(-M_PI * static_cast<double>(a * a + g * g) / (2.0 * static_cast<double>(d)));
            const double abs_f = table.modulus(p);
            const double rel = std::abs(abs_f - predicted) / predicted;
            report.entries.push_back(CvConsistencyEntry{a, g, abs_f, predicted, rel});
            if (std::abs(a) <= d / 4 && std::abs(g) <= d / 4) {
                report.max_rel_deviation = std::max(report.max_rel_deviation, rel);
            }
            if (a_raw == 0 && g_raw == 1) {
                report.origin_adjacent_rel_deviation = rel;
            }
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

}  // namespace covpovm

#endif  // COVPOVM_CV_COHERENT_HPP
