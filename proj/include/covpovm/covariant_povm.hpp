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

#ifndef COVPOVM_COVARIANT_POVM_HPP
#define COVPOVM_COVARIANT_POVM_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "covpovm/errors.hpp"
#include "covpovm/linalg.hpp"
#include "covpovm/weyl_system.hpp"

namespace covpovm {

/// The covariant measure built from the orbit of a unit fiducial vector:
/// one rank-one effect (1/d) |U_p psi0><U_p psi0| per phase point p.  The
/// effects resolve the identity, and conjugating any effect by a Weyl
/// operator permutes the family.
///
/// Orbit vectors are always stored (O(d^2) memory); the d^2 effect matrices
/// are additionally materialized for d <= kMaterializeLimit and generated on
/// the fly from the orbit above that.
class CovariantPovm {
  public:
    static constexpr std::int64_t kMaterializeLimit = 32;

    CovariantPovm(PhaseSpace ps, StateVector fiducial)
        : ps_(std::move(ps)), fiducial_(std::move(fiducial)) {
        if (fiducial_.size() != ps_.dim()) {
            throw std::invalid_argument("CovariantPovm: fiducial dimension does not match group order");
        }
        if (std::abs(fiducial_.norm() - 1.0) > 1e-10) {
            throw normalization_error("CovariantPovm: fiducial vector must have unit norm");
        }
        orbit_.reserve(static_cast<std::size_t>(ps_.size()));
        for (std::int64_t p = 0; p < ps_.size(); ++p) {
            orbit_.push_back(apply_weyl(ps_, p, fiducial_));
        }
        if (ps_.dim() <= kMaterializeLimit) {
            effects_.reserve(orbit_.size());
            const double w = weight();
            for (const StateVector &phi : orbit_) {
                effects_.push_back(w * (phi * phi.adjoint()));
            }
        }
    }

    const PhaseSpace &phase_space() const { return ps_; }
    const GroupSpec &spec() const { return ps_.spec(); }
    std::int64_t dim() const { return ps_.dim(); }
    std::int64_t size() const { return ps_.size(); }
    const StateVector &fiducial() const { return fiducial_; }

    /// The product Haar weight nu_hat x nu carried by each phase point.
    double weight() const { return 1.0 / static_cast<double>(ps_.dim()); }

    /// U_p psi0.
    const StateVector &orbit_vector(std::int64_t p) const {
        return orbit_[static_cast<std::size_t>(p)];
    }

    /// The effect weight * |U_p psi0><U_p psi0|.
    ComplexMatrix effect(std::int64_t p) const {
        if (!effects_.empty()) {
            return effects_[static_cast<std::size_t>(p)];
        }
        const StateVector &phi = orbit_[static_cast<std::size_t>(p)];
        return weight() * (phi * phi.adjoint());
    }

    ComplexMatrix effect(const PhasePoint &p) const { return effect(ps_.index(p)); }

    /// sum_p effect(p); equals the identity up to roundoff.
    ComplexMatrix identity_sum() const {
        ComplexMatrix acc = ComplexMatrix::Zero(dim(), dim());
        const double w = weight();
        for (const StateVector &phi : orbit_) {
            acc += w * (phi * phi.adjoint());
        }
        return acc;
    }

  private:
    PhaseSpace ps_;
    StateVector fiducial_;
    std::vector<StateVector> orbit_;
    std::vector<ComplexMatrix> effects_;
};

inline CovariantPovm build_povm(const GroupSpec &spec, const StateVector &fiducial) {
    return CovariantPovm(PhaseSpace(spec), fiducial);
}

inline CovariantPovm build_povm(PhaseSpace ps, StateVector fiducial) {
    return CovariantPovm(std::move(ps), std::move(fiducial));
}

/// The contraction attached to phase point p = (chi, g):
///   T_p = sum_{p' = (chi', g')} weight * chi'(g) * conj(chi(g')) * effect-density(p').
/// Every T_p is a multiple f(p) U_p of the corresponding Weyl operator, with
/// |f(p)| <= 1.
inline ComplexMatrix contraction_at(const CovariantPovm &povm, std::int64_t p) {
    const PhaseSpace &ps = povm.phase_space();
    const std::int64_t d = ps.dim();
    const std::int64_t a = ps.chi_index(p);
    const std::int64_t g = ps.g_index(p);
    ComplexMatrix acc = ComplexMatrix::Zero(d, d);
    for (std::int64_t ap = 0; ap < d; ++ap) {
        const cplx left = ps.char_value(ap, g);
        for (std::int64_t gp = 0; gp < d; ++gp) {
            const cplx kernel = left * std::conj(ps.char_value(a, gp));
            const StateVector &phi = povm.orbit_vector(ap * d + gp);
            acc.noalias() += kernel * (phi * phi.adjoint());
        }
    }
    return povm.weight() * acc;
}

inline ComplexMatrix contraction_at(const CovariantPovm &povm, const PhasePoint &p) {
    return contraction_at(povm, povm.phase_space().index(p));
}

/// The scalar multiplier table f with T_p = f(p) U_p, stored in phase-point
/// order.  min_modulus (with its argmin point) is the conditioning indicator
/// for tomographic inversion: the measurement is informationally complete
/// exactly when f vanishes nowhere.
struct MultiplierTable {
    std::vector<cplx> values;
    double min_modulus = std::numeric_limits<double>::infinity();
    std::int64_t argmin_index = 0;
    double max_residual = 0.0;  // worst ||T_p - f(p) U_p||_max seen at extraction

    double modulus(std::int64_t p) const { return std::abs(values[static_cast<std::size_t>(p)]); }
};

/// Extracts f(p) = Tr(U_p* T_p) / d for every p and verifies the residual
/// ||T_p - f(p) U_p||_max against `residual_tol`.  The trace route is used
/// rather than entrywise division because U_p has d^2 - d zero entries.
/// A residual above tolerance means the factorization failed, which cannot
/// happen for a valid POVM; it is reported as multiplier_residual_error.
inline MultiplierTable extract_multiplier(const CovariantPovm &povm,
                                          double residual_tol = 1e-11) {
    const PhaseSpace &ps = povm.phase_space();
    const std::int64_t d = ps.dim();
    MultiplierTable table;
    table.values.resize(static_cast<std::size_t>(ps.size()));
    for (std::int64_t p = 0; p < ps.size(); ++p) {
        const ComplexMatrix t = contraction_at(povm, p);
        const std::int64_t a = ps.chi_index(p);
        const std::int64_t g = ps.g_index(p);
        cplx trace{0.0, 0.0};
        for (std::int64_t h = 0; h < d; ++h) {
            trace += std::conj(ps.char_value(a, h)) * t(h, ps.add_index(h, g));
        }
        const cplx f = trace / static_cast<double>(d);

        ComplexMatrix residual = t;
        for (std::int64_t h = 0; h < d; ++h) {
            residual(h, ps.add_index(h, g)) -= f * ps.char_value(a, h);
        }
        const double res = max_abs(residual);
        table.max_residual = std::max(table.max_residual, res);
        if (res > residual_tol) {
            throw multiplier_residual_error(
                "extract_multiplier: residual " + detail::fmt_double(res) + " at phase point " +
                std::to_string(p) + " exceeds tolerance " + detail::fmt_double(residual_tol));
        }

        table.values[static_cast<std::size_t>(p)] = f;
        const double mod = std::abs(f);
        if (mod < table.min_modulus) {
            table.min_modulus = mod;
            table.argmin_index = p;
        }
    }
    return table;
}

/// The same table by the direct route f(p) = conj(<psi0, U_p psi0>), i.e.
/// the conjugated ambiguity function of the fiducial.  O(d^3) total; used
/// as an independent cross-check of extract_multiplier and as the cheap
/// path when the contractions themselves are not needed.
inline MultiplierTable ambiguity_multipliers(const PhaseSpace &ps, const StateVector &fiducial) {
    MultiplierTable table;
    table.values.resize(static_cast<std::size_t>(ps.size()));
    for (std::int64_t p = 0; p < ps.size(); ++p) {
        const cplx f = std::conj(fiducial.dot(apply_weyl(ps, p, fiducial)));
        table.values[static_cast<std::size_t>(p)] = f;
        const double mod = std::abs(f);
        if (mod < table.min_modulus) {
            table.min_modulus = mod;
            table.argmin_index = p;
        }
    }
    return table;
}

/// Outcome of the informational-completeness certificate.
struct IcReport {
    bool complete = false;
    double min_modulus = 0.0;
    double tol = 0.0;
    std::int64_t worst_index = 0;
    PhasePoint worst_point;
};

/// complete <=> min_p |f(p)| > tol.  Degenerate fiducials (for example basis
/// vectors) produce valid POVMs whose f vanishes somewhere; they are flagged
/// here rather than rejected at construction.  min_modulus doubles as a
/// condition indicator for the inversion even when nonzero.
inline IcReport informational_completeness_report(const PhaseSpace &ps,
                                                  const MultiplierTable &table,
                                                  double tol = 1e-10) {
    if (tol <= 0.0) {
        throw std::invalid_argument("informational_completeness_report: tol must be positive");
    }
    IcReport report;
    report.min_modulus = table.min_modulus;
    report.tol = tol;
    report.worst_index = table.argmin_index;
    report.worst_point = ps.point_at(table.argmin_index);
    report.complete = table.min_modulus > tol;
    return report;
}

}  // namespace covpovm

#endif  // COVPOVM_COVARIANT_POVM_HPP
