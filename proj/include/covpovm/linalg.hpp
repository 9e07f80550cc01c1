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

#ifndef COVPOVM_LINALG_HPP
#define COVPOVM_LINALG_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <functional>
#include <cstdint>
#include <vector>

#include "covpovm/rng.hpp"

namespace covpovm {

/// Dense complex carriers for operators and vectors on H = L^2(G) ~ C^d.
/// Entries are indexed by the fixed lexicographic element order.
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Entrywise max modulus, ||A||_max.
inline double max_abs(const ComplexMatrix &a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline double max_abs(const StateVector &v) {
    return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

/// Largest singular value.
inline double spectral_norm(const ComplexMatrix &a) {
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
}

inline bool all_finite(const ComplexMatrix &a) { return a.allFinite(); }

inline ComplexMatrix hermitize(const ComplexMatrix &a) { return 0.5 * (a + a.adjoint()); }

/// Eigenvalues of a (numerically) Hermitian matrix in increasing order.
inline RealVector hermitian_eigenvalues(const ComplexMatrix &a) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(a), Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

/// Euclidean projection of a real vector onto the probability simplex
/// { x : x_i >= 0, sum x_i = 1 }.
inline RealVector project_to_simplex(const RealVector &v) {
    const Eigen::Index n = v.size();
    std::vector<double> u(v.data(), v.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cumulative = 0.0;
    double tau = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        cumulative += u[static_cast<std::size_t>(k)];
        const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
        if (u[static_cast<std::size_t>(k)] - candidate > 0.0) {
            tau = candidate;
        }
    }
    RealVector out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out(i) = std::max(v(i) - tau, 0.0);
    }
    return out;
}

/// Nearest (in Frobenius norm) trace-one positive semidefinite matrix to a
/// Hermitian input: eigenvalues are projected onto the probability simplex
/// and the eigenvectors kept.
inline ComplexMatrix project_to_density_cone(const ComplexMatrix &hermitian) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitize(hermitian));
    const RealVector lambda = project_to_simplex(solver.eigenvalues());
    return solver.eigenvectors() * lambda.asDiagonal() * solver.eigenvectors().adjoint();
}

/// Haar-like random unit vector: i.i.d. complex Gaussian entries, normalized.
inline StateVector random_unit_vector(Eigen::Index d, Rng64 &rng) {
    StateVector v(d);
    for (Eigen::Index i = 0; i < d; ++i) {
        v(i) = rng.complex_gaussian();
    }
    v /= v.norm();
    return v;
}

/// Dense matrix with i.i.d. complex Gaussian entries.
inline ComplexMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, Rng64 &rng) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            m(i, j) = rng.complex_gaussian();
        }
    }
    return m;
}

/// Random rank-r density matrix rho = G G* / tr(G G*) with G a d x r complex
/// Gaussian matrix.  rank = d gives a generic full-rank mixed state.
inline ComplexMatrix random_density_matrix(Eigen::Index d, Eigen::Index rank, Rng64 &rng) {
    const ComplexMatrix g = random_matrix(d, std::max<Eigen::Index>(rank, 1), rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return rho;
}

}  // namespace covpovm

#endif  // COVPOVM_LINALG_HPP
