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

#ifndef COVPOVM_ERRORS_HPP
#define COVPOVM_ERRORS_HPP

#include <cstdio>
#include <stdexcept>
#include <string>

namespace covpovm {

namespace detail {

/// Scientific-notation rendering for diagnostics; std::to_string flattens
/// small magnitudes to 0.000000.
inline std::string fmt_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.6e", value);
    return buffer;
}

}  // namespace detail

/// A Character or GroupElement was used with a GroupSpec it does not belong to.
struct spec_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A vector required to have unit norm does not.
struct normalization_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The residual of the multiplier factorization T_p = f(p) U_p exceeded its
/// tolerance.  The factorization is exact in exact arithmetic, so this always
/// indicates an implementation bug rather than bad input.
struct multiplier_residual_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Reconstruction was requested with a multiplier table whose smallest
/// modulus is at or below the conditioning tolerance.
struct ill_conditioned_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A quadrature grid is too small to contain the support of the integrand.
struct grid_too_small_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A Fock-space operator was requested in a regime where the truncation
/// destroys it (|alpha|^2 e / N > 1).
struct truncation_error : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace covpovm

#endif  // COVPOVM_ERRORS_HPP
