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

#ifndef COVPOVM_WEYL_SYSTEM_HPP
#define COVPOVM_WEYL_SYSTEM_HPP

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "covpovm/abelian_group.hpp"
#include "covpovm/linalg.hpp"

namespace covpovm {

/// A point (chi, g) of the phase space Ghat x G.
struct PhasePoint {
    Character chi;
    GroupElement g;

    bool operator==(const PhasePoint &other) const {
        return chi == other.chi && g == other.g;
    }
    bool operator!=(const PhasePoint &other) const { return !(*this == other); }
};

/// The phase space Ghat x G of a finite Abelian group with its fixed
/// enumeration (character index major, element index minor: flat = a*d + g)
/// and cached character values and index arithmetic.  All phase-space
/// functions, tables and sums in this library are ordered by this
/// enumeration.  Immutable after construction.
class PhaseSpace {
  public:
    explicit PhaseSpace(GroupSpec spec)
        : spec_(std::move(spec)),
          elements_(enumerate_elements(spec_)),
          characters_(enumerate_characters(spec_)) {
        const std::int64_t d = spec_.order();
        char_table_.resize(d, d);
        for (std::int64_t a = 0; a < d; ++a) {
            for (std::int64_t g = 0; g < d; ++g) {
                char_table_(a, g) = char_eval(spec_, characters_[a], elements_[g]);
            }
        }
        add_table_.assign(static_cast<std::size_t>(d * d), 0);
        neg_table_.assign(static_cast<std::size_t>(d), 0);
        for (std::int64_t i = 0; i < d; ++i) {
            neg_table_[static_cast<std::size_t>(i)] =
                detail::index_of(spec_, detail::negate_coords(spec_, elements_[i].coords));
            for (std::int64_t j = 0; j < d; ++j) {
                add_table_[static_cast<std::size_t>(i * d + j)] = detail::index_of(
                    spec_, detail::add_coords(spec_, elements_[i].coords, elements_[j].coords));
            }
        }
    }

    const GroupSpec &spec() const { return spec_; }
    std::int64_t dim() const { return spec_.order(); }
    std::int64_t size() const { return spec_.order() * spec_.order(); }

    const std::vector<GroupElement> &elements() const { return elements_; }
    const std::vector<Character> &characters() const { return characters_; }

    /// chi_a(g) by index.
    cplx char_value(std::int64_t a, std::int64_t g) const { return char_table_(a, g); }
    /// Index of a+b; valid for element and character indices alike.
    std::int64_t add_index(std::int64_t a, std::int64_t b) const {
        return add_table_[static_cast<std::size_t>(a * dim() + b)];
    }
    std::int64_t neg_index(std::int64_t a) const {
        return neg_table_[static_cast<std::size_t>(a)];
    }

    PhasePoint point_at(std::int64_t flat) const {
        return PhasePoint{characters_[static_cast<std::size_t>(flat / dim())],
                          elements_[static_cast<std::size_t>(flat % dim())]};
    }
    std::int64_t index(const PhasePoint &p) const {
        return character_index(spec_, p.chi) * dim() + element_index(spec_, p.g);
    }

    std::int64_t chi_index(std::int64_t flat) const { return flat / dim(); }
    std::int64_t g_index(std::int64_t flat) const { return flat % dim(); }

    /// Group law on phase points: (chi, g) o (chi', g') = (chi chi', g + g').
    std::int64_t compose(std::int64_t p, std::int64_t q) const {
        return add_index(chi_index(p), chi_index(q)) * dim() + add_index(g_index(p), g_index(q));
    }
    /// The scalar cocycle chi'(g) picked up when composing U_p U_q.
    cplx composition_phase(std::int64_t p, std::int64_t q) const {
        return char_value(chi_index(q), g_index(p));
    }

  private:
    GroupSpec spec_;
    std::vector<GroupElement> elements_;
    std::vector<Character> characters_;
    ComplexMatrix char_table_;
    std::vector<std::int64_t> add_table_;
    std::vector<std::int64_t> neg_table_;
};

/// The unitary U_{chi,g} acting on functions psi on G (column vectors in
/// element order) as [U psi](h) = chi(h) psi(h+g); as a matrix,
/// U[h, h+g] = chi(h) and all other entries vanish.
inline ComplexMatrix weyl_operator(const PhaseSpace &ps, std::int64_t flat) {
    const std::int64_t d = ps.dim();
    const std::int64_t a = ps.chi_index(flat);
    const std::int64_t g = ps.g_index(flat);
    ComplexMatrix u = ComplexMatrix::Zero(d, d);
    for (std::int64_t h = 0; h < d; ++h) {
        u(h, ps.add_index(h, g)) = ps.char_value(a, h);
    }
    return u;
}

inline ComplexMatrix weyl_operator(const PhaseSpace &ps, const PhasePoint &p) {
    return weyl_operator(ps, ps.index(p));
}

/// U_{chi,g} psi without materializing the matrix; O(d).
inline StateVector apply_weyl(const PhaseSpace &ps, std::int64_t flat, const StateVector &psi) {
    const std::int64_t d = ps.dim();
    const std::int64_t a = ps.chi_index(flat);
    const std::int64_t g = ps.g_index(flat);
    StateVector out(d);
    for (std::int64_t h = 0; h < d; ++h) {
        out(h) = ps.char_value(a, h) * psi(ps.add_index(h, g));
    }
    return out;
}

inline StateVector apply_weyl(const PhaseSpace &ps, const PhasePoint &p, const StateVector &psi) {
    return apply_weyl(ps, ps.index(p), psi);
}

/// Max-norm residual of U_p U_q = chi'(g) U_{p o q}.
inline double check_projective_relation(const PhaseSpace &ps, std::int64_t p, std::int64_t q) {
    const ComplexMatrix lhs = weyl_operator(ps, p) * weyl_operator(ps, q);
    const ComplexMatrix rhs = ps.composition_phase(p, q) * weyl_operator(ps, ps.compose(p, q));
    return max_abs(ComplexMatrix(lhs - rhs));
}

inline double check_projective_relation(const PhaseSpace &ps, const PhasePoint &p,
                                        const PhasePoint &q) {
    return check_projective_relation(ps, ps.index(p), ps.index(q));
}

/// The adjoint of a Weyl operator is again a Weyl operator up to a phase:
/// U*_{chi,g} = chi(g) U_{conj(chi),-g}.  Returns (phase, point).
inline std::pair<cplx, PhasePoint> weyl_adjoint_point(const PhaseSpace &ps, const PhasePoint &p) {
    const std::int64_t a = character_index(ps.spec(), p.chi);
    const std::int64_t g = element_index(ps.spec(), p.g);
    const cplx phase = ps.char_value(a, g);
    return {phase, PhasePoint{character_at(ps.spec(), ps.neg_index(a)),
                              element_at(ps.spec(), ps.neg_index(g))}};
}

/// Flat-index form of weyl_adjoint_point.
inline std::pair<cplx, std::int64_t> weyl_adjoint_index(const PhaseSpace &ps, std::int64_t flat) {
    const std::int64_t a = ps.chi_index(flat);
    const std::int64_t g = ps.g_index(flat);
    return {ps.char_value(a, g), ps.neg_index(a) * ps.dim() + ps.neg_index(g)};
}

/// Which phase points feed the commutant solve.
enum class CommutantMode {
    generators,  // the 2k generator operators; the projective relations
                 // propagate commutation to every phase point
    all_points,  // every one of the d^2 operators (exhaustive guard)
};

/// Dimension of { X : U_p X = X U_p for all p }.  The linear system
/// vec(U X - X U) = 0 is stacked over the chosen operator set and its
/// nullity computed by SVD.  A value of 1 certifies irreducibility.
inline int commutant_dimension(const GroupSpec &spec,
                               CommutantMode mode = CommutantMode::generators) {
    const PhaseSpace ps(spec);
    const std::int64_t d = spec.order();

    std::vector<std::int64_t> points;
    if (mode == CommutantMode::all_points) {
        for (std::int64_t p = 0; p < ps.size(); ++p) {
            points.push_back(p);
        }
    } else {
        // One shift generator and one character generator per cyclic factor.
        std::int64_t stride = 1;
        for (std::size_t j = spec.num_factors(); j-- > 0;) {
            if (spec.factors()[j] > 1) {
                points.push_back(stride);          // (0, e_j)
                points.push_back(stride * d);      // (e_j, 0)
            }
            stride *= spec.factors()[j];
        }
        if (points.empty()) {
            points.push_back(0);  // trivial group: only the identity
        }
    }

    const std::int64_t n = d * d;
    ComplexMatrix system(static_cast<std::int64_t>(points.size()) * n, n);
    for (std::size_t block = 0; block < points.size(); ++block) {
        const ComplexMatrix u = weyl_operator(ps, points[block]);
        // vec(UX - XU) = (I kron U - U^T kron I) vec(X), column-major vec.
        ComplexMatrix k = ComplexMatrix::Zero(n, n);
        for (std::int64_t c = 0; c < d; ++c) {
            k.block(c * d, c * d, d, d) = u;
        }
        for (std::int64_t c = 0; c < d; ++c) {
            for (std::int64_t r = 0; r < d; ++r) {
                for (std::int64_t i = 0; i < d; ++i) {
                    k(c * d + i, r * d + i) -= u(r, c);
                }
            }
        }
        system.block(static_cast<std::int64_t>(block) * n, 0, n, n) = k;
    }

    Eigen::BDCSVD<ComplexMatrix> svd(system);
    const auto &sigma = svd.singularValues();
    if (sigma.size() == 0) {
        return static_cast<int>(n);
    }
    const double tol = static_cast<double>(std::max(system.rows(), system.cols())) *
                       std::numeric_limits<double>::epsilon() * sigma(0);
    std::int64_t rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > tol) {
            ++rank;
        }
    }
    return static_cast<int>(n - rank);
}

/// F(chi, g) = Tr(rho U_{chi,g}) over the fixed phase-point order.  Together
/// with weyl_inverse_transform this is an isometry (up to the 1/d weight)
/// between Hilbert-Schmidt operators and phase-space functions.
inline std::vector<cplx> weyl_transform(const PhaseSpace &ps, const ComplexMatrix &rho) {
    const std::int64_t d = ps.dim();
    std::vector<cplx> out(static_cast<std::size_t>(ps.size()));
    for (std::int64_t a = 0; a < d; ++a) {
        for (std::int64_t g = 0; g < d; ++g) {
            cplx acc{0.0, 0.0};
            for (std::int64_t h = 0; h < d; ++h) {
                acc += rho(ps.add_index(h, g), h) * ps.char_value(a, h);
            }
            out[static_cast<std::size_t>(a * d + g)] = acc;
        }
    }
    return out;
}

/// (1/d) sum_p F(p) U_p*; inverse of weyl_transform.
inline ComplexMatrix weyl_inverse_transform(const PhaseSpace &ps, const std::vector<cplx> &f) {
    const std::int64_t d = ps.dim();
    if (static_cast<std::int64_t>(f.size()) != ps.size()) {
        throw std::invalid_argument("weyl_inverse_transform: need one value per phase point");
    }
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    const double w = 1.0 / static_cast<double>(d);
    for (std::int64_t a = 0; a < d; ++a) {
        for (std::int64_t g = 0; g < d; ++g) {
            const cplx coeff = w * f[static_cast<std::size_t>(a * d + g)];
            // U*[h+g, h] = conj(chi(h))
            for (std::int64_t h = 0; h < d; ++h) {
                out(ps.add_index(h, g), h) += coeff * std::conj(ps.char_value(a, h));
            }
        }
    }
    return out;
}

}  // namespace covpovm

#endif  // COVPOVM_WEYL_SYSTEM_HPP
