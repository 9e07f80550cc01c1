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

#ifndef COVPOVM_ABELIAN_GROUP_HPP
#define COVPOVM_ABELIAN_GROUP_HPP

#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "covpovm/errors.hpp"

namespace covpovm {

using cplx = std::complex<double>;

/// A finite Abelian group G = Z_{n1} x ... x Z_{nk} given by its cyclic
/// factors.  Elements and characters are coordinate tuples indexed against
/// the factor list; all enumeration is lexicographic and fixed, so every
/// matrix and table downstream indexes by the same order.
class GroupSpec {
  public:
    explicit GroupSpec(std::vector<std::int64_t> factors)
        : factors_(std::move(factors)) {
        if (factors_.empty()) {
            throw std::invalid_argument("GroupSpec: factor list must not be empty");
        }
        order_ = 1;
        exponent_ = 1;
        for (std::int64_t n : factors_) {
            if (n < 1) {
                throw std::invalid_argument("GroupSpec: every cyclic order must be >= 1");
            }
            order_ *= n;
            exponent_ = std::lcm(exponent_, n);
        }
    }

    /// Parses a comma-separated factor string such as "4" or "2,2,3".
    static GroupSpec parse(std::string_view csv) {
        std::vector<std::int64_t> factors;
        std::string token;
        std::istringstream in{std::string(csv)};
        while (std::getline(in, token, ',')) {
            std::size_t pos = 0;
            std::int64_t n = 0;
            try {
                n = std::stoll(token, &pos);
            } catch (const std::exception &) {
                throw std::invalid_argument("GroupSpec: bad factor '" + token + "'");
            }
            while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) {
                ++pos;
            }
            if (pos != token.size()) {
                throw std::invalid_argument("GroupSpec: bad factor '" + token + "'");
            }
            factors.push_back(n);
        }
        if (factors.empty()) {
            throw std::invalid_argument("GroupSpec: empty factor string");
        }
        return GroupSpec(std::move(factors));
    }

    const std::vector<std::int64_t> &factors() const { return factors_; }
    std::size_t num_factors() const { return factors_.size(); }
    std::int64_t order() const { return order_; }
    /// Least common multiple of the factors; every character value is an
    /// exponent()-th root of unity.
    std::int64_t exponent() const { return exponent_; }

    bool operator==(const GroupSpec &other) const { return factors_ == other.factors_; }
    bool operator!=(const GroupSpec &other) const { return !(*this == other); }

    std::string to_string() const {
        std::string out;
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            if (j) {
                out += ',';
            }
            out += std::to_string(factors_[j]);
        }
        return out;
    }

  private:
    std::vector<std::int64_t> factors_;
    std::int64_t order_;
    std::int64_t exponent_;
};

/// An element g in G as a tuple of residues, 0 <= g_j < n_j.
struct GroupElement {
    std::vector<std::int64_t> coords;

    bool operator==(const GroupElement &other) const { return coords == other.coords; }
    bool operator!=(const GroupElement &other) const { return !(*this == other); }
};

/// A character chi_a of G as the tuple a of dual residues; evaluation is
/// chi_a(g) = exp(2 pi i sum_j a_j g_j / n_j).  Characters under coordinate
/// addition form the dual group, which for finite Abelian G is isomorphic
/// to G itself.
struct Character {
    std::vector<std::int64_t> coords;

    bool operator==(const Character &other) const { return coords == other.coords; }
    bool operator!=(const Character &other) const { return !(*this == other); }
};

namespace detail {

inline void check_coords(const GroupSpec &spec, const std::vector<std::int64_t> &coords,
                         const char *what) {
    if (coords.size() != spec.num_factors()) {
        throw spec_mismatch_error(std::string(what) + ": coordinate count does not match GroupSpec");
    }
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j] < 0 || coords[j] >= spec.factors()[j]) {
            throw spec_mismatch_error(std::string(what) + ": coordinate out of range for GroupSpec");
        }
    }
}

inline std::vector<std::int64_t> coords_at(const GroupSpec &spec, std::int64_t index) {
    std::vector<std::int64_t> coords(spec.num_factors());
    for (std::size_t j = spec.num_factors(); j-- > 0;) {
        coords[j] = index % spec.factors()[j];
        index /= spec.factors()[j];
    }
    return coords;
}

inline std::int64_t index_of(const GroupSpec &spec, const std::vector<std::int64_t> &coords) {
    std::int64_t index = 0;
    for (std::size_t j = 0; j < coords.size(); ++j) {
        index = index * spec.factors()[j] + coords[j];
    }
    return index;
}

inline std::vector<std::int64_t> add_coords(const GroupSpec &spec,
                                            const std::vector<std::int64_t> &a,
                                            const std::vector<std::int64_t> &b) {
    std::vector<std::int64_t> out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        out[j] = (a[j] + b[j]) % spec.factors()[j];
    }
    return out;
}

inline std::vector<std::int64_t> negate_coords(const GroupSpec &spec,
                                               const std::vector<std::int64_t> &a) {
    std::vector<std::int64_t> out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        out[j] = (spec.factors()[j] - a[j]) % spec.factors()[j];
    }
    return out;
}

/// exp(2 pi i num / den) with num reduced mod den first.  Quarter-period
/// multiples are returned exactly so that +-1 and +-i carry no phase dirt.
inline cplx root_of_unity(std::int64_t num, std::int64_t den) {
    num %= den;
    if (num < 0) {
        num += den;
    }
    if ((4 * num) % den == 0) {
        switch ((4 * num) / den) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double angle = 2.0 * M_PI * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace detail

/// All d elements of G in lexicographic coordinate order (last factor fastest).
inline std::vector<GroupElement> enumerate_elements(const GroupSpec &spec) {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(spec.order()));
    for (std::int64_t i = 0; i < spec.order(); ++i) {
        out.push_back(GroupElement{detail::coords_at(spec, i)});
    }
    return out;
}

/// All d characters of G, ordered like enumerate_elements.
inline std::vector<Character> enumerate_characters(const GroupSpec &spec) {
    std::vector<Character> out;
    out.reserve(static_cast<std::size_t>(spec.order()));
    for (std::int64_t i = 0; i < spec.order(); ++i) {
        out.push_back(Character{detail::coords_at(spec, i)});
    }
    return out;
}

inline GroupElement element_at(const GroupSpec &spec, std::int64_t index) {
    return GroupElement{detail::coords_at(spec, index)};
}

inline Character character_at(const GroupSpec &spec, std::int64_t index) {
    return Character{detail::coords_at(spec, index)};
}

inline std::int64_t element_index(const GroupSpec &spec, const GroupElement &g) {
    detail::check_coords(spec, g.coords, "element_index");
    return detail::index_of(spec, g.coords);
}

inline std::int64_t character_index(const GroupSpec &spec, const Character &chi) {
    detail::check_coords(spec, chi.coords, "character_index");
    return detail::index_of(spec, chi.coords);
}

inline GroupElement add(const GroupSpec &spec, const GroupElement &a, const GroupElement &b) {
    detail::check_coords(spec, a.coords, "add");
    detail::check_coords(spec, b.coords, "add");
    return GroupElement{detail::add_coords(spec, a.coords, b.coords)};
}

inline GroupElement negate(const GroupSpec &spec, const GroupElement &a) {
    detail::check_coords(spec, a.coords, "negate");
    return GroupElement{detail::negate_coords(spec, a.coords)};
}

/// Dual group law: chi_a * chi_b = chi_{a+b}.
inline Character add(const GroupSpec &spec, const Character &a, const Character &b) {
    detail::check_coords(spec, a.coords, "add");
    detail::check_coords(spec, b.coords, "add");
    return Character{detail::add_coords(spec, a.coords, b.coords)};
}

/// Conjugate character: the pointwise complex conjugate of chi_a is chi_{-a}.
inline Character conjugate(const GroupSpec &spec, const Character &a) {
    detail::check_coords(spec, a.coords, "conjugate");
    return Character{detail::negate_coords(spec, a.coords)};
}

/// chi_a(g) = exp(2 pi i sum_j a_j g_j / n_j).  The integer dot product is
/// brought onto the common denominator exponent() and reduced before any
/// floating-point work, so the phase error does not grow with the size of
/// the coordinates.
inline cplx char_eval(const GroupSpec &spec, const Character &chi, const GroupElement &g) {
    detail::check_coords(spec, chi.coords, "char_eval");
    detail::check_coords(spec, g.coords, "char_eval");
    const std::int64_t n = spec.exponent();
    std::int64_t dot = 0;
    for (std::size_t j = 0; j < chi.coords.size(); ++j) {
        dot = (dot + chi.coords[j] * g.coords[j] % n * (n / spec.factors()[j])) % n;
    }
    return detail::root_of_unity(dot, n);
}

inline std::string coords_to_string(const std::vector<std::int64_t> &coords, char sep = ',') {
    std::string out;
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (j) {
            out += sep;
        }
        out += std::to_string(coords[j]);
    }
    return out;
}

/// An exact rational weight, numerator/denominator.
struct Rational {
    std::int64_t num;
    std::int64_t den;
};

/// The dual pair of Haar measures fixed by this artifact: counting measure
/// on G and counting/d on the character group.  The pair is normalized so
/// that Fourier inversion is exact, which in rational arithmetic reads
/// nu * nu_hat * d = 1.
struct HaarPair {
    Rational nu_weight;       // weight per element of G
    Rational nu_hat_weight;   // weight per character

    bool duality_product_is_one(std::int64_t order) const {
        return nu_weight.num * nu_hat_weight.num * order == nu_weight.den * nu_hat_weight.den;
    }
};

inline HaarPair haar_pair(const GroupSpec &spec) {
    return HaarPair{Rational{1, 1}, Rational{1, spec.order()}};
}

/// Max-norm residual of the Fourier inversion identity
///   (1/d) sum_{chi} sum_{g} chi(h) conj(chi(g)) psi(g) = psi(h)
/// evaluated over all h.  psi must have d entries in element order.
inline double verify_pontryagin_inversion(const GroupSpec &spec, const std::vector<cplx> &psi) {
    const std::int64_t d = spec.order();
    if (static_cast<std::int64_t>(psi.size()) != d) {
        throw std::invalid_argument("verify_pontryagin_inversion: psi must have d entries");
    }
    const auto elements = enumerate_elements(spec);
    const auto characters = enumerate_characters(spec);
    double worst = 0.0;
    for (std::int64_t h = 0; h < d; ++h) {
        cplx acc{0.0, 0.0};
        for (std::int64_t c = 0; c < d; ++c) {
            const cplx chi_h = char_eval(spec, characters[c], elements[h]);
            for (std::int64_t g = 0; g < d; ++g) {
                acc += chi_h * std::conj(char_eval(spec, characters[c], elements[g])) * psi[g];
            }
        }
        worst = std::max(worst, std::abs(acc / static_cast<double>(d) - psi[h]));
    }
    return worst;
}

}  // namespace covpovm

#endif  // COVPOVM_ABELIAN_GROUP_HPP
