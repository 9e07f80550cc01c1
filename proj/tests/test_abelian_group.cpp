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

#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace covpovm;
using Catch::Approx;

TEST_CASE("GroupSpec parsing and validation") {
    const GroupSpec g = GroupSpec::parse("2,2,3");
    REQUIRE(g.factors() == std::vector<std::int64_t>{2, 2, 3});
    REQUIRE(g.order() == 12);
    REQUIRE(g.exponent() == 6);
    REQUIRE(g.to_string() == "2,2,3");

    REQUIRE(GroupSpec::parse("4").order() == 4);
    REQUIRE(GroupSpec::parse("1").order() == 1);
    REQUIRE(GroupSpec::parse(" 2 , 3 ").order() == 6);

    REQUIRE_THROWS_AS(GroupSpec::parse(""), std::invalid_argument);
    REQUIRE_THROWS_AS(GroupSpec::parse("0"), std::invalid_argument);
    REQUIRE_THROWS_AS(GroupSpec::parse("-2"), std::invalid_argument);
    REQUIRE_THROWS_AS(GroupSpec::parse("2,x"), std::invalid_argument);
    REQUIRE_THROWS_AS(GroupSpec(std::vector<std::int64_t>{}), std::invalid_argument);
}

TEST_CASE("element enumeration is lexicographic") {
    SECTION("Z_2") {
        const auto elements = enumerate_elements(GroupSpec::parse("2"));
        REQUIRE(elements.size() == 2);
        REQUIRE(elements[0].coords == std::vector<std::int64_t>{0});
        REQUIRE(elements[1].coords == std::vector<std::int64_t>{1});
    }
    SECTION("Z_2 x Z_2") {
        const auto elements = enumerate_elements(GroupSpec::parse("2,2"));
        REQUIRE(elements.size() == 4);
        REQUIRE(elements[0].coords == std::vector<std::int64_t>{0, 0});
        REQUIRE(elements[1].coords == std::vector<std::int64_t>{0, 1});
        REQUIRE(elements[2].coords == std::vector<std::int64_t>{1, 0});
        REQUIRE(elements[3].coords == std::vector<std::int64_t>{1, 1});
    }
    SECTION("trivial group") {
        const auto elements = enumerate_elements(GroupSpec::parse("1"));
        REQUIRE(elements.size() == 1);
        REQUIRE(elements[0].coords == std::vector<std::int64_t>{0});
    }
    SECTION("index round trip") {
        const GroupSpec spec = GroupSpec::parse("3,4");
        const auto elements = enumerate_elements(spec);
        for (std::int64_t i = 0; i < spec.order(); ++i) {
            REQUIRE(element_index(spec, elements[static_cast<std::size_t>(i)]) == i);
            REQUIRE(element_at(spec, i) == elements[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("character evaluation") {
    SECTION("primitive fourth root on Z_4") {
        const GroupSpec spec = GroupSpec::parse("4");
        const cplx value = char_eval(spec, Character{{1}}, GroupElement{{1}});
        REQUIRE(value.real() == 0.0);  // quarter points are exact
        REQUIRE(value.imag() == 1.0);
    }
    SECTION("trivial character is identically 1") {
        const GroupSpec spec = GroupSpec::parse("3,5");
        const Character zero{{0, 0}};
        for (const GroupElement &g : enumerate_elements(spec)) {
            REQUIRE(char_eval(spec, zero, g) == cplx{1.0, 0.0});
        }
    }
    SECTION("sign character on Z_2") {
        const GroupSpec spec = GroupSpec::parse("2");
        REQUIRE(char_eval(spec, Character{{1}}, GroupElement{{1}}) == cplx{-1.0, 0.0});
    }
    SECTION("mismatched coordinates are rejected") {
        const GroupSpec spec = GroupSpec::parse("2,2");
        REQUIRE_THROWS_AS(char_eval(spec, Character{{1}}, GroupElement{{0, 0}}),
                          spec_mismatch_error);
        REQUIRE_THROWS_AS(char_eval(spec, Character{{0, 0}}, GroupElement{{0, 5}}),
                          spec_mismatch_error);
    }
}

TEST_CASE("characters are unit-modulus bicharacters") {
    for (const char *name : {"6", "2,3", "4,2", "5"}) {
        const GroupSpec spec = GroupSpec::parse(name);
        const auto elements = enumerate_elements(spec);
        const auto characters = enumerate_characters(spec);
        for (const Character &chi : characters) {
            for (const GroupElement &g : elements) {
                REQUIRE(std::abs(std::abs(char_eval(spec, chi, g)) - 1.0) < 1e-14);
            }
        }
        // multiplicative in the group argument
        for (const Character &chi : characters) {
            for (const GroupElement &g : elements) {
                for (const GroupElement &h : elements) {
                    const cplx lhs = char_eval(spec, chi, add(spec, g, h));
                    const cplx rhs = char_eval(spec, chi, g) * char_eval(spec, chi, h);
                    REQUIRE(std::abs(lhs - rhs) < 1e-14);
                }
            }
        }
        // multiplicative in the character argument (dual group law)
        for (const Character &a : characters) {
            for (const Character &b : characters) {
                const Character ab = add(spec, a, b);
                for (const GroupElement &g : elements) {
                    const cplx lhs = char_eval(spec, ab, g);
                    const cplx rhs = char_eval(spec, a, g) * char_eval(spec, b, g);
                    REQUIRE(std::abs(lhs - rhs) < 1e-14);
                }
            }
        }
    }
}

TEST_CASE("conjugate character negates coordinates") {
    const GroupSpec spec = GroupSpec::parse("4,3");
    for (const Character &chi : enumerate_characters(spec)) {
        const Character bar = conjugate(spec, chi);
        for (const GroupElement &g : enumerate_elements(spec)) {
            REQUIRE(std::abs(char_eval(spec, bar, g) - std::conj(char_eval(spec, chi, g))) <
                    1e-14);
        }
    }
}

TEST_CASE("character orthogonality") {
    for (const char *name : {"2", "6", "2,2", "8", "2,2,3"}) {
        const GroupSpec spec = GroupSpec::parse(name);
        const double d = static_cast<double>(spec.order());
        const auto characters = enumerate_characters(spec);
        for (const GroupElement &g : enumerate_elements(spec)) {
            cplx sum{0.0, 0.0};
            for (const Character &chi : characters) {
                sum += char_eval(spec, chi, g);
            }
            if (element_index(spec, g) == 0) {
                REQUIRE(sum.real() == Approx(d).margin(1e-13));
                REQUIRE(sum.imag() == Approx(0.0).margin(1e-13));
            } else {
                REQUIRE(std::abs(sum) < 1e-12 * d);
            }
        }
    }
}

TEST_CASE("Haar pair duality normalization is exact") {
    for (const char *name : {"1", "2", "12", "2,2,3", "16"}) {
        const GroupSpec spec = GroupSpec::parse(name);
        const HaarPair pair = haar_pair(spec);
        REQUIRE(pair.nu_weight.num == 1);
        REQUIRE(pair.nu_weight.den == 1);
        REQUIRE(pair.nu_hat_weight.num == 1);
        REQUIRE(pair.nu_hat_weight.den == spec.order());
        REQUIRE(pair.duality_product_is_one(spec.order()));
    }
}

TEST_CASE("Fourier inversion identity") {
    SECTION("two-point check on Z_2") {
        // By orthogonality, sum_chi chi(h) conj(chi(g)) = 2 delta_{h,g}, so the
        // double sum reproduces psi exactly.
        const GroupSpec spec = GroupSpec::parse("2");
        REQUIRE(verify_pontryagin_inversion(spec, {cplx{1.0, 0.0}, cplx{0.0, 0.0}}) < 1e-14);
    }
    SECTION("zero function") {
        const GroupSpec spec = GroupSpec::parse("3,2");
        REQUIRE(verify_pontryagin_inversion(spec, std::vector<cplx>(6, cplx{0.0, 0.0})) == 0.0);
    }
    SECTION("random function on Z_6") {
        const GroupSpec spec = GroupSpec::parse("6");
        Rng64 rng(2026);
        std::vector<cplx> psi(6);
        for (cplx &x : psi) {
            x = rng.complex_gaussian();
        }
        REQUIRE(verify_pontryagin_inversion(spec, psi) < 1e-13);
    }
    SECTION("wrong length is rejected") {
        REQUIRE_THROWS_AS(verify_pontryagin_inversion(GroupSpec::parse("3"), {cplx{1.0, 0.0}}),
                          std::invalid_argument);
    }
}
