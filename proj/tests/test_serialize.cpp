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

#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace covpovm;
using covpovm::testing::z2_complex_fiducial;

TEST_CASE("matrix JSON round trip is exact") {
    Rng64 rng(101);
    const ComplexMatrix m = random_matrix(4, 4, rng);
    const ComplexMatrix back = matrix_from_json(matrix_to_json(m));
    REQUIRE(back.rows() == 4);
    REQUIRE(back == m);  // bitwise: shortest-round-trip doubles
}

TEST_CASE("malformed matrix JSON is rejected") {
    REQUIRE_THROWS_AS(matrix_from_json(json::array()), std::invalid_argument);
    REQUIRE_THROWS_AS(matrix_from_json(json::parse("[[[1,0],[0,0]],[[0,0]]]")),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(matrix_from_json(json::parse("{\"rows\":2}")), std::invalid_argument);
}

TEST_CASE("vector and phase-function JSON round trips") {
    Rng64 rng(103);
    const StateVector v = random_unit_vector(6, rng);
    REQUIRE(vector_from_json(vector_to_json(v)) == v);

    std::vector<cplx> f(9);
    for (cplx &x : f) {
        x = rng.complex_gaussian();
    }
    const std::vector<cplx> back = phase_function_from_json(phase_function_to_json(f));
    REQUIRE(back == f);
}

TEST_CASE("multiplier table serialization") {
    const PhaseSpace ps(GroupSpec::parse("2"));
    const CovariantPovm povm = build_povm(ps, z2_complex_fiducial());
    const MultiplierTable table = extract_multiplier(povm);

    SECTION("CSV layout") {
        const std::string csv = multiplier_table_to_csv(ps, table);
        std::istringstream lines(csv);
        std::string line;
        REQUIRE(std::getline(lines, line));
        REQUIRE(line == "chi_coords,g_coords,re_f,im_f,abs_f");
        int rows = 0;
        while (std::getline(lines, line)) {
            ++rows;
            REQUIRE(std::count(line.begin(), line.end(), ',') == 4);
        }
        REQUIRE(rows == 4);
        // first data row is the origin
        std::istringstream again(csv);
        std::getline(again, line);
        std::getline(again, line);
        REQUIRE(line.rfind("0,0,", 0) == 0);
    }
    SECTION("tuple coordinates use ';' inside CSV cells") {
        const PhaseSpace product(GroupSpec::parse("2,2"));
        Rng64 rng(7);
        const MultiplierTable t = ambiguity_multipliers(product, random_unit_vector(4, rng));
        const std::string csv = multiplier_table_to_csv(product, t);
        REQUIRE(csv.find("0;1,1;0,") != std::string::npos);
    }
    SECTION("JSON document") {
        const json doc = multiplier_table_to_json(ps, table);
        REQUIRE(doc.at("group") == "2");
        REQUIRE(doc.at("values").size() == 4);
        REQUIRE(doc.at("values")[0].at("abs_f").get<double>() == Catch::Approx(1.0));
        REQUIRE(doc.at("min_modulus").get<double>() == Catch::Approx(table.min_modulus));
    }
}

TEST_CASE("IC report serialization") {
    const PhaseSpace ps(GroupSpec::parse("2"));
    const CovariantPovm povm = build_povm(ps, covpovm::testing::basis_vector(2));
    const IcReport report = informational_completeness_report(ps, extract_multiplier(povm));
    const json doc = ic_report_to_json(report);
    REQUIRE(doc.at("complete").get<bool>() == false);
    REQUIRE(doc.at("worst_point").at("chi")[0].get<int>() == 0);
    REQUIRE(doc.at("worst_point").at("g")[0].get<int>() == 1);
}

TEST_CASE("probability table JSON round trip") {
    const PhaseSpace ps(GroupSpec::parse("2"));
    const CovariantPovm povm = build_povm(ps, z2_complex_fiducial());
    ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
    rho(0, 0) = 1.0;
    const ProbabilityTable exact = forward_probabilities(povm, DensityMatrix::validated(rho));
    const ProbabilityTable emp = sample_outcomes(exact, 250, 9);

    for (const ProbabilityTable &table : {exact, emp}) {
        const ProbabilityTable back = probability_table_from_json(probability_table_to_json(table));
        REQUIRE(back.kind == table.kind);
        REQUIRE(back.shots == table.shots);
        REQUIRE(back.dim == table.dim);
        REQUIRE(back.values == table.values);
    }
    REQUIRE_THROWS_AS(probability_table_from_json(json::parse(
                          R"({"kind":"guessed","shots":0,"dim":2,"values":[]})")),
                      std::invalid_argument);
}

TEST_CASE("identity-check report serialization") {
    const FockSpace space(8);
    const QuadratureGrid grid = QuadratureGrid::disk(4.0, 0.2);
    const GsIdentityReport report = gs_identity_check(space, grid, 4);
    const json doc = gs_identity_report_to_json(report);
    REQUIRE(doc.at("levels").get<int>() == 4);
    REQUIRE(doc.at("per_level_errors").size() == 5);
    REQUIRE(doc.at("max_error").get<double>() >= doc.at("max_offdiag").get<double>());
}

TEST_CASE("text file helpers") {
    const std::string path = "covpovm_serialize_test.tmp";
    write_text_file(path, "payload\n");
    REQUIRE(read_text_file(path) == "payload\n");
    std::remove(path.c_str());
    REQUIRE_THROWS_AS(read_text_file("definitely/not/a/real/path.json"), std::runtime_error);
}
