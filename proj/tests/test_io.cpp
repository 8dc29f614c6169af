#include <doctest.h>

#include <string>

#include "feec/io.hpp"

using namespace feec;

TEST_CASE("mesh json") {
    const SimplicialComplex c = read_mesh_json(R"({"cells": [[0,1,2],[1,2,3]]})");
    CHECK(c.top_cells().size() == 2);
    CHECK(c.faces().size() == 11);

    CHECK_THROWS_WITH_AS(read_mesh_json(R"({"cells": [[0,1,2],[2,1]]})"),
                         doctest::Contains("cell 1"), Malformed);
    CHECK_THROWS_AS(read_mesh_json("[]"), Malformed);
    CHECK_THROWS_AS(read_mesh_json("{\"cells\": [[0,1,2"), Malformed);
    CHECK_THROWS_WITH_AS(read_mesh_json(R"({"cells": [[0,"x"]]})"),
                         doctest::Contains("cell 0"), Malformed);
}

TEST_CASE("global form json round-trip") {
    const SimplicialComplex c = read_mesh_json(R"({"cells": [[0,1,2],[1,2,3]]})");
    const SpaceId s(Family::P, false, 1, 0, 2);
    // The hat at the shared vertex 1.
    const std::string text = R"({
        "0": [[[0,1,0],[],"1"]],
        "1": [[[1,0,0],[],"1"]]
    })";
    const GlobalForm g = read_global_form_json(text, c, s);
    CHECK(g.on_cell(0) == barycentric(1, 2));

    const std::string out = write_global_form_json(g);
    const GlobalForm again = read_global_form_json(out, c, s);
    for (std::size_t i = 0; i < g.per_cell.size(); ++i)
        CHECK(again.per_cell[i] == g.per_cell[i]);

    // Conflicting traces are rejected at construction.
    const std::string bad = R"({
        "0": [[[0,1,0],[],"1"]],
        "1": [[[0,1,0],[],"1"]]
    })";
    CHECK_THROWS_AS(read_global_form_json(bad, c, s), NotSingleValued);
    CHECK_THROWS_AS(read_global_form_json(R"({"7": []})", c, s), Malformed);
}

TEST_CASE("matrix exports") {
    ExactMatrix m(1, 2);
    m.at(0, 0) = make_rational(1, 2);
    m.at(0, 1) = -3;
    CHECK(matrix_to_json(m) == R"([["1/2","-3"]])");
    const std::string csv = matrix_to_csv(m);
    CHECK(csv.find("lossy") != std::string::npos);
    CHECK(csv.find("0.5,-3") != std::string::npos);
}

TEST_CASE("dof matrix json carries descriptors and determinant") {
    const SimplicialComplex c = read_mesh_json(R"({"cells": [[0,1]]})");
    const std::string text = dof_matrix_to_json(dof_matrix(c, Family::P, 1, 0));
    CHECK(text.find("\"rows\"") != std::string::npos);
    CHECK(text.find("\"columns\"") != std::string::npos);
    CHECK(text.find("\"determinant\"") != std::string::npos);
}
