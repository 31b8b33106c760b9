#include <doctest.h>

#include "glat/errors.hpp"
#include "glat/families.hpp"
#include "glat/json_io.hpp"

using namespace glat;

TEST_CASE("algebra JSON round trip is byte stable") {
  const GradedLieAlgebra g = build_g2_split();
  const Json j = algebra_to_json(g);
  const GradedLieAlgebra back = algebra_from_json(j);
  CHECK(back.validated());
  CHECK(algebra_to_json(back).dump() == j.dump());
  CHECK(back.dim() == 14);
  CHECK(back.component_dims() == g.component_dims());
  // spot-check a bracket
  for (int i = 0; i < g.dim(); ++i)
    for (int jj = i + 1; jj < g.dim(); ++jj) {
      const auto a = g.bracket_basis_raw(i, jj);
      const auto b = back.bracket_basis_raw(i, jj);
      REQUIRE(a.size() == b.size());
      for (std::size_t s = 0; s < a.size(); ++s) {
        CHECK(a[s].target == b[s].target);
        CHECK(a[s].coeff == b[s].coeff);
      }
    }
}

TEST_CASE("algebra JSON validation failures surface as InputError") {
  Json j;
  j["name"] = "broken";
  j["dim"] = 3;
  j["k"] = 1;
  j["degrees"] = {-1, 0, 1};
  j["brackets"] = Json::array({Json::array({0, 1, Json::array({Json::array({0, "2/1"})})}),
                               Json::array({0, 2, Json::array({Json::array({1, "-1/1"})})}),
                               Json::array({1, 2, Json::array({Json::array({2, "5/1"})})})});
  CHECK_THROWS_AS(algebra_from_json(j), InputError);
  const GradedLieAlgebra raw = algebra_from_json(j, false);
  CHECK_FALSE(validate(raw).structural_pass);
}

TEST_CASE("malformed documents are input errors") {
  CHECK_THROWS_AS(algebra_from_json(Json::object()), InputError);
  Json j;
  j["name"] = "x";
  j["dim"] = 2;
  j["k"] = 1;
  j["degrees"] = {-1, -1, -1};  // wrong length
  j["brackets"] = Json::array();
  CHECK_THROWS_AS(algebra_from_json(j), InputError);
  CHECK_THROWS_AS(rat_vector_from_json(Json::array({"1/0"})), InputError);
  CHECK_THROWS_AS(matrix_from_json(Json::array({Json::array({"x"})})), InputError);
}

TEST_CASE("subalgebra JSON round trip") {
  const GradedLieAlgebra g = build_so_split(3);
  const GradedSubalgebra b = witness_bk(g, 2);
  const Json j = subalgebra_to_json(b);
  const GradedSubalgebra back = subalgebra_from_json(j, g);
  CHECK(back.algebra_name == b.algebra_name);
  CHECK(back.dim() == b.dim());
  for (const auto& [d, s] : b.components) CHECK(back.components.at(d) == s);
  CHECK(subalgebra_to_json(back).dump() == j.dump());
}

TEST_CASE("fields JSON round trip") {
  const NilpotentGradedAlgebra n = negative_part(build_g2_split());
  const auto fields = model_fields(n);
  const Json j = fields_to_json(fields);
  const auto back = fields_from_json(j);
  REQUIRE(back.size() == fields.size());
  for (std::size_t i = 0; i < fields.size(); ++i)
    for (int c = 0; c < fields[i].vars; ++c) CHECK(back[i].components[c] == fields[i].components[c]);
  CHECK(fields_to_json(back).dump() == j.dump());
}

TEST_CASE("rationals serialize as p/q in matrices") {
  RatMatrix m(1, 3);
  m.at(0, 0) = rat_of(2, 4);
  m.at(0, 2) = rat_of(-7);
  const Json j = matrix_to_json(m);
  CHECK(j.dump() == R"([["1/2","0/1","-7/1"]])");
  CHECK(matrix_from_json(j) == m);
}
