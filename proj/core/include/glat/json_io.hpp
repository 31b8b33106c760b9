#pragma once

#include <json.hpp>

#include "glat/distribution.hpp"
#include "glat/graded_algebra.hpp"
#include "glat/polyvec.hpp"
#include "glat/prolongation.hpp"
#include "glat/subalgebra.hpp"

namespace glat {

using Json = nlohmann::json;

// Algebra: {"name", "dim", "k", "degrees", "brackets": [[i, j, [[t, "p/q"],...]], ...]}
// with i < j and 0-based indices; omitted pairs bracket to zero.
Json algebra_to_json(const GradedLieAlgebra& g);
GradedLieAlgebra algebra_from_json(const Json& j, bool run_validation = true);

// Subalgebra: {"algebra": name, "components": {"<degree>": [[coords...], ...]}}
Json subalgebra_to_json(const GradedSubalgebra& b);
GradedSubalgebra subalgebra_from_json(const Json& j, const GradedLieAlgebra& g);

// Matrices serialize as row-major arrays of "p/q" strings.
Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

Json rat_vector_to_json(const std::vector<Rat>& v);
std::vector<Rat> rat_vector_from_json(const Json& j);

// Fields: {"vars": m, "fields": [[[{"coeff","exps"}, ...] x m components], ...]}
Json fields_to_json(const std::vector<PolyVectorField>& fields);
std::vector<PolyVectorField> fields_from_json(const Json& j);

Json validation_report_to_json(const ValidationReport& rep);
Json prolongation_to_json(const ProlongationResult& r);
Json subalgebra_report_to_json(const SubalgebraReport& rep);
Json growth_to_json(const GrowthVector& gv);
Json genericity_to_json(const GenericityReport& rep);
Json classification_to_json(const Rank4Classification& c);
Json gap_scan_to_json(const GapScanResult& r);

}  // namespace glat
