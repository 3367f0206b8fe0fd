#ifndef GLP_JSON_IO_HPP
#define GLP_JSON_IO_HPP

#include <json.hpp>

#include "glp/gcm.hpp"
#include "glp/gla.hpp"
#include "glp/slicer.hpp"

// Document schema: every emitted document carries {"schema": "glp-1"}.
// Rationals are strings "p/q" (plain "p" when the denominator is 1); spaces
// are {"base_dim": m, "gram": [[...]]}.

namespace glp::json_io {

inline constexpr const char* kSchema = "glp-1";

nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json vect_to_json(const Vect& v);
Vect vect_from_json(const nlohmann::json& j);

nlohmann::json mat_to_json(const Mat& m);
Mat mat_from_json(const nlohmann::json& j);

nlohmann::json space_to_json(const exactspace::AmbientSpace& s);
exactspace::AmbientSpace space_from_json(const nlohmann::json& j);

nlohmann::json root_system_to_json(const rootsys::RootSystem& rs);
rootsys::RootSystem root_system_from_json(const nlohmann::json& j);

nlohmann::json algebra_to_json(const gla::GradedLieAlgebra& g);
gla::GradedLieAlgebra algebra_from_json(const nlohmann::json& j);

nlohmann::json module_to_json(const gla::GradedModule& m);
std::vector<Mat> action_from_json(const nlohmann::json& j);

nlohmann::json marker_solutions_to_json(const rootsys::RootSystem& base,
                                        const std::vector<Vect>& weights,
                                        const std::vector<gcm::MarkerSolution>& sols);

nlohmann::json construction_report_to_json(const slicer::ConstructionReport& rep);

}  // namespace glp::json_io

#endif
