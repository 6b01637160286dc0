#ifndef POLARCOH_SERIALIZE_HPP
#define POLARCOH_SERIALIZE_HPP

#include <json.hpp>

#include <optional>

#include "polarcoh/polygons.hpp"
#include "polarcoh/varieties.hpp"
#include "polarcoh/verify.hpp"
#include "polarcoh/zeta.hpp"

// JSON encodings. Every big number crosses the boundary as a decimal string;
// readers also accept plain JSON integers. Malformed documents raise ParseError.
namespace polarcoh {

using nlohmann::json;

BigInt bigint_from_json(const json& j, const std::string& what);
long long_from_json(const json& j, const std::string& what);

json poly_to_json(const IntPolynomial& p);  // leading coefficient first
IntPolynomial poly_from_json(const json& j);
json poly_to_json(const QuadPolynomial& p);

json matrix_to_json(const IntMatrix& m);  // list of rows
json matrix_to_json(const RatMatrix& m);
IntMatrix int_matrix_from_json(const json& j);

json rational_to_json(const BigRational& x);  // "num/den"
json vertices_to_json(const std::vector<Vertex>& vertices);  // [[x, "num/den"], ...]
std::vector<Vertex> vertices_from_json(const json& j);
json polygon_to_json(const Polygon& p);

VarietyModel model_from_descriptor(const json& descriptor);
json descriptor_from_model(const VarietyModel& model);
// Reads and parses a descriptor file.
VarietyModel load_model(const std::string& path);

json report_to_json(const VerificationReport& report);
json zeta_to_json(const ZetaFunction& zeta, const std::optional<ZetaFunctionalEquation>& fe);

}  // namespace polarcoh

#endif  // POLARCOH_SERIALIZE_HPP
