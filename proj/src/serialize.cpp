#include "polarcoh/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace polarcoh {

namespace {

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

const json& array_field(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  return j;
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError("unexpected field \"" + key + "\"");
  }
}

json str(const BigInt& x) { return x.str(); }
json str(long x) { return std::to_string(x); }

}  // namespace

BigInt bigint_from_json(const json& j, const std::string& what) {
  try {
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<unsigned long long>())
                                                             : BigInt(j.get<long long>());
  } catch (const DomainError& e) {
    throw ParseError(what + ": " + e.what());
  }
  throw ParseError(what + " must be an integer or a decimal string");
}

long long_from_json(const json& j, const std::string& what) {
  const BigInt x = bigint_from_json(j, what);
  if (x > std::numeric_limits<int>::max() || x < std::numeric_limits<int>::min())
    throw ParseError(what + " is out of range");
  return x.convert_to<long>();
}

json poly_to_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.leading_first()) out.push_back(c.str());
  return out;
}

IntPolynomial poly_from_json(const json& j) {
  array_field(j, "polynomial");
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.push_back(bigint_from_json(c, "polynomial coefficient"));
  return IntPolynomial::leading_first(std::move(coeffs));
}

json poly_to_json(const QuadPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.leading_first()) out.push_back(to_string(c));
  return out;
}

json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

json matrix_to_json(const RatMatrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix int_matrix_from_json(const json& j) {
  array_field(j, "matrix");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return IntMatrix(0, 0);
  array_field(j[0], "matrix row");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  IntMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = array_field(j[static_cast<std::size_t>(r)], "matrix row");
    if (static_cast<Eigen::Index>(row.size()) != cols) throw ParseError("matrix rows differ in length");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = bigint_from_json(row[static_cast<std::size_t>(c)], "matrix entry");
  }
  return m;
}

json rational_to_json(const BigRational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

json vertices_to_json(const std::vector<Vertex>& vertices) {
  json out = json::array();
  for (const auto& v : vertices) out.push_back(json::array({v.x, rational_to_json(v.y)}));
  return out;
}

std::vector<Vertex> vertices_from_json(const json& j) {
  array_field(j, "vertex list");
  std::vector<Vertex> out;
  for (const auto& v : j) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_string())
      throw ParseError("vertex must be [int, \"num/den\"]");
    try {
      out.push_back({v[0].get<long>(), parse_rational(v[1].get<std::string>())});
    } catch (const DomainError& e) {
      throw ParseError(std::string("vertex height: ") + e.what());
    }
  }
  return out;
}

json polygon_to_json(const Polygon& p) {
  json slopes = json::array();
  for (Eigen::Index k = 0; k < p.slopes.size(); ++k) slopes.push_back(rational_to_json(p.slopes(k)));
  return {{"vertices", vertices_to_json(p.vertices)}, {"slopes", slopes}};
}

VarietyModel model_from_descriptor(const json& descriptor) {
  if (!descriptor.is_object()) throw ParseError("model descriptor must be a JSON object");
  const json& kind_field = field(descriptor, "kind");
  if (!kind_field.is_string()) throw ParseError("\"kind\" must be a string");
  const std::string kind = kind_field.get<std::string>();
  const BigInt q = bigint_from_json(field(descriptor, "q"), "q");

  if (kind == "abelian_en") {
    reject_unknown(descriptor, {"kind", "q", "isogeny_matrix"});
    return abelian_en(int_matrix_from_json(field(descriptor, "isogeny_matrix")), q);
  }
  if (kind == "abelian") {
    reject_unknown(descriptor, {"kind", "q", "d", "matrix"});
    const int d = static_cast<int>(long_from_json(field(descriptor, "d"), "d"));
    return abelian_from_h1(d, int_matrix_from_json(field(descriptor, "matrix")), q);
  }
  if (kind == "grassmannian") {
    reject_unknown(descriptor, {"kind", "q", "k", "n", "variant"});
    const int k = static_cast<int>(long_from_json(field(descriptor, "k"), "k"));
    const int n = static_cast<int>(long_from_json(field(descriptor, "n"), "n"));
    GrassmannianVariant variant = GrassmannianVariant::scalar;
    if (auto it = descriptor.find("variant"); it != descriptor.end()) {
      if (*it == "scalar") variant = GrassmannianVariant::scalar;
      else if (*it == "involution") variant = GrassmannianVariant::involution;
      else throw ParseError("variant must be \"scalar\" or \"involution\"");
    }
    return grassmannian(k, n, q, variant);
  }
  if (kind == "generic") {
    reject_unknown(descriptor, {"kind", "q", "d", "charpolys", "matrices", "hodge", "strict"});
    const int d = static_cast<int>(long_from_json(field(descriptor, "d"), "d"));
    if (d < 0) throw ParseError("d must be nonnegative");
    const auto count = static_cast<std::size_t>(2 * d + 1);
    std::vector<GenericDegreeData> degrees(count);
    bool any = false;
    if (auto it = descriptor.find("charpolys"); it != descriptor.end()) {
      array_field(*it, "charpolys");
      if (it->size() != count) throw ParseError("charpolys needs " + std::to_string(count) + " entries");
      for (std::size_t i = 0; i < count; ++i)
        if (!(*it)[i].is_null()) degrees[i].charpoly = poly_from_json((*it)[i]);
      any = true;
    }
    if (auto it = descriptor.find("matrices"); it != descriptor.end()) {
      array_field(*it, "matrices");
      if (it->size() != count) throw ParseError("matrices needs " + std::to_string(count) + " entries");
      for (std::size_t i = 0; i < count; ++i)
        if (!(*it)[i].is_null()) degrees[i].matrix = int_matrix_from_json((*it)[i]);
      any = true;
    }
    if (!any) throw ParseError("generic models need \"charpolys\" or \"matrices\"");
    std::vector<std::vector<long>> hodge;
    if (auto it = descriptor.find("hodge"); it != descriptor.end()) {
      array_field(*it, "hodge");
      for (const auto& row : *it) {
        array_field(row, "hodge row");
        std::vector<long> h;
        for (const auto& x : row) h.push_back(long_from_json(x, "Hodge number"));
        hodge.push_back(std::move(h));
      }
    }
    bool strict = false;
    if (auto it = descriptor.find("strict"); it != descriptor.end()) {
      if (!it->is_boolean()) throw ParseError("strict must be a boolean");
      strict = it->get<bool>();
    }
    return generic_model(d, q, std::move(degrees), std::move(hodge), strict);
  }
  throw ParseError("unknown model kind \"" + kind + "\"");
}

json descriptor_from_model(const VarietyModel& model) {
  json out;
  out["kind"] = to_string(model.kind);
  out["q"] = str(model.q);
  switch (model.kind) {
    case ModelKind::abelian_en:
      out["isogeny_matrix"] = matrix_to_json(*model.isogeny_matrix);
      break;
    case ModelKind::abelian:
      out["d"] = str(model.dimension);
      out["matrix"] = matrix_to_json(*model.h1_matrix);
      break;
    case ModelKind::grassmannian:
      out["k"] = str(model.grassmannian_k);
      out["n"] = str(model.grassmannian_n);
      out["variant"] = to_string(model.variant);
      break;
    case ModelKind::generic: {
      out["d"] = str(model.dimension);
      json polys = json::array(), matrices = json::array();
      bool any_matrix = false;
      for (const auto& a : model.actions) {
        polys.push_back(poly_to_json(a.charpoly));
        matrices.push_back(a.matrix ? matrix_to_json(*a.matrix) : json(nullptr));
        any_matrix = any_matrix || a.matrix.has_value();
      }
      out["charpolys"] = polys;
      if (any_matrix) out["matrices"] = matrices;
      if (model.has_hodge()) {
        json hodge = json::array();
        for (const auto& row : model.hodge) {
          json r = json::array();
          for (long h : row) r.push_back(str(h));
          hodge.push_back(r);
        }
        out["hodge"] = hodge;
      }
      out["strict"] = model.strict;
      break;
    }
  }
  return out;
}

VarietyModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json descriptor;
  try {
    descriptor = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return model_from_descriptor(descriptor);
}

json report_to_json(const VerificationReport& report) {
  json model;
  model["kind"] = to_string(report.kind);
  model["d"] = report.dimension;
  model["q"] = str(report.q);
  model["chi"] = report.chi;
  json betti = json::array();
  for (const auto& row : report.degrees) betti.push_back(row.betti);
  model["betti"] = betti;
  model["warnings"] = report.warnings;

  json primes = json::array();
  for (const auto& l : report.primes) primes.push_back(str(l));

  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry;
    entry["check"] = c.check;
    entry["degree"] = c.degree ? json(*c.degree) : json(nullptr);
    entry["prime"] = c.prime ? str(*c.prime) : json(nullptr);
    entry["status"] = to_string(c.status);
    entry["informational"] = c.informational;
    entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }

  json degrees = json::array();
  for (const auto& row : report.degrees) {
    json entry;
    entry["degree"] = row.degree;
    entry["betti"] = row.betti;
    entry["charpoly"] = poly_to_json(row.charpoly);
    entry["epsilon"] = row.epsilon ? json(*row.epsilon) : json(nullptr);
    entry["mu_plus"] = row.mu_plus ? json(*row.mu_plus) : json(nullptr);
    entry["mu_minus"] = row.mu_minus ? json(*row.mu_minus) : json(nullptr);
    json newton = json::array();
    for (const auto& np : row.newton)
      newton.push_back({{"prime", str(np.prime)},
                        {"normalized", np.polygon.normalized},
                        {"vertices", vertices_to_json(np.polygon.vertices)}});
    entry["newton"] = newton;
    entry["hodge"] = row.hodge ? vertices_to_json(row.hodge->vertices) : json(nullptr);
    degrees.push_back(std::move(entry));
  }

  json summary = {{"pass", report.count(CheckStatus::pass)},
                  {"fail", report.count(CheckStatus::fail)},
                  {"not_applicable", report.count(CheckStatus::not_applicable)},
                  {"incomparable", report.count(CheckStatus::incomparable)},
                  {"ok", !report.has_failures()}};

  json zeta = nullptr;
  if (report.zeta)
    zeta = {{"holds", report.zeta->holds()},
            {"sign", report.zeta->sign},
            {"expected_sign", report.zeta->expected_sign},
            {"chi", report.zeta->chi},
            {"mu", report.zeta->mu}};

  return {{"model", model},       {"primes", primes},   {"precision", report.precision_digits},
          {"summary", summary},   {"checks", checks},   {"degrees", degrees},
          {"zeta", zeta}};
}

json zeta_to_json(const ZetaFunction& zeta, const std::optional<ZetaFunctionalEquation>& fe) {
  json out = {{"numerator", poly_to_json(zeta.numerator)},
              {"denominator", poly_to_json(zeta.denominator)},
              {"chi", zeta.chi}};
  out["sign"] = fe && fe->identity_holds ? json(fe->sign) : json(nullptr);
  return out;
}

}  // namespace polarcoh
