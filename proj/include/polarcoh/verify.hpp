#ifndef POLARCOH_VERIFY_HPP
#define POLARCOH_VERIFY_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "polarcoh/polygons.hpp"
#include "polarcoh/varieties.hpp"
#include "polarcoh/zeta.hpp"

namespace polarcoh {

struct WeilCheckResult {
  bool pass = false;
  bool functional_equation = false;  // exact necessary condition
  bool moduli_within_tolerance = false;
  int precision_digits = 0;
  std::string tolerance;      // 1e-(precision/3)
  std::string max_deviation;  // max | |lambda|^2 - q^i | / q^i, scientific notation
  std::string worst_root;     // "re + im*i" of the root attaining it
  std::size_t distinct_roots = 0;
};

/// Numeric check that every root has |lambda|^2 = q^i, run on the exact
/// squarefree part of P with MPFR arithmetic, combined with the exact
/// functional equation. Both must pass.
WeilCheckResult weil_weight_check(const IntPolynomial& p, const BigInt& q, int i,
                                  int precision_digits = 60);

struct ComplexRoot {
  std::string real;
  std::string imag;
  std::string error_bound;  // n |P(z)| / |P'(z)|, a root lies within this radius
};

// Aberth-Ehrlich iteration on a squarefree rational polynomial.
std::vector<ComplexRoot> numeric_roots(const RatPolynomial& squarefree, int precision_digits);

struct EpsilonCongruence {
  bool holds = false;
  int epsilon = 0;
  long betti = 0;
  int mu_minus = 0;
};

/// eps_i = b_i + mu(-q^(i/2)) (mod 2), and eps_i = 0 for odd i.
EpsilonCongruence epsilon_congruence_check(const IntPolynomial& p, const BigInt& q, int i);

enum class CheckStatus { pass, fail, not_applicable, incomparable };
const char* to_string(CheckStatus status);

struct CheckResult {
  std::string check;
  std::optional<int> degree;
  std::optional<BigInt> prime;
  CheckStatus status = CheckStatus::not_applicable;
  // Evidence-only checks (NP >= HP) never count as failures of the run.
  bool informational = false;
  nlohmann::json witness = nlohmann::json::object();
};

struct NewtonEntry {
  BigInt prime;
  NewtonPolygon polygon;
};

struct DegreeSummary {
  int degree = 0;
  long betti = 0;
  IntPolynomial charpoly;
  std::optional<int> epsilon;
  std::optional<int> mu_plus;
  std::optional<int> mu_minus;
  std::vector<NewtonEntry> newton;
  std::optional<HodgePolygon> hodge;
};

struct VerificationReport {
  ModelKind kind = ModelKind::generic;
  int dimension = 0;
  BigInt q;
  long chi = 0;
  std::vector<BigInt> primes;
  int precision_digits = 0;
  std::vector<std::string> warnings;
  std::vector<CheckResult> checks;
  std::vector<DegreeSummary> degrees;
  // Set when every P_i satisfies its own functional equation.
  std::optional<ZetaFunctionalEquation> zeta;

  bool has_failures() const;
  std::size_t count(CheckStatus status) const;
  // Checks with the given id, in report order.
  std::vector<const CheckResult*> find(const std::string& check) const;
};

// Per-degree check ids, emitted for every degree in this order.
inline const std::vector<std::string>& degree_check_ids() {
  static const std::vector<std::string> ids{"functional_equation", "cross_duality",
                                            "jordan_symmetry",     "weil_weight",
                                            "epsilon_congruence",  "even_multiplicity"};
  return ids;
}
// Per-(degree, prime) check ids.
inline const std::vector<std::string>& prime_check_ids() {
  static const std::vector<std::string> ids{"slope_zero", "newton_symmetry", "newton_over_hodge"};
  return ids;
}
// Whole-model check ids.
inline const std::vector<std::string>& model_check_ids() {
  static const std::vector<std::string> ids{"top_degree", "polarization", "zeta_functional_equation"};
  return ids;
}

VerificationReport full_report(const VarietyModel& model, const std::vector<BigInt>& primes,
                               int precision_digits = 60);

}  // namespace polarcoh

#endif  // POLARCOH_VERIFY_HPP
