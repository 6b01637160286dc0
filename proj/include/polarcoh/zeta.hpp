#ifndef POLARCOH_ZETA_HPP
#define POLARCOH_ZETA_HPP

#include <optional>
#include <vector>

#include "polarcoh/poly.hpp"
#include "polarcoh/varieties.hpp"

namespace polarcoh {

/// Z_f(t) = prod_i det(1 - f^* t | H^i)^((-1)^(i+1)): odd degrees in the
/// numerator, even degrees in the denominator.
struct ZetaFunction {
  QuadPolynomial numerator;
  QuadPolynomial denominator;
  long chi = 0;
};

ZetaFunction zeta_function(const VarietyModel& model);

/// N_n = sum_i (-1)^i tr(f^{*n} | H^i), from power sums of the P_i. When every
/// nonzero degree has a matrix the trace route is computed as well and the
/// two must agree.
BigInt lefschetz_number(const VarietyModel& model, int n);
BigInt lefschetz_number_by_traces(const VarietyModel& model, int n);

struct SeriesConsistency {
  bool consistent = false;
  std::vector<BigRational> log_derivative;  // coefficients 1..order of t Z'/Z
  std::vector<BigInt> lefschetz;            // N_1..N_order
  std::optional<int> first_mismatch;
};

/// Expands the rational form of Z_f to the given order and checks
/// t Z'/Z = sum N_n t^n coefficientwise.
SeriesConsistency zeta_series_consistency(const VarietyModel& model, int order);

struct ZetaFunctionalEquation {
  bool identity_holds = false;  // Z(q^-d t^-1) = s q^(d chi/2) t^chi Z(t) for some s = +-1
  int sign = 0;                 // realized s; 0 when no sign works
  int expected_sign = 0;        // (-1)^(chi + mu)
  int mu = 0;                   // multiplicity of -q^(d/2) in P_d
  long chi = 0;
  bool holds() const { return identity_holds && sign == expected_sign; }
};

/// Throws InapplicableModelError unless every P_i satisfies its own
/// functional equation.
ZetaFunctionalEquation zeta_functional_equation(const VarietyModel& model);

}  // namespace polarcoh

#endif  // POLARCOH_ZETA_HPP
