#include "polarcoh/zeta.hpp"

namespace polarcoh {

namespace {

// det(1 - f^* t | H^i) = t^b P_i(1/t)
IntPolynomial reversed_charpoly(const CohomologyAction& a) {
  return a.charpoly.reversed(static_cast<std::size_t>(a.betti));
}

std::pair<IntPolynomial, IntPolynomial> zeta_parts(const VarietyModel& model) {
  IntPolynomial num = IntPolynomial::constant(1), den = IntPolynomial::constant(1);
  for (const auto& a : model.actions) {
    if (a.betti == 0) continue;
    (a.degree % 2 == 1 ? num : den) *= reversed_charpoly(a);
  }
  return {num, den};
}

// Power series truncated after t^order.
using Series = std::vector<BigRational>;

Series to_series(const IntPolynomial& p, int order) {
  Series s(static_cast<std::size_t>(order + 1), BigRational(0));
  for (int k = 0; k <= order && k <= p.degree(); ++k)
    s[static_cast<std::size_t>(k)] = BigRational(p[static_cast<std::size_t>(k)]);
  return s;
}

Series multiply(const Series& a, const Series& b) {
  Series out(a.size(), BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Series inverse(const Series& a) {
  if (a.front() == 0) throw DomainError("series with zero constant term is not invertible");
  Series out(a.size(), BigRational(0));
  out[0] = BigRational(1) / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    BigRational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += a[k] * out[n - k];
    out[n] = -acc / a[0];
  }
  return out;
}

// Q^(deg-k) scaling: coefficient of t^(deg-k) becomes p_k Q^(deg-k).
IntPolynomial inverted_argument(const IntPolynomial& p, long deg, const BigInt& qd) {
  std::vector<BigInt> out(static_cast<std::size_t>(deg + 1), BigInt(0));
  BigInt power(1);
  for (long e = 0; e <= deg; ++e) {
    out[static_cast<std::size_t>(e)] = p[static_cast<std::size_t>(deg - e)] * power;
    power *= qd;
  }
  return IntPolynomial(std::move(out));
}

}  // namespace

ZetaFunction zeta_function(const VarietyModel& model) {
  auto [num, den] = zeta_parts(model);
  ZetaFunction z;
  z.numerator = num.cast<QuadExt>();
  z.denominator = den.cast<QuadExt>();
  z.chi = model.euler_characteristic();
  return z;
}

BigInt lefschetz_number_by_traces(const VarietyModel& model, int n) {
  if (n < 1) throw DomainError("Lefschetz numbers start at n = 1");
  BigInt total = 0;
  for (const auto& a : model.actions) {
    if (a.betti == 0) continue;
    if (!a.matrix) throw PreconditionError("degree " + std::to_string(a.degree) + " has no matrix");
    const BigInt tr = matrix_power(*a.matrix, n).trace();
    total += a.degree % 2 == 0 ? tr : BigInt(-tr);
  }
  return total;
}

BigInt lefschetz_number(const VarietyModel& model, int n) {
  if (n < 1) throw DomainError("Lefschetz numbers start at n = 1");
  BigInt total = 0;
  for (const auto& a : model.actions) {
    if (a.betti == 0) continue;
    const BigInt pn = power_sums(a.charpoly, n).back();
    total += a.degree % 2 == 0 ? pn : BigInt(-pn);
  }
  if (model.has_all_matrices()) {
    const BigInt by_traces = lefschetz_number_by_traces(model, n);
    if (by_traces != total)
      throw InconsistencyError("Lefschetz number N_" + std::to_string(n) + ": power sums give " +
                               total.str() + ", traces give " + by_traces.str());
  }
  return total;
}

SeriesConsistency zeta_series_consistency(const VarietyModel& model, int order) {
  if (order < 1) throw DomainError("series order must be positive");
  auto [num, den] = zeta_parts(model);
  const Series z = multiply(to_series(num, order), inverse(to_series(den, order)));
  // Z' needs one extra term of Z; recompute at order + 1 for the derivative.
  const Series z_ext = multiply(to_series(num, order + 1), inverse(to_series(den, order + 1)));
  Series t_dz(static_cast<std::size_t>(order + 1), BigRational(0));
  for (int k = 1; k <= order; ++k) t_dz[static_cast<std::size_t>(k)] = BigRational(k) * z_ext[static_cast<std::size_t>(k)];
  const Series log_derivative = multiply(t_dz, inverse(z));

  SeriesConsistency out;
  out.consistent = true;
  for (int n = 1; n <= order; ++n) {
    out.log_derivative.push_back(log_derivative[static_cast<std::size_t>(n)]);
    out.lefschetz.push_back(lefschetz_number(model, n));
    if (out.consistent && out.log_derivative.back() != BigRational(out.lefschetz.back())) {
      out.consistent = false;
      out.first_mismatch = n;
    }
  }
  return out;
}

ZetaFunctionalEquation zeta_functional_equation(const VarietyModel& model) {
  for (const auto& a : model.actions) {
    bool ok = false;
    try {
      ok = functional_equation_check(a.charpoly, model.q, a.degree).holds;
    } catch (const Error& e) {
      throw InapplicableModelError("degree " + std::to_string(a.degree) + ": " + e.what());
    }
    if (!ok)
      throw InapplicableModelError("P_" + std::to_string(a.degree) +
                                   " violates its functional equation");
  }

  const int d = model.dimension;
  const BigInt qd = ipow(model.q, static_cast<unsigned long>(d));
  auto [num, den] = zeta_parts(model);
  long odd_total = 0, even_total = 0;
  for (const auto& a : model.actions) (a.degree % 2 == 1 ? odd_total : even_total) += a.betti;

  ZetaFunctionalEquation out;
  out.chi = even_total - odd_total;
  out.mu = real_root_multiplicities(model.actions[static_cast<std::size_t>(d)].charpoly, model.q, d).minus;
  out.expected_sign = (out.chi + out.mu) % 2 == 0 ? 1 : -1;

  // Cross-multiplied form: q^(d chi/2) Ñ D = s N D̃ with Ñ(t) = (qd t)^B N(1/(qd t)).
  const IntPolynomial lhs = inverted_argument(num, odd_total, qd) * den;
  const IntPolynomial rhs = num * inverted_argument(den, even_total, qd);
  const QuadExt scale = half_power(model.q, d, std::labs(out.chi));
  const QuadExt lhs_scale = out.chi >= 0 ? scale : QuadExt(1);
  const QuadExt rhs_scale = out.chi >= 0 ? QuadExt(1) : scale;
  if (lhs.degree() != rhs.degree() || lhs.is_zero()) return out;

  const QuadExt ratio = lhs_scale * QuadExt(lhs.leading()) / (rhs_scale * QuadExt(rhs.leading()));
  int s = 0;
  if (ratio == QuadExt(1)) s = 1;
  if (ratio == QuadExt(-1)) s = -1;
  if (s == 0) return out;
  for (long k = 0; k <= lhs.degree(); ++k) {
    const QuadExt l = lhs_scale * QuadExt(lhs[static_cast<std::size_t>(k)]);
    const QuadExt r = QuadExt(s) * rhs_scale * QuadExt(rhs[static_cast<std::size_t>(k)]);
    if (l != r) return out;
  }
  out.identity_holds = true;
  out.sign = s;
  return out;
}

}  // namespace polarcoh
