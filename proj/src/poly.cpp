#include "polarcoh/poly.hpp"

#include <sstream>

namespace polarcoh {

namespace {

void require_monic(const IntPolynomial& p, const char* what) {
  if (!p.is_monic()) throw ValidityError(std::string(what) + ": polynomial must be monic");
}

void require_invertible(const IntPolynomial& p, const char* what) {
  if (p.constant_term() == 0)
    throw SingularActionError(std::string(what) + ": P(0) = 0, the action is not invertible");
}

// Shared printer: `text` renders a coefficient, `negative` tells whether the
// printed form should be pulled out as a minus sign, `atomic` whether the
// coefficient prints without parentheses.
template <class Scalar, class Text, class Negative, class Atomic>
std::string render(const Polynomial<Scalar>& p, char var, Text text, Negative negative,
                   Atomic atomic) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = p.degree(); k >= 0; --k) {
    Scalar c = p[static_cast<std::size_t>(k)];
    if (c == Scalar(0)) continue;
    bool neg = negative(c);
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = c == Scalar(1);
    if (k == 0 || !unit) {
      std::string body = text(c);
      if (!atomic(c)) body = "(" + body + ")";
      os << body;
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace

std::string to_string(const IntPolynomial& p, char var) {
  return render(
      p, var, [](const BigInt& c) { return c.str(); }, [](const BigInt& c) { return c < 0; },
      [](const BigInt&) { return true; });
}

std::string to_string(const RatPolynomial& p, char var) {
  return render(
      p, var, [](const BigRational& c) { return polarcoh::to_string(c); },
      [](const BigRational& c) { return c < 0; },
      [](const BigRational& c) { return denominator(c) == 1; });
}

std::string to_string(const QuadPolynomial& p, char var) {
  return render(
      p, var, [](const QuadExt& c) { return polarcoh::to_string(c); },
      [](const QuadExt& c) { return c.is_rational() && c.rational_part() < 0; },
      [](const QuadExt& c) { return c.is_rational() && denominator(c.rational_part()) == 1; });
}

RatPolynomial squarefree_part(const RatPolynomial& p) {
  if (p.degree() <= 0) return make_monic(p);
  RatPolynomial g = gcd(p, p.derivative());
  return make_monic(divmod(p, g).first);
}

FunctionalEquationResult functional_equation_check(const IntPolynomial& p, const BigInt& q,
                                                   int i) {
  require_monic(p, "functional_equation_check");
  if (q <= 1) throw DomainError("q must exceed 1");
  if (i < 0) throw DomainError("negative cohomological degree");
  const long n = p.degree();
  if (i % 2 == 1 && n % 2 == 1)
    throw ValidityError("odd degree " + std::to_string(i) + " with odd Betti number " +
                        std::to_string(n));
  require_invertible(p, "functional_equation_check");

  FunctionalEquationResult result;
  const unsigned long half = static_cast<unsigned long>(i) * static_cast<unsigned long>(n) / 2;
  const BigInt top = ipow(q, half);
  const BigInt a_n = p.from_top(static_cast<std::size_t>(n));
  int sigma;
  if (a_n == top) {
    sigma = 1;
  } else if (a_n == -top) {
    sigma = -1;
  } else {
    result.failure_index = 0;
    return result;
  }
  for (long k = 1; 2 * k <= n; ++k) {
    BigInt rhs = p.from_top(static_cast<std::size_t>(k)) *
                 ipow(q, half - static_cast<unsigned long>(i) * static_cast<unsigned long>(k));
    if (sigma < 0) rhs = -rhs;
    if (p.from_top(static_cast<std::size_t>(n - k)) != rhs) {
      result.failure_index = static_cast<std::size_t>(k);
      return result;
    }
  }
  result.holds = true;
  result.epsilon = sigma > 0 ? 0 : 1;
  return result;
}

IntPolynomial duality_partner(const IntPolynomial& p, const BigInt& q, int d, int i) {
  require_monic(p, "duality_partner");
  require_invertible(p, "duality_partner");
  if (q <= 1) throw DomainError("q must exceed 1");
  if (d < 0 || i < 0 || i > 2 * d) throw DomainError("degree outside [0, 2d]");
  const long n = p.degree();
  const BigInt qd = ipow(q, static_cast<unsigned long>(d));
  const BigInt a_n = p.constant_term();
  std::vector<BigInt> out(static_cast<std::size_t>(n + 1));
  BigInt power(1);  // qd^(n-k), filled from k = n downwards
  for (long k = n; k >= 0; --k) {
    BigInt num = p.from_top(static_cast<std::size_t>(k)) * power;
    if (num % a_n != 0)
      throw InconsistencyError("duality partner of " + to_string(p) + " is not integral");
    out[static_cast<std::size_t>(k)] = num / a_n;
    power *= qd;
  }
  return IntPolynomial(std::move(out));
}

CrossDualityResult cross_duality_check(const IntPolynomial& p_i, const IntPolynomial& p_dual,
                                       const BigInt& q, int d, int i) {
  if (p_i.degree() != p_dual.degree())
    throw DualityViolationError("b_" + std::to_string(i) + " = " + std::to_string(p_i.degree()) +
                                " but b_" + std::to_string(2 * d - i) + " = " +
                                std::to_string(p_dual.degree()));
  require_monic(p_i, "cross_duality_check");
  require_monic(p_dual, "cross_duality_check");
  require_invertible(p_i, "cross_duality_check");
  require_invertible(p_dual, "cross_duality_check");

  CrossDualityResult result;
  const long n = p_i.degree();
  const BigInt qd = ipow(q, static_cast<unsigned long>(d));
  const QuadExt scale = half_power(q, i, n);

  // Left side t^n P_i(q^d/t), ascending coefficient k = a_k qd^(n-k).
  std::vector<BigInt> lhs(static_cast<std::size_t>(n + 1));
  BigInt power(1);
  for (long k = n; k >= 0; --k) {
    lhs[static_cast<std::size_t>(k)] = p_i.from_top(static_cast<std::size_t>(k)) * power;
    power *= qd;
  }
  const QuadExt ratio = QuadExt(lhs.back()) / scale;
  int sigma = 0;
  if (ratio == QuadExt(1))
    sigma = 1;
  else if (ratio == QuadExt(-1))
    sigma = -1;
  if (sigma != 0) {
    bool ok = true;
    for (long k = 0; k <= n && ok; ++k) {
      QuadExt rhs = scale * QuadExt(p_dual[static_cast<std::size_t>(k)]) * QuadExt(sigma);
      ok = QuadExt(lhs[static_cast<std::size_t>(k)]) == rhs;
    }
    if (ok) {
      result.identity_holds = true;
      result.sign = sigma;
    }
  }
  FunctionalEquationResult fe = functional_equation_check(p_i, q, i);
  result.epsilon = fe.epsilon;
  result.sign_matches_epsilon =
      result.identity_holds && fe.holds && *result.sign == (*fe.epsilon == 0 ? 1 : -1);
  return result;
}

std::vector<BigInt> power_sums(const IntPolynomial& p, int count) {
  require_monic(p, "power_sums");
  if (count < 1) throw DomainError("power_sums needs at least one term");
  const long n = p.degree();
  std::vector<BigInt> sums(static_cast<std::size_t>(count) + 1);  // index 0 unused
  for (long k = 1; k <= count; ++k) {
    BigInt acc = k <= n ? BigInt(k) * p.from_top(static_cast<std::size_t>(k)) : BigInt(0);
    for (long j = 1; j < k && j <= n; ++j)
      acc += p.from_top(static_cast<std::size_t>(j)) * sums[static_cast<std::size_t>(k - j)];
    sums[static_cast<std::size_t>(k)] = -acc;
  }
  sums.erase(sums.begin());
  return sums;
}

DivideOutResult exact_divide_out(const IntPolynomial& p, const IntPolynomial& factor) {
  if (!factor.is_monic() || factor.degree() < 1)
    throw PreconditionError("exact_divide_out needs a monic nonconstant factor");
  if (p.is_zero()) throw DomainError("every power divides the zero polynomial");
  DivideOutResult result{p, 0};
  while (result.quotient.degree() >= factor.degree()) {
    auto [quot, rem] = divmod(result.quotient, factor);
    if (!rem.is_zero()) break;
    result.quotient = std::move(quot);
    ++result.multiplicity;
  }
  return result;
}

RealRootMultiplicities real_root_multiplicities(const IntPolynomial& p, const BigInt& q, int i) {
  if (i < 0) throw DomainError("negative cohomological degree");
  RealRootMultiplicities out;
  if (p.degree() < 1) return out;
  std::optional<BigInt> root;
  if (i % 2 == 0) {
    root = ipow(q, static_cast<unsigned long>(i / 2));
  } else if (auto s = exact_sqrt(q)) {
    root = ipow(*s, static_cast<unsigned long>(i));
  }
  if (root) {
    out.plus = exact_divide_out(p, IntPolynomial::linear(*root)).multiplicity;
    out.minus = exact_divide_out(p, IntPolynomial::linear(-*root)).multiplicity;
  } else {
    IntPolynomial pair = IntPolynomial::monomial(BigInt(1), 2) -
                         IntPolynomial::constant(ipow(q, static_cast<unsigned long>(i)));
    out.plus = out.minus = exact_divide_out(p, pair).multiplicity;
  }
  return out;
}

}  // namespace polarcoh
