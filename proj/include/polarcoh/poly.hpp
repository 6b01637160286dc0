#ifndef POLARCOH_POLY_HPP
#define POLARCOH_POLY_HPP

#include <Eigen/Core>

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "polarcoh/errors.hpp"
#include "polarcoh/exactnum.hpp"

namespace polarcoh {

/// Dense univariate polynomial over an exact scalar type.
///
/// Coefficients are stored in ascending order of degree with no trailing
/// zeros, so the zero polynomial has an empty coefficient vector and degree -1.
/// The "leading first" view (a_0 the leading coefficient) is
/// available through `leading_first()` and `from_top()`.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> ascending) : c_(std::move(ascending)) { trim(); }

  static Polynomial leading_first(std::vector<Scalar> coeffs) {
    return Polynomial(std::vector<Scalar>(coeffs.rbegin(), coeffs.rend()));
  }
  static Polynomial leading_first(std::initializer_list<Scalar> coeffs) {
    return leading_first(std::vector<Scalar>(coeffs));
  }
  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }
  static Polynomial monomial(Scalar c, std::size_t k) {
    std::vector<Scalar> v(k + 1, Scalar(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }
  // t - root
  static Polynomial linear(const Scalar& root) { return Polynomial(std::vector<Scalar>{-root, Scalar(1)}); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == Scalar(1); }

  // Coefficient of t^k; zero beyond the degree.
  Scalar operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
  // a_k, the coefficient of t^(n-k).
  Scalar from_top(std::size_t k) const {
    return k <= static_cast<std::size_t>(degree()) ? c_[c_.size() - 1 - k] : Scalar(0);
  }
  const Scalar& leading() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
  }
  Scalar constant_term() const { return (*this)[0]; }

  const std::vector<Scalar>& coefficients() const { return c_; }
  std::vector<Scalar> leading_first() const { return {c_.rbegin(), c_.rend()}; }

  template <class X>
  X operator()(const X& x) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  template <class Other>
  Polynomial<Other> cast() const {
    std::vector<Other> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.emplace_back(a);
    return Polynomial<Other>(std::move(v));
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * Scalar(static_cast<long>(k));
    return Polynomial(std::move(v));
  }

  // t^n P(1/t) for n >= degree.
  Polynomial reversed(std::size_t n) const {
    if (is_zero()) return {};
    if (n < c_.size() - 1) throw DomainError("reversal length below degree");
    std::vector<Scalar> v(n + 1, Scalar(0));
    for (std::size_t k = 0; k < c_.size(); ++k) v[n - k] = c_[k];
    return Polynomial(std::move(v));
  }

  // P(c t)
  Polynomial scaled_argument(const Scalar& c) const {
    std::vector<Scalar> v = c_;
    Scalar power(1);
    for (auto& a : v) {
      a *= power;
      power *= c;
    }
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Scalar(0));
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Scalar(0));
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& a : c_) a *= s;
    trim();
    return *this;
  }
  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& a : out.c_) a = -a;
    return out;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Scalar& s) { return lhs *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Scalar> v(lhs.c_.size() + rhs.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
      if (lhs.c_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < rhs.c_.size(); ++j) v[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return Polynomial(std::move(v));
  }
  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.c_ == rhs.c_; }
  friend bool operator!=(const Polynomial& lhs, const Polynomial& rhs) { return !(lhs == rhs); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRational>;
using QuadPolynomial = Polynomial<QuadExt>;

template <class Scalar>
Polynomial<Scalar> pow(Polynomial<Scalar> base, unsigned exponent) {
  Polynomial<Scalar> result = Polynomial<Scalar>::constant(Scalar(1));
  while (exponent) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent) base *= base;
  }
  return result;
}

/// Quotient and remainder. Over the integers the divisor must have leading
/// coefficient +-1 so that the division stays inside Z[t].
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a,
                                                         const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const Scalar& lead = b.leading();
  if constexpr (std::is_same_v<Scalar, BigInt>) {
    if (lead != 1 && lead != -1)
      throw DomainError("integer polynomial division needs a unit leading coefficient");
  }
  std::vector<Scalar> rem = a.coefficients();
  long db = b.degree();
  long da = a.degree();
  if (da < db) return {Polynomial<Scalar>(), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(da - db + 1), Scalar(0));
  const auto& bc = b.coefficients();
  for (long k = da - db; k >= 0; --k) {
    Scalar& top = rem[static_cast<std::size_t>(k + db)];
    if (top == Scalar(0)) continue;
    Scalar factor = top / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= factor * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

template <class Scalar>
Polynomial<Scalar> make_monic(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return p;
  Polynomial<Scalar> out = p;
  Scalar inv = Scalar(1) / p.leading();
  return out *= inv;
}

// Monic gcd over a field.
template <class Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

// Product of the distinct monic irreducible factors of p.
RatPolynomial squarefree_part(const RatPolynomial& p);

std::string to_string(const IntPolynomial& p, char var = 't');
std::string to_string(const RatPolynomial& p, char var = 't');
std::string to_string(const QuadPolynomial& p, char var = 't');

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const Polynomial<Scalar>& p) {
  return os << to_string(p);
}

/// det(t*id - M) by Berkowitz's division-free recurrence, so integer input
/// never leaves the integers and any commutative scalar ring works.
template <class Derived>
Polynomial<typename Derived::Scalar> charpoly(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  if (m.rows() != m.cols()) throw ShapeError("charpoly needs a square matrix");
  const Eigen::Index n = m.rows();
  // coeffs[k] is the coefficient of t^(r-k) for the leading r x r block.
  std::vector<Scalar> coeffs{Scalar(1)};
  for (Eigen::Index r = 0; r < n; ++r) {
    std::vector<Scalar> column;  // first column of the Toeplitz factor
    column.reserve(static_cast<std::size_t>(r + 2));
    column.emplace_back(1);
    column.emplace_back(-m(r, r));
    if (r > 0) {
      Vec s = m.block(0, r, r, 1);
      for (Eigen::Index k = 0; k < r; ++k) {
        Scalar dot(0);
        for (Eigen::Index j = 0; j < r; ++j) dot += m(r, j) * s(j);
        column.push_back(-dot);
        if (k + 1 < r) s = (m.topLeftCorner(r, r) * s).eval();
      }
    }
    std::vector<Scalar> next(coeffs.size() + 1, Scalar(0));
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j <= i && j < coeffs.size(); ++j)
        if (i - j < column.size()) next[i] += column[i - j] * coeffs[j];
    coeffs = std::move(next);
  }
  return Polynomial<Scalar>::leading_first(std::move(coeffs));
}

struct FunctionalEquationResult {
  bool holds = false;
  std::optional<int> epsilon;              // set iff holds
  std::optional<std::size_t> failure_index;  // first k with a_{n-k} != sigma a_k q^{i(n/2-k)}
};

/// Checks t^n P(q^i/t) = (-1)^eps q^(i n / 2) P(t) coefficientwise.
FunctionalEquationResult functional_equation_check(const IntPolynomial& p, const BigInt& q, int i);

/// Monic polynomial with roots q^d / lambda over the roots lambda of p.
IntPolynomial duality_partner(const IntPolynomial& p, const BigInt& q, int d, int i);

struct CrossDualityResult {
  bool identity_holds = false;      // t^b P_i(q^d/t) = sign * q^(ib/2) P_{2d-i}(t) for some sign
  std::optional<int> sign;          // +1 or -1 when identity_holds
  std::optional<int> epsilon;       // from functional_equation_check(P_i)
  bool sign_matches_epsilon = false;
  bool holds() const { return identity_holds && sign_matches_epsilon; }
};

CrossDualityResult cross_duality_check(const IntPolynomial& p_i, const IntPolynomial& p_dual,
                                       const BigInt& q, int d, int i);

/// Newton's identities: p_1..p_N of the roots of a monic polynomial.
std::vector<BigInt> power_sums(const IntPolynomial& p, int count);

struct DivideOutResult {
  IntPolynomial quotient;
  int multiplicity = 0;
};

/// Largest m with factor^m | p, together with p / factor^m.
DivideOutResult exact_divide_out(const IntPolynomial& p, const IntPolynomial& factor);

struct RealRootMultiplicities {
  int plus = 0;   // multiplicity of +q^(i/2)
  int minus = 0;  // multiplicity of -q^(i/2)
};

/// Multiplicities of the real candidates +-q^(i/2). For odd i and non-square q
/// the pair is Galois conjugate and both equal the multiplicity of t^2 - q^i.
RealRootMultiplicities real_root_multiplicities(const IntPolynomial& p, const BigInt& q, int i);

}  // namespace polarcoh

#endif  // POLARCOH_POLY_HPP
