#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <mutex>

#include "polarcoh/verify.hpp"

namespace polarcoh {

namespace {

using Real = boost::multiprecision::mpfr_float;

// Boost keeps the default MPFR precision in a process-wide setting; hold it
// for the duration of one root computation.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits) : lock_(mutex()), saved_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~ScopedPrecision() { Real::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  static std::mutex& mutex() {
    static std::mutex m;
    return m;
  }
  std::lock_guard<std::mutex> lock_;
  unsigned saved_;
};

struct Complex {
  Real re;
  Real im;
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  const Real den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
Real abs2(const Complex& a) { return a.re * a.re + a.im * a.im; }
Real abs(const Complex& a) { return sqrt(abs2(a)); }

Real to_real(const BigRational& x) {
  Real out;
  mpfr_set_q(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

Real to_real(const BigInt& x) {
  Real out;
  mpfr_set_z(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

// Value and derivative by Horner; coefficients ascending.
std::pair<Complex, Complex> evaluate(const std::vector<Real>& c, const Complex& z) {
  Complex value{Real(0), Real(0)}, deriv{Real(0), Real(0)};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + Complex{*it, Real(0)};
  }
  return {value, deriv};
}

std::string scientific(const Real& x) { return x.str(6, std::ios_base::scientific); }

std::vector<Complex> aberth(const RatPolynomial& p, int digits, std::vector<Real>& coeffs) {
  const long n = p.degree();
  coeffs.clear();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_real(c));
  std::vector<Complex> z(static_cast<std::size_t>(n));
  if (n == 0) return z;

  // Start on the circle whose radius is the geometric mean of the root moduli.
  const Real radius = pow(abs(Complex{coeffs.front() / coeffs.back(), Real(0)}), Real(1) / Real(n));
  Real pi;
  mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
  const Real two_pi = 2 * pi;
  for (long k = 0; k < n; ++k) {
    const Real angle = two_pi * Real(k) / Real(n) + Real("0.4");
    z[static_cast<std::size_t>(k)] = {radius * cos(angle), radius * sin(angle)};
  }

  const Real stop = pow(Real(10), -Real(digits - 5));
  constexpr int kMaxIterations = 2000;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    Real largest_step = 0;
    for (long k = 0; k < n; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      auto [value, deriv] = evaluate(coeffs, zk);
      if (abs2(value) == 0) continue;
      const Complex newton = value / deriv;
      Complex repulsion{Real(0), Real(0)};
      for (long j = 0; j < n; ++j)
        if (j != k) repulsion = repulsion + Complex{Real(1), Real(0)} / (zk - z[static_cast<std::size_t>(j)]);
      const Complex step = newton / (Complex{Real(1), Real(0)} - newton * repulsion);
      zk = zk - step;
      const Real scale = max(Real(1), abs(zk));
      largest_step = max(largest_step, abs(step) / scale);
    }
    if (largest_step < stop) return z;
  }
  throw NumericError("Aberth iteration did not converge for " + to_string(p) + " at " +
                     std::to_string(digits) + " digits");
}

}  // namespace

std::vector<ComplexRoot> numeric_roots(const RatPolynomial& squarefree, int precision_digits) {
  if (squarefree.is_zero()) throw DomainError("roots of the zero polynomial");
  ScopedPrecision guard(static_cast<unsigned>(precision_digits + 10));
  std::vector<Real> coeffs;
  const auto z = aberth(make_monic(squarefree), precision_digits + 10, coeffs);
  std::vector<ComplexRoot> out;
  const Real n(squarefree.degree());
  for (const auto& root : z) {
    auto [value, deriv] = evaluate(coeffs, root);
    out.push_back({root.re.str(precision_digits), root.im.str(precision_digits),
                   scientific(n * abs(value) / abs(deriv))});
  }
  return out;
}

WeilCheckResult weil_weight_check(const IntPolynomial& p, const BigInt& q, int i,
                                  int precision_digits) {
  if (precision_digits < 30) throw DomainError("weil_weight_check needs at least 30 digits");
  if (!p.is_monic()) throw ValidityError("weil_weight_check: polynomial must be monic");
  if (p.degree() > 0 && p.constant_term() == 0) throw SingularActionError("weil_weight_check: P(0) = 0");

  WeilCheckResult out;
  out.precision_digits = precision_digits;
  out.tolerance = "1e-" + std::to_string(precision_digits / 3);
  try {
    out.functional_equation = functional_equation_check(p, q, i).holds;
  } catch (const ValidityError&) {
    out.functional_equation = false;
  }

  const RatPolynomial squarefree = squarefree_part(p.cast<BigRational>());
  out.distinct_roots = static_cast<std::size_t>(std::max<long>(squarefree.degree(), 0));
  ScopedPrecision guard(static_cast<unsigned>(precision_digits + 10));
  std::vector<Real> coeffs;
  const auto roots = aberth(squarefree, precision_digits + 10, coeffs);

  const Real target = to_real(ipow(q, static_cast<unsigned long>(i)));
  const Real tolerance = pow(Real(10), -Real(precision_digits / 3));
  Real worst = 0;
  out.worst_root = "";
  for (const auto& z : roots) {
    const Real deviation = abs(abs2(z) - target) / target;
    if (out.worst_root.empty() || deviation > worst) {
      worst = deviation;
      out.worst_root = z.re.str(25) + " + " + z.im.str(25) + "*i";
    }
  }
  out.max_deviation = scientific(worst);
  out.moduli_within_tolerance = worst < tolerance;
  out.pass = out.functional_equation && out.moduli_within_tolerance;
  return out;
}

}  // namespace polarcoh
