#ifndef POLARCOH_EXACTNUM_HPP
#define POLARCOH_EXACTNUM_HPP

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "polarcoh/errors.hpp"

namespace polarcoh {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                                  boost::multiprecision::et_off>;

// Accepts an optional sign followed by decimal digits.
BigInt parse_bigint(std::string_view text);
// Accepts integers, fractions "p/q" and finite decimals "-1.25".
BigRational parse_rational(std::string_view text);

std::string to_string(const BigInt& x);
// Integers print without a denominator, everything else as "p/q".
std::string to_string(const BigRational& x);

BigInt ipow(const BigInt& base, unsigned long exponent);
bool is_prime(const BigInt& n);
// Integer square root when n is a perfect square.
std::optional<BigInt> exact_sqrt(const BigInt& n);
// Standard p-adic valuation of a nonzero integer.
unsigned long padic_order(const BigInt& n, const BigInt& prime);
BigInt binomial(long n, long k);

/// Element a + b*sqrt(q) of Q(sqrt(q)).
///
/// The radicand travels with the value. A radicand of zero marks a plain
/// rational that has not been tied to any field yet; it adopts the radicand
/// of whatever it is combined with. When q is a perfect square the value is
/// folded into its rational part eagerly, so `sqrt_part()` stays zero.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long value) : a_(value) {}
  QuadExt(const BigInt& value) : a_(value) {}
  QuadExt(const BigRational& value) : a_(value) {}
  QuadExt(BigRational a, BigRational b, BigInt radicand);

  static QuadExt sqrt_of(const BigInt& radicand);

  const BigRational& rational_part() const { return a_; }
  const BigRational& sqrt_part() const { return b_; }
  const BigInt& radicand() const { return radicand_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadExt conj() const;
  // Field norm a^2 - q b^2.
  BigRational norm() const;

  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);
  QuadExt operator-() const;

  friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
  friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }
  friend bool operator==(const QuadExt& lhs, const QuadExt& rhs);
  friend bool operator!=(const QuadExt& lhs, const QuadExt& rhs) { return !(lhs == rhs); }

 private:
  void canonicalize();
  static BigInt joint_radicand(const QuadExt& x, const QuadExt& y);

  BigRational a_;
  BigRational b_;
  BigInt radicand_{0};
};

// "a" for rationals, otherwise "a + b*sqrt(q)" with a signed b.
std::string to_string(const QuadExt& x);
QuadExt parse_quadext(std::string_view text);
std::ostream& operator<<(std::ostream& os, const QuadExt& x);

// Field product; throws DomainError when both operands carry different radicands.
QuadExt quad_mul(const QuadExt& x, const QuadExt& y);

// q^(i*n/2), rational when i*n is even.
QuadExt half_power(const BigInt& q, long i, long n);

/// l-adic valuation scaled so that the valuation of q is one.
///
/// When l does not divide q the normalizer is zero; the object still works
/// but yields plain l-adic valuations and is tagged as unnormalized.
class NormalizedValuation {
 public:
  NormalizedValuation(BigInt prime, BigInt q);

  const BigInt& prime() const { return prime_; }
  const BigInt& q() const { return q_; }
  unsigned long normalizer() const { return normalizer_; }
  bool is_normalized() const { return normalizer_ > 0; }

 private:
  BigInt prime_;
  BigInt q_;
  unsigned long normalizer_;
};

BigRational valuate(const BigRational& x, const NormalizedValuation& v);

}  // namespace polarcoh

namespace Eigen {

template <>
struct NumTraits<polarcoh::QuadExt> : GenericNumTraits<polarcoh::QuadExt> {
  using Real = polarcoh::QuadExt;
  using NonInteger = polarcoh::QuadExt;
  using Nested = polarcoh::QuadExt;
  using Literal = polarcoh::QuadExt;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static inline int digits10() { return 0; }
  static inline polarcoh::QuadExt epsilon() { return {}; }
  static inline polarcoh::QuadExt dummy_precision() { return {}; }
};

}  // namespace Eigen

#endif  // POLARCOH_EXACTNUM_HPP
