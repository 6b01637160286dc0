#include "polarcoh/exactnum.hpp"

#include <gmp.h>

#include <cctype>
#include <ostream>

namespace polarcoh {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw ParseError("not an integer: '" + std::string(text) + "'");
  // Base 10 explicitly: the string constructor would read "025" as octal.
  const std::string buf(s.front() == '+' ? s.substr(1) : s);
  BigInt out;
  mpz_set_str(out.backend().data(), buf.c_str(), 10);
  return out;
}

BigRational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_bigint(s.substr(0, slash));
    BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return BigRational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (!all_digits(frac)) throw ParseError("not a decimal: '" + std::string(text) + "'");
    bool negative = !whole.empty() && whole.front() == '-';
    std::string_view whole_digits = whole;
    if (!whole_digits.empty() && (whole_digits.front() == '-' || whole_digits.front() == '+'))
      whole_digits.remove_prefix(1);
    if (!whole_digits.empty() && !all_digits(whole_digits))
      throw ParseError("not a decimal: '" + std::string(text) + "'");
    const BigInt num = parse_bigint(std::string(whole_digits.empty() ? "0" : whole_digits) + std::string(frac));
    BigRational value(num, ipow(BigInt(10), frac.size()));
    return negative ? BigRational(-value) : value;
  }
  return BigRational(parse_bigint(s));
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const BigRational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt result;
  mpz_pow_ui(result.backend().data(), base.backend().data(), exponent);
  return result;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.backend().data(), 30) > 0;
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (n < 0 || !mpz_perfect_square_p(n.backend().data())) return std::nullopt;
  BigInt root;
  mpz_sqrt(root.backend().data(), n.backend().data());
  return root;
}

unsigned long padic_order(const BigInt& n, const BigInt& prime) {
  if (n == 0) throw DomainError("valuation of zero is undefined");
  if (prime < 2) throw DomainError("valuation base must be at least 2");
  BigInt rest;
  return mpz_remove(rest.backend().data(), n.backend().data(), prime.backend().data());
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  BigInt result;
  mpz_bin_uiui(result.backend().data(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

// --- QuadExt ---------------------------------------------------------------

QuadExt::QuadExt(BigRational a, BigRational b, BigInt radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(std::move(radicand)) {
  if (radicand_ < 0) throw DomainError("negative radicand");
  if (radicand_ == 0 && b_ != 0) throw DomainError("irrational part without a radicand");
  canonicalize();
}

QuadExt QuadExt::sqrt_of(const BigInt& radicand) { return QuadExt(0, 1, radicand); }

void QuadExt::canonicalize() {
  if (b_ == 0 || radicand_ == 0) return;
  if (auto root = exact_sqrt(radicand_)) {
    a_ += b_ * BigRational(*root);
    b_ = 0;
  }
}

BigInt QuadExt::joint_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.radicand_ == 0) return y.radicand_;
  if (y.radicand_ == 0 || y.radicand_ == x.radicand_) return x.radicand_;
  throw DomainError("mismatched radicands " + x.radicand_.str() + " and " + y.radicand_.str());
}

QuadExt QuadExt::conj() const {
  QuadExt out = *this;
  out.b_ = -out.b_;
  return out;
}

BigRational QuadExt::norm() const { return a_ * a_ - BigRational(radicand_) * b_ * b_; }

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  radicand_ = joint_radicand(*this, rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
  radicand_ = joint_radicand(*this, rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  radicand_ = joint_radicand(*this, rhs);
  BigRational a = a_ * rhs.a_;
  if (b_ != 0 && rhs.b_ != 0) a += b_ * rhs.b_ * BigRational(radicand_);
  BigRational b = a_ * rhs.b_ + rhs.a_ * b_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero in Q(sqrt(q))");
  radicand_ = joint_radicand(*this, rhs);
  if (rhs.is_rational()) {
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    return *this;
  }
  BigRational n = rhs.norm();
  *this *= rhs.conj();
  a_ /= n;
  b_ /= n;
  return *this;
}

QuadExt QuadExt::operator-() const {
  QuadExt out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

bool operator==(const QuadExt& lhs, const QuadExt& rhs) {
  if (lhs.is_rational() && rhs.is_rational()) return lhs.a_ == rhs.a_;
  QuadExt::joint_radicand(lhs, rhs);
  return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_;
}

std::string to_string(const QuadExt& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  const std::string root = "*sqrt(" + x.radicand().str() + ")";
  if (x.rational_part() == 0) return to_string(x.sqrt_part()) + root;
  const bool negative = x.sqrt_part() < 0;
  return to_string(x.rational_part()) + (negative ? " - " : " + ") +
         to_string(negative ? BigRational(-x.sqrt_part()) : x.sqrt_part()) + root;
}

QuadExt parse_quadext(std::string_view text) {
  std::string_view s = trim(text);
  auto sq = s.find("sqrt(");
  if (sq == std::string_view::npos) return QuadExt(parse_rational(s));
  auto close = s.find(')', sq);
  if (close == std::string_view::npos || trim(s.substr(close + 1)).size() != 0)
    throw ParseError("malformed quadratic number: '" + std::string(text) + "'");
  BigInt radicand = parse_bigint(s.substr(sq + 5, close - sq - 5));
  std::string_view head = trim(s.substr(0, sq));
  if (head.empty() || head.back() != '*')
    throw ParseError("malformed quadratic number: '" + std::string(text) + "'");
  head = trim(head.substr(0, head.size() - 1));
  // Split "a + b" / "a - b" at the last binary sign; a lone "b" has none.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = head.size(); k-- > 1;) {
    if ((head[k] == '+' || head[k] == '-') && head[k - 1] == ' ') {
      split = k;
      break;
    }
  }
  BigRational a = 0, b;
  if (split == std::string_view::npos) {
    b = parse_rational(head);
  } else {
    a = parse_rational(head.substr(0, split));
    b = parse_rational(head.substr(split + 1));
    if (head[split] == '-') b = -b;
  }
  return QuadExt(a, b, radicand);
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << to_string(x); }

QuadExt quad_mul(const QuadExt& x, const QuadExt& y) { return x * y; }

QuadExt half_power(const BigInt& q, long i, long n) {
  if (q <= 1) throw DomainError("half_power requires q > 1");
  if (i < 0 || n < 0) throw DomainError("half_power requires nonnegative exponents");
  unsigned long e = static_cast<unsigned long>(i) * static_cast<unsigned long>(n);
  if (e % 2 == 0) return QuadExt(BigRational(ipow(q, e / 2)), 0, q);
  return QuadExt(0, BigRational(ipow(q, e / 2)), q);
}

// --- valuations -------------------------------------------------------------

NormalizedValuation::NormalizedValuation(BigInt prime, BigInt q)
    : prime_(std::move(prime)), q_(std::move(q)) {
  if (!is_prime(prime_)) throw DomainError(prime_.str() + " is not prime");
  if (q_ <= 1) throw DomainError("q must exceed 1");
  normalizer_ = padic_order(q_, prime_);
}

BigRational valuate(const BigRational& x, const NormalizedValuation& v) {
  if (x == 0) throw DomainError("valuation of zero is undefined");
  long raw = static_cast<long>(padic_order(numerator(x), v.prime())) -
             static_cast<long>(padic_order(denominator(x), v.prime()));
  if (!v.is_normalized()) return BigRational(raw);
  return BigRational(BigInt(raw), BigInt(v.normalizer()));
}

}  // namespace polarcoh
