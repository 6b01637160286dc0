// Independent reference implementations and random generators for the tests.
// Nothing here calls the library routine it is used to check.
#ifndef POLARCOH_TESTS_ORACLES_HPP
#define POLARCOH_TESTS_ORACLES_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "polarcoh/matrixops.hpp"
#include "polarcoh/poly.hpp"

namespace oracle {

using polarcoh::BigInt;
using polarcoh::BigRational;
using polarcoh::IntMatrix;
using polarcoh::IntPolynomial;
using polarcoh::RatMatrix;
using polarcoh::RatPolynomial;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  long nonzero(long lo, long hi) {
    long v = 0;
    while (v == 0) v = integer(lo, hi);
    return v;
  }
  BigRational rational(long span, long max_den) {
    return BigRational(integer(-span, span)) / BigRational(integer(1, max_den));
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (long v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

inline IntPolynomial poly(std::initializer_list<long> leading_first) {
  std::vector<BigInt> v(leading_first.begin(), leading_first.end());
  return IntPolynomial::leading_first(std::move(v));
}

inline IntMatrix random_matrix(Rng& rng, int n, long span) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.integer(-span, span);
  return m;
}

// Leibniz expansion over all permutations; fine for n <= 7.
template <class Scalar>
Scalar leibniz_det(const polarcoh::Matrix<Scalar>& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    Scalar term(inversions % 2 == 0 ? 1 : -1);
    for (int i = 0; i < n; ++i) term *= m(i, perm[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
inline RatPolynomial leverrier_charpoly(const RatMatrix& a) {
  const auto n = a.rows();
  std::vector<BigRational> c(static_cast<std::size_t>(n + 1), BigRational(0));
  c[static_cast<std::size_t>(n)] = 1;
  RatMatrix mk = RatMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = (a * mk).eval();
    for (Eigen::Index i = 0; i < n; ++i) mk(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const RatMatrix amk = a * mk;
    c[static_cast<std::size_t>(n - k)] = -amk.trace() / BigRational(k);
  }
  return RatPolynomial(std::move(c));
}

// Product of elementary row operations with unit pivots; determinant +-1.
inline IntMatrix random_unimodular(Rng& rng, int n, int steps = 12) {
  IntMatrix s = IntMatrix::Identity(n, n);
  for (int step = 0; step < steps; ++step) {
    const int i = static_cast<int>(rng.integer(0, n - 1));
    int j = static_cast<int>(rng.integer(0, n - 1));
    if (n == 1) {
      if (rng.integer(0, 1)) s = -s;
      continue;
    }
    while (j == i) j = static_cast<int>(rng.integer(0, n - 1));
    s.row(i) += BigInt(rng.integer(-2, 2)) * s.row(j);
  }
  return s;
}

// Inverse of a unimodular integer matrix by the adjugate.
inline IntMatrix unimodular_inverse(const IntMatrix& s) {
  const int n = static_cast<int>(s.rows());
  const BigInt det = leibniz_det<BigInt>(s);
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (n == 1) {
        inv(0, 0) = det;
        break;
      }
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = s(r, c);
        }
        ++rr;
      }
      const BigInt cof = leibniz_det<BigInt>(minor) * (((i + j) % 2 == 0) ? 1 : -1);
      inv(i, j) = cof * det;  // det = +-1, so 1/det = det
    }
  return inv;
}

struct JordanBlock {
  long eigenvalue;
  int size;
};

inline IntMatrix jordan_matrix(const std::vector<JordanBlock>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.size;
  IntMatrix j = IntMatrix::Zero(n, n);
  int at = 0;
  for (const auto& b : blocks) {
    for (int k = 0; k < b.size; ++k) {
      j(at + k, at + k) = b.eigenvalue;
      if (k + 1 < b.size) j(at + k, at + k + 1) = 1;
    }
    at += b.size;
  }
  return j;
}

// Invariant factors read off the Jordan data: for each eigenvalue sort block
// sizes decreasingly; the r-th largest invariant factor collects the r-th
// largest block of every eigenvalue.
inline std::vector<RatPolynomial> jordan_invariant_factors(const std::vector<JordanBlock>& blocks) {
  std::map<long, std::vector<int>> sizes;
  for (const auto& b : blocks) sizes[b.eigenvalue].push_back(b.size);
  std::size_t count = 0;
  for (auto& [lambda, s] : sizes) {
    std::sort(s.rbegin(), s.rend());
    count = std::max(count, s.size());
  }
  std::vector<RatPolynomial> out;
  for (std::size_t r = 0; r < count; ++r) {
    RatPolynomial f = RatPolynomial::constant(BigRational(1));
    for (const auto& [lambda, s] : sizes)
      if (r < s.size())
        for (int e = 0; e < s[r]; ++e) f *= RatPolynomial::linear(BigRational(lambda));
    out.push_back(f);
  }
  std::reverse(out.begin(), out.end());  // d_1 | d_2 | ...
  return out;
}

// l-adic order by repeated division.
inline long naive_order(BigInt n, long prime) {
  if (n == 0) return -1;
  long e = 0;
  while (n % prime == 0) {
    n /= prime;
    ++e;
  }
  return e;
}

// Majorization in the nondecreasing form: partial sums of the smallest
// entries of x dominate those of y, with equal totals.
template <class Scalar>
bool majorized_ascending(std::vector<Scalar> x, std::vector<Scalar> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  Scalar sx(0), sy(0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    if (sx < sy) return false;
  }
  return sx == sy;
}

// A vector majorized by y: repeated transfers from a larger to a smaller
// entry that do not reverse their order.
inline std::vector<BigRational> robin_hood(std::vector<BigRational> y, Rng& rng, int transfers) {
  const int n = static_cast<int>(y.size());
  for (int t = 0; t < transfers && n > 1; ++t) {
    int i = static_cast<int>(rng.integer(0, n - 1)), j = static_cast<int>(rng.integer(0, n - 1));
    if (y[static_cast<std::size_t>(i)] < y[static_cast<std::size_t>(j)]) std::swap(i, j);
    const BigRational gap = y[static_cast<std::size_t>(i)] - y[static_cast<std::size_t>(j)];
    if (gap == 0) continue;
    const BigRational amount = gap * BigRational(rng.integer(0, 4)) / BigRational(8);
    y[static_cast<std::size_t>(i)] -= amount;
    y[static_cast<std::size_t>(j)] += amount;
  }
  return y;
}

}  // namespace oracle

#endif  // POLARCOH_TESTS_ORACLES_HPP
