#ifndef POLARCOH_MATRIXOPS_HPP
#define POLARCOH_MATRIXOPS_HPP

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "polarcoh/exactnum.hpp"
#include "polarcoh/poly.hpp"

namespace polarcoh {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<BigRational>;
using RatVector = Vector<BigRational>;

// All k-subsets of {0..n-1}, each sorted, in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int k);

/// Fraction-free (Bareiss) determinant. Every intermediate quotient is exact,
/// so integer matrices stay integral.
template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw ShapeError("determinant needs a square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> a = m;
  Scalar sign(1), prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index swap = k + 1;
      while (swap < n && a(swap, k) == Scalar(0)) ++swap;
      if (swap == n) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// k-th compound matrix: entry (I, J) is the minor on rows I and columns J,
/// with k-subsets in lexicographic order.
template <class Derived>
Matrix<typename Derived::Scalar> exterior_power(const Eigen::MatrixBase<Derived>& m, int k) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw ShapeError("exterior_power needs a square matrix");
  const int n = static_cast<int>(m.rows());
  if (k < 1 || k > n) throw ShapeError("exterior power index out of range");
  const auto subsets = k_subsets(n, k);
  const auto size = static_cast<Eigen::Index>(subsets.size());
  Matrix<Scalar> out(size, size);
  Matrix<Scalar> minor(k, k);
  for (Eigen::Index r = 0; r < size; ++r) {
    for (Eigen::Index c = 0; c < size; ++c) {
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          minor(a, b) = m(subsets[static_cast<std::size_t>(r)][static_cast<std::size_t>(a)],
                          subsets[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)]);
      out(r, c) = determinant(minor);
    }
  }
  return out;
}

template <class DerivedA, class DerivedB>
Matrix<typename DerivedA::Scalar> kronecker(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
  Matrix<typename DerivedA::Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <class Derived>
Matrix<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& m, int e) {
  using M = Matrix<typename Derived::Scalar>;
  M result = M::Identity(m.rows(), m.cols());
  M base = m;
  while (e > 0) {
    if (e & 1) result = (result * base).eval();
    e >>= 1;
    if (e) base = (base * base).eval();
  }
  return result;
}

RatMatrix to_rational(const IntMatrix& m);

/// Reduced row echelon form over Q; returns the pivot columns.
std::vector<Eigen::Index> rref(RatMatrix& m);
// Basis of the right kernel, one column per basis vector.
RatMatrix kernel_basis(const RatMatrix& m);

/// Nontrivial invariant factors d_1 | d_2 | ... of t*id - M (unit entries of
/// the Smith form are dropped). Their product is charpoly(M).
struct InvariantFactorList {
  std::vector<RatPolynomial> factors;

  RatPolynomial product() const;
  bool divisibility_chain() const;
};

InvariantFactorList invariant_factors(const RatMatrix& m);
InvariantFactorList invariant_factors(const IntMatrix& m);

/// Monic polynomial whose roots are Q/lambda, lambda running over the roots of p.
RatPolynomial reciprocal_normalization(const RatPolynomial& p, const BigRational& q_power);

/// True iff every invariant factor of M is fixed by lambda -> q^i/lambda,
/// which is equivalent to mu(lambda, e) = mu(q^i/lambda, e) for all Jordan data.
bool jordan_symmetry_check(const IntMatrix& m, const BigInt& q, int i);
bool jordan_symmetry_check(const RatMatrix& m, const BigInt& q, int i);

struct PairingResult {
  bool preserved = false;  // M^T B M = q^i B
  BigInt det_m;
  // det(M)^2 = q^(i n); only meaningful when preserved.
  bool det_squared_matches = false;
  // For odd i: det(M) = +q^(i n/2). Unset for even i.
  std::optional<bool> det_is_positive_power;
};

PairingResult pairing_check(const IntMatrix& m, const IntMatrix& b, const BigInt& q, int i);

/// Sylvester's criterion with exact leading principal minors.
bool is_positive_definite(const RatMatrix& m);

/// Searches the solution space of A^T D A = q D over symmetric D for a
/// positive-definite element; the result is scaled to a primitive integer
/// matrix. The search covers kernel basis vectors, pairwise +- combinations
/// and a bounded grid of small integer combinations.
std::optional<RatMatrix> polarization_witness(const IntMatrix& a, const BigInt& q);

}  // namespace polarcoh

#endif  // POLARCOH_MATRIXOPS_HPP
