#ifndef POLARCOH_MAJORIZE_HPP
#define POLARCOH_MAJORIZE_HPP

#include <Eigen/Core>

#include <algorithm>
#include <functional>

#include "polarcoh/errors.hpp"
#include "polarcoh/matrixops.hpp"

namespace polarcoh {

// Slope vectors are plain Eigen column vectors; every function here works for
// any exact (or integer) scalar type.

/// Sum of the l largest entries of z.
template <class Derived>
typename Derived::Scalar top_k_sum(const Eigen::MatrixBase<Derived>& z, Eigen::Index l) {
  using Scalar = typename Derived::Scalar;
  if (l < 1 || l > z.size()) throw ShapeError("top_k_sum: l out of range");
  Vector<Scalar> sorted = z;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  Scalar acc(0);
  for (Eigen::Index k = 0; k < l; ++k) acc += sorted(k);
  return acc;
}

/// x ≺ y: partial sums of the largest entries of x never exceed those of y,
/// and the totals agree.
template <class DerivedX, class DerivedY>
bool is_majorized_by(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
  using Scalar = typename DerivedX::Scalar;
  if (x.size() != y.size()) throw ShapeError("majorization needs vectors of equal length");
  Vector<Scalar> xs = x, ys = y;
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  Scalar sx(0), sy(0);
  for (Eigen::Index k = 0; k < xs.size(); ++k) {
    sx += xs(k);
    sy += ys(k);
    if (k + 1 < xs.size() && sx > sy) return false;
  }
  return sx == sy;
}

/// All k-fold index-increasing subset sums (x_{i1} + ... + x_{ik}), with the
/// index tuples in lexicographic order.
template <class Derived>
Vector<typename Derived::Scalar> compound(const Eigen::MatrixBase<Derived>& x, int k) {
  using Scalar = typename Derived::Scalar;
  const int n = static_cast<int>(x.size());
  if (k < 1 || k > n) throw ShapeError("compound: k out of range");
  const auto subsets = k_subsets(n, k);
  Vector<Scalar> out(static_cast<Eigen::Index>(subsets.size()));
  for (std::size_t r = 0; r < subsets.size(); ++r) {
    Scalar acc(0);
    for (int i : subsets[r]) acc += x(i);
    out(static_cast<Eigen::Index>(r)) = acc;
  }
  return out;
}

/// The linear map c_k as a 0/1 matrix, so that compound(x, k) == C * x.
Matrix<long> compound_operator(int n, int k);

}  // namespace polarcoh

#endif  // POLARCOH_MAJORIZE_HPP
