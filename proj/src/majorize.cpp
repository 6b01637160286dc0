#include "polarcoh/majorize.hpp"

namespace polarcoh {

Matrix<long> compound_operator(int n, int k) {
  if (k < 1 || k > n) throw ShapeError("compound_operator: k out of range");
  const auto subsets = k_subsets(n, k);
  Matrix<long> c = Matrix<long>::Zero(static_cast<Eigen::Index>(subsets.size()), n);
  for (std::size_t r = 0; r < subsets.size(); ++r)
    for (int i : subsets[r]) c(static_cast<Eigen::Index>(r), i) = 1;
  return c;
}

}  // namespace polarcoh
