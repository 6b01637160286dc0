#include "polarcoh/varieties.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace polarcoh {

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::abelian_en:
      return "abelian_en";
    case ModelKind::abelian:
      return "abelian";
    case ModelKind::grassmannian:
      return "grassmannian";
    case ModelKind::generic:
      return "generic";
  }
  return "generic";
}

const char* to_string(GrassmannianVariant variant) {
  return variant == GrassmannianVariant::scalar ? "scalar" : "involution";
}

long VarietyModel::euler_characteristic() const {
  long chi = 0;
  for (const auto& a : actions) chi += (a.degree % 2 == 0 ? 1 : -1) * a.betti;
  return chi;
}

bool VarietyModel::has_all_matrices() const {
  return std::all_of(actions.begin(), actions.end(),
                     [](const CohomologyAction& a) { return a.betti == 0 || a.matrix.has_value(); });
}

namespace {

void require_q(const BigInt& q) {
  if (q <= 1) throw DomainError("q must exceed 1");
}

CohomologyAction action_from_matrix(int degree, IntMatrix m) {
  CohomologyAction a;
  a.degree = degree;
  a.betti = static_cast<long>(m.rows());
  a.charpoly = charpoly(m);
  a.matrix = std::move(m);
  return a;
}

CohomologyAction empty_action(int degree) {
  CohomologyAction a;
  a.degree = degree;
  a.charpoly = IntPolynomial::constant(1);
  return a;
}

void collect_partitions(int rows, int cols, int remaining, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == rows) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const int cap = current.empty() ? cols : current.back();
  const int slots = rows - static_cast<int>(current.size());
  for (int part = std::min(cap, remaining); part >= 0; --part) {
    if (part * slots < remaining) break;
    current.push_back(part);
    collect_partitions(rows, cols, remaining - part, current, out);
    current.pop_back();
  }
}

}  // namespace

VarietyModel abelian_from_h1(int d, const IntMatrix& m, const BigInt& q) {
  require_q(q);
  if (d < 1) throw DomainError("abelian varieties need dimension at least 1");
  if (m.rows() != 2 * d || m.cols() != 2 * d)
    throw ShapeError("H^1 action of a " + std::to_string(d) + "-dimensional abelian variety must be " +
                     std::to_string(2 * d) + "x" + std::to_string(2 * d));
  const BigInt det = determinant(m);
  if (det == 0) throw ValidityError("H^1 action is singular");

  VarietyModel model;
  model.kind = ModelKind::abelian;
  model.dimension = d;
  model.q = q;
  model.h1_matrix = m;
  model.actions.resize(static_cast<std::size_t>(2 * d + 1));
  model.actions[0] = action_from_matrix(0, IntMatrix::Identity(1, 1));

  // H^i = wedge^i H^1; each degree is independent.
  std::vector<std::future<CohomologyAction>> jobs;
  for (int i = 1; i <= 2 * d; ++i)
    jobs.push_back(std::async(std::launch::async, [&m, i] {
      return action_from_matrix(i, exterior_power(m, i));
    }));
  for (int i = 1; i <= 2 * d; ++i) model.actions[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i - 1)].get();

  model.hodge.resize(static_cast<std::size_t>(2 * d + 1));
  for (int i = 0; i <= 2 * d; ++i)
    for (int j = 0; j <= i; ++j)
      model.hodge[static_cast<std::size_t>(i)].push_back(
          static_cast<long>(binomial(d, j) * binomial(d, i - j)));

  if (det != ipow(q, static_cast<unsigned long>(d)))
    model.warnings.push_back("det(f*|H^1) = " + det.str() + " differs from q^d = " +
                             ipow(q, static_cast<unsigned long>(d)).str());
  return model;
}

VarietyModel abelian_en(const IntMatrix& a, const BigInt& q) {
  if (a.rows() != a.cols() || a.rows() < 1) throw ShapeError("isogeny matrix must be square");
  if (determinant(a) == 0) throw ValidityError("isogeny matrix is singular");
  VarietyModel model = abelian_from_h1(static_cast<int>(a.rows()), kronecker(a, IntMatrix::Identity(2, 2)), q);
  model.kind = ModelKind::abelian_en;
  model.isogeny_matrix = a;
  model.polarization = polarization_witness(a, q);
  if (!model.polarization)
    model.warnings.push_back("no positive-definite D with A^T D A = q D was found");
  return model;
}

std::vector<std::vector<int>> box_partitions(int rows, int cols, int size) {
  std::vector<std::vector<int>> out;
  if (size < 0 || size > rows * cols) return out;
  std::vector<int> current;
  collect_partitions(rows, cols, size, current, out);
  return out;
}

std::vector<int> conjugate_partition(const std::vector<int>& lambda, int rows, int cols) {
  std::vector<int> out(static_cast<std::size_t>(cols), 0);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r)
      if (lambda[static_cast<std::size_t>(r)] > c) ++out[static_cast<std::size_t>(c)];
  return out;
}

std::vector<int> complement_partition(const std::vector<int>& lambda, int cols) {
  std::vector<int> out(lambda.rbegin(), lambda.rend());
  for (int& part : out) part = cols - part;
  return out;
}

IntMatrix conjugation_permutation(int k, int j) {
  const auto parts = box_partitions(k, k, j);
  std::map<std::vector<int>, Eigen::Index> index;
  for (std::size_t a = 0; a < parts.size(); ++a) index[parts[a]] = static_cast<Eigen::Index>(a);
  const auto size = static_cast<Eigen::Index>(parts.size());
  IntMatrix p = IntMatrix::Zero(size, size);
  for (std::size_t a = 0; a < parts.size(); ++a)
    p(index.at(conjugate_partition(parts[a], k, k)), static_cast<Eigen::Index>(a)) = 1;
  return p;
}

VarietyModel grassmannian(int k, int n, const BigInt& q, GrassmannianVariant variant) {
  require_q(q);
  if (k < 1 || k >= n) throw DomainError("Grassmannian G(k, n) needs 1 <= k < n");
  if (variant == GrassmannianVariant::involution && n != 2 * k)
    throw ValidityError("the involution variant exists only for n = 2k");

  VarietyModel model;
  model.kind = ModelKind::grassmannian;
  model.dimension = k * (n - k);
  model.q = q;
  model.grassmannian_k = k;
  model.grassmannian_n = n;
  model.variant = variant;
  const int top = 2 * model.dimension;
  for (int i = 0; i <= top; ++i) {
    std::vector<long> h(static_cast<std::size_t>(i + 1), 0);
    if (i % 2 == 1) {
      model.actions.push_back(empty_action(i));
      model.hodge.push_back(std::move(h));
      continue;
    }
    const int j = i / 2;
    const auto b = static_cast<Eigen::Index>(box_partitions(k, n - k, j).size());
    const BigInt scale = ipow(q, static_cast<unsigned long>(j));
    IntMatrix basis_map = variant == GrassmannianVariant::scalar ? IntMatrix(IntMatrix::Identity(b, b))
                                                                 : conjugation_permutation(k, j);
    model.actions.push_back(action_from_matrix(i, IntMatrix(scale * basis_map)));
    h[static_cast<std::size_t>(j)] = static_cast<long>(b);
    model.hodge.push_back(std::move(h));
  }
  return model;
}

VarietyModel generic_model(int d, const BigInt& q, std::vector<GenericDegreeData> degrees,
                           std::vector<std::vector<long>> hodge, bool strict) {
  require_q(q);
  if (d < 0) throw DomainError("negative dimension");
  const std::size_t count = static_cast<std::size_t>(2 * d + 1);
  if (degrees.size() != count)
    throw ValidityError("expected data for degrees 0.." + std::to_string(2 * d) + ", got " +
                        std::to_string(degrees.size()) + " entries");
  if (!hodge.empty()) {
    if (hodge.size() != count) throw ShapeError("hodge needs one list per degree");
    for (std::size_t i = 0; i < count; ++i)
      if (hodge[i].size() != i + 1)
        throw ShapeError("hodge list for weight " + std::to_string(i) + " needs " +
                         std::to_string(i + 1) + " entries");
  }

  VarietyModel model;
  model.kind = ModelKind::generic;
  model.dimension = d;
  model.q = q;
  model.strict = strict;
  model.hodge = std::move(hodge);
  for (std::size_t i = 0; i < count; ++i) {
    auto& data = degrees[i];
    CohomologyAction a;
    a.degree = static_cast<int>(i);
    if (data.matrix) {
      if (data.matrix->rows() != data.matrix->cols())
        throw ShapeError("matrix for degree " + std::to_string(i) + " is not square");
      IntPolynomial from_matrix = charpoly(*data.matrix);
      if (data.charpoly && *data.charpoly != from_matrix)
        throw ConsistencyError("degree " + std::to_string(i) + ": supplied polynomial " +
                               to_string(*data.charpoly) + " but the matrix gives " +
                               to_string(from_matrix));
      a.charpoly = std::move(from_matrix);
      if (data.matrix->rows() > 0) a.matrix = std::move(data.matrix);
    } else if (data.charpoly) {
      a.charpoly = std::move(*data.charpoly);
    } else {
      throw ValidityError("degree " + std::to_string(i) + " has neither a polynomial nor a matrix");
    }
    if (!a.charpoly.is_monic())
      throw ValidityError("degree " + std::to_string(i) + ": characteristic polynomial must be monic");
    if (a.charpoly.degree() > 0 && a.charpoly.constant_term() == 0)
      throw SingularActionError("degree " + std::to_string(i) + ": P(0) = 0");
    a.betti = a.charpoly.degree();
    model.actions.push_back(std::move(a));
  }
  for (int i = 0; i <= d; ++i)
    if (model.betti(i) != model.betti(2 * d - i))
      throw DualityViolationError("b_" + std::to_string(i) + " = " + std::to_string(model.betti(i)) +
                                  " but b_" + std::to_string(2 * d - i) + " = " +
                                  std::to_string(model.betti(2 * d - i)));

  auto policy = [&](bool ok, const std::string& message) {
    if (ok) return;
    if (strict) throw ValidityError(message);
    model.warnings.push_back(message);
  };
  const IntPolynomial unit = IntPolynomial::linear(BigInt(1));
  const IntPolynomial top = IntPolynomial::linear(ipow(q, static_cast<unsigned long>(d)));
  policy(model.actions.front().charpoly == unit, "H^0 action is not t - 1");
  policy(model.actions.back().charpoly == top, "H^2d action is not t - q^d");
  return model;
}

}  // namespace polarcoh
