#include "polarcoh/matrixops.hpp"

#include <algorithm>
#include <numeric>

namespace polarcoh {

std::vector<std::vector<int>> k_subsets(int n, int k) {
  if (k < 0 || k > n) throw ShapeError("subset size out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

RatMatrix to_rational(const IntMatrix& m) { return m.cast<BigRational>(); }

std::vector<Eigen::Index> rref(RatMatrix& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const BigRational inv = BigRational(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const BigRational f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RatMatrix kernel_basis(const RatMatrix& m) {
  RatMatrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  const Eigen::Index nullity = m.cols() - static_cast<Eigen::Index>(pivots.size());
  RatMatrix basis = RatMatrix::Zero(m.cols(), nullity);
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, col) = 1;
    for (std::size_t r_i = 0; r_i < pivots.size(); ++r_i)
      basis(pivots[r_i], col) = -r(static_cast<Eigen::Index>(r_i), f);
    ++col;
  }
  return basis;
}

// --- invariant factors ------------------------------------------------------

RatPolynomial InvariantFactorList::product() const {
  RatPolynomial acc = RatPolynomial::constant(1);
  for (const auto& f : factors) acc *= f;
  return acc;
}

bool InvariantFactorList::divisibility_chain() const {
  for (std::size_t j = 1; j < factors.size(); ++j)
    if (!divmod(factors[j], factors[j - 1]).second.is_zero()) return false;
  return true;
}

InvariantFactorList invariant_factors(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("invariant_factors needs a square matrix");
  const std::size_t n = static_cast<std::size_t>(m.rows());
  using Row = std::vector<RatPolynomial>;
  std::vector<Row> a(n, Row(n));
  const RatPolynomial t = RatPolynomial::monomial(1, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = RatPolynomial::constant(-m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      if (i == j) a[i][j] += t;
    }

  // Smith form by unimodular row/column operations over Q[t]. The pivot is
  // always a minimal-degree entry, made monic before it is used.
  InvariantFactorList out;
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      std::size_t pi = n, pj = n;
      long best = -1;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
            best = a[i][j].degree();
            pi = i;
            pj = j;
          }
      if (pi == n) throw InconsistencyError("t*id - M is singular");
      std::swap(a[k], a[pi]);
      if (pj != k)
        for (std::size_t i = k; i < n; ++i) std::swap(a[i][k], a[i][pj]);
      const BigRational inv = BigRational(1) / a[k][k].leading();
      for (std::size_t j = k; j < n; ++j) a[k][j] *= inv;

      bool dirty = false;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k].is_zero()) continue;
        auto quot = divmod(a[i][k], a[k][k]).first;
        for (std::size_t j = k; j < n; ++j)
          if (!a[k][j].is_zero()) a[i][j] -= quot * a[k][j];
        dirty = dirty || !a[i][k].is_zero();
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j].is_zero()) continue;
        auto quot = divmod(a[k][j], a[k][k]).first;
        for (std::size_t i = k; i < n; ++i)
          if (!a[i][k].is_zero()) a[i][j] -= quot * a[i][k];
        dirty = dirty || !a[k][j].is_zero();
      }
      if (dirty) continue;

      // Pivot row and column are clear; the pivot must divide the rest.
      bool divides = true;
      if (a[k][k].degree() > 0) {
        for (std::size_t i = k + 1; i < n && divides; ++i)
          for (std::size_t j = k + 1; j < n && divides; ++j)
            if (!a[i][j].is_zero() && !divmod(a[i][j], a[k][k]).second.is_zero()) {
              for (std::size_t c = k; c < n; ++c) a[k][c] += a[i][c];
              divides = false;
            }
      }
      if (divides) break;
    }
    if (a[k][k].degree() >= 1) out.factors.push_back(a[k][k]);
  }
  return out;
}

InvariantFactorList invariant_factors(const IntMatrix& m) { return invariant_factors(to_rational(m)); }

RatPolynomial reciprocal_normalization(const RatPolynomial& p, const BigRational& q_power) {
  if (p.is_zero()) throw DomainError("reciprocal of the zero polynomial");
  const BigRational c0 = p.constant_term();
  if (c0 == 0) throw SingularActionError("reciprocal needs a nonzero constant term");
  const long n = p.degree();
  std::vector<BigRational> out(static_cast<std::size_t>(n + 1));
  BigRational power(1);
  for (long k = n; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(n - k)] * power / c0;
    power *= q_power;
  }
  return make_monic(RatPolynomial(std::move(out)));
}

bool jordan_symmetry_check(const RatMatrix& m, const BigInt& q, int i) {
  if (m.rows() != m.cols()) throw ShapeError("jordan_symmetry_check needs a square matrix");
  if (i < 0) throw DomainError("negative cohomological degree");
  if (determinant(m) == 0)
    throw SingularActionError("jordan_symmetry_check: the action is not invertible");
  const BigRational qi(ipow(q, static_cast<unsigned long>(i)));
  for (const auto& f : invariant_factors(m).factors)
    if (reciprocal_normalization(f, qi) != f) return false;
  return true;
}

bool jordan_symmetry_check(const IntMatrix& m, const BigInt& q, int i) {
  return jordan_symmetry_check(to_rational(m), q, i);
}

// --- bilinear forms -----------------------------------------------------------

PairingResult pairing_check(const IntMatrix& m, const IntMatrix& b, const BigInt& q, int i) {
  if (m.rows() != m.cols() || b.rows() != b.cols() || m.rows() != b.rows())
    throw ShapeError("pairing_check needs square matrices of equal size");
  if (i < 0) throw DomainError("negative cohomological degree");
  const bool symmetric = b == b.transpose();
  const bool antisymmetric = b == IntMatrix(-b.transpose());
  if (!symmetric && !antisymmetric)
    throw PreconditionError("bilinear form must be symmetric or antisymmetric");
  if (determinant(b) == 0) throw PreconditionError("bilinear form is degenerate");

  PairingResult out;
  const BigInt qi = ipow(q, static_cast<unsigned long>(i));
  const IntMatrix lhs = m.transpose() * b * m;
  out.preserved = lhs == IntMatrix(qi * b);
  out.det_m = determinant(m);
  const auto n = static_cast<unsigned long>(m.rows());
  out.det_squared_matches = out.det_m * out.det_m == ipow(q, static_cast<unsigned long>(i) * n);
  if (i % 2 == 1) {
    out.det_is_positive_power =
        (n % 2 == 0) && out.det_m == ipow(q, static_cast<unsigned long>(i) * n / 2);
  }
  return out;
}

bool is_positive_definite(const RatMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  if (m != m.transpose()) return false;
  for (Eigen::Index k = 1; k <= m.rows(); ++k)
    if (determinant(m.topLeftCorner(k, k)) <= 0) return false;
  return true;
}

namespace {

RatMatrix primitive_integral(const RatMatrix& d) {
  BigInt lcm_den(1), gcd_num(0);
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      lcm_den = boost::multiprecision::lcm(lcm_den, denominator(d(i, j)));
      gcd_num = boost::multiprecision::gcd(gcd_num, numerator(d(i, j)));
    }
  if (gcd_num == 0) return d;
  return d * BigRational(lcm_den, gcd_num);
}

}  // namespace

std::optional<RatMatrix> polarization_witness(const IntMatrix& a, const BigInt& q) {
  if (a.rows() != a.cols()) throw ShapeError("polarization_witness needs a square matrix");
  if (q <= 1) throw DomainError("q must exceed 1");
  const Eigen::Index n = a.rows();
  std::vector<std::pair<Eigen::Index, Eigen::Index>> slots;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) slots.emplace_back(i, j);
  const auto unknowns = static_cast<Eigen::Index>(slots.size());

  // Column u holds the upper triangle of A^T E_u A - q E_u.
  const RatMatrix ar = to_rational(a);
  const BigRational qr(q);
  RatMatrix system(unknowns, unknowns);
  for (Eigen::Index u = 0; u < unknowns; ++u) {
    RatMatrix e = RatMatrix::Zero(n, n);
    e(slots[static_cast<std::size_t>(u)].first, slots[static_cast<std::size_t>(u)].second) = 1;
    e(slots[static_cast<std::size_t>(u)].second, slots[static_cast<std::size_t>(u)].first) = 1;
    const RatMatrix image = ar.transpose() * e * ar - qr * e;
    for (Eigen::Index r = 0; r < unknowns; ++r)
      system(r, u) = image(slots[static_cast<std::size_t>(r)].first,
                           slots[static_cast<std::size_t>(r)].second);
  }
  const RatMatrix kernel = kernel_basis(system);
  const Eigen::Index dim = kernel.cols();
  if (dim == 0) return std::nullopt;

  auto to_matrix = [&](const RatVector& v) {
    RatMatrix d(n, n);
    for (Eigen::Index u = 0; u < unknowns; ++u) {
      d(slots[static_cast<std::size_t>(u)].first, slots[static_cast<std::size_t>(u)].second) = v(u);
      d(slots[static_cast<std::size_t>(u)].second, slots[static_cast<std::size_t>(u)].first) = v(u);
    }
    return d;
  };
  auto accept = [&](const RatVector& v) -> std::optional<RatMatrix> {
    RatMatrix d = to_matrix(v);
    if (is_positive_definite(d)) return primitive_integral(d);
    return std::nullopt;
  };

  for (Eigen::Index j = 0; j < dim; ++j)
    for (int s : {1, -1})
      if (auto d = accept(kernel.col(j) * BigRational(s))) return d;
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index k = j + 1; k < dim; ++k)
      for (int s : {1, -1})
        for (int t : {1, -1})
          if (auto d = accept(RatVector(kernel.col(j) * BigRational(s) + kernel.col(k) * BigRational(t))))
            return d;

  // Small-integer grid over the first few basis vectors.
  constexpr int kRadius = 2;
  const Eigen::Index used = std::min<Eigen::Index>(dim, 6);
  std::vector<int> coef(static_cast<std::size_t>(used), -kRadius);
  while (true) {
    if (std::any_of(coef.begin(), coef.end(), [](int c) { return c != 0; })) {
      RatVector v = RatVector::Zero(unknowns);
      for (Eigen::Index j = 0; j < used; ++j)
        v += kernel.col(j) * BigRational(coef[static_cast<std::size_t>(j)]);
      if (auto d = accept(v)) return d;
    }
    std::size_t pos = 0;
    while (pos < coef.size() && coef[pos] == kRadius) coef[pos++] = -kRadius;
    if (pos == coef.size()) break;
    ++coef[pos];
  }
  return std::nullopt;
}

}  // namespace polarcoh
