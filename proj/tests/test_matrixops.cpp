#include <doctest.h>

#include <algorithm>

#include "polarcoh/matrixops.hpp"
#include "polarcoh/poly.hpp"
#include "support/oracles.hpp"

using namespace polarcoh;
using oracle::mat;
using oracle::poly;

TEST_CASE("k_subsets are lexicographic") {
  const auto s = k_subsets(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.front() == std::vector<int>{0, 1});
  CHECK(s[2] == std::vector<int>{0, 3});
  CHECK(s.back() == std::vector<int>{2, 3});
}

TEST_CASE("determinant matches Leibniz") {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 6));
    IntMatrix m = oracle::random_matrix(rng, n, 6);
    if (rng.integer(0, 4) == 0 && n > 1) m.row(0) = m.row(n - 1);  // singular cases too
    CHECK(determinant(m) == oracle::leibniz_det<BigInt>(m));
  }
}

TEST_CASE("exterior_power") {
  IntMatrix diag = IntMatrix::Zero(3, 3);
  diag(0, 0) = 2;
  diag(1, 1) = 3;
  diag(2, 2) = 5;
  const IntMatrix w2 = exterior_power(diag, 2);
  CHECK(w2 == mat({{6, 0, 0}, {0, 10, 0}, {0, 0, 15}}));
  CHECK(exterior_power(diag, 3) == mat({{30}}));
  CHECK(exterior_power(diag, 1) == diag);
  CHECK_THROWS_AS(exterior_power(diag, 4), ShapeError);
  CHECK_THROWS_AS(exterior_power(diag, 0), ShapeError);

  const IntMatrix m = kronecker(mat({{1, -5}, {1, 1}}), IntMatrix(IntMatrix::Identity(2, 2)));
  const IntPolynomial p2 = charpoly(exterior_power(m, 2));
  CHECK(exact_divide_out(p2, poly({1, -6})).multiplicity >= 1);
}

TEST_CASE("exterior power entries are minors") {
  oracle::Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.integer(2, 5));
    const int k = static_cast<int>(rng.integer(1, n));
    const IntMatrix m = oracle::random_matrix(rng, n, 4);
    const IntMatrix w = exterior_power(m, k);
    const auto subsets = k_subsets(n, k);
    const auto r = static_cast<std::size_t>(rng.integer(0, static_cast<long>(subsets.size()) - 1));
    const auto c = static_cast<std::size_t>(rng.integer(0, static_cast<long>(subsets.size()) - 1));
    IntMatrix minor(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        minor(a, b) = m(subsets[r][static_cast<std::size_t>(a)], subsets[c][static_cast<std::size_t>(b)]);
    CHECK(w(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) == oracle::leibniz_det<BigInt>(minor));
    // Cauchy-Binet: the k-th compound is multiplicative
    const IntMatrix m2 = oracle::random_matrix(rng, n, 4);
    CHECK(exterior_power(IntMatrix(m * m2), k) == w * exterior_power(m2, k));
  }
}

TEST_CASE("charpoly of an exterior power has the k-fold products as roots") {
  // triangular matrices are diagonalizable over Q when the diagonal is distinct,
  // and their eigenvalues are the diagonal
  oracle::Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.integer(2, 5));
    const int k = static_cast<int>(rng.integer(1, n));
    std::vector<long> eig;
    while (static_cast<int>(eig.size()) < n) {
      const long v = rng.nonzero(-6, 6);
      if (std::find(eig.begin(), eig.end(), v) == eig.end()) eig.push_back(v);
    }
    IntMatrix t = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      t(i, i) = eig[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n; ++j) t(i, j) = rng.integer(-3, 3);
    }
    const IntMatrix s = oracle::random_unimodular(rng, n);
    const IntMatrix m = s * t * oracle::unimodular_inverse(s);
    IntPolynomial expected = IntPolynomial::constant(1);
    for (const auto& subset : k_subsets(n, k)) {
      BigInt product = 1;
      for (int i : subset) product *= eig[static_cast<std::size_t>(i)];
      expected *= IntPolynomial::linear(product);
    }
    CHECK(charpoly(exterior_power(m, k)) == expected);
  }
}

TEST_CASE("invariant_factors") {
  auto f = invariant_factors(mat({{3, 1}, {0, 3}}));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0] == pow(poly({1, -3}), 2).cast<BigRational>());

  f = invariant_factors(mat({{2, 0}, {0, 3}}));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0] == poly({1, -5, 6}).cast<BigRational>());

  f = invariant_factors(IntMatrix(IntMatrix::Identity(2, 2)));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == poly({1, -1}).cast<BigRational>());
  CHECK(f.factors[1] == poly({1, -1}).cast<BigRational>());
}

TEST_CASE("invariant_factors recover Jordan data") {
  oracle::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 6));
    std::vector<oracle::JordanBlock> blocks;
    int used = 0;
    while (used < n) {
      const int size = static_cast<int>(rng.integer(1, n - used));
      blocks.push_back({rng.integer(-3, 3), size});
      used += size;
    }
    const IntMatrix s = oracle::random_unimodular(rng, n);
    const IntMatrix m = s * oracle::jordan_matrix(blocks) * oracle::unimodular_inverse(s);
    const auto f = invariant_factors(m);
    CHECK(f.divisibility_chain());
    CHECK(f.product() == charpoly(m).cast<BigRational>());
    CHECK(f.factors == oracle::jordan_invariant_factors(blocks));
  }
}

TEST_CASE("jordan_symmetry_check") {
  CHECK(jordan_symmetry_check(mat({{1, -5}, {1, 1}}), 6, 1));
  CHECK(jordan_symmetry_check(mat({{2, 0}, {0, 3}}), 6, 1));
  CHECK_FALSE(jordan_symmetry_check(mat({{2, 0}, {0, 2}}), 6, 1));
  // a single block J_2(2) next to 1x1 blocks at 3: sizes do not match
  CHECK_FALSE(jordan_symmetry_check(oracle::jordan_matrix({{2, 2}, {3, 1}, {3, 1}}), 6, 1));
  CHECK(jordan_symmetry_check(oracle::jordan_matrix({{2, 2}, {3, 2}}), 6, 1));
  CHECK_THROWS_AS(jordan_symmetry_check(mat({{0, 1}, {0, 0}}), 6, 1), SingularActionError);
}

TEST_CASE("jordan_symmetry_check is similarity invariant") {
  oracle::Rng rng(19);
  int symmetric = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<oracle::JordanBlock> blocks;
    // pair blocks at 2 and 3 (q = 6) with random sizes; sometimes break the pairing
    const int pairs = static_cast<int>(rng.integer(1, 2));
    for (int k = 0; k < pairs; ++k) {
      const int size = static_cast<int>(rng.integer(1, 2));
      blocks.push_back({2, size});
      blocks.push_back({3, rng.integer(0, 3) == 0 ? 3 - size : size});
    }
    const IntMatrix j = oracle::jordan_matrix(blocks);
    const IntMatrix s = oracle::random_unimodular(rng, static_cast<int>(j.rows()));
    const bool expected = jordan_symmetry_check(j, 6, 1);
    symmetric += expected;
    CHECK(jordan_symmetry_check(IntMatrix(s * j * oracle::unimodular_inverse(s)), 6, 1) == expected);
  }
  CHECK(symmetric > 0);
  CHECK(symmetric < 100);
}

TEST_CASE("pairing_check") {
  const IntMatrix omega = mat({{0, 1}, {-1, 0}});
  for (auto [a, b] : {std::pair{1L, 2L}, std::pair{2L, 3L}, std::pair{5L, 1L}}) {
    const auto r = pairing_check(mat({{a, -b}, {b, a}}), omega, a * a + b * b, 1);
    CHECK(r.preserved);
    CHECK(r.det_squared_matches);
    CHECK(r.det_is_positive_power == true);
  }
  const auto scalar = pairing_check(IntMatrix(BigInt(6) * IntMatrix::Identity(3, 3)),
                                    mat({{2, 1, 0}, {1, 2, 0}, {0, 0, 1}}), 6, 2);
  CHECK(scalar.preserved);
  CHECK_FALSE(pairing_check(mat({{2, 0}, {0, 2}}), omega, 6, 1).preserved);
  CHECK_THROWS_AS(pairing_check(mat({{2, 0}, {0, 2}}), mat({{1, 1}, {1, 1}}), 6, 1), PreconditionError);
  CHECK_THROWS_AS(pairing_check(mat({{2, 0}, {0, 2}}), mat({{1, 2}, {3, 1}}), 6, 1), PreconditionError);
}

TEST_CASE("pairing preserved implies det^2 = q^(in)") {
  oracle::Rng rng(61);
  const IntMatrix omega = mat({{0, 1}, {-1, 0}});
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = oracle::random_matrix(rng, 2, 4);
    const BigInt det = determinant(m);
    if (det <= 1) continue;
    const auto r = pairing_check(m, omega, det, 1);
    CHECK(r.preserved);  // M^T J M = det(M) J for every 2x2 M
    CHECK(r.det_squared_matches);
  }
}

TEST_CASE("is_positive_definite") {
  CHECK(is_positive_definite(to_rational(mat({{2, 1}, {1, 2}}))));
  CHECK_FALSE(is_positive_definite(to_rational(mat({{1, 2}, {2, 1}}))));
  CHECK_FALSE(is_positive_definite(to_rational(mat({{0, 0}, {0, 1}}))));
}

TEST_CASE("polarization_witness") {
  auto check_witness = [](const IntMatrix& a, const BigInt& q) {
    const auto d = polarization_witness(a, q);
    REQUIRE(d.has_value());
    const RatMatrix ar = to_rational(a);
    CHECK(ar.transpose() * *d * ar == BigRational(q) * *d);
    CHECK(*d == d->transpose());
    CHECK(is_positive_definite(*d));
    return *d;
  };
  const RatMatrix d = check_witness(mat({{1, -5}, {1, 1}}), 6);
  CHECK(d == to_rational(mat({{1, 0}, {0, 5}})));
  for (long m : {2L, 3L}) {
    const RatMatrix e = check_witness(IntMatrix(BigInt(m) * IntMatrix::Identity(2, 2)), m * m);
    CHECK(is_positive_definite(e));
  }
  CHECK(check_witness(mat({{3}}), 9) == to_rational(mat({{1}})));
  CHECK_FALSE(polarization_witness(mat({{2, 0}, {0, 3}}), 6).has_value());

  oracle::Rng rng(71);
  for (int trial = 0; trial < 25; ++trial) {
    const long a = rng.integer(1, 5), b = rng.integer(1, 5);
    check_witness(mat({{a, -b}, {b, a}}), a * a + b * b);
  }
}
