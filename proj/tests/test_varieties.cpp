#include <doctest.h>

#include "polarcoh/varieties.hpp"
#include "support/oracles.hpp"

using namespace polarcoh;
using oracle::mat;
using oracle::poly;

TEST_CASE("abelian_from_h1") {
  for (long m : {2L, 3L, -2L}) {
    const auto model = abelian_from_h1(1, IntMatrix(BigInt(m) * IntMatrix::Identity(2, 2)), m * m);
    CHECK(model.actions[1].charpoly == pow(IntPolynomial::linear(BigInt(m)), 2));
    CHECK(model.actions[2].charpoly == IntPolynomial::linear(BigInt(m * m)));
    CHECK(model.warnings.empty());
  }
  const IntMatrix a = mat({{1, -5}, {1, 1}});
  const auto surface = abelian_from_h1(2, kronecker(a, IntMatrix(IntMatrix::Identity(2, 2))), 6);
  CHECK(surface.actions[1].charpoly == poly({1, -4, 16, -24, 36}));
  CHECK(surface.hodge[1] == std::vector<long>{2, 2});
  CHECK(surface.hodge[2] == std::vector<long>{1, 4, 1});
  CHECK(surface.euler_characteristic() == 0);

  for (auto [x, y] : {std::pair{1L, 2L}, std::pair{3L, 4L}}) {
    const auto e = abelian_from_h1(1, mat({{x, -y}, {y, x}}), x * x + y * y);
    CHECK(e.actions[2].charpoly == IntPolynomial::linear(BigInt(x * x + y * y)));
  }

  CHECK_THROWS_AS(abelian_from_h1(2, a, 6), ShapeError);
  CHECK_THROWS_AS(abelian_from_h1(1, mat({{1, 1}, {1, 1}}), 6), ValidityError);
  const auto off = abelian_from_h1(1, mat({{2, 0}, {0, 2}}), 6);
  CHECK_FALSE(off.warnings.empty());
}

TEST_CASE("abelian models: Betti numbers and top degree") {
  oracle::Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = static_cast<int>(rng.integer(1, 3));
    const long a = rng.integer(1, 4), b = rng.integer(1, 4);
    const long q = a * a + b * b;
    IntMatrix m = IntMatrix::Zero(2 * d, 2 * d);
    for (int k = 0; k < d; ++k) m.block(2 * k, 2 * k, 2, 2) = mat({{a, -b}, {b, a}});
    const auto model = abelian_from_h1(d, m, q);
    for (int i = 0; i <= 2 * d; ++i) CHECK(model.betti(i) == static_cast<long>(binomial(2 * d, i)));
    CHECK(determinant(*model.actions.back().matrix) == ipow(q, static_cast<unsigned long>(d)));
    CHECK(model.actions.back().charpoly == IntPolynomial::linear(ipow(q, static_cast<unsigned long>(d))));
  }
}

TEST_CASE("abelian_en") {
  const auto model = abelian_en(mat({{1, -5}, {1, 1}}), 6);
  CHECK(model.kind == ModelKind::abelian_en);
  CHECK(model.actions[1].charpoly == poly({1, -4, 16, -24, 36}));
  REQUIRE(model.polarization.has_value());
  CHECK(*model.polarization == to_rational(mat({{1, 0}, {0, 5}})));

  const auto elliptic = abelian_en(mat({{3}}), 9);
  REQUIRE(elliptic.polarization.has_value());
  CHECK(*elliptic.polarization == to_rational(mat({{1}})));

  const auto unpolarized = abelian_en(mat({{2, 0}, {0, 3}}), 6);
  CHECK_FALSE(unpolarized.polarization.has_value());
  CHECK_FALSE(unpolarized.warnings.empty());
  CHECK_THROWS_AS(abelian_en(mat({{1, 1}, {1, 1}}), 6), ValidityError);
}

TEST_CASE("abelian_en agrees with abelian_from_h1 on A (x) I2") {
  oracle::Rng rng(32);
  for (int trial = 0; trial < 8; ++trial) {
    const IntMatrix a = oracle::random_matrix(rng, static_cast<int>(rng.integer(1, 2)), 3);
    if (determinant(a) == 0) continue;
    const auto en = abelian_en(a, 5);
    const auto raw = abelian_from_h1(static_cast<int>(a.rows()), kronecker(a, IntMatrix(IntMatrix::Identity(2, 2))), 5);
    REQUIRE(en.actions.size() == raw.actions.size());
    for (std::size_t i = 0; i < en.actions.size(); ++i) {
      CHECK(en.actions[i].charpoly == raw.actions[i].charpoly);
      CHECK(*en.actions[i].matrix == *raw.actions[i].matrix);
    }
    CHECK(en.hodge == raw.hodge);
  }
}

TEST_CASE("grassmannian") {
  const auto p1 = grassmannian(1, 2, 5, GrassmannianVariant::scalar);
  CHECK(p1.dimension == 1);
  CHECK(p1.betti(0) == 1);
  CHECK(p1.betti(1) == 0);
  CHECK(p1.actions[0].charpoly == poly({1, -1}));
  CHECK(p1.actions[2].charpoly == poly({1, -5}));

  const auto g24 = grassmannian(2, 4, 3, GrassmannianVariant::scalar);
  CHECK(g24.betti(4) == 2);
  CHECK(g24.actions[4].charpoly == pow(poly({1, -9}), 2));

  const auto g24i = grassmannian(2, 4, 3, GrassmannianVariant::involution);
  CHECK(g24i.actions[4].charpoly == poly({1, -9}) * poly({1, 9}));
  CHECK(g24i.hodge[4] == std::vector<long>{0, 0, 2, 0, 0});

  CHECK_THROWS_AS(grassmannian(2, 5, 3, GrassmannianVariant::involution), ValidityError);
  CHECK_THROWS_AS(grassmannian(3, 3, 3, GrassmannianVariant::scalar), DomainError);
}

TEST_CASE("Grassmannian Betti numbers are Gaussian binomials and satisfy duality") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      const auto g = grassmannian(k, n, 2, GrassmannianVariant::scalar);
      // coefficients of the Gaussian binomial [n choose k]_x by the q-Pascal rule
      std::vector<std::vector<std::vector<long>>> gb(static_cast<std::size_t>(n + 1));
      for (int a = 0; a <= n; ++a) {
        gb[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(a + 1));
        for (int b = 0; b <= a; ++b) {
          auto& c = gb[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          if (b == 0 || b == a) {
            c = {1};
            continue;
          }
          const auto& left = gb[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
          const auto& right = gb[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
          c.assign(static_cast<std::size_t>(b * (a - b) + 1), 0);
          for (std::size_t e = 0; e < left.size(); ++e) c[e] += left[e];
          for (std::size_t e = 0; e < right.size(); ++e) c[e + static_cast<std::size_t>(b)] += right[e];
        }
      }
      const auto& coeffs = gb[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      for (int j = 0; j <= g.dimension; ++j) {
        CHECK(g.betti(2 * j) == coeffs[static_cast<std::size_t>(j)]);
        CHECK(g.betti(2 * j) == g.betti(2 * g.dimension - 2 * j));
        CHECK(g.betti(2 * j) == static_cast<long>(box_partitions(k, n - k, g.dimension - j).size()));
      }
    }
}

TEST_CASE("conjugation permutation is an involution commuting with complement") {
  for (int k = 1; k <= 4; ++k) {
    for (int j = 0; j <= k * k; ++j) {
      const IntMatrix p = conjugation_permutation(k, j);
      CHECK(p * p == IntMatrix::Identity(p.rows(), p.cols()));
      for (const auto& lambda : box_partitions(k, k, j))
        CHECK(conjugate_partition(complement_partition(lambda, k), k, k) ==
              complement_partition(conjugate_partition(lambda, k, k), k));
    }
  }
}

TEST_CASE("generic_model") {
  std::vector<GenericDegreeData> data(3);
  data[0].charpoly = poly({1, -1});
  data[1].charpoly = poly({1, -2, 6});
  data[2].charpoly = poly({1, -6});
  const auto model = generic_model(1, 6, data, {});
  CHECK(model.betti(1) == 2);
  CHECK(model.warnings.empty());

  auto bad_h0 = data;
  bad_h0[0].charpoly = poly({1, -2});
  const auto lenient = generic_model(1, 6, bad_h0, {});
  CHECK(lenient.warnings.size() == 1);
  CHECK_THROWS_AS(generic_model(1, 6, bad_h0, {}, true), ValidityError);

  std::vector<GenericDegreeData> lopsided(5);
  lopsided[0].charpoly = poly({1, -1});
  lopsided[1].charpoly = poly({1, -1, 1, 1});
  lopsided[2].charpoly = poly({1, -6});
  lopsided[3].charpoly = poly({1, 0, 1});
  lopsided[4].charpoly = poly({1, -36});
  CHECK_THROWS_AS(generic_model(2, 6, lopsided, {}), DualityViolationError);
  CHECK_THROWS_AS(generic_model(2, 6, lopsided, {}), ValidityError);

  auto mismatch = data;
  mismatch[1].matrix = mat({{2, 0}, {0, 3}});
  CHECK_THROWS_AS(generic_model(1, 6, mismatch, {}), ConsistencyError);
  auto matched = data;
  matched[1].matrix = mat({{1, -5}, {1, 1}});
  CHECK(generic_model(1, 6, matched, {}).actions[1].matrix.has_value());
}
