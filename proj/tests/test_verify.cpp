#include <doctest.h>

#include "polarcoh/serialize.hpp"
#include "polarcoh/verify.hpp"
#include "support/oracles.hpp"

using namespace polarcoh;
using oracle::mat;
using oracle::poly;

namespace {

VarietyModel example_surface() { return abelian_en(mat({{1, -5}, {1, 1}}), 6); }

VarietyModel corrupted_surface() {
  std::vector<GenericDegreeData> data(5);
  data[0].charpoly = poly({1, -1});
  data[1].charpoly = poly({1, -4, 16, -24, 35});
  data[2].charpoly = poly({1, -16, 60, 0, 2160, -20736, 46656});
  data[3].charpoly = poly({1, -24, 576, -5184, 46656});
  data[4].charpoly = poly({1, -36});
  return generic_model(2, 6, data, {{1}, {2, 2}, {1, 4, 1}, {0, 2, 2, 0}, {0, 0, 1, 0, 0}});
}

const CheckResult& only(const VerificationReport& r, const std::string& id, std::optional<int> degree,
                        std::optional<long> prime = std::nullopt) {
  for (const auto* c : r.find(id))
    if (c->degree == degree && (!prime || (c->prime && *c->prime == *prime))) return *c;
  FAIL("missing check " << id);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("weil_weight_check") {
  const auto ok = weil_weight_check(poly({1, -2, 6}), 6, 1);
  CHECK(ok.pass);
  CHECK(ok.functional_equation);
  CHECK(ok.distinct_roots == 2);
  CHECK(ok.tolerance == "1e-20");

  for (long m : {2L, 3L, 7L}) {
    const auto doubled = weil_weight_check(pow(poly({1, -m}), 2), m * m, 1);
    CHECK(doubled.pass);
    CHECK(doubled.distinct_roots == 1);
  }

  const auto fault = weil_weight_check(poly({1, -2}), 6, 1);
  CHECK_FALSE(fault.pass);
  CHECK_FALSE(fault.functional_equation);
  CHECK_FALSE(fault.moduli_within_tolerance);

  CHECK_FALSE(weil_weight_check(poly({1, -2, 5}), 6, 1).pass);

  CHECK(weil_weight_check(example_surface().actions[2].charpoly, 6, 2).pass);
  CHECK_THROWS_AS(weil_weight_check(poly({1, -2, 6}), 6, 1, 20), DomainError);
  CHECK_THROWS_AS(weil_weight_check(poly({2, -2, 6}), 6, 1), ValidityError);
  CHECK_THROWS_AS(weil_weight_check(poly({1, -2, 0}), 6, 1), SingularActionError);
}

TEST_CASE("numeric roots") {
  const auto roots = numeric_roots(poly({1, 0, -2}).cast<BigRational>(), 40);
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    const double re = std::stod(r.real);
    CHECK(std::abs(std::abs(re) - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(std::stod(r.imag)) < 1e-30);
  }
}

TEST_CASE("epsilon congruence") {
  CHECK(epsilon_congruence_check(poly({1, -5}), 5, 2).epsilon == 1);
  CHECK(epsilon_congruence_check(poly({1, -5}), 5, 2).holds);
  const auto minus = epsilon_congruence_check(poly({1, 5}), 5, 2);
  CHECK(minus.epsilon == 0);
  CHECK(minus.mu_minus == 1);
  CHECK(minus.holds);
  const auto odd = epsilon_congruence_check(poly({1, -2, 6}), 6, 1);
  CHECK(odd.epsilon == 0);
  CHECK(odd.holds);
  CHECK_THROWS_AS(epsilon_congruence_check(poly({1, -2, 5}), 6, 1), PreconditionError);
}

TEST_CASE("epsilon congruence on random products of admissible factors") {
  oracle::Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const long q = rng.integer(2, 7);
    const int i = static_cast<int>(rng.integer(1, 4));
    IntPolynomial p = IntPolynomial::constant(1);
    int minus = 0;
    long count = 0;
    for (int f = static_cast<int>(rng.integer(1, 4)); f > 0; --f) {
      const long kind = rng.integer(0, 2);
      if (kind == 0 && i % 2 == 0) {
        const BigInt root = ipow(q, static_cast<unsigned long>(i / 2));
        const bool neg = rng.integer(0, 1) == 1;
        p *= IntPolynomial::linear(neg ? BigInt(-root) : root);
        minus += neg;
        count += 1;
      } else {
        // t^2 - a t + q^i with |a| small: reciprocal pair
        const long a = rng.integer(-2, 2);
        p *= IntPolynomial::leading_first({BigInt(1), BigInt(-a), ipow(q, static_cast<unsigned long>(i))});
        count += 2;
      }
    }
    if (i % 2 == 1 && count % 2 == 1) continue;
    const auto e = epsilon_congruence_check(p, q, i);
    CHECK(e.holds);
    CHECK(e.betti == count);
    if (i % 2 == 0) {
      CHECK(e.mu_minus >= minus);
      CHECK(e.epsilon == (count + e.mu_minus) % 2);
    }
  }
}

TEST_CASE("full report on the example surface") {
  const auto report = full_report(example_surface(), {2, 3});
  CHECK_FALSE(report.has_failures());
  CHECK(report.chi == 0);
  CHECK(report.count(CheckStatus::fail) == 0);
  CHECK(only(report, "slope_zero", 1, 2).status == CheckStatus::not_applicable);
  CHECK(only(report, "newton_symmetry", 1, 3).status == CheckStatus::pass);
  const auto& over = only(report, "newton_over_hodge", 1, 3);
  CHECK(over.status == CheckStatus::pass);
  CHECK(over.witness["coincide"] == true);
  CHECK(only(report, "polarization", std::nullopt).status == CheckStatus::pass);

  const auto& row = report.degrees[1];
  CHECK(row.charpoly == poly({1, -4, 16, -24, 36}));
  REQUIRE(row.newton.size() == 2);
  CHECK(row.newton[0].polygon.vertices == std::vector<Vertex>{{0, 0}, {4, 2}});
  CHECK(row.newton[1].polygon.vertices == std::vector<Vertex>{{0, 0}, {2, 0}, {4, 2}});
  REQUIRE(report.zeta.has_value());
  CHECK(report.zeta->holds());
}

TEST_CASE("full report flags the corrupted surface") {
  const auto report = full_report(corrupted_surface(), {5});
  CHECK(report.has_failures());
  const auto& fe = only(report, "functional_equation", 1);
  CHECK(fe.status == CheckStatus::fail);
  CHECK(fe.witness["failure_index"] == 0);
  CHECK(only(report, "functional_equation", 2).status == CheckStatus::pass);
  CHECK(only(report, "weil_weight", 1).status == CheckStatus::fail);
  CHECK_FALSE(report.zeta.has_value());
  CHECK(only(report, "zeta_functional_equation", std::nullopt).status == CheckStatus::not_applicable);
}

TEST_CASE("full report on the G(2,4) involution") {
  const auto report = full_report(grassmannian(2, 4, 4, GrassmannianVariant::involution), {2, 3});
  CHECK_FALSE(report.has_failures());
  CHECK(only(report, "functional_equation", 1).status == CheckStatus::not_applicable);
  CHECK(only(report, "even_multiplicity", 4).status == CheckStatus::not_applicable);
  CHECK(only(report, "epsilon_congruence", 4).status == CheckStatus::pass);
  CHECK(report.degrees[4].mu_minus == 1);
  const auto& over = only(report, "newton_over_hodge", 4, 2);
  CHECK(over.witness["coincide"] == true);
}

TEST_CASE("report completeness and determinism") {
  std::vector<std::pair<VarietyModel, std::vector<BigInt>>> cases{
      {example_surface(), {2, 3, 5}},
      {grassmannian(2, 5, 6, GrassmannianVariant::scalar), {2, 7}},
      {corrupted_surface(), {3}},
      {abelian_from_h1(1, mat({{1, -2}, {2, 1}}), 5), {5, 11}}};
  for (const auto& [model, primes] : cases) {
    const auto report = full_report(model, primes);
    const std::size_t degrees = static_cast<std::size_t>(2 * model.dimension + 1);
    CHECK(report.checks.size() == degrees * degree_check_ids().size() +
                                      degrees * primes.size() * prime_check_ids().size() +
                                      model_check_ids().size());
    for (const auto& id : degree_check_ids()) CHECK(report.find(id).size() == degrees);
    for (const auto& id : prime_check_ids()) CHECK(report.find(id).size() == degrees * primes.size());
    for (const auto& c : report.checks)
      if (c.status == CheckStatus::fail) CHECK_FALSE(c.witness.empty());
    CHECK(report_to_json(report).dump() == report_to_json(full_report(model, primes)).dump());
  }
}

TEST_CASE("full report preconditions") {
  CHECK_THROWS_AS(full_report(example_surface(), {}), PreconditionError);
  CHECK_THROWS_AS(full_report(example_surface(), {4}), PreconditionError);
}
