#include "polarcoh/verify.hpp"

#include <algorithm>
#include <future>

#include "polarcoh/serialize.hpp"

namespace polarcoh {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::not_applicable:
      return "not-applicable";
    case CheckStatus::incomparable:
      return "incomparable";
  }
  return "not-applicable";
}

bool VerificationReport::has_failures() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::fail && !c.informational;
  });
}

std::size_t VerificationReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [status](const CheckResult& c) { return c.status == status; }));
}

std::vector<const CheckResult*> VerificationReport::find(const std::string& check) const {
  std::vector<const CheckResult*> out;
  for (const auto& c : checks)
    if (c.check == check) out.push_back(&c);
  return out;
}

EpsilonCongruence epsilon_congruence_check(const IntPolynomial& p, const BigInt& q, int i) {
  const FunctionalEquationResult fe = functional_equation_check(p, q, i);
  if (!fe.holds)
    throw PreconditionError("epsilon_congruence_check: P_" + std::to_string(i) +
                            " fails its functional equation at index " +
                            std::to_string(*fe.failure_index));
  EpsilonCongruence out;
  out.epsilon = *fe.epsilon;
  out.betti = p.degree();
  out.mu_minus = real_root_multiplicities(p, q, i).minus;
  out.holds = (out.epsilon - out.betti - out.mu_minus) % 2 == 0 && (i % 2 == 0 || out.epsilon == 0);
  return out;
}

namespace {

CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

CheckResult make(const std::string& id, std::optional<int> degree, std::optional<BigInt> prime) {
  CheckResult r;
  r.check = id;
  r.degree = degree;
  r.prime = std::move(prime);
  return r;
}

CheckResult not_applicable(const std::string& id, std::optional<int> degree,
                           std::optional<BigInt> prime, const std::string& reason) {
  CheckResult r = make(id, degree, std::move(prime));
  r.status = CheckStatus::not_applicable;
  r.witness = {{"reason", reason}};
  return r;
}

CheckResult errored(CheckResult r, const std::exception& e) {
  r.status = CheckStatus::fail;
  r.witness = {{"error", e.what()}};
  return r;
}

struct DegreeOutcome {
  std::vector<CheckResult> checks;
  DegreeSummary summary;
};

DegreeOutcome run_degree(const VarietyModel& model, int i, const std::vector<BigInt>& primes,
                         int precision) {
  DegreeOutcome out;
  const auto& action = model.actions[static_cast<std::size_t>(i)];
  const IntPolynomial& p = action.charpoly;
  const BigInt& q = model.q;
  const int d = model.dimension;
  auto& summary = out.summary;
  summary.degree = i;
  summary.betti = action.betti;
  summary.charpoly = p;

  if (action.betti == 0) {
    for (const auto& id : degree_check_ids()) out.checks.push_back(not_applicable(id, i, std::nullopt, "b_i = 0"));
    for (const auto& prime : primes)
      for (const auto& id : prime_check_ids()) out.checks.push_back(not_applicable(id, i, prime, "b_i = 0"));
    return out;
  }

  // functional_equation
  std::optional<FunctionalEquationResult> fe;
  {
    CheckResult r = make("functional_equation", i, std::nullopt);
    try {
      fe = functional_equation_check(p, q, i);
      r.status = status_of(fe->holds);
      if (fe->holds) {
        r.witness = {{"epsilon", *fe->epsilon}};
        summary.epsilon = fe->epsilon;
      } else {
        r.witness = {{"failure_index", *fe->failure_index}};
      }
    } catch (const Error& e) {
      fe.reset();
      r = errored(r, e);
    }
    out.checks.push_back(std::move(r));
  }

  // cross_duality
  {
    CheckResult r = make("cross_duality", i, std::nullopt);
    const int partner = 2 * d - i;
    try {
      const auto c = cross_duality_check(p, model.actions[static_cast<std::size_t>(partner)].charpoly, q, d, i);
      r.status = status_of(c.holds());
      r.witness = {{"partner_degree", partner},
                   {"identity_holds", c.identity_holds},
                   {"sign_matches_epsilon", c.sign_matches_epsilon}};
      r.witness["sign"] = c.sign ? json(*c.sign) : json(nullptr);
    } catch (const Error& e) {
      r = errored(r, e);
      r.witness["partner_degree"] = partner;
    }
    out.checks.push_back(std::move(r));
  }

  // jordan_symmetry
  if (action.matrix) {
    CheckResult r = make("jordan_symmetry", i, std::nullopt);
    try {
      const bool ok = jordan_symmetry_check(*action.matrix, q, i);
      r.status = status_of(ok);
      r.witness = {{"size", action.matrix->rows()}};
    } catch (const Error& e) {
      r = errored(r, e);
    }
    out.checks.push_back(std::move(r));
  } else {
    out.checks.push_back(not_applicable("jordan_symmetry", i, std::nullopt, "no matrix for this degree"));
  }

  // weil_weight
  {
    CheckResult r = make("weil_weight", i, std::nullopt);
    try {
      const auto w = weil_weight_check(p, q, i, precision);
      r.status = status_of(w.pass);
      r.witness = {{"functional_equation", w.functional_equation},
                   {"moduli_within_tolerance", w.moduli_within_tolerance},
                   {"max_deviation", w.max_deviation},
                   {"tolerance", w.tolerance},
                   {"worst_root", w.worst_root},
                   {"distinct_roots", w.distinct_roots},
                   {"precision_digits", w.precision_digits}};
    } catch (const Error& e) {
      r = errored(r, e);
    }
    out.checks.push_back(std::move(r));
  }

  // epsilon_congruence
  if (fe && fe->holds) {
    CheckResult r = make("epsilon_congruence", i, std::nullopt);
    try {
      const auto c = epsilon_congruence_check(p, q, i);
      r.status = status_of(c.holds);
      r.witness = {{"epsilon", c.epsilon}, {"betti", c.betti}, {"mu_minus", c.mu_minus}};
    } catch (const Error& e) {
      r = errored(r, e);
    }
    out.checks.push_back(std::move(r));
  } else {
    out.checks.push_back(
        not_applicable("epsilon_congruence", i, std::nullopt, "functional equation does not hold"));
  }

  // even_multiplicity, plus the multiplicities for the table
  {
    CheckResult r = make("even_multiplicity", i, std::nullopt);
    try {
      const auto m = real_root_multiplicities(p, q, i);
      summary.mu_plus = m.plus;
      summary.mu_minus = m.minus;
      if (i % 2 == 1) {
        r.status = status_of(m.plus % 2 == 0 && m.minus % 2 == 0);
        r.witness = {{"mu_plus", m.plus}, {"mu_minus", m.minus}};
      } else {
        r = not_applicable("even_multiplicity", i, std::nullopt, "even degree");
      }
    } catch (const Error& e) {
      r = errored(r, e);
    }
    out.checks.push_back(std::move(r));
  }

  std::optional<HodgePolygon> hp;
  if (model.has_hodge()) {
    try {
      hp = hodge_polygon(i, model.hodge[static_cast<std::size_t>(i)]);
    } catch (const EmptyPolygonError&) {
    }
  }
  summary.hodge = hp;

  for (const auto& prime : primes) {
    const NormalizedValuation v(prime, q);
    std::optional<NewtonPolygon> np;
    std::string np_error;
    try {
      np = newton_polygon(p, v);
      summary.newton.push_back({prime, *np});
    } catch (const Error& e) {
      np_error = e.what();
    }
    auto polygon_failure = [&](const std::string& id) {
      CheckResult r = make(id, i, prime);
      r.status = CheckStatus::fail;
      r.witness = {{"error", np_error}};
      return r;
    };

    const bool divides = v.is_normalized();
    if (!divides) {
      if (!np) {
        out.checks.push_back(polygon_failure("slope_zero"));
      } else {
        CheckResult r = make("slope_zero", i, prime);
        r.status = status_of(slope_zero_check(*np));
        r.witness = {{"vertices", vertices_to_json(np->vertices)}};
        out.checks.push_back(std::move(r));
      }
      out.checks.push_back(not_applicable("newton_symmetry", i, prime, "prime does not divide q"));
      out.checks.push_back(not_applicable("newton_over_hodge", i, prime, "prime does not divide q"));
      continue;
    }

    out.checks.push_back(not_applicable("slope_zero", i, prime, "prime divides q"));
    if (!np) {
      out.checks.push_back(polygon_failure("newton_symmetry"));
    } else {
      CheckResult r = make("newton_symmetry", i, prime);
      try {
        r.status = status_of(symmetry_check(*np, i));
        r.witness = {{"vertices", vertices_to_json(np->vertices)}};
      } catch (const Error& e) {
        r = errored(r, e);
      }
      out.checks.push_back(std::move(r));
    }

    if (!hp) {
      out.checks.push_back(not_applicable("newton_over_hodge", i, prime, "no Hodge numbers"));
    } else if (!np) {
      out.checks.push_back(polygon_failure("newton_over_hodge"));
    } else {
      CheckResult r = make("newton_over_hodge", i, prime);
      r.informational = true;
      const auto cmp = np_ge_hp(*np, *hp);
      r.status = cmp.verdict == Comparison::holds  ? CheckStatus::pass
                 : cmp.verdict == Comparison::fails ? CheckStatus::fail
                                                    : CheckStatus::incomparable;
      r.witness = {{"verdict", to_string(cmp.verdict)},
                   {"endpoints_equal", cmp.endpoints_equal},
                   {"coincide", cmp.coincide},
                   {"newton", vertices_to_json(np->vertices)},
                   {"hodge", vertices_to_json(hp->vertices)}};
      r.witness["fails_at"] = cmp.fails_at ? json(*cmp.fails_at) : json(nullptr);
      out.checks.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

VerificationReport full_report(const VarietyModel& model, const std::vector<BigInt>& primes,
                               int precision_digits) {
  if (primes.empty()) throw PreconditionError("full_report needs at least one prime");
  for (const auto& l : primes)
    if (!is_prime(l)) throw PreconditionError(l.str() + " is not prime");
  if (model.actions.size() != static_cast<std::size_t>(2 * model.dimension + 1))
    throw PreconditionError("model does not cover degrees 0..2d");

  VerificationReport report;
  report.kind = model.kind;
  report.dimension = model.dimension;
  report.q = model.q;
  report.chi = model.euler_characteristic();
  report.primes = primes;
  report.precision_digits = precision_digits;
  report.warnings = model.warnings;

  // Degrees are independent; results are gathered back in degree order.
  std::vector<std::future<DegreeOutcome>> jobs;
  for (int i = 0; i <= 2 * model.dimension; ++i)
    jobs.push_back(std::async(std::launch::async, [&model, &primes, precision_digits, i] {
      return run_degree(model, i, primes, precision_digits);
    }));
  for (auto& job : jobs) {
    DegreeOutcome outcome = job.get();
    for (auto& c : outcome.checks) report.checks.push_back(std::move(c));
    report.degrees.push_back(std::move(outcome.summary));
  }

  // top_degree
  {
    CheckResult r = make("top_degree", std::nullopt, std::nullopt);
    const auto& p0 = model.actions.front().charpoly;
    const auto& top = model.actions.back().charpoly;
    const BigInt qd = ipow(model.q, static_cast<unsigned long>(model.dimension));
    r.status = status_of(p0 == IntPolynomial::linear(BigInt(1)) && top == IntPolynomial::linear(qd));
    r.witness = {{"p_0", poly_to_json(p0)}, {"p_2d", poly_to_json(top)}};
    report.checks.push_back(std::move(r));
  }

  // polarization
  if (model.kind == ModelKind::abelian_en) {
    CheckResult r = make("polarization", std::nullopt, std::nullopt);
    r.status = status_of(model.polarization.has_value());
    if (model.polarization) r.witness = {{"D", matrix_to_json(*model.polarization)}};
    else r.witness = {{"error", "no positive-definite D with A^T D A = q D was found"}};
    report.checks.push_back(std::move(r));
  } else {
    report.checks.push_back(
        not_applicable("polarization", std::nullopt, std::nullopt, "no isogeny matrix"));
  }

  // zeta_functional_equation
  {
    CheckResult r = make("zeta_functional_equation", std::nullopt, std::nullopt);
    try {
      const auto z = zeta_functional_equation(model);
      report.zeta = z;
      r.status = status_of(z.holds());
      r.witness = {{"identity_holds", z.identity_holds},
                   {"sign", z.sign},
                   {"expected_sign", z.expected_sign},
                   {"chi", z.chi},
                   {"mu", z.mu}};
    } catch (const InapplicableModelError& e) {
      r = not_applicable("zeta_functional_equation", std::nullopt, std::nullopt, e.what());
    } catch (const Error& e) {
      r = errored(r, e);
    }
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace polarcoh
