#include "polarcoh/commands.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>

#include "polarcoh/serialize.hpp"
#include "polarcoh/svg.hpp"

namespace polarcoh {

namespace {

// Input problems (bad JSON, invalid model, bad flags) exit with 2; anything
// else escaping a command is an internal error.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const InconsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal_error;
  } catch (const NumericError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_internal_error;
  }
}

BigInt parse_prime(const std::string& text) {
  const BigInt p = parse_bigint(text);
  if (!is_prime(p)) throw ParseError(text + " is not prime");
  return p;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + path);
  file << content;
}

}  // namespace

int cmd_verify(const VerifyOptions& options, const OutputOptions& output, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    if (options.precision < 30) throw ParseError("--precision must be at least 30");
    if (options.primes.empty()) throw ParseError("--primes needs at least one prime");
    std::vector<BigInt> primes;
    for (const auto& p : options.primes) primes.push_back(parse_prime(p));
    const VarietyModel model = load_model(options.input);
    const VerificationReport report = full_report(model, primes, options.precision);
    const std::string text = report_to_json(report).dump(2) + "\n";

    if (options.out) write_file(*options.out, text);
    if (!options.out || output.json_only) out << text;

    if (!output.quiet && !output.json_only) {
      std::ostream& human = options.out ? out : err;
      human << to_string(model.kind) << " model, d = " << model.dimension << ", q = " << model.q
            << ", chi = " << report.chi << '\n';
      for (const auto& w : report.warnings) human << "warning: " << w << '\n';
      for (const auto& row : report.degrees) {
        human << "  H^" << std::left << std::setw(3) << row.degree << std::right << " b = " << std::setw(3)
              << row.betti << "  eps = " << (row.epsilon ? std::to_string(*row.epsilon) : "-") << "  P = "
              << to_string(row.charpoly) << '\n';
      }
      for (const auto& c : report.checks) {
        if (c.status != CheckStatus::fail) continue;
        human << (c.informational ? "  note: " : "  FAIL: ") << c.check;
        if (c.degree) human << " degree " << *c.degree;
        if (c.prime) human << " prime " << *c.prime;
        human << ' ' << c.witness.dump() << '\n';
      }
      human << report.count(CheckStatus::pass) << " pass, " << report.count(CheckStatus::fail) << " fail, "
            << report.count(CheckStatus::not_applicable) << " not-applicable, "
            << report.count(CheckStatus::incomparable) << " incomparable\n";
    }
    return report.has_failures() ? exit_failed : exit_ok;
  });
}

int cmd_polygons(const PolygonOptions& options, const OutputOptions& output, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const BigInt prime = parse_prime(options.prime);
    const VarietyModel model = load_model(options.input);
    const int top = 2 * model.dimension;
    if (options.degree < 0 || options.degree > top)
      throw ParseError("--degree must lie in 0.." + std::to_string(top));
    const int i = options.degree;
    const auto& action = model.actions[static_cast<std::size_t>(i)];
    if (action.betti == 0) throw ParseError("H^" + std::to_string(i) + " is zero; no polygon to draw");

    const NormalizedValuation v(prime, model.q);
    const NewtonPolygon np = newton_polygon(action.charpoly, v);
    std::optional<HodgePolygon> hp;
    if (model.has_hodge()) {
      try {
        hp = hodge_polygon(i, model.hodge[static_cast<std::size_t>(i)]);
      } catch (const EmptyPolygonError&) {
      }
    }

    json doc;
    doc["degree"] = i;
    doc["prime"] = prime.str();
    doc["newton"] = polygon_to_json(np);
    doc["newton"]["normalized"] = np.normalized;
    doc["hodge"] = hp ? polygon_to_json(*hp) : json(nullptr);
    json comparison = nullptr;
    if (hp) {
      const auto cmp = np_ge_hp(np, *hp);
      comparison = {{"verdict", to_string(cmp.verdict)},
                    {"endpoints_equal", cmp.endpoints_equal},
                    {"coincide", cmp.coincide}};
      comparison["fails_at"] = cmp.fails_at ? json(*cmp.fails_at) : json(nullptr);
    }
    doc["comparison"] = comparison;

    if (options.svg) {
      const std::string title = "H^" + std::to_string(i) + ", prime " + prime.str() + ", q = " + model.q.str();
      write_file(*options.svg, render_polygons_svg(doc["newton"]["vertices"],
                                                   hp ? doc["hodge"]["vertices"] : json(nullptr), title));
    }
    if (output.json_only || !output.quiet) out << doc.dump(2) << '\n';
    return exit_ok;
  });
}

int cmd_zeta(const ZetaOptions& options, const OutputOptions& output, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    if (options.order < 1) throw ParseError("--order must be positive");
    const VarietyModel model = load_model(options.input);
    const ZetaFunction zeta = zeta_function(model);
    std::optional<ZetaFunctionalEquation> fe;
    std::string inapplicable;
    try {
      fe = zeta_functional_equation(model);
    } catch (const InapplicableModelError& e) {
      inapplicable = e.what();
    }
    const SeriesConsistency series = zeta_series_consistency(model, options.order);

    json doc = zeta_to_json(zeta, fe);
    doc["expected_sign"] = fe ? json(fe->expected_sign) : json(nullptr);
    doc["functional_equation"] = fe ? json(fe->holds() ? "pass" : "fail") : json("not-applicable");
    json lefschetz = json::array();
    for (const auto& n : series.lefschetz) lefschetz.push_back(n.str());
    doc["series"] = {{"order", options.order}, {"consistent", series.consistent}, {"lefschetz", lefschetz}};
    doc["series"]["first_mismatch"] = series.first_mismatch ? json(*series.first_mismatch) : json(nullptr);

    if (output.json_only) {
      out << doc.dump(2) << '\n';
    } else if (!output.quiet) {
      out << "numerator:   " << to_string(zeta.numerator) << '\n'
          << "denominator: " << to_string(zeta.denominator) << '\n'
          << "chi:         " << zeta.chi << '\n';
      if (fe)
        out << "sign:        " << fe->sign << " (expected " << fe->expected_sign << ", "
            << (fe->holds() ? "pass" : "fail") << ")\n";
      else
        out << "sign:        not applicable (" << inapplicable << ")\n";
      out << "series:      " << (series.consistent ? "consistent" : "inconsistent") << " through order "
          << options.order << '\n';
      out << "N_n:        ";
      for (const auto& n : series.lefschetz) out << ' ' << n;
      out << '\n';
    }
    const bool failed = !series.consistent || (fe && !fe->holds());
    return failed ? exit_failed : exit_ok;
  });
}

int cmd_schema(bool report, std::ostream& out) {
  out << (report ? report_schema() : descriptor_schema());
  return exit_ok;
}

}  // namespace polarcoh
