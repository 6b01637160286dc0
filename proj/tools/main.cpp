#include <CLI11.hpp>

#include <iostream>

#include "polarcoh/commands.hpp"

int main(int argc, char** argv) {
  using namespace polarcoh;
  CLI::App app{"Weil-type checks for polarized endomorphism models"};
  app.require_subcommand(1);
  app.fallthrough();

  OutputOptions output;
  app.add_flag("--quiet", output.quiet, "Suppress human-readable output");
  app.add_flag("--json-only", output.json_only, "Print JSON only");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run every check and write a JSON report");
  verify_cmd->add_option("input", verify.input, "Model descriptor (JSON)")->required();
  verify_cmd->add_option("--primes", verify.primes, "Comma-separated primes")->delimiter(',');
  verify_cmd->add_option("--precision", verify.precision, "Working precision in digits")->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "Report path (default: stdout)");

  PolygonOptions polygons;
  auto* polygons_cmd = app.add_subcommand("polygons", "Newton and Hodge polygons of one degree");
  polygons_cmd->add_option("input", polygons.input, "Model descriptor (JSON)")->required();
  polygons_cmd->add_option("--prime", polygons.prime, "Prime for the valuation")->required();
  polygons_cmd->add_option("--degree", polygons.degree, "Cohomological degree")->capture_default_str();
  polygons_cmd->add_option("--svg", polygons.svg, "Write an SVG rendering here");

  ZetaOptions zeta;
  auto* zeta_cmd = app.add_subcommand("zeta", "Zeta function and its functional equation");
  zeta_cmd->add_option("input", zeta.input, "Model descriptor (JSON)")->required();
  zeta_cmd->add_option("--order", zeta.order, "Series check order")->capture_default_str();

  bool report_schema = false;
  auto* schema_cmd = app.add_subcommand("schema", "Print the model descriptor JSON schema");
  schema_cmd->add_flag("--report", report_schema, "Print the report schema instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input_error;
  }

  if (verify_cmd->parsed()) return cmd_verify(verify, output, std::cout, std::cerr);
  if (polygons_cmd->parsed()) return cmd_polygons(polygons, output, std::cout, std::cerr);
  if (zeta_cmd->parsed()) return cmd_zeta(zeta, output, std::cout, std::cerr);
  return cmd_schema(report_schema, std::cout);
}
