#ifndef POLARCOH_COMMANDS_HPP
#define POLARCOH_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polarcoh/exactnum.hpp"

// Subcommand bodies behind the command-line front end. Each returns the
// process exit status.
namespace polarcoh {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_input_error = 2, exit_internal_error = 3 };

struct OutputOptions {
  bool quiet = false;      // no human-readable text
  bool json_only = false;  // JSON on stdout and nothing else
};

struct VerifyOptions {
  std::string input;
  std::vector<std::string> primes{"2", "3", "5"};
  int precision = 60;
  std::optional<std::string> out;
};

struct PolygonOptions {
  std::string input;
  std::string prime;
  int degree = 1;
  std::optional<std::string> svg;
};

struct ZetaOptions {
  std::string input;
  int order = 6;
};

int cmd_verify(const VerifyOptions& options, const OutputOptions& output, std::ostream& out,
               std::ostream& err);
int cmd_polygons(const PolygonOptions& options, const OutputOptions& output, std::ostream& out,
                 std::ostream& err);
int cmd_zeta(const ZetaOptions& options, const OutputOptions& output, std::ostream& out,
             std::ostream& err);
// Prints the model descriptor schema, or the report schema.
int cmd_schema(bool report, std::ostream& out);

const char* descriptor_schema();
const char* report_schema();

}  // namespace polarcoh

#endif  // POLARCOH_COMMANDS_HPP
