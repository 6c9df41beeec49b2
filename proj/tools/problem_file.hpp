#pragma once

// JSON problem files and reports for the mld command line tool.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mld/mld.hpp"

namespace mld::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Unreadable file, malformed JSON or a schema violation. `where` is a JSON
/// pointer to the offending value.
class ProblemFileError : public std::runtime_error {
 public:
  ProblemFileError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what) {}
};

struct ProblemFile {
  Json doc;
  std::string bytes;
};

ProblemFile read_problem_file(const std::string& path);
ProblemFile parse_problem_text(std::string text);

/// Checks key names and value types; unknown keys are rejected.
void validate_schema(const Json& doc);

/// 64-bit FNV-1a of the raw input, as "fnv1a64:<16 hex digits>".
std::string input_hash(const std::string& bytes);

bool is_symmetric_ambient(const Json& doc);

/// ProblemSpec for `compute`: projective ambient with ring.variables and F,
/// or symmetric ambient (F defaults to det).
ProblemSpec build_spec(const Json& doc);
/// Defaults plus the option fields (seed, methods, flags, ...) of `doc`.
ProblemSpec build_options(const Json& doc);
std::vector<RationalMatrix> build_basis(const Json& doc);
DiscreteSpec build_discrete(const Json& doc);
IntersectionTable build_table(const Json& table);

struct ReportOptions {
  std::string command;
  std::string hash;
  /// Drop timings and the tool version so reports compare byte for byte.
  bool normalize = false;
};

Json count_json(const mpz_class& n);
Json report_json(const MldReport& report, const ReportOptions& opts);
/// Header shared by every report: schema_version, tool, version, command,
/// input_hash.
Json report_header(const ReportOptions& opts);

}  // namespace mld::cli
