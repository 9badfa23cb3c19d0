#pragma once

#include <optional>
#include <string>

#include "stabkit/cli/spec.hpp"

namespace stabkit::cli {

enum class Command { Classify, Strata, Invariants, Lnd, Nrgit, Corpus };
const char* to_string(Command c);
// Throws SpecError for an unknown name.
Command parse_command(const std::string& name);

struct RunOptions {
  Command command = Command::Classify;
  std::optional<IntMatrix> norm;  // identity when absent
  std::string weyl = "none";      // none | sym | sign
  Rational epsilon{1, 100};
  unsigned bound = 6;
  unsigned jobs = 1;
};

// A report is an ordered JSON document: command, kind, summary, results.
// Each result echoes its query and holds either the answer or an error
// object {code, message}.
struct Report {
  Json doc;
  bool has_query_error() const;
};

// Throws SpecError when the command does not accept the spec's kind, and
// Error for failures that concern the whole run (e.g. NotWeylInvariant).
Report run(const ActionSpec& spec, const RunOptions& options);

enum class Format { Text, Json, Dot };
// Throws SpecError for an unknown name.
Format parse_format(const std::string& name);

// Throws Error(UnsupportedFormat) for dot on anything but a strata report.
std::string emit(const Report& report, Format format);

// Inverse of emit(report, Format::Json).
Report parse_report(const std::string& json_text);

}  // namespace stabkit::cli
