#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "stabkit/cli/report.hpp"

using namespace stabkit;
using namespace stabkit::cli;

namespace {

constexpr int kOk = 0;
constexpr int kQueryError = 1;
constexpr int kParseError = 2;

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError(0, path, "cannot read file");
  return read_all(in);
}

void report_parse_error(const SpecError& e, const std::string& source) {
  std::cerr << "ParseError: " << source;
  if (e.line() > 0) std::cerr << ":" << e.line();
  if (!e.path().empty()) std::cerr << " at " << e.path();
  std::cerr << ": " << e.what() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stability, strata and invariants for torus and graded unipotent actions"};
  app.require_subcommand(1);
  std::string input, format = "text", norm_file, weyl = "none", epsilon = "1/100";
  unsigned bound = 6, jobs = 1;
  const char* names[] = {"classify", "strata", "invariants", "lnd", "nrgit", "corpus"};
  const char* help[] = {"Hilbert-Mumford and King classification of points",
                        "Instability strata: indices, quotient reports, point membership",
                        "Hilbert basis, semi-invariants, or LND kernel and slice data",
                        "Derivation queries: apply, exp, invariants, slices, fixed points",
                        "Graded unipotent actions: Z_min, twists, [U]_0, sweeps, stable sets",
                        "Worked-example oracles: binary forms, Grassmannian, GL2 conjugation"};
  for (int i = 0; i < 6; ++i) {
    auto* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("--input", input, "Spec file (JSON); stdin when omitted");
    sub->add_option("--format", format, "text | json | dot")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--norm", norm_file, "JSON integer matrix for the invariant norm (default identity)");
    sub->add_option("--weyl", weyl, "Weyl folding: none | sym | sign")->check(CLI::IsMember({"none", "sym", "sign"}));
    sub->add_option("--epsilon", epsilon, "Well-adapted parameter p/q in (0, 1)");
    sub->add_option("--bound", bound, "Degree and nilpotency bound");
    sub->add_option("--jobs", jobs, "Worker threads for independent queries")->check(CLI::Range(1u, 256u));
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  const std::string source = input.empty() ? "<stdin>" : input;
  RunOptions opt;
  Report report;
  Format fmt;
  try {
    opt.command = parse_command(app.get_subcommands().front()->get_name());
    fmt = parse_format(format);
    opt.weyl = weyl;
    opt.bound = bound;
    opt.jobs = jobs;
    try {
      opt.epsilon = Rational::parse(epsilon);
    } catch (const Error&) {
      throw SpecError(0, "--epsilon", "malformed rational '" + epsilon + "'");
    }
    if (!norm_file.empty()) opt.norm = parse_norm_matrix(read_file(norm_file));
    const std::string text = input.empty() ? read_all(std::cin) : read_file(input);
    const ActionSpec spec = parse_spec(text);
    report = run(spec, opt);
  } catch (const SpecError& e) {
    report_parse_error(e, source);
    return kParseError;
  } catch (const Error& e) {
    std::cerr << error_code_name(e.code()) << ": " << e.what() << "\n";
    return kQueryError;
  }
  try {
    std::cout << emit(report, fmt);
  } catch (const Error& e) {
    std::cerr << error_code_name(e.code()) << ": " << e.what() << "\n";
    return kQueryError;
  }
  return report.has_query_error() ? kQueryError : kOk;
}
