#include <map>
#include <sstream>

#include "stabkit/cli/report.hpp"

namespace stabkit::cli {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "dot") return Format::Dot;
  throw SpecError(0, "--format", "expected text, json or dot");
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat(const Json& j) {
  if (is_scalar(j)) return true;
  if (j.is_object()) return j.empty();
  for (const auto& e : j)
    if (!is_flat(e)) return false;
  return true;
}

std::string inline_value(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object()) return "{}";
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_value(j[i]);
    return s + "]";
  }
  return j.dump();
}

void write_block(std::ostringstream& out, const Json& j, int indent);

void write_member(std::ostringstream& out, const std::string& key, const Json& v, int indent) {
  out << std::string(static_cast<std::size_t>(indent), ' ') << key << ":";
  if (is_flat(v)) {
    out << ' ' << inline_value(v) << '\n';
  } else {
    out << '\n';
    write_block(out, v, indent + 2);
  }
}

void write_block(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) write_member(out, it.key(), it.value(), indent);
    return;
  }
  for (const auto& e : j) {
    if (is_flat(e)) {
      out << pad << "- " << inline_value(e) << '\n';
    } else if (e.is_object()) {
      // First member on the dash line, the rest aligned under it.
      bool first = true;
      for (auto it = e.begin(); it != e.end(); ++it) {
        std::ostringstream member;
        write_member(member, it.key(), it.value(), indent + 2);
        std::string text = member.str();
        if (first) text.replace(0, static_cast<std::size_t>(indent + 2), pad + "- ");
        out << text;
        first = false;
      }
    } else {
      out << pad << "-\n";
      write_block(out, e, indent + 2);
    }
  }
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string emit_dot(const Report& r) {
  if (r.doc.value("command", "") != "strata" || !r.doc.contains("summary") || !r.doc["summary"].contains("indices"))
    throw Error(ErrorCode::UnsupportedFormat, "dot output is only available for strata reports");
  // Group strata by m^2; closure edges run from each level to the next larger one.
  std::map<Rational, std::vector<std::size_t>> levels;
  const Json& idx = r.doc["summary"]["indices"];
  for (std::size_t i = 0; i < idx.size(); ++i) levels[Rational::parse(idx[i]["m_squared"].get<std::string>())].push_back(i);
  std::ostringstream out;
  out << "digraph strata {\n";
  out << "  node [shape=box];\n";
  out << "  \"ss\" [label=\"ss\"];\n";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    std::string label = "m=" + idx[i]["m"].get<std::string>() + "\\nlambda=" + inline_value(idx[i]["lambda"]);
    out << "  " << dot_quote("s" + std::to_string(i)) << " [label=\"" << label << "\"];\n";
  }
  std::vector<std::string> previous{"ss"};
  for (const auto& [m2, members] : levels) {
    std::vector<std::string> names;
    for (std::size_t i : members) names.push_back("s" + std::to_string(i));
    for (const auto& from : previous)
      for (const auto& to : names) out << "  " << dot_quote(from) << " -> " << dot_quote(to) << ";\n";
    previous = names;
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string emit(const Report& report, Format format) {
  switch (format) {
    case Format::Json: return report.doc.dump(2) + "\n";
    case Format::Dot: return emit_dot(report);
    case Format::Text: {
      std::ostringstream out;
      write_block(out, report.doc, 0);
      return out.str();
    }
  }
  return {};
}

Report parse_report(const std::string& json_text) {
  Report r;
  r.doc = Json::parse(json_text);
  return r;
}

}  // namespace stabkit::cli
