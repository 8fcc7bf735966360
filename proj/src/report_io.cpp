#include "trigproof/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace trigproof {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string json_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string quoted(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string string_array(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += quoted(v[i]);
  }
  return out + "]";
}

}  // namespace

std::string verify_report_json(const VerifyReport& rep) {
  std::ostringstream os;
  os << "{\"accepted\":" << (rep.accepted ? "true" : "false")
     << ",\"figure\":" << quoted(rep.figure)
     << ",\"invoked\":" << string_array(rep.invoked)
     << ",\"lemma_id\":" << quoted(rep.lemma_id)
     << ",\"notes\":" << string_array(rep.notes)
     << ",\"reject_reason\":" << quoted(rep.reject_reason) << ",\"steps\":[";
  for (std::size_t i = 0; i < rep.steps.size(); ++i) {
    const auto& s = rep.steps[i];
    if (i) os << ",";
    os << "{\"detail\":" << quoted(s.detail) << ",\"kind\":" << quoted(s.kind)
       << ",\"label\":" << quoted(s.label)
       << ",\"status\":" << quoted(s.status) << "}";
  }
  os << "]}";
  return os.str();
}

std::string verify_report_text(const VerifyReport& rep) {
  std::ostringstream os;
  os << "script " << rep.lemma_id << ": "
     << (rep.accepted ? "ACCEPTED" : "REJECTED");
  if (!rep.figure.empty()) os << " [" << rep.figure << "]";
  os << "\n";
  for (const auto& s : rep.steps) {
    os << "  " << s.kind << " " << s.label << ": " << s.status;
    if (!s.detail.empty()) os << " (" << s.detail << ")";
    os << "\n";
  }
  if (!rep.accepted) os << "  reason: " << rep.reject_reason << "\n";
  os << "  invoked:";
  for (const auto& id : rep.invoked) os << " " << id;
  os << "\n";
  for (const auto& n : rep.notes) os << "  note: " << n << "\n";
  return os.str();
}

std::string residual_report_json(const ResidualReport& rep) {
  std::ostringstream os;
  os << "{\"checks\":[";
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    const auto& c = rep.checks[i];
    if (i) os << ",";
    os << "{\"expected\":" << json_double(c.expected)
       << ",\"expected_expr\":" << quoted(c.expected_expr)
       << ",\"measured\":" << json_double(c.measured)
       << ",\"name\":" << quoted(c.name)
       << ",\"residual\":" << json_double(c.residual) << "}";
  }
  os << "],\"figure_id\":" << quoted(rep.figure_id)
     << ",\"flags\":" << string_array(rep.flags)
     << ",\"max_residual\":" << json_double(rep.max_residual) << ",\"params\":{";
  bool first = true;
  for (const auto& [k, v] : rep.params) {
    if (!first) os << ",";
    first = false;
    os << quoted(k) << ":" << json_double(v);
  }
  os << "}}";
  return os.str();
}

std::string residual_report_text(const ResidualReport& rep) {
  std::ostringstream os;
  os << "figure " << rep.figure_id << " (";
  bool first = true;
  for (const auto& [k, v] : rep.params) {
    if (!first) os << ", ";
    first = false;
    os << k << "=" << json_double(v);
  }
  os << ") max residual " << json_double(rep.max_residual) << "\n";
  for (const auto& c : rep.checks)
    os << "  " << c.name << ": residual " << json_double(c.residual) << "\n";
  for (const auto& f : rep.flags) os << "  flag: " << f << "\n";
  return os.str();
}

std::string audit_verdict_json(const AuditVerdict& v) {
  std::ostringstream os;
  os << "{\"ancestors\":" << string_array(v.ancestor_set)
     << ",\"external_provenance_flags\":"
     << string_array(v.external_provenance_flags)
     << ",\"forbidden\":" << quoted(v.forbidden)
     << ",\"reachable\":" << (v.reachable ? "true" : "false")
     << ",\"target\":" << quoted(v.target)
     << ",\"witness_path\":" << string_array(v.witness_path) << "}";
  return os.str();
}

std::string audit_verdict_text(const AuditVerdict& v) {
  std::ostringstream os;
  os << "audit " << v.target << " against " << v.forbidden << ": "
     << (v.reachable ? "REACHABLE" : "not reachable") << "\n";
  if (v.reachable) {
    os << "  witness:";
    for (const auto& id : v.witness_path) os << " " << id;
    os << "\n";
  }
  os << "  ancestors (" << v.ancestor_set.size() << "):";
  for (const auto& id : v.ancestor_set) os << " " << id;
  os << "\n";
  if (!v.external_provenance_flags.empty()) {
    os << "  external-provenance ancestors:";
    for (const auto& id : v.external_provenance_flags) os << " " << id;
    os << "\n";
  }
  return os.str();
}

std::string figure_dump_json(const Figure& fig) {
  std::ostringstream os;
  os << "{\"id\":" << quoted(fig.id) << ",\"params\":{";
  bool first = true;
  for (const auto& [k, v] : fig.params) {
    if (!first) os << ",";
    first = false;
    os << quoted(k) << ":" << json_double(v);
  }
  os << "},\"points\":{";
  first = true;
  for (const auto& [k, p] : fig.points) {
    if (!first) os << ",";
    first = false;
    os << quoted(k) << ":[" << json_double(p.x()) << "," << json_double(p.y())
       << "]";
  }
  os << "},\"quantities\":{";
  first = true;
  for (const auto& [k, v] : fig.quantities) {
    if (!first) os << ",";
    first = false;
    os << quoted(k) << ":" << json_double(v);
  }
  os << "}}";
  return os.str();
}

}  // namespace trigproof
