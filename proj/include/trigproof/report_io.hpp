#pragma once

#include <string>
#include <vector>

#include "trigproof/audit.hpp"
#include "trigproof/engine.hpp"
#include "trigproof/figure.hpp"

namespace trigproof {

// Deterministic renderers: object keys appear sorted, doubles carry 17
// significant digits, output is byte-identical across runs for identical
// inputs.

std::string json_escape(const std::string& s);
std::string json_double(double v);

std::string verify_report_json(const VerifyReport& rep);
std::string verify_report_text(const VerifyReport& rep);

std::string residual_report_json(const ResidualReport& rep);
std::string residual_report_text(const ResidualReport& rep);

std::string audit_verdict_json(const AuditVerdict& v);
std::string audit_verdict_text(const AuditVerdict& v);

std::string figure_dump_json(const Figure& fig);

}  // namespace trigproof
