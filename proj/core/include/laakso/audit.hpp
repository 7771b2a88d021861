#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "laakso/pole.hpp"
#include "laakso/rational.hpp"

namespace laakso {

// Side-by-side record of a canonical value and a printed closed form.
struct AuditRecord {
  std::string name;
  std::string parameters;
  ComplexValue canonical;
  ComplexValue printed;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  double tolerance = 0.0;
  bool agrees = false;
  std::optional<Rational> canonical_exact;
  std::optional<Rational> printed_exact;
  std::string note;
};

AuditRecord make_audit(std::string name, std::string parameters, ComplexValue canonical,
                       ComplexValue printed, double tolerance = 1e-9, std::string note = {});

// Exact comparison; agrees only on equality.
AuditRecord make_exact_audit(std::string name, std::string parameters, const Rational& canonical,
                             const Rational& printed, std::string note = {});

nlohmann::json to_json(const AuditRecord& record);
nlohmann::json to_json(const std::vector<AuditRecord>& records);

}  // namespace laakso
