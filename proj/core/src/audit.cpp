#include "laakso/audit.hpp"

#include <cmath>

#include "laakso/format.hpp"

namespace laakso {

AuditRecord make_audit(std::string name, std::string parameters, ComplexValue canonical,
                       ComplexValue printed, double tolerance, std::string note) {
  AuditRecord r;
  r.name = std::move(name);
  r.parameters = std::move(parameters);
  r.canonical = canonical;
  r.printed = printed;
  r.abs_diff = std::abs(canonical - printed);
  r.rel_diff = r.abs_diff / std::max(std::abs(canonical), 1e-300);
  r.tolerance = tolerance;
  r.agrees = r.rel_diff <= tolerance;
  r.note = std::move(note);
  return r;
}

AuditRecord make_exact_audit(std::string name, std::string parameters, const Rational& canonical,
                             const Rational& printed, std::string note) {
  AuditRecord r = make_audit(std::move(name), std::move(parameters), to_double(canonical),
                             to_double(printed), 0.0, std::move(note));
  r.canonical_exact = canonical;
  r.printed_exact = printed;
  r.agrees = canonical == printed;
  return r;
}

nlohmann::json to_json(const AuditRecord& r) {
  nlohmann::json j = {{"name", r.name},
                      {"parameters", r.parameters},
                      {"canonical", format_complex(r.canonical)},
                      {"printed", format_complex(r.printed)},
                      {"abs_diff", r.abs_diff},
                      {"rel_diff", r.rel_diff},
                      {"tolerance", r.tolerance},
                      {"agrees", r.agrees}};
  if (r.canonical_exact) j["canonical_exact"] = to_string(*r.canonical_exact);
  if (r.printed_exact) j["printed_exact"] = to_string(*r.printed_exact);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const std::vector<AuditRecord>& records) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : records) out.push_back(to_json(r));
  return out;
}

}  // namespace laakso
