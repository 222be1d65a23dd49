#include <unordered_set>

#include "identities/cases.hpp"

namespace qseries {

namespace {

std::vector<IdentityCase> build() {
  std::vector<IdentityCase> out;
  cases::add_group_a(out);
  cases::add_group_b(out);
  cases::add_group_c(out);
  cases::add_group_d(out);
  cases::add_group_e(out);
  std::unordered_set<std::string> seen;
  for (const auto& c : out) {
    if (!seen.insert(c.id).second) throw std::logic_error("duplicate identity id " + c.id);
  }
  return out;
}

}  // namespace

const char* to_string(CaseStatus s) {
  return s == CaseStatus::ExpectedPass ? "expected-pass" : "flagged";
}

const std::vector<IdentityCase>& registry() {
  static const std::vector<IdentityCase> all = build();
  return all;
}

const IdentityCase& find_case(std::string_view id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw UnknownIdentity("unknown identity id: " + std::string(id));
}

}  // namespace qseries
