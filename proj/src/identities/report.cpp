#include "qseries/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "qseries/complex_literal.hpp"

namespace qseries {

namespace {

using Json = nlohmann::ordered_json;

Json num(Real v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

Json cnum(Complex v) { return Json{{"re", num(v.real())}, {"im", num(v.imag())}}; }

Json params_json(const Sample& s) {
  Json p = Json::object();
  for (const auto& e : s.entries()) {
    if (e.integer) {
      p[e.name] = static_cast<std::int64_t>(e.value.real());
    } else {
      p[e.name] = cnum(e.value);
    }
  }
  return p;
}

std::string params_text(const Sample& s) {
  std::string out;
  for (const auto& e : s.entries()) {
    if (!out.empty()) out += ';';
    out += e.name + '=';
    out += e.integer ? std::to_string(static_cast<std::int64_t>(e.value.real()))
                     : format_complex(e.value);
  }
  return out;
}

std::string real_text(Real v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc() ? std::string(buf, ptr) : "nan";
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string report_json(const std::vector<VerificationReport>& reports, const VerifyOptions& opt) {
  Json cases = Json::array();
  for (const auto& r : reports) {
    Json samples = Json::array();
    for (const auto& s : r.samples) {
      Json js{{"index", s.index},         {"status", to_string(s.status)},
              {"params", params_json(s.params)}, {"lhs", cnum(s.lhs)},
              {"rhs", cnum(s.rhs)},         {"abs_err", num(s.abs_err)},
              {"rel_err", num(s.rel_err)},  {"max_tail", s.max_tail}};
      if (!s.message.empty()) js["message"] = s.message;
      samples.push_back(std::move(js));
    }
    const auto& sm = r.summary;
    cases.push_back(Json{{"case_id", r.case_id},
                         {"group", std::string(1, r.group)},
                         {"status", to_string(r.status)},
                         {"anchor", r.anchor},
                         {"summary",
                          {{"n_pass", sm.n_pass},
                           {"n_fail", sm.n_fail},
                           {"n_skipped", sm.n_skipped},
                           {"n_error", sm.n_error},
                           {"max_rel_err", num(sm.max_rel_err)}}},
                         {"max_tail", r.max_tail},
                         {"samples", std::move(samples)}});
  }
  Json doc{{"seed", opt.seed},
           {"tol", opt.tol},
           {"n_samples", opt.n_samples},
           {"cases", std::move(cases)}};
  return doc.dump(2) + "\n";
}

std::string report_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "case_id,group,case_status,sample,status,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,"
        "max_tail,params,message\n";
  for (const auto& r : reports) {
    for (const auto& s : r.samples) {
      os << r.case_id << ',' << r.group << ',' << to_string(r.status) << ',' << s.index << ','
         << to_string(s.status) << ',' << real_text(s.lhs.real()) << ','
         << real_text(s.lhs.imag()) << ',' << real_text(s.rhs.real()) << ','
         << real_text(s.rhs.imag()) << ',' << real_text(s.abs_err) << ','
         << real_text(s.rel_err) << ',' << s.max_tail << ',' << csv_quote(params_text(s.params))
         << ',' << csv_quote(s.message) << '\n';
    }
  }
  return os.str();
}

std::string report_text(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  std::size_t bad = 0, flagged = 0;
  char line[256];
  for (const auto& r : reports) {
    const auto& sm = r.summary;
    const bool expected = r.status == CaseStatus::ExpectedPass;
    const char* verdict = !r.failed() ? "ok" : (expected ? "FAIL" : "mismatch");
    if (expected && r.failed()) ++bad;
    if (!expected) ++flagged;
    std::snprintf(line, sizeof line,
                  "%-36s %c %-13s pass %3zu fail %3zu skip %3zu err %3zu  max_rel %.2e  tail %4zu  "
                  "%.3fs  %s\n",
                  r.case_id.c_str(), r.group, to_string(r.status), sm.n_pass, sm.n_fail,
                  sm.n_skipped, sm.n_error, sm.max_rel_err, r.max_tail, r.wall_time, verdict);
    os << line;
    for (const auto& s : r.samples) {
      if (s.status == SampleStatus::Error && !s.message.empty()) {
        os << "    sample " << s.index << ": " << s.message << '\n';
        break;
      }
    }
  }
  os << reports.size() << " cases, " << flagged << " flagged, " << bad
     << " expected-pass cases failing\n";
  return os.str();
}

}  // namespace qseries
