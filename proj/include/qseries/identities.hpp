#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/error.hpp"
#include "qseries/scalar.hpp"

namespace qseries {

// Deterministic stream for one sample of one case.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::string_view case_id, std::uint64_t index);

  std::uint64_t next();
  Real uniform(Real lo, Real hi);
  std::int64_t integer(std::int64_t lo, std::int64_t hi);  // inclusive
  // Modulus uniform in [lo, hi], phase uniform in [0, 2 pi).
  Complex polar(Real lo, Real hi);

 private:
  std::uint64_t state_;
};

// Named parameter values for one draw.
class Sample {
 public:
  struct Entry {
    std::string name;
    Complex value;
    bool integer = false;
  };

  void set(std::string name, Complex v);
  void set_int(std::string name, std::int64_t v);

  Complex c(std::string_view name) const;
  std::int64_t i(std::string_view name) const;
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  const Entry& find(std::string_view name) const;
  std::vector<Entry> entries_;
};

// Per-evaluation settings and bookkeeping shared by both sides.
struct EvalContext {
  Truncation trunc;
  std::size_t max_tail = 0;  // deepest tail of any two-sided sum evaluated

  void note_tail(std::size_t n) {
    if (n > max_tail) max_tail = n;
  }
};

enum class CaseStatus { ExpectedPass, Flagged };
const char* to_string(CaseStatus s);

struct IdentityCase {
  using Draw = std::function<std::optional<Sample>(SampleRng&)>;
  using Side = std::function<Complex(const Sample&, EvalContext&)>;

  std::string id;
  char group = 'A';
  CaseStatus status = CaseStatus::ExpectedPass;
  std::string anchor;  // verbatim formula quote
  Draw draw;           // nullopt when the structural filter rejects the draw
  Side lhs;
  Side rhs;
};

// Every registered case, in a fixed order.
const std::vector<IdentityCase>& registry();
const IdentityCase& find_case(std::string_view id);  // UnknownIdentity

enum class SampleStatus { Pass, Fail, Skipped, Error };
const char* to_string(SampleStatus s);

struct SampleResult {
  std::size_t index = 0;
  Sample params;
  Complex lhs{0, 0};
  Complex rhs{0, 0};
  Real abs_err = 0;
  Real rel_err = 0;
  SampleStatus status = SampleStatus::Skipped;
  std::size_t max_tail = 0;
  std::string message;
};

struct ReportSummary {
  std::size_t n_pass = 0;
  std::size_t n_fail = 0;
  std::size_t n_skipped = 0;
  std::size_t n_error = 0;
  Real max_rel_err = 0;
};

struct VerificationReport {
  std::string case_id;
  char group = 'A';
  CaseStatus status = CaseStatus::ExpectedPass;
  std::string anchor;
  std::vector<SampleResult> samples;
  ReportSummary summary;
  std::size_t max_tail = 0;
  double wall_time = 0;  // seconds

  bool failed() const { return summary.n_fail + summary.n_error > 0; }
};

struct VerifyOptions {
  std::size_t n_samples = 25;
  std::uint64_t seed = 42;
  Real tol = 1e-7;
  Real abs_tol = 1e-14;  // used only when both sides are below 1e-12
  std::size_t max_attempts = 100;
  Truncation trunc;
};

// Classification rule shared by verify and the tests.
SampleStatus classify(Complex lhs, Complex rhs, Real tol, Real abs_tol, Real* abs_err,
                      Real* rel_err);

VerificationReport verify(const IdentityCase& c, const VerifyOptions& opt);
VerificationReport verify(std::string_view case_id, const VerifyOptions& opt);

// Runs the given cases (all when empty) on `jobs` threads; the result
// follows registry order whatever the schedule.
std::vector<VerificationReport> verify_all(const VerifyOptions& opt, unsigned jobs = 0,
                                           const std::vector<std::string>& ids = {});

// True when no expected-pass case failed or errored.
bool all_expected_pass(const std::vector<VerificationReport>& reports);

// Evaluates both sides strictly: false when either raises DomainError,
// PoleError, DivergenceDetected or BudgetExceeded. Independent of the
// structural filter inside each case's draw.
bool sample_in_domain(const IdentityCase& c, const Sample& s, const Truncation& trunc = {});

}  // namespace qseries
