#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "qseries/identities.hpp"

namespace qseries {

namespace {

constexpr Real kRelFloor = 1e-300;
constexpr Real kTinySide = 1e-12;

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

SampleResult run_sample(const IdentityCase& c, const VerifyOptions& opt, std::size_t index,
                        std::uint64_t seed) {
  SampleResult res;
  res.index = index;
  SampleRng rng(seed, c.id, index);
  for (std::size_t attempt = 0; attempt < opt.max_attempts; ++attempt) {
    std::optional<Sample> s = c.draw(rng);
    if (!s) continue;
    EvalContext ctx{opt.trunc};
    Complex l, r;
    try {
      l = c.lhs(*s, ctx);
      r = c.rhs(*s, ctx);
    } catch (const DomainError&) {
      continue;
    } catch (const PoleError&) {
      continue;
    } catch (const std::exception& e) {
      res.params = std::move(*s);
      res.status = SampleStatus::Error;
      res.max_tail = ctx.max_tail;
      res.message = e.what();
      return res;
    }
    res.params = std::move(*s);
    res.lhs = l;
    res.rhs = r;
    res.max_tail = ctx.max_tail;
    if (!finite(l) || !finite(r)) {
      res.status = SampleStatus::Error;
      res.message = "non-finite value";
      return res;
    }
    res.status = classify(l, r, opt.tol, opt.abs_tol, &res.abs_err, &res.rel_err);
    return res;
  }
  res.status = SampleStatus::Skipped;
  res.message = "no admissible sample after " + std::to_string(opt.max_attempts) + " attempts";
  return res;
}

}  // namespace

const char* to_string(SampleStatus s) {
  switch (s) {
    case SampleStatus::Pass: return "pass";
    case SampleStatus::Fail: return "fail";
    case SampleStatus::Skipped: return "skipped";
    case SampleStatus::Error: return "error";
  }
  return "?";
}

SampleStatus classify(Complex lhs, Complex rhs, Real tol, Real abs_tol, Real* abs_err,
                      Real* rel_err) {
  const Real ae = std::abs(lhs - rhs);
  const Real re = ae / std::max({std::abs(lhs), std::abs(rhs), kRelFloor});
  if (abs_err) *abs_err = ae;
  if (rel_err) *rel_err = re;
  if (re <= tol) return SampleStatus::Pass;
  if (std::abs(lhs) < kTinySide && std::abs(rhs) < kTinySide && ae <= abs_tol)
    return SampleStatus::Pass;
  return SampleStatus::Fail;
}

VerificationReport verify(const IdentityCase& c, const VerifyOptions& opt) {
  opt.trunc.validate();
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.case_id = c.id;
  rep.group = c.group;
  rep.status = c.status;
  rep.anchor = c.anchor;
  for (std::size_t i = 0; i < opt.n_samples; ++i) {
    SampleResult res = run_sample(c, opt, i, opt.seed);
    auto& sm = rep.summary;
    switch (res.status) {
      case SampleStatus::Pass: ++sm.n_pass; break;
      case SampleStatus::Fail: ++sm.n_fail; break;
      case SampleStatus::Skipped: ++sm.n_skipped; break;
      case SampleStatus::Error: ++sm.n_error; break;
    }
    if (res.status == SampleStatus::Pass || res.status == SampleStatus::Fail)
      sm.max_rel_err = std::max(sm.max_rel_err, res.rel_err);
    rep.max_tail = std::max(rep.max_tail, res.max_tail);
    rep.samples.push_back(std::move(res));
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

VerificationReport verify(std::string_view case_id, const VerifyOptions& opt) {
  return verify(find_case(case_id), opt);
}

std::vector<VerificationReport> verify_all(const VerifyOptions& opt, unsigned jobs,
                                           const std::vector<std::string>& ids) {
  std::vector<const IdentityCase*> todo;
  if (ids.empty()) {
    for (const auto& c : registry()) todo.push_back(&c);
  } else {
    // Keep registry order even when ids come in another order.
    for (const auto& id : ids) find_case(id);
    for (const auto& c : registry())
      if (std::find(ids.begin(), ids.end(), c.id) != ids.end()) todo.push_back(&c);
  }

  std::vector<VerificationReport> out(todo.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(todo.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) out[i] = verify(*todo[i], opt);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return out;
}

bool all_expected_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (r.status == CaseStatus::ExpectedPass && r.failed()) return false;
  return true;
}

bool sample_in_domain(const IdentityCase& c, const Sample& s, const Truncation& trunc) {
  EvalContext ctx{trunc};
  try {
    c.lhs(s, ctx);
    c.rhs(s, ctx);
  } catch (const DomainError&) {
    return false;
  } catch (const PoleError&) {
    return false;
  } catch (const DivergenceDetected&) {
    return false;
  } catch (const BudgetExceeded&) {
    return false;
  }
  return true;
}

}  // namespace qseries
