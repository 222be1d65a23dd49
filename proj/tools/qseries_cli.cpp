// Command-line front end: eval, list, verify.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qseries/complex_literal.hpp"
#include "qseries/error.hpp"
#include "qseries/hyperseries.hpp"
#include "qseries/identities.hpp"
#include "qseries/qderivative.hpp"
#include "qseries/qfactorial.hpp"
#include "qseries/qoperator.hpp"
#include "qseries/report.hpp"
#include "qseries/theta.hpp"

namespace {

using namespace qseries;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3, kBudget = 4 };

struct Options {
  double eps = Truncation{}.eps;
  std::size_t max_terms = Truncation{}.max_terms;
  double tol = VerifyOptions{}.tol;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::size_t samples = VerifyOptions{}.n_samples;
  std::string format = "text";
  std::string out;
  unsigned jobs = 0;

  Truncation trunc() const {
    Truncation t;
    t.eps = eps;
    t.max_terms = max_terms;
    t.validate();
    return t;
  }
};

// Raw option text; parsed after CLI11 so errors can name the option.
struct EvalArgs {
  std::string kind;
  std::string a, q, n = "inf", x, y, z, upper, lower, func = "power", b = "0";
  int sign = +1;
  bool series = false;
};

Complex literal(const std::string& opt, const std::string& text) {
  try {
    return parse_complex(text);
  } catch (const ParseError& e) {
    throw ParseError("--" + opt + ": " + e.what());
  }
}

Complex required(const std::string& opt, const std::string& text) {
  if (text.empty()) throw ParseError("--" + opt + " is required");
  return literal(opt, text);
}

std::vector<Complex> literal_list(const std::string& opt, const std::string& text) {
  try {
    return parse_complex_list(text);
  } catch (const ParseError& e) {
    throw ParseError("--" + opt + ": " + e.what());
  }
}

std::int64_t integer(const std::string& opt, const std::string& text) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("--" + opt + ": not an integer: \"" + text + "\"");
  }
}

void print_value(Complex v, std::size_t terms) {
  std::cout << format_complex(v) << "\nterms: " << terms << "\n";
}

PointFunction operand(const EvalArgs& ea, QBase q, const Truncation& trunc) {
  const std::int64_t n = integer("n", ea.n == "inf" ? "0" : ea.n);
  if (ea.func == "power") return PointFunction::power(n);
  const Complex a = required("a", ea.a);
  if (ea.func == "theta") {
    return PointFunction([a, q, trunc](Complex t) { return theta_ext(a * t, q, trunc); },
                         "theta(a x)");
  }
  if (ea.func == "prodinf") {
    return PointFunction(
        [a, n, q, trunc](Complex t) {
          return Ext::pow(Ext(t), n) * qpoch_infinite_ext(a / t, q, trunc);
        },
        "x^n (a/x;q)_inf");
  }
  if (ea.func == "recip-prodinf") {
    return PointFunction(
        [a, n, q, trunc](Complex t) {
          return Ext::pow(Ext(t), n) / qpoch_infinite_ext(a * t, q, trunc);
        },
        "x^n / (ax;q)_inf");
  }
  throw ParseError("--func: unknown operand \"" + ea.func + "\"");
}

int run_eval(const EvalArgs& ea, const Options& opt) {
  const Truncation trunc = opt.trunc();
  const QBase q(required("q", ea.q));
  std::size_t terms = 0;
  if (ea.kind == "qpoch") {
    const Complex a = required("a", ea.a);
    if (ea.n == "inf") {
      const Complex v = qpoch_infinite(a, q, trunc, &terms);
      print_value(v, terms);
    } else {
      const std::int64_t n = integer("n", ea.n);
      print_value(qpoch_finite(a, q, n), static_cast<std::size_t>(n < 0 ? -n : n));
    }
  } else if (ea.kind == "theta") {
    const Complex x = required("x", ea.x);
    if (ea.series) {
      TailStats st;
      const Complex v = theta_series(x, q, trunc, &st);
      print_value(v, st.max_tail());
    } else {
      const Complex v = theta_product(x, q, trunc, &terms);
      print_value(v, terms);
    }
  } else if (ea.kind == "phi") {
    SeriesSpec spec{literal_list("upper", ea.upper), literal_list("lower", ea.lower), q,
                    required("z", ea.z), false};
    const Complex v = phi(spec, trunc, &terms);
    print_value(v, terms);
  } else if (ea.kind == "psi") {
    SeriesSpec spec{literal_list("upper", ea.upper), literal_list("lower", ea.lower), q,
                    required("z", ea.z), true};
    TailStats st;
    const Complex v = psi(spec, trunc, &st);
    print_value(v, st.max_tail());
  } else if (ea.kind == "eb" || ea.kind == "kinf") {
    const Complex y = required("y", ea.y);
    const std::int64_t b = ea.kind == "kinf" ? 2 : integer("b", ea.b);
    if (b < 0) throw ParseError("--b: must be >= 0");
    const Complex v = e_b(y, q, static_cast<unsigned>(b), trunc, &terms);
    print_value(v, terms);
  } else if (ea.kind == "eop") {
    const std::int64_t b = integer("b", ea.b);
    if (b < 0) throw ParseError("--b: must be >= 0");
    EOpSpec op{required("y", ea.y), q, static_cast<unsigned>(b), ea.sign};
    const Complex v = apply_eop(op, operand(ea, q, trunc), required("x", ea.x), trunc, &terms);
    print_value(v, terms);
  } else {
    throw ParseError("unknown eval kind \"" + ea.kind + "\"");
  }
  return kOk;
}

int run_list(const std::string& group) {
  if (!group.empty() && (group.size() != 1 || group[0] < 'A' || group[0] > 'E')) {
    std::cerr << "error: --group: unknown group \"" << group << "\" (expected A-E)\n";
    return kUsage;
  }
  std::vector<const IdentityCase*> rows;
  for (const auto& c : registry())
    if (group.empty() || c.group == group[0]) rows.push_back(&c);
  std::sort(rows.begin(), rows.end(), [](const IdentityCase* l, const IdentityCase* r) {
    return l->group != r->group ? l->group < r->group : l->id < r->id;
  });
  for (const auto* c : rows)
    std::cout << c->id << '\t' << c->group << '\t' << to_string(c->status) << '\t' << c->anchor
              << '\n';
  return kOk;
}

int run_verify(const std::vector<std::string>& ids, bool all, const Options& opt) {
  if (!all && ids.empty()) {
    std::cerr << "error: verify needs --id or --all\n";
    return kUsage;
  }
  for (const auto& id : ids) {
    try {
      find_case(id);
    } catch (const UnknownIdentity& e) {
      std::cerr << "error: --id: " << e.what() << '\n';
      return kUsage;
    }
  }
  VerifyOptions vo;
  vo.n_samples = opt.samples;
  vo.seed = opt.seed;
  vo.tol = opt.tol;
  vo.trunc = opt.trunc();
  const auto reports = verify_all(vo, opt.jobs, all ? std::vector<std::string>{} : ids);

  std::string text;
  if (opt.format == "json") {
    text = report_json(reports, vo);
  } else if (opt.format == "csv") {
    text = report_csv(reports);
  } else {
    text = report_text(reports);
  }
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: --out: cannot write " << opt.out << '\n';
      return kUsage;
    }
    f << text;
  }
  return all_expected_pass(reports) ? kOk : kVerifyFailed;
}

std::size_t default_max_terms() {
  if (const char* env = std::getenv("QSERIES_MAX_TERMS")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid QSERIES_MAX_TERMS=" << env << '\n';
  }
  return Truncation{}.max_terms;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  opt.max_terms = default_max_terms();

  CLI::App app{"q-series evaluation and identity verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--eps", opt.eps, "Relative truncation threshold")->check(CLI::PositiveNumber);
  app.add_option("--max-terms", opt.max_terms, "Term budget per sum (env QSERIES_MAX_TERMS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", opt.tol, "Relative tolerance for verify")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Sampler seed");
  app.add_option("--samples", opt.samples, "Samples per case")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", opt.out, "Write the report to this file");
  app.add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate one quantity");
  eval->add_option("kind", ea.kind, "qpoch | theta | phi | psi | eb | kinf | eop")
      ->required()
      ->check(CLI::IsMember({"qpoch", "theta", "phi", "psi", "eb", "kinf", "eop"}));
  eval->add_option("--a", ea.a, "Parameter a (qpoch, eop operand)");
  eval->add_option("--q", ea.q, "Base q, |q| < 1")->required();
  eval->add_option("--n", ea.n, "Length n, or inf (qpoch); power n (eop)");
  eval->add_option("--x", ea.x, "Argument x (theta, eop)");
  eval->add_option("--y", ea.y, "Argument y (eb, kinf, eop)");
  eval->add_option("--z", ea.z, "Argument z (phi, psi)");
  eval->add_option("--upper", ea.upper, "Upper parameters, comma separated");
  eval->add_option("--lower", ea.lower, "Lower parameters, comma separated");
  eval->add_option("--b", ea.b, "Exponent b (eb, eop)");
  eval->add_option("--sign", ea.sign, "+1 for D_q, -1 for D_{q^-1} (eop)")
      ->check(CLI::IsMember({1, -1}));
  eval->add_option("--func", ea.func, "eop operand: power | theta | prodinf | recip-prodinf");
  eval->add_flag("--series", ea.series, "theta: sum the series instead of the product");

  std::string group;
  auto* list = app.add_subcommand("list", "List registered identities");
  list->add_option("--group", group, "Only this group (A-E)");

  std::vector<std::string> ids;
  bool all = false;
  auto* ver = app.add_subcommand("verify", "Verify identities on random samples");
  ver->add_option("--id", ids, "Identity id (repeatable)");
  ver->add_flag("--all", all, "Verify every registered identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) return run_eval(ea, opt);
    if (list->parsed()) return run_list(group);
    return run_verify(ids, all, opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const PoleError& e) {
    std::cerr << "pole error: " << e.what() << '\n';
    return kDomain;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const DivergenceDetected& e) {
    std::cerr << "divergence: " << e.what() << '\n';
    return kBudget;
  }
}
