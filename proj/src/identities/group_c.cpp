#include <functional>

#include "identities/cases.hpp"

namespace qseries::cases {

namespace {

using Maker = std::function<PointFunction(const Sample&, EvalContext&)>;

// Upper bound on the ratio of an operator series that is only geometric;
// keeps it well inside the 200-term operator budget.
constexpr Real kOpRatio = 0.7;

bool small(Complex z) { return std::abs(z) <= kOpRatio; }

IdentityCase::Side eop_lhs(Maker make, std::function<unsigned(const Sample&)> b, int sign) {
  return [make = std::move(make), b = std::move(b), sign](const Sample& s, EvalContext& ctx) {
    const PointFunction f = make(s, ctx);
    return eop(f, s.c("x"), s.c("y"), s.c("q"), b(s), sign, ctx).to_complex();
  };
}

std::function<unsigned(const Sample&)> fixed_b(unsigned b) {
  return [b](const Sample&) { return b; };
}

std::function<unsigned(const Sample&)> int_b(const char* name) {
  return [name](const Sample& s) { return static_cast<unsigned>(s.i(name)); };
}

// Operands. Parameters are read once; ctx outlives every evaluation.

Maker pow_prodinf_over() {  // t^n (a/t;q)_inf
  return [](const Sample& s, EvalContext& ctx) {
    const Complex q = s.c("q"), a = s.c("a");
    const std::int64_t n = s.i("n");
    return PointFunction([&ctx, q, a, n](Complex t) { return pw(t, n) * pinf(a / t, q, ctx); });
  };
}

Maker prodinf_theta() {  // (a/t;q)_inf theta(ct)
  return [](const Sample& s, EvalContext& ctx) {
    const Complex q = s.c("q"), a = s.c("a"), c = s.c("c");
    return PointFunction(
        [&ctx, q, a, c](Complex t) { return pinf(a / t, q, ctx) * th(c * t, q, ctx); });
  };
}

Maker pow_ram() {  // t^n F(t)
  return [](const Sample& s, EvalContext& ctx) {
    const Complex q = s.c("q"), a = s.c("a"), b = s.c("b");
    const std::int64_t n = s.i("n");
    return PointFunction(
        [&ctx, q, a, b, n](Complex t) { return pw(t, n) * ramkernel(a, b, t, q, ctx); });
  };
}

Maker theta_ram() {  // theta(dt) F(t)
  return [](const Sample& s, EvalContext& ctx) {
    const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), d = s.c("d");
    return PointFunction(
        [&ctx, q, a, b, d](Complex t) { return th(d * t, q, ctx) * ramkernel(a, b, t, q, ctx); });
  };
}

Vec upper_list(const Sample& s) { return param_list(s, "a", s.i("na")); }
Vec lower_list(const Sample& s) { return param_list(s, "b", s.i("nb")); }

Maker pow_bracket() {
  return [](const Sample& s, EvalContext& ctx) {
    const Complex q = s.c("q");
    const Vec A = upper_list(s), B = lower_list(s);
    const std::int64_t n = s.i("n");
    return PointFunction(
        [&ctx, q, A, B, n](Complex t) { return pw(t, n) * bracket(A, B, t, q, ctx); });
  };
}

Maker theta_bracket() {
  return [](const Sample& s, EvalContext& ctx) {
    const Complex q = s.c("q"), d = s.c("d");
    const Vec A = upper_list(s), B = lower_list(s);
    return PointFunction(
        [&ctx, q, A, B, d](Complex t) { return th(d * t, q, ctx) * bracket(A, B, t, q, ctx); });
  };
}

// t^n (at)_inf^ea / (bt)_inf^eb with ea, eb in {0, 1}.
Maker pow_ratio(bool num, bool den, const char* num_name = "a", const char* den_name = "b") {
  return [=](const Sample& s, EvalContext& ctx) {
    const Complex q = s.c("q");
    const Complex a = num ? s.c(num_name) : Complex(0, 0);
    const Complex b = den ? s.c(den_name) : Complex(0, 0);
    const std::int64_t n = s.i("n");
    return PointFunction([&ctx, q, a, b, n, num, den](Complex t) {
      Ext v = pw(t, n);
      if (num) v *= pinf(a * t, q, ctx);
      if (den) v *= rinf(b * t, q, ctx);
      return v;
    });
  };
}

// theta(wt) (at)_inf^ea / (bt)_inf^eb.
Maker theta_ratio(const char* w_name, bool num, bool den, const char* den_name = "b") {
  return [=](const Sample& s, EvalContext& ctx) {
    const Complex q = s.c("q"), w = s.c(w_name);
    const Complex a = num ? s.c("a") : Complex(0, 0);
    const Complex b = den ? s.c(den_name) : Complex(0, 0);
    return PointFunction([&ctx, q, w, a, b, num, den](Complex t) {
      Ext v = th(w * t, q, ctx);
      if (num) v *= pinf(a * t, q, ctx);
      if (den) v *= rinf(b * t, q, ctx);
      return v;
    });
  };
}

// Real powers of q as plain numbers; exponents here are small.
Complex qn(Complex q, std::int64_t n) { return pw(q, n).to_complex(); }

void add_basic(Cases& out) {
  const auto E = CaseStatus::ExpectedPass;

  add(out, "eop-power", 'C', E,
      "E_{q}(y\\mathbf{D}_{q^{\\pm}}|q^b)\\{x^{n}\\}=x^n\\mathrm{E}_{b\\mp1}(q^{\\pm n}y/x;q)",
      [](SampleRng& r) {
        Draw d(r);
        const Complex q = d.q(), x = d.x(), y = d.y();
        const auto minus = d.integer("minus", 0, 1);
        const auto n = d.integer("n", -3, 3);
        const auto b = d.integer("b", minus ? 0 : 1, minus ? 3 : 4);
        // b - sign = 0 is a geometric series in q^{sign n} y/x.
        const int sign = minus ? -1 : +1;
        d.require(b - sign > 0 || small(qn(q, sign * n) * y / x));
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        const int sign = s.i("minus") ? -1 : +1;
        return eop(PointFunction::power(s.i("n")), s.c("x"), s.c("y"), s.c("q"),
                   static_cast<unsigned>(s.i("b")), sign, ctx)
            .to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), x = s.c("x"), y = s.c("y");
        const std::int64_t n = s.i("n"), b = s.i("b");
        const int sign = s.i("minus") ? -1 : +1;
        return (pw(x, n) * eb(qn(q, sign * n) * y / x, q, static_cast<unsigned>(b - sign), ctx))
            .to_complex();
      });

  add(out, "eop-theta-q", 'C', E,
      "\\mathrm{E}_{q}(y\\mathbf{D}_{q}|q^b)\\{\\vartheta(ax;q)\\}=\\vartheta(ax;q)\\mathrm{E}_{b-2}(y/qax^2;q)",
      [](SampleRng& r) {
        Draw d(r);
        const Complex q = d.q(), a = d.param("a"), x = d.x(), y = d.y();
        const auto b = d.integer("b", 2, 5);
        d.require(b > 2 || small(y / (q * a * x * x)));
        return d.finish();
      },
      eop_lhs(theta_ratio("a", false, false), int_b("b"), +1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
        return (th(a * x, q, ctx) *
                eb(y / (q * a * x * x), q, static_cast<unsigned>(s.i("b") - 2), ctx))
            .to_complex();
      });

  add(out, "eop-theta-qinv", 'C', E,
      "\\mathrm{E}_{q}(y\\mathbf{D}_{q^{-1}}|q^b)\\{\\vartheta(ax;q)\\}=\\vartheta(ax;q)\\mathrm{E}_{b}(ay;q)",
      [](SampleRng& r) {
        Draw d(r);
        d.q();
        d.param("a");
        d.x();
        d.y();
        d.integer("b", 0, 3);
        return d.finish();
      },
      eop_lhs(theta_ratio("a", false, false), int_b("b"), -1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
        return (th(a * x, q, ctx) * eb(a * y, q, static_cast<unsigned>(s.i("b")), ctx))
            .to_complex();
      });
}

void add_prodinf(Cases& out) {
  const auto E = CaseStatus::ExpectedPass;
  const auto F = CaseStatus::Flagged;

  // f = x^n (a/x;q)_inf, D_q with q^2: geometric in q^{n-1} a y / x^2.
  auto draw_q2 = [](SampleRng& r) {
    Draw d(r);
    const Complex q = d.q(), a = d.param("a"), x = d.x(), y = d.y();
    const auto n = d.integer("n", -3, 3);
    d.require(small(qn(q, n - 1) * a * y / (x * x)));
    return d.finish();
  };
  auto rhs_q2 = [](bool corrected) {
    return [corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
      const std::int64_t n = s.i("n");
      const Complex w = -a * y / (q * x * x);
      Ext v = pw(x, n) * pfin(w, q, n) * rfin(-y / x, q, n) * pinf(-y / x, q, ctx) * rinf(w, q, ctx);
      if (corrected) v *= pinf(a / x, q, ctx);
      return v.to_complex();
    };
  };
  const std::string q2_anchor =
      "\\mathrm{E}_{q}(y\\mathbf{D}_{q}|q^2)\\{x^n(a/x;q)_{\\infty}\\}=x^n\\frac{(-ay/qx^2;q)_{n}}{(-y/x;q)_{n}}"
      "\\frac{(-y/x;q)_{\\infty}}{(-ay/qx^2;q)_{\\infty}}";
  add(out, "eop-prodinf-q2", 'C', F, q2_anchor, draw_q2,
      eop_lhs(pow_prodinf_over(), fixed_b(2), +1), rhs_q2(false));
  add(out, "eop-prodinf-q2-corrected", 'C', E, q2_anchor, draw_q2,
      eop_lhs(pow_prodinf_over(), fixed_b(2), +1), rhs_q2(true));

  add(out, "eop-prodinf-qb", 'C', E,
      "x^n(a/x;q)_{\\infty}\\cdot{}_{1}\\phi_{b-2}\\left( qx/a \\\\ \\mathbf{0}_{b-2} ;q, (-1)^{b-1}q^{n-1}ay/x^2 \\right)",
      [](SampleRng& r) {
        Draw d(r);
        d.q();
        d.param("a");
        d.x();
        d.y();
        d.integer("n", -3, 3);
        d.integer("b", 3, 6);
        return d.finish();
      },
      eop_lhs(pow_prodinf_over(), int_b("b"), +1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
        const std::int64_t n = s.i("n"), b = s.i("b");
        const Complex z = sgn(b - 1) * qn(q, n - 1) * a * y / (x * x);
        return (pw(x, n) * pinf(a / x, q, ctx) * hyp({q * x / a}, zeros(b - 2), q, z, ctx))
            .to_complex();
      });

  auto draw_qinv = [](SampleRng& r) {
    Draw d(r);
    d.q();
    d.param("a");
    d.x();
    d.y();
    d.integer("n", -3, 3);
    d.integer("b", 0, 3);
    return d.finish();
  };
  auto rhs_qinv = [](bool corrected) {
    return [corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
      const std::int64_t n = s.i("n"), b = s.i("b");
      Complex z = sgn(b + 1) * y / (qn(q, n) * x);
      if (!corrected) z *= a;
      return (pw(x, n) * pinf(a / x, q, ctx) * hyp({0}, cat({a / x}, zeros(b)), q, z, ctx))
          .to_complex();
    };
  };
  const std::string qinv_anchor =
      "=x^n(a/x;q)_{\\infty}\\cdot{}_{1}\\phi_{b+1}\\left( 0 \\\\ a/x,\\mathbf{0}_{b} ;q, (-1)^{b+1}ay/q^nx \\right)";
  add(out, "eop-prodinf-qinv", 'C', F, qinv_anchor, draw_qinv,
      eop_lhs(pow_prodinf_over(), int_b("b"), -1), rhs_qinv(false));
  add(out, "eop-prodinf-qinv-corrected", 'C', E, qinv_anchor, draw_qinv,
      eop_lhs(pow_prodinf_over(), int_b("b"), -1), rhs_qinv(true));

  // f = (a/x;q)_inf theta(cx)
  add(out, "eop-prodinf-theta-q3", 'C', E,
      "\\vartheta(cx;q)\\frac{(a/x;q)_{\\infty}(-y/qcx^2;q)_{\\infty}}{(-ay/q^2cx^3;q)_{\\infty}}",
      [](SampleRng& r) {
        Draw d(r);
        const Complex q = d.q(), a = d.param("a"), c = d.param("c"), x = d.x(), y = d.y();
        d.require(small(a * y / (q * q * c * x * x * x)));
        return d.finish();
      },
      eop_lhs(prodinf_theta(), fixed_b(3), +1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), c = s.c("c"), x = s.c("x"), y = s.c("y");
        return (th(c * x, q, ctx) * pinf(a / x, q, ctx) * pinf(-y / (q * c * x * x), q, ctx) *
                rinf(-a * y / (q * q * c * x * x * x), q, ctx))
            .to_complex();
      });

  auto draw_thb = [](SampleRng& r) {
    Draw d(r);
    d.q();
    d.param("a");
    d.param("c");
    d.x();
    d.y();
    d.integer("b", 4, 7);
    return d.finish();
  };
  auto rhs_thb = [](bool corrected) {
    return [corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), a = s.c("a"), c = s.c("c"), x = s.c("x"), y = s.c("y");
      const std::int64_t b = s.i("b");
      Complex z = sgn(b - 2) * a * y / (c * x * x * x);
      if (corrected) z /= q * q;
      return (pinf(a / x, q, ctx) * th(c * x, q, ctx) * hyp({q * x / a}, zeros(b - 3), q, z, ctx))
          .to_complex();
    };
  };
  const std::string thb_anchor =
      "{}_{1}\\phi_{b-3}\\left( qx/a \\\\ \\mathbf{0}_{b-3} ;q, (-1)^{b-2}ay/cx^3 \\right)";
  add(out, "eop-prodinf-theta-qb", 'C', F, thb_anchor, draw_thb,
      eop_lhs(prodinf_theta(), int_b("b"), +1), rhs_thb(false));
  add(out, "eop-prodinf-theta-qb-corrected", 'C', E, thb_anchor, draw_thb,
      eop_lhs(prodinf_theta(), int_b("b"), +1), rhs_thb(true));

  add(out, "eop-prodinf-theta-qinv0", 'C', E,
      "{}_{2}\\phi_{1}\\left( 0,0 \\\\ a/x ;q,cy \\right)",
      [](SampleRng& r) {
        Draw d(r);
        d.q();
        d.param("a");
        d.param("c");
        d.x();
        d.y();
        return d.finish();
      },
      eop_lhs(prodinf_theta(), fixed_b(0), -1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), c = s.c("c"), x = s.c("x"), y = s.c("y");
        return (pinf(a / x, q, ctx) * th(c * x, q, ctx) * hyp({0, 0}, {a / x}, q, c * y, ctx))
            .to_complex();
      });

  add(out, "eop-prodinf-theta-qinvb", 'C', E,
      "{}_{1}\\phi_{b}\\left( 0 \\\\ a/x,\\mathbf{0}_{b-1} ;q,(-1)^bcy \\right)",
      [](SampleRng& r) {
        Draw d(r);
        d.q();
        d.param("a");
        d.param("c");
        d.x();
        d.y();
        d.integer("b", 1, 4);
        return d.finish();
      },
      eop_lhs(prodinf_theta(), int_b("b"), -1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), c = s.c("c"), x = s.c("x"), y = s.c("y");
        const std::int64_t b = s.i("b");
        return (pinf(a / x, q, ctx) * th(c * x, q, ctx) *
                hyp({0}, cat({a / x}, zeros(b - 1)), q, sgn(b) * c * y, ctx))
            .to_complex();
      });
}

void add_ramkernel(Cases& out) {
  const auto E = CaseStatus::ExpectedPass;
  const auto F = CaseStatus::Flagged;

  // f = x^n F(x), D_q with q^c. The operator series is geometric in
  // q^{n+1} y / (bx) when c = 1.
  auto draw_q = [](std::int64_t c_lo, std::int64_t c_hi) {
    return [c_lo, c_hi](SampleRng& r) {
      Draw d(r);
      const Complex q = d.q(), a = d.param("a"), b = d.param("b"), x = d.x(), y = d.y();
      (void)a;
      const auto n = d.integer("n", -3, 3);
      const auto c = c_lo == c_hi ? d.set_int("c", c_lo) : d.integer("c", c_lo, c_hi);
      d.require(c > 1 || small(qn(q, n + 1) * y / (b * x)));
      return d.finish();
    };
  };
  auto rhs_q = [](bool corrected) {
    return [corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), x = s.c("x"), y = s.c("y");
      const std::int64_t n = s.i("n"), c = s.i("c");
      Complex z = qn(q, n + 1) * y;
      if (corrected) z /= b * x;
      const Ext head = pw(x, n) * ramkernel(a, b, x, q, ctx);
      if (c == 1) return (head * hyp({x, 0}, {q * a * x / b}, q, z, ctx)).to_complex();
      return (head * hyp({x}, cat({q * a * x / b}, zeros(c - 2)), q, sgn(c - 1) * z, ctx))
          .to_complex();
    };
  };
  const std::string q1_anchor =
      "{}_{2}\\phi_{1}\\left(\\begin{array}{c}x,0\\\\qax/b\\end{array};q,q^{n+1}y\\right)";
  const std::string qc_anchor =
      "{}_{1}\\phi_{c-1}\\left( x \\\\ qax/b,\\mathbf{0}_{c-2} ;q,(-1)^{c-1}q^{n+1}y \\right)";
  add(out, "eop-ramkernel-q", 'C', F, q1_anchor, draw_q(1, 1), eop_lhs(pow_ram(), fixed_b(1), +1),
      rhs_q(false));
  add(out, "eop-ramkernel-q-corrected", 'C', E, q1_anchor, draw_q(1, 1),
      eop_lhs(pow_ram(), fixed_b(1), +1), rhs_q(true));
  add(out, "eop-ramkernel-qc", 'C', F, qc_anchor, draw_q(2, 5), eop_lhs(pow_ram(), int_b("c"), +1),
      rhs_q(false));
  add(out, "eop-ramkernel-qc-corrected", 'C', E, qc_anchor, draw_q(2, 5),
      eop_lhs(pow_ram(), int_b("c"), +1), rhs_q(true));

  // f = theta(dx) F(x), D_q with q^c; geometric in y/(bdx^2) when c = 2.
  auto draw_tq = [](std::int64_t c_lo, std::int64_t c_hi) {
    return [c_lo, c_hi](SampleRng& r) {
      Draw d(r);
      const Complex q = d.q(), a = d.param("a"), b = d.param("b"), dd = d.param("d");
      const Complex x = d.x(), y = d.y();
      (void)q;
      (void)a;
      const auto c = c_lo == c_hi ? d.set_int("c", c_lo) : d.integer("c", c_lo, c_hi);
      d.require(c > 2 || small(y / (b * dd * x * x)));
      return d.finish();
    };
  };
  auto rhs_tq = [](bool corrected) {
    return [corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), dd = s.c("d"), x = s.c("x"),
                    y = s.c("y");
      const std::int64_t c = s.i("c");
      const Complex z = corrected ? y / (b * dd * x * x) : y / (dd * x);
      const Ext head = th(dd * x, q, ctx) * ramkernel(a, b, x, q, ctx);
      if (c == 2) return (head * hyp({x, 0}, {q * a * x / b}, q, z, ctx)).to_complex();
      return (head * hyp({x}, cat({q * a * x / b}, zeros(c - 3)), q, sgn(c - 2) * z, ctx))
          .to_complex();
    };
  };
  const std::string tq2_anchor = "{}_{2}\\phi_{1}\\left( x,0 \\\\ qax/b ;q,y/dx \\right)";
  const std::string tqc_anchor =
      "{}_{1}\\phi_{c-2}\\left( x \\\\ qax/b,\\mathbf{0}_{c-3} ;q,(-1)^{c-2}y/dx \\right)";
  add(out, "eop-ramkernel-theta-q2", 'C', F, tq2_anchor, draw_tq(2, 2),
      eop_lhs(theta_ram(), fixed_b(2), +1), rhs_tq(false));
  add(out, "eop-ramkernel-theta-q2-corrected", 'C', E, tq2_anchor, draw_tq(2, 2),
      eop_lhs(theta_ram(), fixed_b(2), +1), rhs_tq(true));
  add(out, "eop-ramkernel-theta-qc", 'C', F, tqc_anchor, draw_tq(3, 6),
      eop_lhs(theta_ram(), int_b("c"), +1), rhs_tq(false));
  add(out, "eop-ramkernel-theta-qc-corrected", 'C', E, tqc_anchor, draw_tq(3, 6),
      eop_lhs(theta_ram(), int_b("c"), +1), rhs_tq(true));

  auto draw_qinv = [](SampleRng& r) {
    Draw d(r);
    d.q();
    d.param("a");
    d.param("b");
    d.x();
    d.y();
    d.integer("n", -3, 3);
    d.integer("c", 0, 3);
    return d.finish();
  };
  auto rhs_qinv = [](bool corrected) {
    return [corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), x = s.c("x"), y = s.c("y");
      const std::int64_t n = s.i("n"), c = s.i("c");
      const Complex z = sgn(c + 1) * a * qn(q, corrected ? -n : n) * y / x;
      return (pw(x, n) * ramkernel(a, b, x, q, ctx) *
              hyp({b / (a * x)}, cat({q / x}, zeros(c)), q, z, ctx))
          .to_complex();
    };
  };
  const std::string qinv_anchor = "(-1)^{c+1}aq^{n}y/x";
  add(out, "eop-ramkernel-qinv", 'C', F, qinv_anchor, draw_qinv, eop_lhs(pow_ram(), int_b("c"), -1),
      rhs_qinv(false));
  add(out, "eop-ramkernel-qinv-corrected", 'C', E, qinv_anchor, draw_qinv,
      eop_lhs(pow_ram(), int_b("c"), -1), rhs_qinv(true));

  auto draw_tqinv = [](std::int64_t c_lo, std::int64_t c_hi) {
    return [c_lo, c_hi](SampleRng& r) {
      Draw d(r);
      const Complex q = d.q(), a = d.param("a"), b = d.param("b"), dd = d.param("d");
      d.x();
      const Complex y = d.y();
      (void)q;
      (void)b;
      const auto c = c_lo == c_hi ? d.set_int("c", c_lo) : d.integer("c", c_lo, c_hi);
      d.require(c > 0 || small(a * dd * y));
      return d.finish();
    };
  };
  auto rhs_tqinv = [](const Sample& s, EvalContext& ctx) {
    const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), dd = s.c("d"), x = s.c("x"),
                  y = s.c("y");
    const std::int64_t c = s.i("c");
    const Ext head = th(dd * x, q, ctx) * ramkernel(a, b, x, q, ctx);
    if (c == 0) return (head * hyp({b / (a * x), 0}, {q / x}, q, a * dd * y, ctx)).to_complex();
    return (head * hyp({b / (a * x)}, cat({q / x}, zeros(c - 1)), q, sgn(c) * a * dd * y, ctx))
        .to_complex();
  };
  add(out, "eop-ramkernel-theta-qinv0", 'C', E,
      "{}_{2}\\phi_{1}\\left( b/ax,0 \\\\ q/x ;q,ady \\right)", draw_tqinv(0, 0),
      eop_lhs(theta_ram(), fixed_b(0), -1), rhs_tqinv);
  add(out, "eop-ramkernel-theta-qinvc", 'C', E,
      "{}_{1}\\phi_{c}\\left( b/ax \\\\ q/x,\\mathbf{0}_{c-1} ;q,(-1)^cady \\right)", draw_tqinv(1, 4),
      eop_lhs(theta_ram(), int_b("c"), -1), rhs_tqinv);
}

void add_bracket(Cases& out) {
  const auto E = CaseStatus::ExpectedPass;
  const auto F = CaseStatus::Flagged;

  add(out, "eop-bracket-q", 'C', E,
      "{}_{r+1}\\phi_{r+c-1}\\left( b_{1}x,\\ldots,b_{r+1}x \\\\ a_{1}x,\\ldots,a_{r+c-1}x ;q,(-1)^{c-1}q^ny/x \\right)",
      [](SampleRng& r) {
        Draw d(r);
        const Complex q = d.q();
        const auto c = d.integer("c", 1, 4);
        const auto rr = d.integer("r", 0, 2);
        d.params("a", d.set_int("na", rr + c - 1));
        d.params("b", d.set_int("nb", rr + 1));
        const Complex x = d.x(), y = d.y();
        const auto n = d.integer("n", -3, 3);
        d.require(c > 1 || small(qn(q, n) * y / x));
        return d.finish();
      },
      eop_lhs(pow_bracket(), int_b("c"), +1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), x = s.c("x"), y = s.c("y");
        const std::int64_t n = s.i("n"), c = s.i("c");
        const Vec A = upper_list(s), B = lower_list(s);
        return (pw(x, n) * bracket(A, B, x, q, ctx) *
                hyp(times(B, x), times(A, x), q, sgn(c - 1) * qn(q, n) * y / x, ctx))
            .to_complex();
      });

  add(out, "eop-bracket-theta-q", 'C', E, "(-1)^{c-2}y/qdx^2",
      [](SampleRng& r) {
        Draw d(r);
        const Complex q = d.q();
        const auto c = d.integer("c", 2, 5);
        const auto rr = d.integer("r", 0, 2);
        d.params("a", d.set_int("na", rr + c - 2));
        d.params("b", d.set_int("nb", rr + 1));
        const Complex dd = d.param("d"), x = d.x(), y = d.y();
        d.require(c > 2 || small(y / (q * dd * x * x)));
        return d.finish();
      },
      eop_lhs(theta_bracket(), int_b("c"), +1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), dd = s.c("d"), x = s.c("x"), y = s.c("y");
        const std::int64_t c = s.i("c");
        const Vec A = upper_list(s), B = lower_list(s);
        return (th(dd * x, q, ctx) * bracket(A, B, x, q, ctx) *
                hyp(times(B, x), times(A, x), q, sgn(c - 2) * y / (q * dd * x * x), ctx))
            .to_complex();
      });

  // Argument of the D_{q^-1} bracket series.
  auto qinv_z = [](const Sample& s) {
    const Complex q = s.c("q"), x = s.c("x"), y = s.c("y");
    const std::int64_t r = s.i("na"), ss = s.i("nb"), n = s.i("n"), c = s.i("c");
    return sgn(c + 1) * qn(q, ss - r - n) * y * prod(upper_list(s)) /
           (pw(x, 1 + ss - r).to_complex() * prod(lower_list(s)));
  };
  add(out, "eop-bracket-qinv", 'C', E,
      "\\frac{q^{s-r-n}ya_{1}\\cdots a_{r}}{x^{1+s-r}b_{1}\\cdots b_{s}}",
      [qinv_z](SampleRng& r) {
        Draw d(r);
        d.q();
        const auto c = d.integer("c", 0, 3);
        const auto rr = d.set_int("na", d.integer("r", 0, 2));
        const auto ss = d.set_int("nb", d.integer("s", 0, 2));
        d.params("a", rr);
        d.params("b", ss);
        d.x();
        d.y();
        d.integer("n", -3, 3);
        // r phi (s+c) needs r <= s+c+1, with |z| < 1 at equality.
        d.require(rr <= ss + c + 1);
        auto s = d.finish();
        if (s && rr == ss + c + 1 && !small(qinv_z(*s))) return std::optional<Sample>{};
        return s;
      },
      eop_lhs(pow_bracket(), int_b("c"), -1),
      [qinv_z](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), x = s.c("x");
        const std::int64_t n = s.i("n"), c = s.i("c");
        const Vec A = upper_list(s), B = lower_list(s);
        return (pw(x, n) * bracket(A, B, x, q, ctx) *
                hyp(q_over(A, q, x), cat(q_over(B, q, x), zeros(c)), q, qinv_z(s), ctx))
            .to_complex();
      });

  auto tqinv_z = [](const Sample& s, bool corrected) {
    const Complex q = s.c("q"), x = s.c("x"), y = s.c("y");
    const std::int64_t r = s.i("na"), ss = s.i("nb"), c = s.i("c");
    Complex z = sgn(c) * y * qn(q, ss - r) * prod(upper_list(s)) /
                (pw(x, ss - r).to_complex() * prod(lower_list(s)));
    if (corrected) z *= s.c("d");
    return z;
  };
  auto draw_tqinv = [tqinv_z](SampleRng& r) {
    Draw d(r);
    d.q();
    const auto c = d.integer("c", 0, 3);
    const auto rr = d.set_int("na", d.integer("r", 0, 2));
    const auto ss = d.set_int("nb", d.integer("s", 0, 2));
    d.params("a", rr);
    d.params("b", ss);
    d.param("d");
    d.x();
    d.y();
    d.require(rr + 1 <= ss + c + 1);
    auto s = d.finish();
    if (s && rr == ss + c && !small(tqinv_z(*s, true))) return std::optional<Sample>{};
    return s;
  };
  auto rhs_tqinv = [tqinv_z](bool corrected) {
    return [tqinv_z, corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), dd = s.c("d"), x = s.c("x");
      const std::int64_t c = s.i("c");
      const Vec A = upper_list(s), B = lower_list(s);
      return (th(dd * x, q, ctx) * bracket(A, B, x, q, ctx) *
              hyp(cat(q_over(A, q, x), {0}), cat(q_over(B, q, x), zeros(c)), q,
                  tqinv_z(s, corrected), ctx))
          .to_complex();
    };
  };
  const std::string tqinv_anchor =
      "{}_{r+1}\\phi_{s+c}\\left( q/a_{1}x,\\ldots,q/a_{r}x,0 \\\\ q/b_{1}x,\\ldots,q/b_{s}x,\\mathbf{0}_{c} "
      ";q,(-1)^cy\\frac{q^{s-r}a_{1}\\cdots a_{r}}{x^{s-r}b_{1}\\cdots b_{s}} \\right)";
  add(out, "eop-bracket-theta-qinv", 'C', F, tqinv_anchor, draw_tqinv,
      eop_lhs(theta_bracket(), int_b("c"), -1), rhs_tqinv(false));
  add(out, "eop-bracket-theta-qinv-corrected", 'C', E, tqinv_anchor, draw_tqinv,
      eop_lhs(theta_bracket(), int_b("c"), -1), rhs_tqinv(true));
}

void add_corollaries(Cases& out) {
  const auto E = CaseStatus::ExpectedPass;
  const auto F = CaseStatus::Flagged;

  // Draw: q, the named parameters, x, y, then n in [-3,3] (if with_n) and
  // c in [c_lo, c_hi]; `ok` is the structural filter.
  using Filter = std::function<bool(const Sample&)>;
  auto draw = [](std::vector<std::string> names, bool with_n, std::int64_t c_lo, std::int64_t c_hi,
                 Filter ok) {
    return [=](SampleRng& r) {
      Draw d(r);
      d.q();
      for (const auto& nm : names) d.param(nm);
      d.x();
      d.y();
      if (with_n) d.integer("n", -3, 3);
      if (c_lo == c_hi) {
        d.set_int("c", c_lo);
      } else {
        d.integer("c", c_lo, c_hi);
      }
      auto s = d.finish();
      if (s && ok && !ok(*s)) return std::optional<Sample>{};
      return s;
    };
  };
  auto ci = [](const Sample& s) { return s.i("c"); };
  auto ni = [](const Sample& s) { return s.i("n"); };

  add(out, "eop-ax-q1", 'C', E, "{}_{2}\\phi_{1}\\left( 0,0 \\\\ ax ;q,q^ny/x \\right)",
      draw({"a"}, true, 1, 1,
           [](const Sample& s) { return small(qn(s.c("q"), s.i("n")) * s.c("y") / s.c("x")); }),
      eop_lhs(pow_ratio(true, false), fixed_b(1), +1),
      [ni](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
        return (pw(x, ni(s)) * pinf(a * x, q, ctx) *
                hyp({0, 0}, {a * x}, q, qn(q, ni(s)) * y / x, ctx))
            .to_complex();
      });

  auto rhs_recip_q1 = [ni](bool corrected) {
    return [ni, corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
      const Complex w = corrected ? a * y : a * y / x;
      const std::int64_t n = ni(s);
      return (pw(x, n) * pfin(y / x, q, n) * rfin(w, q, n) * pinf(w, q, ctx) *
              rinf(a * x, q, ctx) * rinf(y / x, q, ctx))
          .to_complex();
    };
  };
  auto recip_q1_ok = [](const Sample& s) {
    return small(qn(s.c("q"), s.i("n")) * s.c("y") / s.c("x"));
  };
  const std::string recip_q1_anchor =
      "x^n\\frac{(y/x;q)_{n}}{(ay/x;q)_{n}}\\frac{(ay/x;q)_{\\infty}}{(ax,y/x;q)_{\\infty}}";
  add(out, "eop-recip-ax-q1", 'C', F, recip_q1_anchor, draw({"a"}, true, 1, 1, recip_q1_ok),
      eop_lhs(pow_ratio(false, true, "a", "a"), fixed_b(1), +1), rhs_recip_q1(false));
  add(out, "eop-recip-ax-q1-corrected", 'C', E, recip_q1_anchor,
      draw({"a"}, true, 1, 1, recip_q1_ok), eop_lhs(pow_ratio(false, true, "a", "a"), fixed_b(1), +1),
      rhs_recip_q1(true));

  add(out, "eop-recip-ax-qc", 'C', E,
      "{}_{1}\\phi_{c-1}\\left( ax \\\\ \\mathbf{0}_{c-1} ;q,(-1)^{c-1}q^ny/x \\right)",
      draw({"a"}, true, 2, 5, nullptr), eop_lhs(pow_ratio(false, true, "a", "a"), int_b("c"), +1),
      [ni, ci](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
        const std::int64_t c = ci(s);
        return (pw(x, ni(s)) * rinf(a * x, q, ctx) *
                hyp({a * x}, zeros(c - 1), q, sgn(c - 1) * qn(q, ni(s)) * y / x, ctx))
            .to_complex();
      });

  add(out, "eop-ratio-qc", 'C', E,
      "{}_{2}\\phi_{c}\\left( bx,0 \\\\ ax,\\mathbf{0}_{c-1} ;q,(-1)^{c-1}q^ny/x \\right)",
      draw({"a", "b"}, true, 1, 4,
           [](const Sample& s) {
             return s.i("c") > 1 || small(qn(s.c("q"), s.i("n")) * s.c("y") / s.c("x"));
           }),
      eop_lhs(pow_ratio(true, true), int_b("c"), +1),
      [ni, ci](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), x = s.c("x"), y = s.c("y");
        const std::int64_t c = ci(s);
        return (pw(x, ni(s)) * pinf(a * x, q, ctx) * rinf(b * x, q, ctx) *
                hyp({b * x, 0}, cat({a * x}, zeros(c - 1)), q, sgn(c - 1) * qn(q, ni(s)) * y / x, ctx))
            .to_complex();
      });

  // theta(bx)(ax)_inf with D_q and q^2. The statement's argument uses a d
  // that the operand does not contain; it is drawn as a free parameter.
  auto rhs_theta_ax = [](bool corrected) {
    return [corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), x = s.c("x"), y = s.c("y");
      const Complex z = corrected ? y / (q * b * x * x) : y / (b * s.c("d") * x * x);
      return (th(b * x, q, ctx) * pinf(a * x, q, ctx) * hyp({0, 0}, {a * x}, q, z, ctx))
          .to_complex();
    };
  };
  auto theta_ax_ok = [](const Sample& s) {
    return small(s.c("y") / (s.c("q") * s.c("b") * s.c("x") * s.c("x")));
  };
  const std::string theta_ax_anchor =
      "\\vartheta(bx;q)(ax;q)_{\\infty}\\cdot{}_{2}\\phi_{1}\\left( 0,0 \\\\ ax ;q,y/bdx^2 \\right)";
  add(out, "eop-theta-ax-q2", 'C', F, theta_ax_anchor, draw({"a", "b", "d"}, false, 2, 2, theta_ax_ok),
      eop_lhs(theta_ratio("b", true, false), fixed_b(2), +1), rhs_theta_ax(false));
  add(out, "eop-theta-ax-q2-corrected", 'C', E, theta_ax_anchor,
      draw({"a", "b"}, false, 2, 2, theta_ax_ok),
      eop_lhs(theta_ratio("b", true, false), fixed_b(2), +1), rhs_theta_ax(true));

  add(out, "eop-theta-recip-q2", 'C', E,
      "\\vartheta(bx;q)\\frac{(ay/qbx;q)_{\\infty}}{(ax,y/qbx^2;q)_{\\infty}}",
      draw({"a", "b"}, false, 2, 2, theta_ax_ok),
      eop_lhs(theta_ratio("b", false, true, "a"), fixed_b(2), +1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), x = s.c("x"), y = s.c("y");
        return (th(b * x, q, ctx) * pinf(a * y / (q * b * x), q, ctx) * rinf(a * x, q, ctx) *
                rinf(y / (q * b * x * x), q, ctx))
            .to_complex();
      });

  add(out, "eop-theta-recip-qc", 'C', E,
      "{}_{1}\\phi_{c-2}\\left( ax \\\\ \\mathbf{0}_{c-2} ;q,(-1)^{c-2}y/qbx^2 \\right)",
      draw({"a", "b"}, false, 3, 6, nullptr),
      eop_lhs(theta_ratio("b", false, true, "a"), int_b("c"), +1),
      [ci](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), x = s.c("x"), y = s.c("y");
        const std::int64_t c = ci(s);
        return (th(b * x, q, ctx) * rinf(a * x, q, ctx) *
                hyp({a * x}, zeros(c - 2), q, sgn(c - 2) * y / (q * b * x * x), ctx))
            .to_complex();
      });

  add(out, "eop-theta-ratio-qc", 'C', E,
      "{}_{2}\\phi_{c-1}\\left( bx,0 \\\\ ax,\\mathbf{0}_{c-2} ;q,(-1)^{c-2}y/qdx^2 \\right)",
      draw({"a", "b", "d"}, false, 2, 5,
           [](const Sample& s) {
             return s.i("c") > 2 || small(s.c("y") / (s.c("q") * s.c("d") * s.c("x") * s.c("x")));
           }),
      eop_lhs(theta_ratio("d", true, true), int_b("c"), +1),
      [ci](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), dd = s.c("d"), x = s.c("x"),
                      y = s.c("y");
        const std::int64_t c = ci(s);
        return (th(dd * x, q, ctx) * pinf(a * x, q, ctx) * rinf(b * x, q, ctx) *
                hyp({b * x, 0}, cat({a * x}, zeros(c - 2)), q, sgn(c - 2) * y / (q * dd * x * x), ctx))
            .to_complex();
      });

  // D_{q^-1} on x^n (ax)_inf with weight 1: geometric in a y / q^{n+1}.
  auto ax_qinv_ok = [](const Sample& s) {
    return small(s.c("a") * s.c("y") / qn(s.c("q"), s.i("n") + 1));
  };
  auto rhs_ax_qinv1 = [](bool corrected) {
    return [corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
      const std::int64_t n = s.i("n");
      const Complex base = corrected ? q / a : q * x / a;
      return (pw(base, n) * pfin(-q * x / y, q, n) * rfin(-q * q / (a * y), q, n) *
              pinf(a * x, q, ctx) * pinf(-y / x, q, ctx) * rinf(-a * y / q, q, ctx))
          .to_complex();
    };
  };
  const std::string ax_qinv1_anchor = "(qx/a)^n\\frac{(-qx/y;q)_{n}}{(-q^2/ay;q)_{n}}";
  add(out, "eop-ax-qinv1", 'C', F, ax_qinv1_anchor, draw({"a"}, true, 0, 0, ax_qinv_ok),
      eop_lhs(pow_ratio(true, false), fixed_b(0), -1), rhs_ax_qinv1(false));
  add(out, "eop-ax-qinv1-corrected", 'C', E, ax_qinv1_anchor, draw({"a"}, true, 0, 0, ax_qinv_ok),
      eop_lhs(pow_ratio(true, false), fixed_b(0), -1), rhs_ax_qinv1(true));

  add(out, "eop-ax-qinvc", 'C', E,
      "{}_{1}\\phi_{c}\\left( q/ax\\\\ \\mathbf{0}_{c} ;q,(-1)^{c+1}ay/q^{n+1} \\right)",
      draw({"a"}, true, 1, 4, nullptr), eop_lhs(pow_ratio(true, false), int_b("c"), -1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
        const std::int64_t n = s.i("n"), c = s.i("c");
        return (pw(x, n) * pinf(a * x, q, ctx) *
                hyp({q / (a * x)}, zeros(c), q, sgn(c + 1) * a * y / qn(q, n + 1), ctx))
            .to_complex();
      });

  auto rhs_recip_qinv = [](bool corrected) {
    return [corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
      const std::int64_t n = s.i("n"), c = s.i("c");
      const Complex z = corrected ? sgn(c + 1) * qn(q, 1 - n) * y / (a * x * x)
                                  : sgn(c + 1) * y / (a * qn(q, n) * x * x);
      return (pw(x, n) * rinf(a * x, q, ctx) * hyp({}, cat({q / (a * x)}, zeros(c)), q, z, ctx))
          .to_complex();
    };
  };
  const std::string recip_qinv_anchor =
      "{}_{0}\\phi_{c+1}\\left( -\\\\ q/ax,\\mathbf{0}_{c} ;q,(-1)^{c+1}y/aq^{n}x^2 \\right)";
  add(out, "eop-recip-ax-qinvc", 'C', F, recip_qinv_anchor, draw({"a"}, true, 0, 3, nullptr),
      eop_lhs(pow_ratio(false, true, "a", "a"), int_b("c"), -1), rhs_recip_qinv(false));
  add(out, "eop-recip-ax-qinvc-corrected", 'C', E, recip_qinv_anchor,
      draw({"a"}, true, 0, 3, nullptr), eop_lhs(pow_ratio(false, true, "a", "a"), int_b("c"), -1),
      rhs_recip_qinv(true));

  auto rhs_ratio_qinv = [](bool corrected) {
    return [corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), x = s.c("x"), y = s.c("y");
      const std::int64_t n = s.i("n"), c = s.i("c");
      const Complex z = corrected ? sgn(c + 1) * a * y / (b * qn(q, n) * x)
                                  : sgn(c) * a * x * y / (b * qn(q, n));
      return (pw(x, n) * pinf(a * x, q, ctx) * rinf(b * x, q, ctx) *
              hyp({q / (a * x)}, cat({q / (b * x)}, zeros(c)), q, z, ctx))
          .to_complex();
    };
  };
  const std::string ratio_qinv_anchor =
      "{}_{1}\\phi_{c+1}\\left( q/ax\\\\ q/bx,\\mathbf{0}_{c} ;q,(-1)^{c}axy/bq^{n} \\right)";
  add(out, "eop-ratio-qinvc", 'C', F, ratio_qinv_anchor, draw({"a", "b"}, true, 0, 3, nullptr),
      eop_lhs(pow_ratio(true, true), int_b("c"), -1), rhs_ratio_qinv(false));
  add(out, "eop-ratio-qinvc-corrected", 'C', E, ratio_qinv_anchor,
      draw({"a", "b"}, true, 0, 3, nullptr), eop_lhs(pow_ratio(true, true), int_b("c"), -1),
      rhs_ratio_qinv(true));

  // c = 0 would make the right side a divergent 2phi0, so c starts at 1.
  add(out, "eop-theta-ax-qinvc", 'C', E, "(-1)^cabxy/q",
      draw({"a", "b"}, false, 1, 4,
           [](const Sample& s) {
             return s.i("c") > 1 ||
                    small(s.c("a") * s.c("b") * s.c("x") * s.c("y") / s.c("q"));
           }),
      eop_lhs(theta_ratio("b", true, false), int_b("c"), -1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), x = s.c("x"), y = s.c("y");
        const std::int64_t c = s.i("c");
        return (th(b * x, q, ctx) * pinf(a * x, q, ctx) *
                hyp({q / (a * x), 0}, zeros(c), q, sgn(c) * a * b * x * y / q, ctx))
            .to_complex();
      });

  add(out, "eop-theta-recip-qinvc", 'C', E, "(-1)^cbqy/ax",
      draw({"a", "b"}, false, 0, 3, nullptr),
      eop_lhs(theta_ratio("b", false, true, "a"), int_b("c"), -1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), x = s.c("x"), y = s.c("y");
        const std::int64_t c = s.i("c");
        return (th(b * x, q, ctx) * rinf(a * x, q, ctx) *
                hyp({0}, cat({q / (a * x)}, zeros(c)), q, sgn(c) * b * q * y / (a * x), ctx))
            .to_complex();
      });

  add(out, "eop-theta-ratio-qinvc", 'C', E, "(-1)^cady/b",
      draw({"a", "b", "d"}, false, 0, 3,
           [](const Sample& s) {
             return s.i("c") > 0 || small(s.c("a") * s.c("d") * s.c("y") / s.c("b"));
           }),
      eop_lhs(theta_ratio("d", true, true), int_b("c"), -1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), dd = s.c("d"), x = s.c("x"),
                      y = s.c("y");
        const std::int64_t c = s.i("c");
        return (th(dd * x, q, ctx) * pinf(a * x, q, ctx) * rinf(b * x, q, ctx) *
                hyp({q / (a * x), 0}, cat({q / (b * x)}, zeros(c)), q, sgn(c) * a * dd * y / b, ctx))
            .to_complex();
      });
}

}  // namespace

void add_group_c(Cases& out) {
  add_basic(out);
  add_prodinf(out);
  add_ramkernel(out);
  add_bracket(out);
  add_corollaries(out);
}

}  // namespace qseries::cases
