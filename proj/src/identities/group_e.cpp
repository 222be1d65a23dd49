#include <initializer_list>

#include "identities/cases.hpp"

namespace qseries::cases {

namespace {

// Geometric tails stay under about 200 terms.
constexpr Real kBilRatio = 0.85;

bool inside(Complex z) { return std::abs(z) <= kBilRatio; }

Ext pinfs(std::initializer_list<Complex> v, Complex q, EvalContext& ctx) {
  Ext p(1.0);
  for (Complex a : v) p *= pinf(a, q, ctx);
  return p;
}

Ext rinfs(std::initializer_list<Complex> v, Complex q, EvalContext& ctx) {
  Ext p(1.0);
  for (Complex a : v) p *= rinf(a, q, ctx);
  return p;
}

void add_theta_psi(Cases& out) {
  const auto E = CaseStatus::ExpectedPass;
  const auto F = CaseStatus::Flagged;

  // The stated denominator has -b/qax; the fix drops the sign.
  auto zero_one = [&](std::string id, CaseStatus st, bool fix) {
    add(out, std::move(id), 'E', st,
        "{}_0\\psi_1(-;b;q,qax)=\\frac{\\vartheta(-ax;q)}{(b,-b/qax;q)_{\\infty}}",
        [](SampleRng& r) {
          Draw d(r);
          const Complex q = d.q(), a = d.param("a"), x = d.x(), b = d.param("b");
          d.require(inside(b / (q * a * x)));
          return d.finish();
        },
        [](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), b = s.c("b");
          return bpsi({}, {b}, q, q * a * x, ctx).to_complex();
        },
        [fix](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), b = s.c("b");
          const Complex w = (fix ? b : -b) / (q * a * x);
          return (th(-a * x, q, ctx) * rinfs({b, w}, q, ctx)).to_complex();
        });
  };
  zero_one("psi-0psi1", F, false);
  zero_one("psi-0psi1-corrected", E, true);

  // The fix replaces the argument axy/q by ay.
  auto one_one = [&](std::string id, CaseStatus st, bool fix) {
    add(out, std::move(id), 'E', st,
        "{}_1\\psi_1(-qx/y;0;q,axy/q)=\\frac{\\vartheta(ax;q)}{(ay,-y/x;q)_{\\infty}}",
        [fix](SampleRng& r) {
          Draw d(r);
          const Complex q = d.q(), a = d.param("a"), x = d.x(), y = d.y();
          d.require(inside(fix ? a * y : a * x * y / q));
          return d.finish();
        },
        [fix](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
          const Complex z = fix ? a * y : a * x * y / q;
          return bpsi({-q * x / y}, {0}, q, z, ctx).to_complex();
        },
        [](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
          return (th(a * x, q, ctx) * rinfs({a * y, -y / x}, q, ctx)).to_complex();
        });
  };
  one_one("psi-1psi1-theta", F, false);
  one_one("psi-1psi1-theta-corrected", E, true);

  // The right side carries a 2phi0, which has no sum off its terminating set.
  add(out, "psi-1psi2-theta", 'E', F,
      "{}_1\\psi_2(qx/y;q^2/ay,0;q,-q^2bx/a)=\\vartheta(bx;q)\\frac{(ay/q;q)_{\\infty}}{(y/x;q)_{\\infty}}{}_2\\phi_0(q/ax,0;-;q,-abxy/q)",
      [](SampleRng& r) {
        Draw d(r);
        d.q();
        d.param("a");
        d.x();
        d.y();
        d.param("b");
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y"), b = s.c("b");
        return bpsi({q * x / y}, {q * q / (a * y), 0}, q, -q * q * b * x / a, ctx).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y"), b = s.c("b");
        return (th(b * x, q, ctx) * pinf(a * y / q, q, ctx) * rinf(y / x, q, ctx) *
                hyp({q / (a * x), 0}, {}, q, -a * b * x * y / q, ctx))
            .to_complex();
      });
}

void add_two_two(Cases& out) {
  const auto F = CaseStatus::Flagged;

  add(out, "psi-2psi2-b0", 'E', F,
      "{}_2\\psi_2(a,y/x;b,0;q,dx)=\\frac{(y/x,q,b/a,adx,q/adx;q)_{\\infty}}{(b,q/a,dx,b/adx;q)_{\\infty}}{}_2\\phi_{1}(x,0;qax/b;q,qy)",
      [](SampleRng& r) {
        Draw d(r);
        const Complex q = d.q(), a = d.param("a"), x = d.x(), y = d.y(), b = d.param("b"),
                      dd = d.param("d");
        d.require(std::abs(b / a) <= kBilRatio * std::abs(dd * x));
        d.require(inside(dd * x) && inside(q * y / (b * x)));
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y"), b = s.c("b"),
                      d = s.c("d");
        return bpsi({a, y / x}, {b, 0}, q, d * x, ctx).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y"), b = s.c("b"),
                      d = s.c("d");
        return (pinfs({y / x, q, b / a, a * d * x, q / (a * d * x)}, q, ctx) *
                rinfs({b, q / a, d * x, b / (a * d * x)}, q, ctx) *
                hyp({x, 0}, {q * a * x / b}, q, q * y, ctx))
            .to_complex();
      });

  add(out, "psi-2psi2-ayx", 'E', F,
      "{}_2\\psi_2(a,y/x;b,ay/x;q,dx)=\\frac{(y/x,q,b/a,adx,q/adx;q)_{\\infty}}{(ay/x,b,q/a,dx,b/adx;q)_{\\infty}}{}_2\\phi_{1}(ax,dx;qadx/b;q,qy)",
      [](SampleRng& r) {
        Draw d(r);
        const Complex q = d.q(), a = d.param("a"), x = d.x(), y = d.y(), b = d.param("b"),
                      dd = d.param("d");
        d.require(std::abs(b / a) <= kBilRatio * std::abs(dd * x));
        d.require(std::abs(b * x) <= kBilRatio * std::abs(dd * x));
        d.require(inside(dd * x) && inside(q * y / (b * x)));
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y"), b = s.c("b"),
                      d = s.c("d");
        return bpsi({a, y / x}, {b, a * y / x}, q, d * x, ctx).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y"), b = s.c("b"),
                      d = s.c("d");
        return (pinfs({y / x, q, b / a, a * d * x, q / (a * d * x)}, q, ctx) *
                rinfs({a * y / x, b, q / a, d * x, b / (a * d * x)}, q, ctx) *
                hyp({a * x, d * x}, {q * a * d * x / b}, q, q * y, ctx))
            .to_complex();
      });

  add(out, "psi-2psi2-neg", 'E', F,
      "{}_2\\psi_2(a,-qy/x;b,-q^2/ay;q,qcx/a)=\\frac{(-ay/q,q,b/a,acx,q/acx;q)_{\\infty}}{(-y/x,b,q/a,cx,b/acx;q)_{\\infty}}{}_2\\phi_1(q/ax,b/acx;q/cx;q,-\\frac{a^2y}{q})",
      [](SampleRng& r) {
        Draw d(r);
        // The left tail ratio is b/acy^2, so y needs more room than usual.
        const Complex q = d.q(), a = d.param("a"), x = d.x(), y = d.y(0.02, 1.0),
                      b = d.param("b"), c = d.param("c");
        d.require(inside(b / (a * c * y * y)));
        d.require(inside(b / (a * c * x)) && inside(c * x) && inside(a * a * y / q));
        d.require(inside(q * c / a) && inside(q * c * x / a));
        d.require(std::abs(b * q / (a * a * x)) <= kBilRatio * std::abs(q * c / a));
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y"), b = s.c("b"),
                      c = s.c("c");
        return bpsi({a, -q * y / x}, {b, -q * q / (a * y)}, q, q * c * x / a, ctx).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y"), b = s.c("b"),
                      c = s.c("c");
        return (pinfs({-a * y / q, q, b / a, a * c * x, q / (a * c * x)}, q, ctx) *
                rinfs({-y / x, b, q / a, c * x, b / (a * c * x)}, q, ctx) *
                hyp({q / (a * x), b / (a * c * x)}, {q / (c * x)}, q, -a * a * y / q, ctx))
            .to_complex();
      });

  add(out, "coro-2psi2-bd1", 'E', F,
      "Set $b=d^2x$: {}_2\\psi_2(a,-1/dx^2;d^2x,-a/dx^2;q,dx)=\\frac{(-1/dx^2,q,d^2x/a,adx,q/adx,-q;q)_{\\infty}(aq,aq^2/d^2;q^2)_{\\infty}}{(-a/dx^2,d^2x,q/a,dx,d/a,aq/d,-q/d;q)_{\\infty}}",
      [](SampleRng& r) {
        Draw d(r);
        const Complex q = d.q(), a = d.param("a"), x = d.x(), dd = d.param("d");
        d.require(inside(dd / a) && inside(dd * x) && inside(q / (dd * x)));
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), d = s.c("d");
        const Complex u = Real(1) / (d * x * x);
        return bpsi({a, -u}, {d * d * x, -a * u}, q, d * x, ctx).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), d = s.c("d");
        const Complex u = Real(1) / (d * x * x);
        return (pinfs({-u, q, d * d * x / a, a * d * x, q / (a * d * x), -q}, q, ctx) *
                pinfs({a * q, a * q * q / (d * d)}, q * q, ctx) *
                rinfs({-a * u, d * d * x, q / a, d * x, d / a, a * q / d, -q / d}, q, ctx))
            .to_complex();
      });

  add(out, "coro-2psi2-bd2", 'E', F,
      "Set $b=qc^2x$: {}_2\\psi_2(a,-q^2/acx;qc^2x,-qc;q,qcx/a)=\\frac{(-1/c,q,qc^2x/a,acx,q/acx,-q;q)_{\\infty}(q^2/cx,aq/c^2x;q^2)_{\\infty}}{(-q/acx,qc^2x,q/a,cx,qc/a,q/cx,-a/c;q)_{\\infty}}",
      [](SampleRng& r) {
        Draw d(r);
        const Complex q = d.q(), a = d.param("a"), x = d.x(), c = d.param("c");
        d.require(inside(q * c / a) && inside(c * x) && inside(a / c) && inside(q * c * x / a));
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), c = s.c("c");
        return bpsi({a, -q * q / (a * c * x)}, {q * c * c * x, -q * c}, q, q * c * x / a, ctx)
            .to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), c = s.c("c");
        return (pinfs({-Real(1) / c, q, q * c * c * x / a, a * c * x, q / (a * c * x), -q}, q, ctx) *
                pinfs({q * q / (c * x), a * q / (c * c * x)}, q * q, ctx) *
                rinfs({-q / (a * c * x), q * c * c * x, q / a, c * x, q * c / a, q / (c * x), -a / c},
                      q, ctx))
            .to_complex();
      });
}

}  // namespace

void add_group_e(Cases& out) {
  add_theta_psi(out);
  add_two_two(out);
}

}  // namespace qseries::cases
