#include "identities/cases.hpp"
#include "qseries/theta.hpp"

namespace qseries::cases {

void add_group_a(Cases& out) {
  const auto E = CaseStatus::ExpectedPass;

  add(out, "qpoch-shift-up", 'A', E, "$(q^{n}a;q)_{\\infty}&=\\frac{(a;q)_{\\infty}}{(a;q)_{n}}$",
      [](SampleRng& r) {
        Draw d(r);
        d.q();
        d.param("a");
        d.integer("n", -3, 6);
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q");
        return pinf(pw(q, s.i("n")).to_complex() * s.c("a"), q, ctx).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a");
        return (pinf(a, q, ctx) / pfin(a, q, s.i("n"))).to_complex();
      });

  add(out, "qpoch-shift-down", 'A', E,
      "$(q^{-n}a;q)_{\\infty}&=\\frac{(-a)^n}{q^{\\binom{n+1}{2}}}(q/a;q)_{n}(a;q)_{\\infty}$",
      [](SampleRng& r) {
        Draw d(r);
        d.q();
        d.param("a");
        d.integer("n", 0, 6);
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q");
        return pinf(pw(q, -s.i("n")).to_complex() * s.c("a"), q, ctx).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a");
        const std::int64_t n = s.i("n");
        return (pw(-a, n) / pw(q, c2(n + 1)) * pfin(q / a, q, n) * pinf(a, q, ctx)).to_complex();
      });

  add(out, "qpoch-base-inverse", 'A', E, "$(a;q^{-1})_{n}&=q^{-\\binom{n}{2}}(-a)^{n}(a^{-1};q)_{n}$",
      [](SampleRng& r) {
        Draw d(r);
        d.q();
        d.param("a");
        d.integer("n", 0, 6);
        return d.finish();
      },
      [](const Sample& s, EvalContext&) {
        const Complex q = s.c("q"), a = s.c("a");
        // Direct product in base 1/q.
        Complex p(1, 0);
        for (std::int64_t k = 0; k < s.i("n"); ++k) p *= Real(1) - a * pw(q, -k).to_complex();
        return p;
      },
      [](const Sample& s, EvalContext&) {
        const Complex q = s.c("q"), a = s.c("a");
        const std::int64_t n = s.i("n");
        return (pw(q, -c2(n)) * pw(-a, n) * pfin(Real(1) / a, q, n)).to_complex();
      });

  add(out, "theta-triple-product", 'A', E,
      "The Jacobi theta function has the following product representation",
      [](SampleRng& r) {
        Draw d(r);
        d.q();
        d.x(0.2, 3.0);
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        TailStats st;
        const Complex v = theta_series(s.c("x"), QBase(s.c("q")), ctx.trunc, &st);
        ctx.note_tail(st.max_tail());
        return v;
      },
      [](const Sample& s, EvalContext& ctx) {
        return theta_product(s.c("x"), QBase(s.c("q")), ctx.trunc);
      });

  add(out, "q-binomial", 'A', E,
      "{}_1\\phi_{0}(a;q,z)=\\frac{(az;q)_{\\infty}}{(z;q)_{\\infty}}",
      [](SampleRng& r) {
        Draw d(r);
        d.q();
        d.param("a");
        d.param("z", 0.1, 0.7);
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        return hyp({s.c("a")}, {}, s.c("q"), s.c("z"), ctx).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), z = s.c("z");
        return (pinf(a * z, q, ctx) * rinf(z, q, ctx)).to_complex();
      });

  add(out, "ramanujan-1psi1", 'A', E,
      "{}_{1}\\psi_{1}(a;b;q,z)=\\sum_{n=-\\infty}^{\\infty}\\frac{(a;q)_{n}}{(b;q)_{n}}z^n="
      "\\frac{(q,b/a,az,q/az;q)_{\\infty}}{(b,q/a,z,b/az;q)_{\\infty}}",
      [](SampleRng& r) {
        Draw d(r);
        d.q();
        const Complex a = d.param("a"), b = d.param("b"), z = d.param("z", 0.2, 0.7);
        d.require(std::abs(b / a) <= 0.5 * std::abs(z));
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        return bpsi({s.c("a")}, {s.c("b")}, s.c("q"), s.c("z"), ctx).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), z = s.c("z");
        const Ext num = pinf(q, q, ctx) * pinf(b / a, q, ctx) * pinf(a * z, q, ctx) *
                        pinf(q / (a * z), q, ctx);
        const Ext den = rinf(b, q, ctx) * rinf(q / a, q, ctx) * rinf(z, q, ctx) *
                        rinf(b / (a * z), q, ctx);
        return (num * den).to_complex();
      });

  add(out, "bailey-daum", 'A', E,
      "{}_2\\phi_{1}\\left(\\begin{array}{c} a,b\\\\ aq/b \\end{array};q,-q/b\\right)="
      "\\frac{(-q;q)_{\\infty}(aq,aq^2/b^2;q^2)_{\\infty}}{(aq/b,-q/b;q)_{\\infty}}",
      [](SampleRng& r) {
        Draw d(r);
        const Complex q = d.q();
        d.param("a");
        const Complex b = d.param("b");
        d.require(std::abs(q / b) <= 1 - kDomainMargin);
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), b = s.c("b");
        return hyp({a, b}, {a * q / b}, q, -q / b, ctx).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), b = s.c("b");
        const Complex q2 = q * q;
        return (pinf(-q, q, ctx) * pinf(a * q, q2, ctx) * pinf(a * q2 / (b * b), q2, ctx) *
                rinf(a * q / b, q, ctx) * rinf(-q / b, q, ctx))
            .to_complex();
      });
}

}  // namespace qseries::cases
