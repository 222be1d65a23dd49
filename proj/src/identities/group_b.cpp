#include "identities/cases.hpp"
#include "qseries/qderivative.hpp"

namespace qseries::cases {

namespace {

Ext dk(const PointFunction& f, Complex lam, std::int64_t k, Complex x) {
  return d_lambda_iter_ext(f, lam, k, x);
}

// q, the named complex parameters, x, then n and k.
IdentityCase::Draw draw_with(std::vector<std::string> names, bool with_n) {
  return [names = std::move(names), with_n](SampleRng& r) {
    Draw d(r);
    d.q();
    for (const auto& nm : names) d.param(nm);
    d.x();
    if (with_n) d.integer("n", -3, 3);
    d.integer("k", 0, 4);
    return d.finish();
  };
}

IdentityCase::Draw draw_bracket() {
  return [](SampleRng& r) {
    Draw d(r);
    d.q();
    const auto rr = d.integer("r", 0, 2);
    const auto ss = d.integer("s", 0, 2);
    d.params("a", rr);
    d.params("b", ss);
    d.x();
    d.integer("n", -3, 3);
    d.integer("k", 0, 4);
    return d.finish();
  };
}

Ext fin_prod(const Vec& v, Complex t, Complex q, std::int64_t k) {
  Ext p(1.0);
  for (Complex a : v) p *= pfin(a * t, q, k);
  return p;
}

Ext fin_recip(const Vec& v, Complex t, Complex q, std::int64_t k) {
  Ext p(1.0);
  for (Complex a : v) p *= rfin(a * t, q, k);
  return p;
}

}  // namespace

void add_group_b(Cases& out) {
  const auto E = CaseStatus::ExpectedPass;
  const auto F = CaseStatus::Flagged;

  add(out, "dq-pow-prodinf", 'B', E,
      "\\mathbf{D}_{q}^k\\{x^n(a/x;q)_{\\infty}\\}=x^{n-2k}\\frac{(-a)^k}{q^{k^2-nk}}(qx/a;q)_{k}(a/x;q)_{\\infty}",
      draw_with({"a"}, true),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a");
        const std::int64_t n = s.i("n");
        PointFunction f([&, q, a, n](Complex t) { return pw(t, n) * pinf(a / t, q, ctx); });
        return dk(f, q, s.i("k"), s.c("x")).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x");
        const std::int64_t n = s.i("n"), k = s.i("k");
        return (pw(x, n - 2 * k) * pw(-a, k) / pw(q, k * k - n * k) * pfin(q * x / a, q, k) *
                pinf(a / x, q, ctx))
            .to_complex();
      });

  add(out, "dqinv-pow-prodinf", 'B', E,
      "\\mathbf{D}_{q^{-1}}^k\\{x^n(a/x;q)_{\\infty}\\}=x^{n-k}q^{\\binom{k}{2}-nk}\\frac{(a/x;q)_{\\infty}}{(a/x;q)_{k}}",
      draw_with({"a"}, true),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a");
        const std::int64_t n = s.i("n");
        PointFunction f([&, q, a, n](Complex t) { return pw(t, n) * pinf(a / t, q, ctx); });
        return dk(f, Real(1) / q, s.i("k"), s.c("x")).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x");
        const std::int64_t n = s.i("n"), k = s.i("k");
        return (pw(x, n - k) * pw(q, c2(k) - n * k) * pinf(a / x, q, ctx) * rfin(a / x, q, k))
            .to_complex();
      });

  // F(x) = (ax, q/ax)_inf / (x, b/ax)_inf
  auto ram_lhs = [](const Sample& s, EvalContext& ctx) {
    const Complex q = s.c("q"), a = s.c("a"), b = s.c("b");
    PointFunction f([&, q, a, b](Complex t) { return ramkernel(a, b, t, q, ctx); });
    return dk(f, q, s.i("k"), s.c("x")).to_complex();
  };
  auto ram_rhs = [](bool corrected) {
    return [corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), x = s.c("x");
      const std::int64_t k = s.i("k");
      Ext v = pw(q, k) / pw(q, c2(k)) * pfin(x, q, k) * rfin(q * a * x / b, q, k) *
              ramkernel(a, b, x, q, ctx);
      if (corrected) v /= pw(b * x, k);
      return v.to_complex();
    };
  };
  const std::string ram_anchor =
      "\\mathbf{D}_{q}^n\\left\\{\\frac{(ax,q/ax;q)_{\\infty}}{(x,b/ax;q)_{\\infty}}\\right\\}="
      "\\frac{q^n}{q^{\\binom{n}{2}}}\\frac{(x;q)_{n}}{(qax/b;q)_{n}}\\frac{(ax,q/ax;q)_{\\infty}}{(x,b/ax;q)_{\\infty}}";
  add(out, "dq-ramkernel", 'B', F, ram_anchor, draw_with({"a", "b"}, false), ram_lhs,
      ram_rhs(false));
  add(out, "dq-ramkernel-corrected", 'B', E, ram_anchor, draw_with({"a", "b"}, false), ram_lhs,
      ram_rhs(true));

  auto ramd_lhs = [](const Sample& s, EvalContext& ctx) {
    const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), dd = s.c("d");
    PointFunction f([&, q, a, b, dd](Complex t) { return ramkernel(a, b, dd * t, q, ctx); });
    return dk(f, Real(1) / q, s.i("k"), s.c("x")).to_complex();
  };
  auto ramd_rhs = [](bool corrected) {
    return [corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), x = s.c("x");
      const Complex dx = corrected ? s.c("d") * x : x;
      const std::int64_t k = s.i("k");
      return (pw(q, c2(k)) / pw(x, k) * pw(a, k) * pfin(b / (a * dx), q, k) *
              rfin(q / dx, q, k) * ramkernel(a, b, dx, q, ctx))
          .to_complex();
    };
  };
  const std::string ramd_anchor =
      "\\mathbf{D}_{q^{-1}}^n\\left\\{\\frac{(adx,q/adx;q)_{\\infty}}{(dx,b/adx;q)_{\\infty}}\\right\\}="
      "\\frac{q^{\\binom{n}{2}}}{x^n}\\frac{a^n(b/ax;q)_{n}}{(q/x;q)_{n}}\\frac{(ax,q/ax;q)_{\\infty}}{(x,b/ax;q)_{\\infty}}";
  auto ramd_draw = [](SampleRng& r) {
    Draw d(r);
    d.q();
    d.param("a");
    d.param("b");
    d.x();
    d.param("d", 0.3, 1.5);
    d.integer("k", 0, 4);
    return d.finish();
  };
  add(out, "dqinv-ramkernel", 'B', F, ramd_anchor, ramd_draw, ramd_lhs, ramd_rhs(false));
  add(out, "dqinv-ramkernel-corrected", 'B', E, ramd_anchor, ramd_draw, ramd_lhs, ramd_rhs(true));

  auto bracket_lhs = [](Real lam_sign) {
    return [lam_sign](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q");
      const Vec A = param_list(s, "a", s.i("r")), B = param_list(s, "b", s.i("s"));
      const std::int64_t n = s.i("n");
      PointFunction f([&, q, A, B, n](Complex t) { return pw(t, n) * bracket(A, B, t, q, ctx); });
      const Complex lam = lam_sign > 0 ? q : Real(1) / q;
      return dk(f, lam, s.i("k"), s.c("x")).to_complex();
    };
  };

  add(out, "dq-bracket", 'B', E,
      "For all $k\\in\\mathbb{N}$ we have that \\mathbf{D}_{q}^{k}\\left\\{x^n\\bigg[ a_{1},\\ldots,a_{r} "
      "\\\\ b_{1},\\ldots,b_{s} ;q,x \\bigg]_{\\infty}\\right\\}=\\frac{x^{n-k}}{q^{\\binom{k}{2}-kn}}",
      draw_bracket(), bracket_lhs(+1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), x = s.c("x");
        const Vec A = param_list(s, "a", s.i("r")), B = param_list(s, "b", s.i("s"));
        const std::int64_t n = s.i("n"), k = s.i("k");
        return (pw(x, n - k) / pw(q, c2(k) - k * n) * fin_prod(B, x, q, k) *
                fin_recip(A, x, q, k) * bracket(A, B, x, q, ctx))
            .to_complex();
      });

  add(out, "dqinv-bracket", 'B', E,
      "For all $k\\in\\mathbb{N}$ we have that \\mathbf{D}_{q^{-1}}^{k}\\left\\{x^n\\bigg[ a_{1},\\ldots,a_{r} "
      "\\\\ b_{1},\\ldots,b_{s} ;q,x \\bigg]_{\\infty}\\right\\}",
      draw_bracket(), bracket_lhs(-1),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), x = s.c("x");
        const std::int64_t r = s.i("r"), ss = s.i("s");
        const Vec A = param_list(s, "a", r), B = param_list(s, "b", ss);
        const std::int64_t n = s.i("n"), k = s.i("k");
        const Ext bal = Ext::pow(Ext(sgn(k)) * pw(q, c2(k)), 1 + ss - r);
        const Ext z = -(pw(q, ss - r) * pw(x, r - ss - 1) * Ext(prod(A)) / (pw(q, n) * Ext(prod(B))));
        Ext v = pw(x, n) * bal * Ext::pow(z, k);
        for (Complex a : A) v *= pfin(q / (a * x), q, k);
        for (Complex b : B) v *= rfin(q / (b * x), q, k);
        return (v * bracket(A, B, x, q, ctx)).to_complex();
      });

  add(out, "dqinv-ax", 'B', E,
      "\\mathbf{D}_{q^{-1}}^{k}\\left\\{x^n(ax;q)_{\\infty}\\right\\}&=x^n\\left(-\\frac{a}{q^{n+1}}\\right)^k"
      " (q/ax;q)_{k}(ax;q)_{\\infty}",
      draw_with({"a"}, true),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a");
        const std::int64_t n = s.i("n");
        PointFunction f([&, q, a, n](Complex t) { return pw(t, n) * pinf(a * t, q, ctx); });
        return dk(f, Real(1) / q, s.i("k"), s.c("x")).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x");
        const std::int64_t n = s.i("n"), k = s.i("k");
        return (pw(x, n) * Ext::pow(-(Ext(a) / pw(q, n + 1)), k) * pfin(q / (a * x), q, k) *
                pinf(a * x, q, ctx))
            .to_complex();
      });

  auto recip_lhs = [](const Sample& s, EvalContext& ctx) {
    const Complex q = s.c("q"), a = s.c("a");
    const std::int64_t n = s.i("n");
    PointFunction f([&, q, a, n](Complex t) { return pw(t, n) * rinf(a * t, q, ctx); });
    return dk(f, Real(1) / q, s.i("k"), s.c("x")).to_complex();
  };
  auto recip_rhs = [](bool corrected) {
    return [corrected](const Sample& s, EvalContext& ctx) {
      const Complex q = s.c("q"), a = s.c("a"), x = s.c("x");
      const std::int64_t n = s.i("n"), k = s.i("k");
      Ext v = pw(x, n - 2 * k) * pw(q, 2 * c2(k) - (n - 1) * k) / pw(a, k) *
              rfin(q / (a * x), q, k) * rinf(a * x, q, ctx);
      if (corrected) v *= Ext(sgn(k));
      return v.to_complex();
    };
  };
  const std::string recip_anchor =
      "\\mathbf{D}_{q^{-1}}^{k}\\left\\{x^n\\frac{1}{(ax;q)_{\\infty}}\\right\\}&= "
      "\\frac{x^{n-2k}q^{2\\binom{k}{2}-(n-1)k}}{a^k(q/ax;q)_{k}(ax;q)_{\\infty}}";
  add(out, "dqinv-recip-ax", 'B', F, recip_anchor, draw_with({"a"}, true), recip_lhs,
      recip_rhs(false));
  add(out, "dqinv-recip-ax-corrected", 'B', E, recip_anchor, draw_with({"a"}, true), recip_lhs,
      recip_rhs(true));

  add(out, "dqinv-ratio", 'B', E,
      "\\mathbf{D}_{q^{-1}}^{k}\\left\\{x^n\\frac{(ax;q)_{\\infty}}{(bx;q)_{\\infty}}\\right\\}&="
      "q^{\\binom{k}{2}-nk}\\left(\\frac{a}{b}\\right)^kx^{n-k}",
      draw_with({"a", "b"}, true),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), b = s.c("b");
        const std::int64_t n = s.i("n");
        PointFunction f([&, q, a, b, n](Complex t) {
          return pw(t, n) * pinf(a * t, q, ctx) * rinf(b * t, q, ctx);
        });
        return dk(f, Real(1) / q, s.i("k"), s.c("x")).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), x = s.c("x");
        const std::int64_t n = s.i("n"), k = s.i("k");
        return (pw(q, c2(k) - n * k) * pw(a / b, k) * pw(x, n - k) * pfin(q / (a * x), q, k) *
                rfin(q / (b * x), q, k) * pinf(a * x, q, ctx) * rinf(b * x, q, ctx))
            .to_complex();
      });

  add(out, "theta-dq", 'B', E,
      "\\mathbf{D}_{q}^n\\vartheta(ax;q)&=\\frac{\\vartheta(q^{-n}ax;q)}{q^{\\binom{n}{2}}x^n}="
      "\\frac{\\vartheta(ax;q)}{(ax^2)^nq^{n^2}}",
      draw_with({"a"}, false),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a");
        PointFunction f([&, q, a](Complex t) { return th(a * t, q, ctx); });
        return dk(f, q, s.i("k"), s.c("x")).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x");
        const std::int64_t k = s.i("k");
        return (th(a * x, q, ctx) / (pw(a * x * x, k) * pw(q, k * k))).to_complex();
      });

  add(out, "theta-dqinv", 'B', E,
      "\\mathbf{D}_{q^{-1}}^n\\vartheta(ax;q)=q^{\\binom{n}{2}}\\frac{\\vartheta(q^nax;q)}{x^n}=a^n\\vartheta(ax;q)",
      draw_with({"a"}, false),
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a");
        PointFunction f([&, q, a](Complex t) { return th(a * t, q, ctx); });
        return dk(f, Real(1) / q, s.i("k"), s.c("x")).to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x");
        return (pw(a, s.i("k")) * th(a * x, q, ctx)).to_complex();
      });
}

}  // namespace qseries::cases
