#include <functional>

#include "identities/cases.hpp"

namespace qseries::cases {

namespace {

// Ratio bound for sums whose tail is only geometric; about 200 terms at 1e-14.
constexpr Real kBilRatio = 0.85;

bool inside(Complex z) { return std::abs(z) <= kBilRatio; }

// q^{n(n+1)/2} w^n, the theta weight of the n-th term.
Ext weight(Complex q, Complex w, std::int64_t n) { return pw(q, c2(n + 1)) * pw(w, n); }

// z q^n as a plain number.
Complex zq(Complex z, Complex q, std::int64_t n) { return (Ext(z) * pw(q, n)).to_complex(); }

// sum_n q^{C(n+1,2)} w^n f(n)
Ext theta_sum(Complex q, Complex w, const std::function<Ext(std::int64_t)>& f, EvalContext& ctx) {
  return bil([&](std::int64_t n) { return weight(q, w, n) * f(n); }, ctx);
}

// q, then the named parameters in the default range, then x and y.
Draw start(SampleRng& r, std::initializer_list<const char*> names) {
  Draw d(r);
  d.q();
  for (const char* nm : names) d.param(nm);
  d.x();
  d.y();
  return d;
}

void add_theta_e(Cases& out) {
  const auto E = CaseStatus::ExpectedPass;

  add(out, "bs-theta-eplus", 'D', E,
      "\\sum_{n}q^{\\binom{n+1}{2}}(ax)^n\\mathrm{E}_{b-1}(q^ny/x;q)=\\vartheta(ax;q)\\mathrm{E}_{b-2}(y/qax^2;q)",
      [](SampleRng& r) {
        Draw d(r);
        const Complex q = d.q(), a = d.param("a"), x = d.x(), y = d.y();
        const auto b = d.integer("b", 2, 5);
        // b = 2 leaves a geometric left tail with ratio y/qax^2.
        d.require(b > 2 || inside(y / (q * a * x * x)));
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
        const auto b = static_cast<unsigned>(s.i("b"));
        return theta_sum(q, a * x, [&](std::int64_t n) { return eb(zq(y / x, q, n), q, b - 1, ctx); },
                         ctx)
            .to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
        const auto b = static_cast<unsigned>(s.i("b"));
        return (th(a * x, q, ctx) * eb(y / (q * a * x * x), q, b - 2, ctx)).to_complex();
      });

  add(out, "bs-theta-eminus", 'D', E,
      "\\sum_{n}q^{\\binom{n+1}{2}}(ax)^n\\mathrm{E}_{b+1}(q^{-n}y/x;q)=\\vartheta(ax;q)\\mathrm{E}_{b}(ay;q)",
      [](SampleRng& r) {
        Draw d = start(r, {"a"});
        d.integer("b", 0, 3);
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
        const auto b = static_cast<unsigned>(s.i("b"));
        return theta_sum(q, a * x,
                         [&](std::int64_t n) { return eb(zq(y / x, q, -n), q, b + 1, ctx); }, ctx)
            .to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
        const auto b = static_cast<unsigned>(s.i("b"));
        return (th(a * x, q, ctx) * eb(a * y, q, b, ctx)).to_complex();
      });

  add(out, "bs-theta-kinf", 'D', E,
      "\\sum_{n}q^{\\binom{n+1}{2}}(ax)^n\\mathrm{K}_{\\infty}(q^{-n}y/x)=\\vartheta(ax;q)(-ay;q)_{\\infty}",
      [](SampleRng& r) { return start(r, {"a"}).finish(); },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
        return theta_sum(q, a * x, [&](std::int64_t n) { return eb(zq(y / x, q, -n), q, 2, ctx); },
                         ctx)
            .to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), x = s.c("x"), y = s.c("y");
        return (th(a * x, q, ctx) * pinf(-a * y, q, ctx)).to_complex();
      });
}

void add_theta_phi(Cases& out) {
  const auto E = CaseStatus::ExpectedPass;
  const auto F = CaseStatus::Flagged;

  add(out, "bs-1phi1-theta", 'D', E,
      "\\sum_{n}q^{\\binom{n+1}{2}}(cx)^n{}_1\\phi_1(qx/a;0;q,q^{n-1}ay/x^2)=\\vartheta(cx;q)\\frac{(-y/qcx^2;q)_{\\infty}}{(-ay/q^2cx^3;q)_{\\infty}}",
      [](SampleRng& r) {
        Draw d(r);
        const Complex q = d.q(), a = d.param("a"), c = d.param("c"), x = d.x(), y = d.y();
        d.require(inside(a * y / (q * q * c * x * x * x)));
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), c = s.c("c"), x = s.c("x"), y = s.c("y");
        return theta_sum(q, c * x,
                         [&](std::int64_t n) {
                           return hyp({q * x / a}, {0}, q, zq(a * y / (x * x), q, n - 1), ctx);
                         },
                         ctx)
            .to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), c = s.c("c"), x = s.c("x"), y = s.c("y");
        return (th(c * x, q, ctx) * pinf(-y / (q * c * x * x), q, ctx) *
                rinf(-a * y / (q * q * c * x * x * x), q, ctx))
            .to_complex();
      });

  // 1phi_{b-2} summed against theta; `fix` divides the right argument by q^2.
  auto phib = [&](std::string id, CaseStatus st, bool fix) {
    add(out, std::move(id), 'D', st,
        "\\sum_{n}q^{\\binom{n+1}{2}}(cx)^n{}_1\\phi_{b-2}(qx/a;\\mathbf{0}_{b-2};q,(-1)^{b-1}q^{n-1}ay/x^2)=\\vartheta(cx;q){}_1\\phi_{b-3}(qx/a;\\mathbf{0}_{b-3};q,(-1)^{b-2}ay/cx^3)",
        [](SampleRng& r) {
          Draw d = start(r, {"a", "c"});
          d.integer("b", 4, 7);
          return d.finish();
        },
        [](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), a = s.c("a"), c = s.c("c"), x = s.c("x"), y = s.c("y");
          const auto b = s.i("b");
          const Complex z = sgn(b - 1) * a * y / (x * x);
          return theta_sum(q, c * x,
                           [&](std::int64_t n) {
                             return hyp({q * x / a}, zeros(b - 2), q, zq(z, q, n - 1), ctx);
                           },
                           ctx)
              .to_complex();
        },
        [fix](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), a = s.c("a"), c = s.c("c"), x = s.c("x"), y = s.c("y");
          const auto b = s.i("b");
          Complex z = sgn(b - 2) * a * y / (c * x * x * x);
          if (fix) z /= q * q;
          return (th(c * x, q, ctx) * hyp({q * x / a}, zeros(b - 3), q, z, ctx)).to_complex();
        });
  };
  phib("bs-1phib-theta", F, false);
  phib("bs-1phib-theta-corrected", E, true);

  // `fix` drops the stray a from the left argument.
  auto phib1 = [&](std::string id, CaseStatus st, bool fix) {
    add(out, std::move(id), 'D', st,
        "\\sum_{n}q^{\\binom{n+1}{2}}(cx)^n{}_1\\phi_{b+1}(0;a/x,\\mathbf{0}_b;q,(-1)^{b+1}ay/q^nx)=\\vartheta(cx;q){}_1\\phi_{b}(0;a/x,\\mathbf{0}_{b-1};q,(-1)^bcy)",
        [](SampleRng& r) {
          Draw d = start(r, {"a", "c"});
          d.integer("b", 1, 4);
          return d.finish();
        },
        [fix](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), a = s.c("a"), c = s.c("c"), x = s.c("x"), y = s.c("y");
          const auto b = s.i("b");
          const Complex z = sgn(b + 1) * (fix ? Complex(1, 0) : a) * y / x;
          return theta_sum(q, c * x,
                           [&](std::int64_t n) {
                             return hyp({0}, cat({a / x}, zeros(b)), q, zq(z, q, -n), ctx);
                           },
                           ctx)
              .to_complex();
        },
        [](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), a = s.c("a"), c = s.c("c"), x = s.c("x"), y = s.c("y");
          const auto b = s.i("b");
          return (th(c * x, q, ctx) *
                  hyp({0}, cat({a / x}, zeros(b - 1)), q, sgn(b) * c * y, ctx))
              .to_complex();
        });
  };
  phib1("bs-1phib1-qinv-theta", F, false);
  phib1("bs-1phib1-qinv-theta-corrected", E, true);
}

void add_ramkernel(Cases& out) {
  const auto E = CaseStatus::ExpectedPass;
  const auto F = CaseStatus::Flagged;

  add(out, "bs-ramkernel-1phi1", 'D', E,
      "\\sum_{n}q^{\\binom{n+1}{2}}(dx)^n{}_1\\phi_1(x;qax/b;q,-q^{n+1}y)=\\vartheta(dx;q){}_2\\phi_1(x,0;qax/b;q,y/dx)",
      [](SampleRng& r) {
        Draw d(r);
        d.q();
        d.param("a");
        d.param("b");
        const Complex dd = d.param("d"), x = d.x(), y = d.y();
        d.require(inside(y / (dd * x)));
        return d.finish();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), d = s.c("d"), x = s.c("x"),
                      y = s.c("y");
        return theta_sum(q, d * x,
                         [&](std::int64_t n) {
                           return hyp({x}, {q * a * x / b}, q, zq(-y, q, n + 1), ctx);
                         },
                         ctx)
            .to_complex();
      },
      [](const Sample& s, EvalContext& ctx) {
        const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), d = s.c("d"), x = s.c("x"),
                      y = s.c("y");
        return (th(d * x, q, ctx) * hyp({x, 0}, {q * a * x / b}, q, y / (d * x), ctx))
            .to_complex();
      });

  // The stated sum runs over (cx)^n with the integer c; the fix uses (dx)^n.
  auto many = [&](std::string id, CaseStatus st, bool fix) {
    add(out, std::move(id), 'D', st,
        "\\sum_{n}q^{\\binom{n+1}{2}}(cx)^n{}_1\\phi_{c-1}(x;qax/b,\\mathbf{0}_{c-2};q,(-1)^{c-1}q^{n+1}y)=\\vartheta(dx;q){}_1\\phi_{c-2}(x;qax/b,\\mathbf{0}_{c-3};q,(-1)^{c-2}y/dx)",
        [](SampleRng& r) {
          Draw d = start(r, {"a", "b", "d"});
          d.integer("c", 3, 6);
          return d.finish();
        },
        [fix](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), d = s.c("d"), x = s.c("x"),
                        y = s.c("y");
          const auto c = s.i("c");
          const Complex w = fix ? d * x : Real(c) * x;
          const Complex z = sgn(c - 1) * y;
          return theta_sum(q, w,
                           [&](std::int64_t n) {
                             return hyp({x}, cat({q * a * x / b}, zeros(c - 2)), q,
                                        zq(z, q, n + 1), ctx);
                           },
                           ctx)
              .to_complex();
        },
        [](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), d = s.c("d"), x = s.c("x"),
                        y = s.c("y");
          const auto c = s.i("c");
          const Complex z = sgn(c - 2) * y / (d * x);
          return (th(d * x, q, ctx) * hyp({x}, cat({q * a * x / b}, zeros(c - 3)), q, z, ctx))
              .to_complex();
        });
  };
  many("bs-ramkernel-c", F, false);
  many("bs-ramkernel-c-corrected", E, true);

  // Stated with q^n in the left argument; the fix uses q^{-n}.
  auto qinv = [&](std::string id, CaseStatus st, bool fix, bool general) {
    add(out, std::move(id), 'D', st,
        general
            ? "\\sum_{n}q^{\\binom{n+1}{2}}(dx)^n{}_1\\phi_{c+1}(b/ax;q/x,\\mathbf{0}_c;q,(-1)^{c+1}aq^{n}y/x)=\\vartheta(dx;q){}_1\\phi_{c}(b/ax;q/x,\\mathbf{0}_{c-1};q,(-1)^cady)"
            : "\\sum_{n}q^{\\binom{n+1}{2}}(dx)^n{}_1\\phi_1(b/ax;q/x;q,-aq^{n}y/x)=\\vartheta(dx;q){}_2\\phi_1(b/ax,0;q/x;q,ady)",
        [general](SampleRng& r) {
          Draw d = start(r, {"a", "b", "d"});
          if (general) d.integer("c", 1, 4);
          return d.finish();
        },
        [fix, general](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), d = s.c("d"), x = s.c("x"),
                        y = s.c("y");
          const auto c = general ? s.i("c") : 0;
          const Complex z = sgn(c + 1) * a * y / x;
          return theta_sum(q, d * x,
                           [&](std::int64_t n) {
                             return hyp({b / (a * x)}, cat({q / x}, zeros(c)), q,
                                        zq(z, q, fix ? -n : n), ctx);
                           },
                           ctx)
              .to_complex();
        },
        [general](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), a = s.c("a"), b = s.c("b"), d = s.c("d"), x = s.c("x"),
                        y = s.c("y");
          const Complex z = a * d * y;
          if (!general) return (th(d * x, q, ctx) * hyp({b / (a * x), 0}, {q / x}, q, z, ctx)).to_complex();
          const auto c = s.i("c");
          return (th(d * x, q, ctx) * hyp({b / (a * x)}, cat({q / x}, zeros(c - 1)), q, sgn(c) * z, ctx))
              .to_complex();
        });
  };
  qinv("bs-ramkernel-qinv-1", F, false, false);
  qinv("bs-ramkernel-qinv-1-corrected", E, true, false);
  qinv("bs-ramkernel-qinv-c", F, false, true);
  qinv("bs-ramkernel-qinv-c-corrected", E, true, true);
}

void add_bracket(Cases& out) {
  const auto E = CaseStatus::ExpectedPass;
  const auto F = CaseStatus::Flagged;

  // The stated right side drops a_{r+c-1}; the fix keeps every a and adds a
  // zero upper parameter.
  auto up = [&](std::string id, CaseStatus st, bool fix) {
    add(out, std::move(id), 'D', st,
        "\\sum_{n}q^{\\binom{n+1}{2}}(dx)^n{}_{r+1}\\phi_{r+c-1}(b_1x,\\ldots,b_{r+1}x;a_1x,\\ldots,a_{r+c-1}x;q,(-1)^{c-1}q^ny/x)=\\vartheta(dx;q){}_{r+1}\\phi_{r+c-2}(b_1x,\\ldots,b_{r+1}x;a_1x,\\ldots,a_{r+c-2}x;q,(-1)^{c-2}y/qdx^2)",
        [](SampleRng& r) {
          Draw d(r);
          const Complex q = d.q();
          const auto c = d.integer("c", 2, 5);
          const auto rr = d.integer("r", 0, 2);
          d.params("a", rr + c - 1);
          d.params("b", rr + 1);
          const Complex dd = d.param("d"), x = d.x(), y = d.y();
          // c = 2 makes the right side a balanced-degree series in y/qdx^2.
          d.require(c > 2 || inside(y / (q * dd * x * x)));
          return d.finish();
        },
        [](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), d = s.c("d"), x = s.c("x"), y = s.c("y");
          const auto c = s.i("c"), rr = s.i("r");
          const Vec A = times(param_list(s, "a", rr + c - 1), x);
          const Vec B = times(param_list(s, "b", rr + 1), x);
          const Complex z = sgn(c - 1) * y / x;
          return theta_sum(q, d * x, [&](std::int64_t n) { return hyp(B, A, q, zq(z, q, n), ctx); },
                           ctx)
              .to_complex();
        },
        [fix](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), d = s.c("d"), x = s.c("x"), y = s.c("y");
          const auto c = s.i("c"), rr = s.i("r");
          Vec A = times(param_list(s, "a", rr + c - 1), x);
          Vec B = times(param_list(s, "b", rr + 1), x);
          if (fix) {
            B.push_back(0);
          } else {
            A.pop_back();
          }
          const Complex z = sgn(c - 2) * y / (q * d * x * x);
          return (th(d * x, q, ctx) * hyp(B, A, q, z, ctx)).to_complex();
        });
  };
  up("bs-bracket", F, false);
  up("bs-bracket-corrected", E, true);

  // The fix multiplies the right argument by d.
  auto down = [&](std::string id, CaseStatus st, bool fix) {
    add(out, std::move(id), 'D', st,
        "\\sum_{n}q^{\\binom{n+1}{2}}(dx)^n{}_r\\phi_{s+c}(q/a_1x,\\ldots,q/a_rx;q/b_1x,\\ldots,q/b_sx,\\mathbf{0}_c;q,(-1)^{c+1}q^{s-r-n}\\frac{a_1\\cdots a_ry}{x^{1+s-r}b_1\\cdots b_s})=\\vartheta(dx;q){}_{r+1}\\phi_{s+c}(q/a_1x,\\ldots,q/a_rx,0;q/b_1x,\\ldots,q/b_sx,\\mathbf{0}_c;q,(-1)^c\\frac{q^{s-r}a_1\\cdots a_ry}{x^{s-r}b_1\\cdots b_s})",
        [fix](SampleRng& r) {
          Draw d(r);
          const Complex q = d.q();
          const auto c = d.integer("c", 0, 3);
          const auto rr = d.integer("r", 0, 2);
          const auto ss = d.integer("s", 0, 2);
          const Vec A = d.params("a", rr);
          const Vec B = d.params("b", ss);
          const Complex dd = d.param("d"), x = d.x(), y = d.y();
          // Beyond r = s + c the left series has no bilateral sense.
          d.require(rr <= ss + c);
          Complex z = y * prod(A) / prod(B) * pw(q / x, ss - rr).to_complex();
          if (fix) z *= dd;
          d.require(rr < ss + c || inside(z));
          return d.finish();
        },
        [](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), d = s.c("d"), x = s.c("x"), y = s.c("y");
          const auto c = s.i("c"), rr = s.i("r"), ss = s.i("s");
          const Vec A = param_list(s, "a", rr), B = param_list(s, "b", ss);
          const Vec U = q_over(A, q, x), L = cat(q_over(B, q, x), zeros(c));
          const Complex z =
              sgn(c + 1) * y * prod(A) / (x * prod(B)) * pw(q / x, ss - rr).to_complex();
          return theta_sum(q, d * x, [&](std::int64_t n) { return hyp(U, L, q, zq(z, q, -n), ctx); },
                           ctx)
              .to_complex();
        },
        [fix](const Sample& s, EvalContext& ctx) {
          const Complex q = s.c("q"), d = s.c("d"), x = s.c("x"), y = s.c("y");
          const auto c = s.i("c"), rr = s.i("r"), ss = s.i("s");
          const Vec A = param_list(s, "a", rr), B = param_list(s, "b", ss);
          const Vec U = cat(q_over(A, q, x), {0}), L = cat(q_over(B, q, x), zeros(c));
          Complex z = sgn(c) * y * prod(A) / prod(B) * pw(q / x, ss - rr).to_complex();
          if (fix) z *= d;
          return (th(d * x, q, ctx) * hyp(U, L, q, z, ctx)).to_complex();
        });
  };
  down("bs-bracket-qinv", F, false);
  down("bs-bracket-qinv-corrected", E, true);
}

}  // namespace

void add_group_d(Cases& out) {
  add_theta_e(out);
  add_theta_phi(out);
  add_ramkernel(out);
  add_bracket(out);
}

}  // namespace qseries::cases
