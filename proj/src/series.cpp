#include "svtab/series.hpp"

namespace svtab {

namespace {

const MultiPoly& UD() {
  static const MultiPoly v = MultiPoly::monomial({1, 1, 0, 0});
  return v;
}

MultiPoly var(Marker m) { return MultiPoly::variable(m); }

// UDt^2E
TSeries arch(const TSeries& E) { return UD() * E.shifted(2); }

TSeries one(int order) { return TSeries::constant(order, MultiPoly(1)); }

}  // namespace

TSeries solve_E(int order) {
  const TSeries ud_t = TSeries::monomial(order, 1, var(Marker::u) + var(Marker::d));
  TSeries E = one(order);
  for (int pass = 0; pass <= order + 2; ++pass) {
    TSeries next = one(order) + ud_t * E + arch(E * E);
    if (next == E) return E;
    E = std::move(next);
  }
  throw Error(Errc::NonConvergence, "fixed point not reached in " + std::to_string(order + 2) + " passes");
}

DerivedSeries derived_series(const TSeries& E) {
  const int N = E.order();
  const TSeries A = arch(E);
  const TSeries dt = TSeries::monomial(N, 1, var(Marker::d));
  const TSeries ut = TSeries::monomial(N, 1, var(Marker::u));
  const TSeries left = (one(N) - (ut + A)).inverse();
  const TSeries right = (one(N) - (dt + A)).inverse();
  DerivedSeries out;
  out.E1 = right;
  out.E2 = left;
  out.E12 = TSeries::monomial(N, 2, UD()) * left * right;
  return out;
}

TSeries e2_uncorrected(const TSeries& E) {
  const int N = E.order();
  const TSeries A = arch(E);
  const TSeries ut = TSeries::monomial(N, 1, var(Marker::u));
  return A * (one(N) - (A + ut)).inverse();
}

SeriesContext SeriesContext::build(int order) {
  SeriesContext ctx;
  ctx.order = order;
  ctx.E = solve_E(order);
  DerivedSeries d = derived_series(ctx.E);
  ctx.E1 = std::move(d.E1);
  ctx.E2 = std::move(d.E2);
  ctx.E12 = std::move(d.E12);
  return ctx;
}

const TSeries& SeriesContext::get(PathFamily family) const {
  switch (family) {
    case PathFamily::motz: return E;
    case PathFamily::motzE: return E1;
    case PathFamily::motzT: return E2;
    case PathFamily::motzET: return E12;
    case PathFamily::ballotlike: break;
  }
  throw Error(Errc::InvalidArgument, "no series for ballotlike paths");
}

TSeries radicand(int order) {
  const TSeries s = TSeries::monomial(order, 1, var(Marker::u) + var(Marker::d)) - one(order);
  return s * s - TSeries::monomial(order, 2, 4 * UD());
}

TSeries closed_form_E(int order) {
  const int M = order + 2;
  const TSeries root = radicand(M).sqrt();
  const TSeries top = one(M) - TSeries::monomial(M, 1, var(Marker::u) + var(Marker::d)) - root;
  return top.divide_by_t(2).map([](const MultiPoly& c) { return c.divide_exact({1, 1, 0, 0}, 2); });
}

TSeries closed_form_E1(int order) {
  const TSeries denom = one(order) + TSeries::monomial(order, 1, var(Marker::u) - var(Marker::d)) +
                        radicand(order).sqrt();
  // denom has constant term 2: halve it, then invert.
  const TSeries half = denom.map([](const MultiPoly& c) { return c.divide_exact({0, 0, 0, 0}, 2); });
  return half.inverse();
}

TSeries closed_form_E12(int order) {
  const MultiPoly quad = 2 * (var(Marker::u) * var(Marker::d) - UD());
  const TSeries denom = one(order) - TSeries::monomial(order, 1, var(Marker::u) + var(Marker::d)) +
                        TSeries::monomial(order, 2, quad) + radicand(order).sqrt();
  const TSeries half = denom.map([](const MultiPoly& c) { return c.divide_exact({0, 0, 0, 0}, 2); });
  return TSeries::monomial(order, 2, UD()) * half.inverse();
}

Residuals functional_residuals(const SeriesContext& ctx) {
  const int N = ctx.order;
  const TSeries A = arch(ctx.E);
  const TSeries ut = TSeries::monomial(N, 1, var(Marker::u));
  const TSeries dt = TSeries::monomial(N, 1, var(Marker::d));
  Residuals r;
  r.E = ctx.E - (one(N) + (ut + dt) * ctx.E + arch(ctx.E * ctx.E));
  r.E1 = ctx.E1 * (one(N) - (A + dt)) - one(N);
  r.E2 = ctx.E2 * (one(N) - (ut + A)) - one(N);
  r.E12 = ctx.E12 * (one(N) - (ut + A)) * (one(N) - (dt + A)) - TSeries::monomial(N, 2, UD());
  return r;
}

Rational expected_steps(int n, Step step) {
  if (n < 2) throw Error(Errc::OutOfRange, "expected_steps needs n >= 2");
  const TSeries E12 = derived_series(solve_E(n)).E12;
  const MultiPoly& coeff = E12[n];
  const Marker m = static_cast<Marker>(static_cast<int>(step));
  return Rational(coeff.derivative(m).eval_ones(), coeff.eval_ones());
}

std::vector<std::vector<Integer>> peaks_genfun_table(int order) {
  if (order < 0) throw Error(Errc::InvalidArgument, "negative order");
  // q lives in the first marker slot; the series variable is z.
  const MultiPoly q = var(Marker::U);
  const int M = order + 1;
  const TSeries inside = one(M) - TSeries::monomial(M, 1, MultiPoly(4)) +
                         TSeries::monomial(M, 2, MultiPoly(4) - 4 * q);
  const TSeries root = inside.sqrt();
  // (1 - root) / (2z), known to be divisible.
  const TSeries x = (one(M) - root).divide_by_t(1).map(
      [](const MultiPoly& c) { return c.divide_exact({0, 0, 0, 0}, 2); });
  const int N = x.order();
  const TSeries denom = one(N) + TSeries::monomial(N, 1, q - MultiPoly(1));
  const TSeries y = x * denom.inverse();
  const TSeries g = one(N) + (y * y).shifted(1);
  std::vector<std::vector<Integer>> table(order + 1);
  for (int n = 0; n <= order; ++n) {
    int top = 0;
    for (const auto& [e, c] : g[n].terms()) top = std::max(top, e[0]);
    table[n].assign(top + 1, Integer(0));
    for (const auto& [e, c] : g[n].terms()) table[n][e[0]] = c;
  }
  return table;
}

}  // namespace svtab
