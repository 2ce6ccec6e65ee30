#pragma once

#include <vector>

#include "svtab/path.hpp"
#include "svtab/tseries.hpp"

namespace svtab {

/// Series of the four path families, all truncated after t^N.
struct SeriesContext {
  int order = 0;
  TSeries E, E1, E2, E12;

  static SeriesContext build(int order);
  const TSeries& get(PathFamily family) const;
};

/// E = 1 + (u+d)tE + UDt^2E^2 by fixed-point iteration from E = 1; each pass
/// fixes at least one more degree. NonConvergence past N+2 passes.
TSeries solve_E(int order);

struct DerivedSeries {
  TSeries E1, E2, E12;
};
/// E1 = 1/(1 - (UDt^2E + dt)), E2 = 1/(1 - (ut + UDt^2E)),
/// E12 = UDt^2 / ((1 - (ut + UDt^2E))(1 - (dt + UDt^2E))).
DerivedSeries derived_series(const TSeries& E);
/// UDt^2E / (1 - (UDt^2E + ut)), an uncorrected form of the E2 equation; does not count motzT.
TSeries e2_uncorrected(const TSeries& E);

/// (1 - (u+d)t - sqrt(((u+d)t - 1)^2 - 4UDt^2)) / (2UDt^2) with a series
/// square root and exact division.
TSeries closed_form_E(int order);
/// 2 / (1 + (u-d)t + sqrt(R)).
TSeries closed_form_E1(int order);
/// 2UDt^2 / (1 - (u+d)t + 2(ud - UD)t^2 + sqrt(R)).
TSeries closed_form_E12(int order);
/// R = ((u+d)t - 1)^2 - 4UDt^2.
TSeries radicand(int order);

/// Left side minus right side of each functional equation (cleared of
/// denominators); all vanish for a correct context.
struct Residuals {
  TSeries E, E1, E2, E12;
  bool all_zero() const { return E.is_zero() && E1.is_zero() && E2.is_zero() && E12.is_zero(); }
};
Residuals functional_residuals(const SeriesContext& ctx);

/// Mean number of `step` steps over motzET(n) (n >= 2): the marker
/// derivative of [t^n]E12 at all markers 1, over [t^n]E12 at all markers 1.
Rational expected_steps(int n, Step step);

/// table[n][k] = [q^k z^n] of 1 + z((1 - sqrt(1 - 4z + 4z^2 - 4z^2 q)) /
/// (2z(1 - z + zq)))^2 for 0 <= n <= order.
std::vector<std::vector<Integer>> peaks_genfun_table(int order);

}  // namespace svtab
