#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdepth/errors.hpp"
#include "hdepth/graph.hpp"

namespace hdepth {

// Integer-exact ceiling/floor division; no floating point.
inline long ceil_div(long a, long b) { return (a + b - 1) / b; }  // a >= 0, b > 0
inline long floor_div(long a, long b) {
  long q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

/// A published depth/sdepth value or interval for one module, kept next to
/// a short statement of the rule that produced it. These are formula
/// encodings used one-directionally as consistency checks against computed
/// Hilbert depth; nothing here computes depth or Stanley depth.
struct BoundsReport {
  std::string module_desc;
  long lower = 0;
  std::optional<long> upper;
  std::optional<long> exact;
  std::string source;
};

// --- paths -----------------------------------------------------------------

/// depth(S/I_n) = sdepth(S/I_n) = ceil(n/3).
inline long path_quotient_depth_sdepth(long n) {
  if (n < 2) throw ParameterError("path quotient depth: requires n >= 2");
  return ceil_div(n, 3);
}

/// ceil((n+1)/2) <= sdepth(I_n) <= ceil((2n+2)/3).
inline std::pair<long, long> path_ideal_sdepth_bounds(long n) {
  if (n < 2) throw ParameterError("path ideal sdepth bounds: requires n >= 2");
  return {ceil_div(n + 1, 2), ceil_div(2 * n + 2, 3)};
}

// --- cycles ----------------------------------------------------------------

/// depth(S/J_n) = ceil((n-1)/3).
inline long cycle_quotient_depth(long n) {
  if (n < 3) throw ParameterError("cycle quotient depth: requires n >= 3");
  return ceil_div(n - 1, 3);
}

/// sdepth(S/J_n) = ceil((n-1)/3) for n = 0,2 (mod 3); the n = 1 (mod 3)
/// case is only pinned to [ceil((n-1)/3), ceil(n/3)].
inline std::pair<long, long> cycle_quotient_sdepth_bounds(long n) {
  if (n < 3) throw ParameterError("cycle quotient sdepth bounds: requires n >= 3");
  const long lo = ceil_div(n - 1, 3);
  return {lo, n % 3 == 1 ? ceil_div(n, 3) : lo};
}

/// ceil(n/2) <= sdepth(J_n) <= ceil((2n+2)/3).
inline std::pair<long, long> cycle_ideal_sdepth_bounds(long n) {
  if (n < 3) throw ParameterError("cycle ideal sdepth bounds: requires n >= 3");
  return {ceil_div(n, 2), ceil_div(2 * n + 2, 3)};
}

/// sdepth(J_n/I_n) = depth(J_n/I_n) = ceil((n+2)/3) for n >= 6.
inline long relative_cycle_exact(long n) {
  if (n < 6) throw ParameterError("relative cycle value: requires n >= 6");
  return ceil_div(n + 2, 3);
}

// --- generalized stars -----------------------------------------------------

/// Quotient of a generalized star: exact value 1 + sum ceil((n_i-1)/3)
/// when some branch has n_i = 1 (mod 3); otherwise the interval
/// [sum ceil(n_i/3), sum ceil(n_i/3) + 1].
inline BoundsReport gstar_quotient_values(const std::vector<int>& branches) {
  if (branches.empty()) throw ParameterError("generalized star bounds: requires k >= 1");
  bool has_residue_one = false;
  long exact = 1;
  long lo = 0;
  std::string desc = "quotient of generalized star (k=" + std::to_string(branches.size()) + ";";
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const int b = branches[i];
    if (b < 1) throw ParameterError("generalized star bounds: branch lengths must be >= 1");
    if (b % 3 == 1) has_residue_one = true;
    exact += ceil_div(b - 1, 3);
    lo += ceil_div(b, 3);
    desc += (i ? "," : "") + std::to_string(b);
  }
  desc += ")";
  BoundsReport r;
  r.module_desc = desc;
  if (has_residue_one) {
    r.exact = exact;
    r.lower = exact;
    r.upper = exact;
    r.source = "generalized star quotient: sdepth = depth = 1 + sum ceil((n_i-1)/3) when some n_i = 1 (mod 3)";
  } else {
    r.lower = lo;
    r.upper = lo + 1;
    r.source = "generalized star quotient: sum ceil(n_i/3) <= depth, sdepth <= sum ceil(n_i/3) + 1 when all n_i = 0,2 (mod 3)";
  }
  return r;
}

/// Ideal of a generalized star: lower = ceil((N+k)/2) with N = sum n_i;
/// upper = 1 + floor(eps/2) + sum floor(2 n_i / 3), eps = #{i : n_i = 0,2
/// (mod 3)}. The upper bound's generator count assumes n_i >= 2; with unit
/// branches it undershoots (see the tests), so only the lower bound is
/// asserted on the full domain.
inline std::pair<long, long> gstar_ideal_bounds(const std::vector<int>& branches) {
  if (branches.empty()) throw ParameterError("generalized star bounds: requires k >= 1");
  long total = 0;
  long eps = 0;
  long upper = 1;
  for (int b : branches) {
    if (b < 1) throw ParameterError("generalized star bounds: branch lengths must be >= 1");
    total += b;
    if (b % 3 != 1) ++eps;
    upper += floor_div(2 * b, 3);
  }
  upper += floor_div(eps, 2);
  const long lower = ceil_div(total + static_cast<long>(branches.size()), 2);
  return {lower, upper};
}

// --- double brooms ---------------------------------------------------------

/// sdepth(S/I) = depth(S/I) = 2 + ceil((n-2)/3) for the double broom
/// P(n1, n, n2).
inline long dbroom_quotient_exact(long n1, long n, long n2) {
  if (n1 < 2 || n < 2 || n2 < 2) throw ParameterError("double broom value: requires n1, n, n2 >= 2");
  return 2 + ceil_div(n - 2, 3);
}

/// ceil((n1+n2+n+1)/2) <= sdepth(I); upper = ceil((n1+n2)/2) +
/// ceil((2n+1)/3), plus one unless n = 1 (mod 3).
inline std::pair<long, long> dbroom_ideal_bounds(long n1, long n, long n2) {
  if (n1 < 2 || n < 2 || n2 < 2) throw ParameterError("double broom bounds: requires n1, n, n2 >= 2");
  const long lower = ceil_div(n1 + n2 + n + 1, 2);
  long upper = ceil_div(n1 + n2, 2) + ceil_div(2 * n + 1, 3);
  if (n % 3 != 1) upper += 1;
  return {lower, upper};
}

// --- stars and complete intersections --------------------------------------

/// hdepth(I(St_n)) = floor((n+3)/2).
inline long star_ideal_hdepth_exact(long n) {
  if (n < 1) throw ParameterError("star ideal value: requires n >= 1");
  return floor_div(n + 3, 2);
}

/// Complete intersection with m generators in nvars variables:
/// sdepth(I) = nvars - floor(m/2); for arbitrary monomial ideals the same
/// expression is a lower bound.
inline long ci_sdepth(long nvars, long m) {
  if (m < 1 || m > nvars) throw ParameterError("complete intersection sdepth: requires 1 <= m <= nvars");
  return nvars - floor_div(m, 2);
}

// --- aggregation for the CLI -----------------------------------------------

inline std::vector<BoundsReport> bounds_for(const FamilySpec& spec) {
  std::vector<BoundsReport> out;
  if (const auto* p = std::get_if<PathSpec>(&spec)) {
    const long n = p->n;
    out.push_back({"quotient of path P_" + std::to_string(n), path_quotient_depth_sdepth(n),
                   path_quotient_depth_sdepth(n), path_quotient_depth_sdepth(n),
                   "path quotient: sdepth = depth = ceil(n/3)"});
    const auto [lo, hi] = path_ideal_sdepth_bounds(n);
    out.push_back({"ideal of path P_" + std::to_string(n), lo, hi, std::nullopt,
                   "path ideal: ceil((n+1)/2) <= sdepth <= ceil((2n+2)/3)"});
  } else if (const auto* c = std::get_if<CycleSpec>(&spec)) {
    const long n = c->n;
    const auto [qlo, qhi] = cycle_quotient_sdepth_bounds(n);
    BoundsReport q{"quotient of cycle C_" + std::to_string(n), qlo, qhi, std::nullopt,
                   "cycle quotient: depth = ceil((n-1)/3); sdepth exact unless n = 1 (mod 3)"};
    if (qlo == qhi) q.exact = qlo;
    out.push_back(std::move(q));
    const auto [ilo, ihi] = cycle_ideal_sdepth_bounds(n);
    out.push_back({"ideal of cycle C_" + std::to_string(n), ilo, ihi, std::nullopt,
                   "cycle ideal: ceil(n/2) <= sdepth <= ceil((2n+2)/3)"});
    if (n >= 6) {
      const long ex = relative_cycle_exact(n);
      out.push_back({"relative module J_" + std::to_string(n) + "/I_" + std::to_string(n), ex, ex, ex,
                     "relative cycle/path: sdepth = depth = ceil((n+2)/3)"});
    }
  } else if (const auto* s = std::get_if<StarSpec>(&spec)) {
    const long ex = star_ideal_hdepth_exact(s->n);
    out.push_back({"ideal of star St_" + std::to_string(s->n), ex, ex, ex,
                   "star ideal: hdepth = floor((n+3)/2)"});
  } else if (const auto* g = std::get_if<GeneralizedStarSpec>(&spec)) {
    out.push_back(gstar_quotient_values(g->branches));
    const auto [lo, hi] = gstar_ideal_bounds(g->branches);
    BoundsReport r;
    r.module_desc = "ideal of generalized star";
    r.lower = lo;
    r.upper = hi;
    r.source = "generalized star ideal: ceil((N+k)/2) <= sdepth <= 1 + floor(eps/2) + sum floor(2n_i/3)";
    out.push_back(std::move(r));
  } else if (const auto* b = std::get_if<DoubleBroomSpec>(&spec)) {
    const long ex = dbroom_quotient_exact(b->n1, b->n, b->n2);
    out.push_back({"quotient of double broom P(" + std::to_string(b->n1) + "," + std::to_string(b->n) +
                       "," + std::to_string(b->n2) + ")",
                   ex, ex, ex, "double broom quotient: sdepth = depth = 2 + ceil((n-2)/3)"});
    const auto [lo, hi] = dbroom_ideal_bounds(b->n1, b->n, b->n2);
    out.push_back({"ideal of double broom P(" + std::to_string(b->n1) + "," + std::to_string(b->n) +
                       "," + std::to_string(b->n2) + ")",
                   lo, hi, std::nullopt,
                   "double broom ideal: ceil((n1+n2+n+1)/2) <= sdepth <= ceil((n1+n2)/2) + ceil((2n+1)/3) (+1 unless n = 1 mod 3)"});
  } else if (const auto* d = std::get_if<DoubleStarSpec>(&spec)) {
    return bounds_for(DoubleBroomSpec{d->n1, 2, d->n2});
  } else {
    throw ParameterError("bounds: no encoded formulas for custom graphs");
  }
  return out;
}

}  // namespace hdepth
