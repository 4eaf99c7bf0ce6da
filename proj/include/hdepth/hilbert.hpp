#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hdepth/alpha.hpp"
#include "hdepth/binomial.hpp"
#include "hdepth/errors.hpp"
#include "hdepth/exact_int.hpp"

namespace hdepth {

/// One row of the signed binomial transform of an alpha vector:
/// beta_k^d = sum_{j=0}^{k} (-1)^{k-j} C(d-j, k-j) alpha_j, 0 <= k <= d.
/// Nonnegativity of a full row certifies Hilbert depth >= d.
struct BetaRow {
  int d = 0;
  std::vector<ExactInt> values;  // length d+1
};

/// Direct evaluation of a beta row. Inside the loop d-j >= k-j >= 0, so
/// the two binomial conventions coincide on every coefficient.
inline BetaRow beta_row(const AlphaVector& alpha, int d) {
  if (d < 0 || d > alpha.n) {
    throw ParameterError("beta_row: d = " + std::to_string(d) + " outside [0, " +
                         std::to_string(alpha.n) + "]");
  }
  BetaRow row{d, {}};
  row.values.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    ExactInt acc;
    for (int j = 0; j <= k; ++j) {
      ExactInt term = binom(d - j, k - j) * alpha.values[static_cast<std::size_t>(j)];
      if ((k - j) % 2 != 0) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    row.values.push_back(std::move(acc));
  }
  return row;
}

/// beta_k^{d-1} = beta_k^d + beta_{k-1}^{d-1}; a beta row is the prefix-sum
/// image of the row one parameter up. O(d) additions replace the O(d^2)
/// binomial evaluation, which is what keeps the large-n scans cheap.
inline BetaRow beta_row_descend(const BetaRow& row) {
  if (row.d < 1) throw ParameterError("beta_row_descend: cannot descend below d = 0");
  BetaRow next{row.d - 1, {}};
  next.values.reserve(static_cast<std::size_t>(row.d));
  next.values.push_back(row.values[0]);
  for (int k = 1; k <= row.d - 1; ++k) {
    next.values.push_back(row.values[static_cast<std::size_t>(k)] + next.values.back());
  }
  return next;
}

/// Inverse transform: alpha_k = sum_{j=0}^{k} C(d-j, k-j) beta_j^d,
/// recovering the first d+1 alpha entries from a single row.
inline std::vector<ExactInt> alpha_from_beta(const BetaRow& row) {
  std::vector<ExactInt> alpha;
  alpha.reserve(static_cast<std::size_t>(row.d) + 1);
  for (int k = 0; k <= row.d; ++k) {
    ExactInt acc;
    for (int j = 0; j <= k; ++j) {
      acc += binom(row.d - j, k - j) * row.values[static_cast<std::size_t>(j)];
    }
    alpha.push_back(std::move(acc));
  }
  return alpha;
}

namespace detail {

/// Builds the row at parameter d >= max nonzero alpha index by the cascade
/// P_m = (1-t) P_{m-1} + alpha_m t^m: each step is one coefficient-wise
/// subtraction pass. Equals beta_row(alpha, d) and costs O(d^2) additions
/// with no binomial evaluations.
inline BetaRow beta_row_cascade(const AlphaVector& alpha, int d) {
  if (d < 0 || d > alpha.n) {
    throw ParameterError("beta_row_cascade: d = " + std::to_string(d) + " outside [0, " +
                         std::to_string(alpha.n) + "]");
  }
  if (d < alpha.max_nonzero()) {
    throw ParameterError("beta_row_cascade: d below the top nonzero alpha index");
  }
  std::vector<ExactInt> coeff;
  coeff.reserve(static_cast<std::size_t>(d) + 1);
  coeff.push_back(alpha.values[0]);
  for (int m = 1; m <= d; ++m) {
    coeff.push_back(ExactInt(0));
    for (int i = m; i >= 1; --i) {
      coeff[static_cast<std::size_t>(i)] -= coeff[static_cast<std::size_t>(i - 1)];
    }
    coeff[static_cast<std::size_t>(m)] += alpha.values[static_cast<std::size_t>(m)];
  }
  return BetaRow{d, std::move(coeff)};
}

}  // namespace detail

/// A rejected parameter d with its first negative transform entry.
struct Rejection {
  int d = 0;
  int k = 0;
  ExactInt beta;
};

/// hdepth = max{d : beta_k^d >= 0 for all 0 <= k <= d}, plus the feasible
/// row and one witness per rejected d above it.
struct HdepthResult {
  int value = 0;
  int d_start = 0;
  BetaRow feasible_row;
  std::vector<Rejection> rejections;
};

/// Descending feasibility scan. The start parameter is the largest degree
/// with a nonzero count: no larger d can be feasible because the Krull
/// dimension of these modules equals that degree and bounds the Hilbert
/// depth from above. The scan is a literal max search; it does not assume
/// the feasible set is an interval.
///
/// `skip_k_below` suppresses the sign check for k below the given index;
/// the path/cycle criteria only need k >= 1 (quotients, where beta_0 = 1
/// and beta_1 = n-d) or k >= 2 (ideals, where beta_0 = beta_1 = 0). The
/// scan result must be identical with or without the shortcut.
inline HdepthResult hilbert_depth(const AlphaVector& alpha, int skip_k_below = 0) {
  const int start = alpha.max_nonzero();
  if (start < 0) {
    throw std::domain_error("hdepth: the zero module has no Hilbert depth");
  }
  HdepthResult result;
  result.d_start = start;
  BetaRow row = detail::beta_row_cascade(alpha, start);
  for (int d = start;; --d) {
    int neg_k = -1;
    for (int k = skip_k_below; k <= d; ++k) {
      if (row.values[static_cast<std::size_t>(k)].is_negative()) {
        neg_k = k;
        break;
      }
    }
    if (neg_k < 0) {
      result.value = d;
      result.feasible_row = std::move(row);
      return result;
    }
    result.rejections.push_back({d, neg_k, row.values[static_cast<std::size_t>(neg_k)]});
    // d = 0 cannot be rejected: beta_0^0 = alpha_0 >= 0.
    row = beta_row_descend(row);
  }
}

// ---------------------------------------------------------------------------
// Family specializations: the general solver applied to the closed alpha
// forms, with the k-range shortcut the path/cycle criteria justify.
// ---------------------------------------------------------------------------

inline HdepthResult hdepth_path(int n, ModuleKind kind) {
  return hilbert_depth(alpha_path_closed(n, kind), kind == ModuleKind::Ideal ? 2 : 1);
}

inline HdepthResult hdepth_cycle(int n, ModuleKind kind) {
  return hilbert_depth(alpha_cycle_closed(n, kind), kind == ModuleKind::Ideal ? 2 : 1);
}

/// hdepth(cycle_n / path_n) = 2 + hdepth(path quotient on n-4 variables),
/// n >= 6. The full pipeline on alpha_cycle_mod_path must agree.
inline int hdepth_relative_cycle_shortcut(int n) {
  if (n < 6) {
    throw ParameterError("relative cycle shortcut: requires n >= 6, got " + std::to_string(n));
  }
  return 2 + hilbert_depth(alpha_path_closed(n - 4, ModuleKind::Quotient)).value;
}

// ---------------------------------------------------------------------------
// Executable identities.
// ---------------------------------------------------------------------------

/// C(n-d+k-1, k) = sum_{j=0}^{k} (-1)^{k-j} C(d-j, k-j) C(n, j) for
/// 0 <= k <= d <= n; the left side uses the generalized convention since
/// n-d+k-1 can reach -1.
inline bool check_minune(int n, int d, int k) {
  if (!(0 <= k && k <= d && d <= n)) {
    throw ParameterError("check_minune: requires 0 <= k <= d <= n");
  }
  ExactInt lhs = gbinom(n - d + k - 1, k);
  ExactInt rhs;
  for (int j = 0; j <= k; ++j) {
    ExactInt term = binom(d - j, k - j) * binom(n, j);
    if ((k - j) % 2 != 0) {
      rhs -= term;
    } else {
      rhs += term;
    }
  }
  return lhs == rhs;
}

/// The reordered double sum for the path ideal transform:
/// beta_k^d(path ideal) = sum_{l=1}^{floor(k/2)} (-1)^{l-1}
///   sum_{j=0}^{k} (-1)^{k-j} C(d-j,k-j) C(n-j+1,l) C(n-2l,j-2l).
/// An empty l-sum (k < 2) matches beta_0 = beta_1 = 0.
inline bool check_pp3(int n, int d, int k) {
  if (n < 2) throw ParameterError("check_pp3: requires n >= 2");
  if (!(0 <= k && k <= d && d <= n)) {
    throw ParameterError("check_pp3: requires 0 <= k <= d <= n");
  }
  ExactInt lhs;
  for (int l = 1; l <= k / 2; ++l) {
    ExactInt inner;
    for (int j = 0; j <= k; ++j) {
      ExactInt term = binom(d - j, k - j) * binom(n - j + 1, l) * binom(n - 2 * l, j - 2 * l);
      if ((k - j) % 2 != 0) {
        inner -= term;
      } else {
        inner += term;
      }
    }
    if ((l - 1) % 2 != 0) {
      lhs -= inner;
    } else {
      lhs += inner;
    }
  }
  const BetaRow direct = beta_row(alpha_path_closed(n, ModuleKind::Ideal), d);
  return lhs == direct.values[static_cast<std::size_t>(k)];
}

/// Closed transform rows for the double star on N = n1+n2+2 variables,
/// generalized convention throughout. Ideal, 2 <= k <= d:
///   C(n1-d+k-1,k-1) + C(n2-d+k-1,k-1) + C(n1+n2-d+k-1,k-2)
///     + 2 (-1)^k C(d-1,k-1),
/// with beta_0 = beta_1 = 0. Quotient: beta_0 = 1, beta_1 = N-d, and for
/// k >= 2 the four-term difference with the opposite sign on the tail.
inline ExactInt double_star_beta_closed(int n1, int n2, int d, int k, ModuleKind kind) {
  if (n1 < 1 || n2 < 1) throw ParameterError("double star beta: requires n1, n2 >= 1");
  const int nvars = n1 + n2 + 2;
  if (!(0 <= k && k <= d && d <= nvars)) {
    throw ParameterError("double star beta: requires 0 <= k <= d <= n1+n2+2");
  }
  if (kind == ModuleKind::Ideal) {
    if (k <= 1) return ExactInt(0);
    ExactInt v = gbinom(n1 - d + k - 1, k - 1) + gbinom(n2 - d + k - 1, k - 1) +
                 gbinom(n1 + n2 - d + k - 1, k - 2);
    ExactInt tail = gbinom(d - 1, k - 1) * 2L;
    return k % 2 == 0 ? v + tail : v - tail;
  }
  if (kind == ModuleKind::Quotient) {
    if (k == 0) return ExactInt(1);
    if (k == 1) return ExactInt(static_cast<long>(nvars - d));
    ExactInt v = gbinom(n1 + n2 - d + k + 1, k) - gbinom(n1 + n2 - d + k - 1, k - 2) -
                 gbinom(n1 - d + k - 1, k - 1) - gbinom(n2 - d + k - 1, k - 1);
    ExactInt tail = gbinom(d - 1, k - 1) * 2L;
    return k % 2 == 0 ? v - tail : v + tail;
  }
  throw ParameterError("double star beta: kind must be Ideal or Quotient");
}

}  // namespace hdepth
