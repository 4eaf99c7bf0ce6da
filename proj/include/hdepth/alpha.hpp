#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hdepth/binomial.hpp"
#include "hdepth/errors.hpp"
#include "hdepth/exact_int.hpp"
#include "hdepth/graph.hpp"

namespace hdepth {

/// Which graded object of the edge ideal(s) is analyzed.
enum class ModuleKind { Ideal, Quotient, Relative };

inline const char* to_string(ModuleKind k) {
  switch (k) {
    case ModuleKind::Ideal: return "ideal";
    case ModuleKind::Quotient: return "quotient";
    default: return "relative";
  }
}

/// Ideal(G), Quotient(G) = S/I(G), or Relative(J,I) = I(J)/I(I) with
/// edges(I) a proper subset of edges(J) on the same vertex set.
struct ModuleSpec {
  ModuleKind kind;
  Graph g;                  // Ideal/Quotient: the graph; Relative: the J graph
  std::optional<Graph> sub; // Relative only: the I graph

  static ModuleSpec ideal(Graph g) { return {ModuleKind::Ideal, std::move(g), std::nullopt}; }
  static ModuleSpec quotient(Graph g) { return {ModuleKind::Quotient, std::move(g), std::nullopt}; }
  static ModuleSpec relative(Graph j, Graph i) {
    if (j.n != i.n) throw ParameterError("relative module: vertex counts differ");
    if (!std::includes(j.edges.begin(), j.edges.end(), i.edges.begin(), i.edges.end())) {
      throw ParameterError("relative module: edges(I) must be a subset of edges(J)");
    }
    if (i.edges.size() >= j.edges.size()) {
      throw ParameterError("relative module: edges(I) must be a proper subset of edges(J)");
    }
    return {ModuleKind::Relative, std::move(j), std::move(i)};
  }
};

/// alpha_j = number of squarefree monomials of degree j in the module,
/// indexed 0..n over the ambient variable count n.
struct AlphaVector {
  int n = 0;
  std::vector<ExactInt> values;  // length n+1

  /// Largest degree with a nonzero count, or -1 for the zero module.
  int max_nonzero() const {
    for (int j = n; j >= 0; --j) {
      if (!values[static_cast<std::size_t>(j)].is_zero()) return j;
    }
    return -1;
  }

  ExactInt sum() const {
    ExactInt s;
    for (const auto& v : values) s += v;
    return s;
  }

  bool operator==(const AlphaVector&) const = default;
};

/// alpha_j(complement) = C(n,j) - alpha_j; maps Quotient counts to Ideal
/// counts and back, since every squarefree monomial is in exactly one side.
inline AlphaVector complement_alpha(const AlphaVector& a) {
  AlphaVector out{a.n, {}};
  out.values.reserve(static_cast<std::size_t>(a.n) + 1);
  for (int j = 0; j <= a.n; ++j) {
    out.values.push_back(binom(a.n, j) - a.values[static_cast<std::size_t>(j)]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Engine 1: brute force over all 2^n vertex subsets. A squarefree monomial
// x_W lies in the edge ideal iff W contains some edge. This is the oracle
// the other engines are checked against.
// ---------------------------------------------------------------------------

inline constexpr int kBruteForceMaxVertices = 26;

namespace detail {

inline std::vector<std::uint32_t> edge_masks(const Graph& g) {
  std::vector<std::uint32_t> masks;
  masks.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    masks.push_back((std::uint32_t{1} << u) | (std::uint32_t{1} << v));
  }
  return masks;
}

inline bool contains_edge(std::uint32_t w, const std::vector<std::uint32_t>& masks) {
  for (std::uint32_t m : masks) {
    if ((w & m) == m) return true;
  }
  return false;
}

}  // namespace detail

inline AlphaVector alpha_bruteforce(const ModuleSpec& m, int workers = 1) {
  const int n = m.g.n;
  if (n > kBruteForceMaxVertices) {
    throw CapacityError("brute-force alpha: n = " + std::to_string(n) + " exceeds the 2^n scan cap of n <= " +
                        std::to_string(kBruteForceMaxVertices));
  }
  const auto j_masks = detail::edge_masks(m.g);
  const auto i_masks = m.sub ? detail::edge_masks(*m.sub) : std::vector<std::uint32_t>{};
  const std::uint64_t total = std::uint64_t{1} << n;

  auto scan = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& buckets) {
    for (std::uint64_t w = lo; w < hi; ++w) {
      const auto mask = static_cast<std::uint32_t>(w);
      bool counted = false;
      switch (m.kind) {
        case ModuleKind::Ideal:
          counted = detail::contains_edge(mask, j_masks);
          break;
        case ModuleKind::Quotient:
          counted = !detail::contains_edge(mask, j_masks);
          break;
        case ModuleKind::Relative:
          // Membership is tested per ideal, not derived by subtraction.
          counted = detail::contains_edge(mask, j_masks) && !detail::contains_edge(mask, i_masks);
          break;
      }
      if (counted) ++buckets[static_cast<std::size_t>(std::popcount(mask))];
    }
  };

  std::vector<std::uint64_t> buckets(static_cast<std::size_t>(n) + 1, 0);
  if (workers <= 1 || total < (std::uint64_t{1} << 16)) {
    scan(0, total, buckets);
  } else {
    const int nw = std::min<int>(workers, 64);
    std::vector<std::vector<std::uint64_t>> local(
        static_cast<std::size_t>(nw), std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (total + static_cast<std::uint64_t>(nw) - 1) / static_cast<std::uint64_t>(nw);
    for (int t = 0; t < nw; ++t) {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
      const std::uint64_t hi = std::min(total, lo + chunk);
      threads.emplace_back([&, lo, hi, t] { scan(lo, hi, local[static_cast<std::size_t>(t)]); });
    }
    for (auto& th : threads) th.join();
    for (const auto& loc : local) {
      for (std::size_t j = 0; j < buckets.size(); ++j) buckets[j] += loc[j];
    }
  }

  AlphaVector out{n, {}};
  out.values.reserve(buckets.size());
  for (std::uint64_t b : buckets) out.values.emplace_back(static_cast<long>(b));
  return out;
}

// ---------------------------------------------------------------------------
// Engine 2: tree DP. alpha_j(Quotient) equals the number of independent
// sets of size j, so for forests the independence polynomial is computed
// bottom-up: each vertex carries two size-indexed coefficient vectors
// (vertex in / vertex out), children convolve in, component polynomials
// multiply. Ideal counts follow by complement.
// ---------------------------------------------------------------------------

namespace detail {

using Poly = std::vector<ExactInt>;  // coefficient vector by set size

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace detail

inline AlphaVector alpha_tree_dp(const Graph& g, ModuleKind kind) {
  if (kind == ModuleKind::Relative) {
    throw EngineError("tree DP computes Ideal/Quotient alpha only");
  }
  const auto info = analyze_forest(g);
  if (!info.is_forest) {
    throw EngineError("tree DP requires an acyclic graph; use the closed-form or brute-force engine");
  }
  const auto adj = g.adjacency();

  detail::Poly total{ExactInt(1)};
  for (int root : info.roots) {
    // Post-order over the component rooted at `root`.
    std::vector<int> order;
    std::vector<int> parent(static_cast<std::size_t>(g.n), -2);
    std::vector<int> stack{root};
    parent[static_cast<std::size_t>(root)] = -1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (parent[static_cast<std::size_t>(w)] == -2) {
          parent[static_cast<std::size_t>(w)] = v;
          stack.push_back(w);
        }
      }
    }
    std::vector<detail::Poly> with_v(static_cast<std::size_t>(g.n));
    std::vector<detail::Poly> without_v(static_cast<std::size_t>(g.n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int v = *it;
      detail::Poly in{ExactInt(0), ExactInt(1)};   // v itself
      detail::Poly out{ExactInt(1)};
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (parent[static_cast<std::size_t>(w)] != v) continue;
        in = detail::poly_mul(in, without_v[static_cast<std::size_t>(w)]);
        out = detail::poly_mul(out, detail::poly_add(with_v[static_cast<std::size_t>(w)],
                                                     without_v[static_cast<std::size_t>(w)]));
      }
      with_v[static_cast<std::size_t>(v)] = std::move(in);
      without_v[static_cast<std::size_t>(v)] = std::move(out);
    }
    total = detail::poly_mul(total, detail::poly_add(with_v[static_cast<std::size_t>(root)],
                                                     without_v[static_cast<std::size_t>(root)]));
  }

  AlphaVector quotient{g.n, {}};
  quotient.values.assign(static_cast<std::size_t>(g.n) + 1, ExactInt(0));
  for (std::size_t j = 0; j < total.size() && j <= static_cast<std::size_t>(g.n); ++j) {
    quotient.values[j] = total[j];
  }
  return kind == ModuleKind::Quotient ? quotient : complement_alpha(quotient);
}

// ---------------------------------------------------------------------------
// Engine 3: closed forms. All of them use the zero-truncating binom;
// the truncation is what makes the boundary entries (alpha_0, alpha_1,
// alpha_n, ...) come out right.
// ---------------------------------------------------------------------------

/// Path on n vertices: alpha_k(Quotient) = C(n-k+1, k);
/// Ideal entries are the complement C(n,k) - C(n-k+1,k).
inline AlphaVector alpha_path_closed(int n, ModuleKind kind) {
  if (n < 2) throw ParameterError("path alpha: requires n >= 2, got " + std::to_string(n));
  if (kind == ModuleKind::Relative) throw ParameterError("path alpha: kind must be Ideal or Quotient");
  AlphaVector out{n, {}};
  out.values.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    ExactInt q = binom(n - k + 1, k);
    out.values.push_back(kind == ModuleKind::Quotient ? std::move(q) : binom(n, k) - q);
  }
  return out;
}

/// Cycle on n vertices: alpha_j(Quotient) = C(n-j, j) + C(n-j-1, j-1).
/// The second term's top reaches -1 at j = n; the counting convention
/// truncates it to zero (alpha_n of a cycle quotient must vanish).
inline AlphaVector alpha_cycle_closed(int n, ModuleKind kind) {
  if (n < 3) throw ParameterError("cycle alpha: requires n >= 3, got " + std::to_string(n));
  if (kind == ModuleKind::Relative) throw ParameterError("cycle alpha: kind must be Ideal or Quotient");
  AlphaVector out{n, {}};
  out.values.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    ExactInt q = binom(n - j, j) + (n - j - 1 >= 0 ? binom(n - j - 1, j - 1) : ExactInt(0));
    out.values.push_back(kind == ModuleKind::Quotient ? std::move(q) : binom(n, j) - q);
  }
  return out;
}

/// Relative module of the cycle over its spanning path:
/// alpha_j = C(n-j-1, j-2), which is the path quotient on n-4 variables
/// shifted up by two degrees.
inline AlphaVector alpha_cycle_mod_path(int n) {
  if (n < 6) throw ParameterError("cycle/path relative alpha: requires n >= 6, got " + std::to_string(n));
  AlphaVector out{n, {}};
  out.values.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    out.values.push_back(n - j - 1 >= 0 ? binom(n - j - 1, j - 2) : ExactInt(0));
  }
  return out;
}

/// Closed double-star ideal counts on N = n1+n2+2 variables:
/// alpha_j = C(n1,j-1) + C(n2,j-1) + C(n1+n2,j-2) for j >= 2, else 0.
///
/// Caution: this is the published closed form, and it is NOT the alpha
/// vector of the double-star graph for 2 < j < N. Its case analysis drops
/// monomials whose support mixes both pendant sides next to a single
/// center vertex (e.g. (n1,n2) = (2,2): alpha_3 = 6 here, 14 by
/// enumeration). It is kept because the closed transform rows of
/// double_star_beta_closed are its exact image, which the tests pin down;
/// it is not registered as a graph alpha engine.
inline AlphaVector alpha_double_star_ideal(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw ParameterError("double star alpha: requires n1, n2 >= 1");
  const int n = n1 + n2 + 2;
  AlphaVector out{n, {}};
  out.values.assign(static_cast<std::size_t>(n) + 1, ExactInt(0));
  for (int j = 2; j <= n; ++j) {
    out.values[static_cast<std::size_t>(j)] =
        binom(n1, j - 1) + binom(n2, j - 1) + binom(n1 + n2, j - 2);
  }
  return out;
}

/// Star ideal (x_1 y, ..., x_n y) on n+1 variables: a squarefree monomial
/// lies in it iff it is divisible by y and by some x_i, so
/// alpha_j = C(n, j-1) for j >= 2, else 0.
inline AlphaVector alpha_star_ideal(int n) {
  if (n < 1) throw ParameterError("star alpha: requires n >= 1, got " + std::to_string(n));
  AlphaVector out{n + 1, {}};
  out.values.assign(static_cast<std::size_t>(n) + 2, ExactInt(0));
  for (int j = 2; j <= n + 1; ++j) {
    out.values[static_cast<std::size_t>(j)] = binom(n, j - 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Engine selection.
// ---------------------------------------------------------------------------

enum class AlphaEngine { Auto, Closed, TreeDp, BruteForce };

inline const char* to_string(AlphaEngine e) {
  switch (e) {
    case AlphaEngine::Auto: return "auto";
    case AlphaEngine::Closed: return "closed";
    case AlphaEngine::TreeDp: return "tree";
    default: return "brute";
  }
}

/// Closed form for (family, kind) when one exists. Star and double-star
/// quotients are served by complementing their closed ideal form.
inline std::optional<AlphaVector> alpha_closed_for_family(const FamilySpec& spec, ModuleKind kind) {
  if (const auto* p = std::get_if<PathSpec>(&spec)) {
    if (kind != ModuleKind::Relative) return alpha_path_closed(p->n, kind);
    return std::nullopt;
  }
  if (const auto* c = std::get_if<CycleSpec>(&spec)) {
    if (kind == ModuleKind::Relative) {
      if (c->n >= 6) return alpha_cycle_mod_path(c->n);
      return std::nullopt;
    }
    return alpha_cycle_closed(c->n, kind);
  }
  if (const auto* s = std::get_if<StarSpec>(&spec)) {
    if (kind == ModuleKind::Ideal) return alpha_star_ideal(s->n);
    if (kind == ModuleKind::Quotient) return complement_alpha(alpha_star_ideal(s->n));
    return std::nullopt;
  }
  // Double stars have no closed engine here: the published formula
  // (alpha_double_star_ideal) is not the graph's alpha vector. They are
  // served by the tree DP like every other broom.
  return std::nullopt;
}

/// Closed form > tree DP > brute force; `engine` overrides the choice.
inline AlphaVector compute_alpha(const ModuleSpec& m, const std::optional<FamilySpec>& family,
                                 AlphaEngine engine = AlphaEngine::Auto, int workers = 1) {
  switch (engine) {
    case AlphaEngine::Closed: {
      if (family) {
        if (auto a = alpha_closed_for_family(*family, m.kind)) return *std::move(a);
      }
      throw EngineError("no closed alpha form for this module");
    }
    case AlphaEngine::TreeDp:
      return alpha_tree_dp(m.g, m.kind);
    case AlphaEngine::BruteForce:
      return alpha_bruteforce(m, workers);
    case AlphaEngine::Auto:
      break;
  }
  if (family) {
    if (auto a = alpha_closed_for_family(*family, m.kind)) return *std::move(a);
  }
  if (m.kind != ModuleKind::Relative && is_forest(m.g)) return alpha_tree_dp(m.g, m.kind);
  return alpha_bruteforce(m, workers);
}

}  // namespace hdepth
