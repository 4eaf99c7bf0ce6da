#pragma once

#include <atomic>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hdepth/exact_int.hpp"
#include "hdepth/errors.hpp"

namespace hdepth {

/// Binomial coefficient in the counting convention: C(a,b) with a >= 0,
/// and 0 whenever b < 0 or b > a. This is the convention every alpha
/// formula uses; a negative top is a caller bug, not a value.
inline ExactInt binom(long a, long b) {
  if (a < 0) {
    throw ParameterError("binom: negative top " + std::to_string(a) +
                         " (use gbinom for generalized coefficients)");
  }
  if (b < 0 || b > a) return ExactInt(0);
  ExactInt r;
  mpz_bin_uiui(r.raw(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

/// Generalized binomial coefficient: the falling factorial
/// a(a-1)...(a-b+1) divided by b!, defined for any integer top and 0 for
/// b < 0. Agrees with binom whenever a >= 0. The beta closed forms for
/// double stars need negative tops, e.g. gbinom(-1,1) = -1.
inline ExactInt gbinom(long a, long b) {
  if (b < 0) return ExactInt(0);
  if (b == 0) return ExactInt(1);
  ExactInt num(1);
  for (long i = 0; i < b; ++i) num *= (a - i);
  ExactInt fact;
  mpz_fac_ui(fact.raw(), static_cast<unsigned long>(b));
  num.div_exact(fact);
  return num;
}

using BinomRow = std::vector<ExactInt>;
using BinomRowPtr = std::shared_ptr<const BinomRow>;

namespace detail {

inline BinomRowPtr make_binom_row(long a) {
  auto row = std::make_shared<BinomRow>();
  row->reserve(static_cast<std::size_t>(a) + 1);
  row->emplace_back(1);
  // C(a,b) = C(a,b-1) * (a-b+1) / b
  for (long b = 1; b <= a; ++b) {
    ExactInt next = row->back();
    mpz_mul_si(next.raw(), next.raw(), a - b + 1);
    mpz_divexact_ui(next.raw(), next.raw(), static_cast<unsigned long>(b));
    row->push_back(std::move(next));
  }
  return row;
}

struct PascalCache {
  std::mutex mu;
  std::unordered_map<long, BinomRowPtr> rows;
  std::atomic<long> cap;

  PascalCache() : cap(4096) {
    if (const char* env = std::getenv("HDEPTH_CACHE_ROWS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && v >= 0) cap = v;
    }
  }

  static PascalCache& instance() {
    static PascalCache c;
    return c;
  }
};

}  // namespace detail

/// [C(a,0), ..., C(a,a)]. Rows with top <= the cache cap (default 4096,
/// override via HDEPTH_CACHE_ROWS) are built once and shared; rows above
/// the cap are computed fresh per call.
inline BinomRowPtr binom_row(long a) {
  if (a < 0) throw ParameterError("binom_row: negative top " + std::to_string(a));
  auto& cache = detail::PascalCache::instance();
  if (a > cache.cap) return detail::make_binom_row(a);
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.rows.find(a);
    if (it != cache.rows.end()) return it->second;
  }
  auto row = detail::make_binom_row(a);
  std::lock_guard<std::mutex> lock(cache.mu);
  return cache.rows.emplace(a, std::move(row)).first->second;
}

/// Test hook: overrides the cache cap for the current process.
inline void set_binom_row_cache_cap(long cap) {
  detail::PascalCache::instance().cap = cap;
}

}  // namespace hdepth
