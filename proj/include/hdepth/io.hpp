#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hdepth/alpha.hpp"
#include "hdepth/conjectures.hpp"
#include "hdepth/hilbert.hpp"
#include "hdepth/known_values.hpp"

namespace hdepth {

// ExactInt values serialize as decimal strings everywhere: JSON numbers
// and CSV cells would silently truncate past 64 bits.

inline nlohmann::ordered_json alpha_to_json(const AlphaVector& a, const std::string& module_label) {
  nlohmann::ordered_json j;
  j["n"] = a.n;
  j["module"] = module_label;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : a.values) arr.push_back(v.to_string());
  j["alpha"] = std::move(arr);
  return j;
}

inline void alpha_to_csv(std::ostream& os, const AlphaVector& a, const std::string& module_label) {
  os << "n,module,j,alpha_j\n";
  for (int j = 0; j <= a.n; ++j) {
    os << a.n << ',' << module_label << ',' << j << ',' << a.values[static_cast<std::size_t>(j)] << '\n';
  }
}

inline nlohmann::ordered_json beta_rows_to_json(const std::vector<BetaRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json jr;
    jr["d"] = row.d;
    auto vals = nlohmann::ordered_json::array();
    for (const auto& v : row.values) vals.push_back(v.to_string());
    jr["beta"] = std::move(vals);
    arr.push_back(std::move(jr));
  }
  return arr;
}

inline void beta_rows_to_csv(std::ostream& os, const std::vector<BetaRow>& rows) {
  os << "d,k,beta\n";
  for (const auto& row : rows) {
    for (int k = 0; k <= row.d; ++k) {
      os << row.d << ',' << k << ',' << row.values[static_cast<std::size_t>(k)] << '\n';
    }
  }
}

inline nlohmann::ordered_json hdepth_to_json(const HdepthResult& h) {
  nlohmann::ordered_json j;
  j["value"] = h.value;
  j["d_start"] = h.d_start;
  auto rej = nlohmann::ordered_json::array();
  for (const auto& r : h.rejections) {
    rej.push_back({{"d", r.d}, {"k", r.k}, {"beta", r.beta.to_string()}});
  }
  j["rejections"] = std::move(rej);
  auto row = nlohmann::ordered_json::array();
  for (const auto& v : h.feasible_row.values) row.push_back(v.to_string());
  j["feasible_row"] = std::move(row);
  return j;
}

inline void hdepth_to_csv(std::ostream& os, const HdepthResult& h) {
  os << "value,d_start\n" << h.value << ',' << h.d_start << '\n';
}

inline nlohmann::ordered_json bounds_to_json(const BoundsReport& b) {
  nlohmann::ordered_json j;
  j["module"] = b.module_desc;
  j["lower"] = b.lower;
  j["upper"] = b.upper ? nlohmann::ordered_json(*b.upper) : nlohmann::ordered_json(nullptr);
  j["exact"] = b.exact ? nlohmann::ordered_json(*b.exact) : nlohmann::ordered_json(nullptr);
  j["source"] = b.source;
  return j;
}

inline void bounds_to_csv(std::ostream& os, const std::vector<BoundsReport>& reports) {
  os << "module,lower,upper,exact,source\n";
  for (const auto& b : reports) {
    os << '"' << b.module_desc << "\"," << b.lower << ',';
    if (b.upper) os << *b.upper;
    os << ',';
    if (b.exact) os << *b.exact;
    os << ",\"" << b.source << "\"\n";
  }
}

// Scan CSV schema: one line per n, flushed as written so long scans are
// resumable. Cycle columns are empty below n = 3.
inline constexpr const char* kScanCsvHeader =
    "n,hdepth_I,hdepth_SI,hdepth_J,hdepth_SJ,delta1,delta2,conj1_ok,conj2a_ok,conj2b_ok,conj2c_ok";

inline std::string scan_record_csv_line(const ScanRecord& r) {
  auto opt_int = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  auto opt_bool = [](const std::optional<bool>& v) {
    return v ? std::string(*v ? "1" : "0") : std::string();
  };
  std::string line = std::to_string(r.n) + ',' + std::to_string(r.hdepth_path_ideal) + ',' +
                     std::to_string(r.hdepth_path_quotient) + ',' + opt_int(r.hdepth_cycle_ideal) + ',' +
                     opt_int(r.hdepth_cycle_quotient) + ',' + std::to_string(r.delta1) + ',' +
                     std::to_string(r.delta2) + ',' + (r.conj1_ok ? "1" : "0") + ',' +
                     opt_bool(r.conj2a_ok) + ',' + opt_bool(r.conj2b_ok) + ',' + opt_bool(r.conj2c_ok);
  return line;
}

inline nlohmann::ordered_json scan_record_to_json(const ScanRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["hdepth_I"] = r.hdepth_path_ideal;
  j["hdepth_SI"] = r.hdepth_path_quotient;
  j["hdepth_J"] = r.hdepth_cycle_ideal ? nlohmann::ordered_json(*r.hdepth_cycle_ideal)
                                       : nlohmann::ordered_json(nullptr);
  j["hdepth_SJ"] = r.hdepth_cycle_quotient ? nlohmann::ordered_json(*r.hdepth_cycle_quotient)
                                           : nlohmann::ordered_json(nullptr);
  j["delta1"] = r.delta1;
  j["delta2"] = r.delta2;
  j["conj1_ok"] = r.conj1_ok;
  j["conj2a_ok"] = r.conj2a_ok ? nlohmann::ordered_json(*r.conj2a_ok) : nlohmann::ordered_json(nullptr);
  j["conj2b_ok"] = r.conj2b_ok ? nlohmann::ordered_json(*r.conj2b_ok) : nlohmann::ordered_json(nullptr);
  j["conj2c_ok"] = r.conj2c_ok ? nlohmann::ordered_json(*r.conj2c_ok) : nlohmann::ordered_json(nullptr);
  return j;
}

/// Decimal expansion of num/den to `places` digits, computed by integer
/// long division with round-half-up; no floating point.
inline std::string decimal_of_fraction(long num, long den, int places = 6) {
  if (den <= 0) throw ParameterError("decimal_of_fraction: denominator must be positive");
  const bool neg = num < 0;
  if (neg) num = -num;
  long scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const long scaled = (num * scale + den / 2) / den;
  std::string digits = std::to_string(scaled);
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places + 1) - digits.size(), '0');
  }
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  return neg ? "-" + digits : digits;
}

inline nlohmann::ordered_json frequencies_to_json(const FrequencyStats& f) {
  nlohmann::ordered_json j;
  j["quotient_eq"] = {{"count", f.quotient_eq},
                      {"denominator", f.denom},
                      {"fraction", std::to_string(f.quotient_eq) + "/" + std::to_string(f.denom)},
                      {"decimal", decimal_of_fraction(f.quotient_eq, f.denom)}};
  j["ideal_eq"] = {{"count", f.ideal_eq},
                   {"denominator", f.denom},
                   {"fraction", std::to_string(f.ideal_eq) + "/" + std::to_string(f.denom)},
                   {"decimal", decimal_of_fraction(f.ideal_eq, f.denom)}};
  return j;
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["name"] = rep.name;
  j["range"] = {rep.lo, rep.hi};
  j["pass"] = rep.pass();
  auto claims = nlohmann::ordered_json::array();
  for (const auto& c : rep.claims) claims.push_back({{"claim", c.claim}, {"pass", c.pass}});
  j["claims"] = std::move(claims);
  auto cex = nlohmann::ordered_json::array();
  for (const auto& c : rep.counterexamples) {
    cex.push_back({{"instance", c.instance}, {"violated", c.violated}});
  }
  j["counterexamples"] = std::move(cex);
  j["flags"] = rep.flags;
  if (rep.frequencies) j["frequencies"] = frequencies_to_json(*rep.frequencies);
  return j;
}

}  // namespace hdepth
