#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <string>
#include <utility>

#include "hdepth/errors.hpp"

namespace hdepth {

/// Signed integer of unbounded magnitude, backed by GMP.
///
/// All counting and transform values in this library are ExactInt; there is
/// no floating point on any arithmetic path. Serialization is the plain
/// decimal string, which round-trips losslessly.
class ExactInt {
 public:
  ExactInt() { mpz_init(z_); }
  ExactInt(long v) { mpz_init_set_si(z_, v); } 
  explicit ExactInt(const std::string& decimal) {
    if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
      mpz_clear(z_);
      throw ParameterError("ExactInt: not a decimal integer: '" + decimal + "'");
    }
  }
  ExactInt(const ExactInt& o) { mpz_init_set(z_, o.z_); }
  ExactInt(ExactInt&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  ExactInt& operator=(const ExactInt& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  ExactInt& operator=(ExactInt&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~ExactInt() { mpz_clear(z_); }

  ExactInt& operator+=(const ExactInt& o) {
    mpz_add(z_, z_, o.z_);
    return *this;
  }
  ExactInt& operator-=(const ExactInt& o) {
    mpz_sub(z_, z_, o.z_);
    return *this;
  }
  ExactInt& operator*=(const ExactInt& o) {
    mpz_mul(z_, z_, o.z_);
    return *this;
  }
  ExactInt& operator*=(long v) {
    mpz_mul_si(z_, z_, v);
    return *this;
  }

  friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
  friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
  friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }
  friend ExactInt operator*(ExactInt a, long b) { return a *= b; }
  friend ExactInt operator*(long a, ExactInt b) { return b *= a; }
  friend ExactInt operator-(ExactInt a) {
    mpz_neg(a.z_, a.z_);
    return a;
  }

  /// Quotient of an exact division; the caller guarantees divisibility.
  ExactInt& div_exact(const ExactInt& divisor) {
    mpz_divexact(z_, z_, divisor.z_);
    return *this;
  }

  int sign() const { return mpz_sgn(z_); }
  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool is_negative() const { return mpz_sgn(z_) < 0; }

  friend bool operator==(const ExactInt& a, const ExactInt& b) {
    return mpz_cmp(a.z_, b.z_) == 0;
  }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    const int c = mpz_cmp(a.z_, b.z_);
    return c <=> 0;
  }
  friend bool operator==(const ExactInt& a, long b) { return mpz_cmp_si(a.z_, b) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, long b) {
    const int c = mpz_cmp_si(a.z_, b);
    return c <=> 0;
  }

  std::string to_string() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
  }

  bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
  long to_long() const {
    if (!fits_long()) throw ParameterError("ExactInt: value exceeds long range: " + to_string());
    return mpz_get_si(z_);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactInt& v) {
    return os << v.to_string();
  }

  // Raw handles for GMP-level routines (binomial kernels).
  mpz_ptr raw() { return z_; }
  mpz_srcptr raw() const { return z_; }

 private:
  mpz_t z_;
};

}  // namespace hdepth
