#pragma once

// Exact arithmetic in the quotient rings R_k = R / pi^k R for two families:
//   PadicQuotient(p, k)       Z / p^k Z,           pi = p
//   PowerSeriesQuotient(p, k) F_p[x] / (x^k),      pi = x
//
// Both families store an element as one integer in [0, p^k). For the
// power-series family that integer packs the coefficient list in base p,
// little-endian in x. With that encoding, reduction to a lower level,
// division by pi^k and multiplication by pi^k are the same integer maps
// in both families; only + and * differ.

#include <cstdint>
#include <string>
#include <vector>

#include "lieobstruct/error.hpp"

namespace lieobstruct {

enum class RingFamily { PadicQuotient, PowerSeriesQuotient };

std::string to_string(RingFamily family);

/// Trial-division primality test.
bool is_prime(std::uint64_t n);

class RingSpec {
 public:
  /// Throws InputError unless p is prime, k >= 1 and p^k < 2^63.
  RingSpec(RingFamily family, std::uint64_t p, unsigned k);

  static RingSpec padic(std::uint64_t p, unsigned k) { return {RingFamily::PadicQuotient, p, k}; }
  static RingSpec power_series(std::uint64_t p, unsigned k) {
    return {RingFamily::PowerSeriesQuotient, p, k};
  }
  static RingSpec residue_field(std::uint64_t p) { return padic(p, 1); }

  RingFamily family() const noexcept { return family_; }
  std::uint64_t prime() const noexcept { return p_; }
  unsigned level() const noexcept { return k_; }
  /// Number of elements, p^k.
  std::uint64_t order() const noexcept { return order_; }
  bool is_field() const noexcept { return k_ == 1; }

  /// Same family and prime at another level.
  RingSpec at_level(unsigned k) const { return {family_, p_, k}; }
  RingSpec residue() const { return at_level(1); }

  bool is_canonical(std::uint64_t a) const noexcept { return a < order_; }

  // Arithmetic on canonical representatives. Inputs must be canonical.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  /// Image of the integer n under Z -> R_k (n * 1).
  std::uint64_t from_int(std::int64_t n) const;

  /// Representative modulo pi^level (level <= this->level()).
  std::uint64_t truncate(std::uint64_t a, unsigned level) const;
  /// p^e as an integer (e <= level()).
  std::uint64_t prime_power(unsigned e) const;

  /// Coefficient digits of a packed value (little-endian, length k).
  std::vector<std::uint64_t> digits(std::uint64_t a) const;
  std::uint64_t from_digits(const std::vector<std::uint64_t>& digits) const;

  std::string name() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingFamily family_;
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t order_;
};

/// An element of R_k carrying its ring.
class RingElem {
 public:
  RingElem(RingSpec spec, std::uint64_t value);

  const RingSpec& spec() const noexcept { return spec_; }
  std::uint64_t value() const noexcept { return value_; }
  /// Little-endian coefficient list over F_p (power-series family) or the
  /// base-p digits of the integer representative (p-adic family).
  std::vector<std::uint64_t> coefficients() const { return spec_.digits(value_); }
  bool is_zero() const noexcept { return value_ == 0; }

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem operator-() const { return {spec_, spec_.neg(value_)}; }

  friend bool operator==(const RingElem&, const RingElem&) = default;

 private:
  RingSpec spec_;
  std::uint64_t value_;
};

/// R_{k+1} -> R_k. Throws InputError at level 1.
RingElem reduce_level(const RingElem& x);

/// R_{k+1} -> F_p, the full reduction to the residue field.
RingElem lambda_residue(const RingElem& x);

/// pi^k R_{k+1} -> F_p: chi(pi^k y) = lambda(y). x must live at level >= 2.
RingElem chi(const RingElem& x);

/// Inverse of chi: F_p -> pi^k R_{k+1} where target has level k+1 >= 2.
RingElem psi(const RingElem& c, const RingSpec& target);

/// Additive section R_k -> R_{k+1} of the reduction map for the power-series
/// family (extension of the coefficient list by zero). Multiplicative on
/// constants, so on the image of F_p it is a ring section.
RingElem split_section(const RingElem& x);

}  // namespace lieobstruct
