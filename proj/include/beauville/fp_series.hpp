#pragma once

// Arithmetic in F_p, plain truncated power series, and normalized series
// automorphisms t + a_2 t^2 + ... + a_M t^M (elements of the Nottingham
// quotient N/N_M).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace beauville {

bool is_prime(std::uint64_t n);

/// An element of F_p.
class FpScalar {
 public:
  FpScalar(std::uint32_t p, std::int64_t value);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t value() const noexcept { return value_; }

  FpScalar operator+(FpScalar other) const;
  FpScalar operator-(FpScalar other) const;
  FpScalar operator*(FpScalar other) const;
  FpScalar operator-() const;
  /// Throws DomainError for zero.
  FpScalar inverse() const;

  bool operator==(const FpScalar&) const = default;

 private:
  std::uint32_t p_;
  std::uint32_t value_;
};

std::uint32_t inverse_mod(std::uint32_t value, std::uint32_t p);

/// c_0 + c_1 t + ... + c_M t^M over F_p, taken modulo t^(M+1).
class PowerSeries {
 public:
  PowerSeries(std::uint32_t p, std::size_t precision);
  PowerSeries(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static PowerSeries constant(std::uint32_t p, std::size_t precision, std::int64_t c);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t precision() const noexcept { return coeffs_.size() - 1; }
  std::uint32_t operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const std::uint32_t> coefficients() const noexcept { return coeffs_; }
  void set(std::size_t i, std::int64_t value);

  PowerSeries operator+(const PowerSeries& other) const;
  PowerSeries operator-(const PowerSeries& other) const;
  PowerSeries operator*(const PowerSeries& other) const;
  PowerSeries scaled(std::int64_t c) const;
  /// Same series at a different precision (truncated or zero padded).
  PowerSeries with_precision(std::size_t precision) const;

  bool operator==(const PowerSeries&) const = default;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> coeffs_;
};

/// g with g^2 * s = 1 and g(0) = 1, by Newton iteration at doubling precision.
/// Requires s(0) = 1 and odd p.
PowerSeries inv_sqrt(const PowerSeries& s);

/// Filtration depth: k with f in N_k \ N_(k+1), or infinite for the identity.
class Depth {
 public:
  static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();

  constexpr explicit Depth(std::uint32_t value) : value_(value) {}
  static constexpr Depth infinite() { return Depth(kInfinite); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr std::uint32_t value() const { return value_; }

  constexpr auto operator<=>(const Depth&) const = default;

  std::string to_string() const;

 private:
  std::uint32_t value_;
};

/// A normalized automorphism f(t) = t + a_2 t^2 + ... + a_M t^M of F_p[[t]]
/// modulo t^(M+1). The group law is substitution with f*g meaning "apply f,
/// then g": (f*g)(t) = g(f(t)).
class TruncSeries {
 public:
  static TruncSeries identity(std::uint32_t p, std::size_t precision);
  /// coeffs holds a_1..a_M; a_1 must be 1.
  static TruncSeries from_coefficients(std::uint32_t p, std::vector<std::uint32_t> coeffs);
  /// Reads a_1..a_M off a power series with zero constant term.
  static TruncSeries from_power_series(const PowerSeries& s);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t precision() const noexcept { return coeffs_.size(); }
  /// a_i for 1 <= i <= M.
  std::uint32_t coeff(std::size_t i) const { return coeffs_.at(i - 1); }
  std::span<const std::uint32_t> coefficients() const noexcept { return coeffs_; }

  bool is_identity() const;
  Depth depth() const;
  /// a_(depth+1); zero for the identity.
  std::uint32_t leading_coefficient() const;

  PowerSeries as_power_series() const;
  std::string to_string() const;

  bool operator==(const TruncSeries&) const = default;

 private:
  TruncSeries(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {}

  std::uint32_t p_;
  std::vector<std::uint32_t> coeffs_;
};

/// t -> g(f(t)).
TruncSeries compose(const TruncSeries& f, const TruncSeries& g);
TruncSeries inverse(const TruncSeries& f);
/// f^-1 g^-1 f g.
TruncSeries commutator(const TruncSeries& f, const TruncSeries& g);
TruncSeries power(const TruncSeries& f, std::int64_t n);

inline TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) { return compose(f, g); }

Depth depth(const TruncSeries& f);

/// Index r(i) with gamma_i(N) = N_r(i): r(i) = i + 1 + floor((i-2)/(p-1)), i >= 2.
std::uint32_t lcs_index(std::uint32_t i, std::uint32_t p);

struct TruncSeriesHash {
  std::size_t operator()(const TruncSeries& f) const noexcept;
};

}  // namespace beauville
