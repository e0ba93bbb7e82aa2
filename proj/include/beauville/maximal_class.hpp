#pragma once

// Finite quotients P = <s> ⋉ A of the infinite pro-p group of maximal class,
// with A = Z_p[zeta] / (pi^i), pi = zeta - 1, and s acting as multiplication
// by zeta = 1 + pi.

#include <cstdint>
#include <string>
#include <vector>

#include "beauville/group.hpp"
#include "beauville/group_algorithms.hpp"

namespace beauville {

/// Element of Z_p[zeta] / (pi^i) as c_0 + c_1 pi + ... + c_(d-1) pi^(d-1),
/// d = min(i, p-1), with c_m taken modulo p^e_m, e_m = ceil((i-m)/(p-1)).
struct CyclotomicElt {
  std::vector<std::uint64_t> coeffs;
  bool operator==(const CyclotomicElt&) const = default;
};

class CyclotomicRing {
 public:
  CyclotomicRing(std::uint32_t p, std::uint32_t i);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t precision() const noexcept { return i_; }
  std::size_t dimension() const noexcept { return moduli_.size(); }
  /// p^e_m for coefficient m.
  std::uint64_t modulus(std::size_t m) const { return moduli_.at(m); }

  CyclotomicElt zero() const;
  CyclotomicElt one() const;
  CyclotomicElt pi() const;
  CyclotomicElt from_int(std::int64_t v) const;

  CyclotomicElt add(const CyclotomicElt& a, const CyclotomicElt& b) const;
  CyclotomicElt neg(const CyclotomicElt& a) const;
  CyclotomicElt mul(const CyclotomicElt& a, const CyclotomicElt& b) const;
  /// Multiplication by zeta^n.
  CyclotomicElt mul_zeta_pow(const CyclotomicElt& a, std::uint32_t n) const;

  /// pi-adic valuation; `precision()` for zero.
  std::uint32_t valuation(const CyclotomicElt& a) const;
  /// log_p of the additive group order (always i).
  std::uint32_t log_order() const;

 private:
  CyclotomicElt reduce(std::vector<std::uint64_t> wide) const;

  std::uint32_t p_;
  std::uint32_t i_;
  std::uint64_t work_modulus_;
  std::vector<std::uint64_t> moduli_;
  std::vector<std::uint64_t> binom_;  // C(p, m+1) mod work modulus, m = 0..p-2
  CyclotomicElt zeta_;
};

/// (eps, a) with (e1, a1)(e2, a2) = (e1 + e2, a1 zeta^e2 + a2).
struct MaxClassElt {
  std::uint32_t eps = 0;
  CyclotomicElt a;
  bool operator==(const MaxClassElt&) const = default;
};

struct MaxClassEltHash {
  std::size_t operator()(const MaxClassElt& x) const noexcept;
};

/// The multiplication convention, recorded in certificates.
inline constexpr const char* kSemidirectConvention = "(e1,a1)(e2,a2) = (e1+e2, a1*zeta^e2 + a2)";

struct MaximalClassGroup {
  CyclotomicRing ring;
  ConcreteGroup<MaxClassElt, MaxClassEltHash> concrete;
  Elem s;   // (1, 0)
  Elem s1;  // (0, 1)

  const FiniteGroup& group() const { return concrete.group; }
  MaxClassElt multiply(const MaxClassElt& x, const MaxClassElt& y) const;
  /// P_j = {(0, a) : v(a) >= j - 1} for j >= 1.
  Subset layer(std::uint32_t j) const;
  /// j with the element in P_j \ P_(j+1); 0 outside P_1.
  std::uint32_t layer_index(Elem e) const;
};

/// P of order p^(i+1), generated by s and s1 (named "s", "s1").
MaximalClassGroup construct_P(std::uint32_t p, std::uint32_t i);

struct LayerRow {
  std::uint32_t j;
  std::size_t size;              // |P_j|
  std::uint64_t expected_order;  // p^ceil((i+1-j)/(p-1))
  std::uint64_t exponent;        // observed exp P_j
  bool exact_layer_orders;       // every element of P_j \ P_(j+1) has the expected order
};

struct LayerReport {
  bool ok = true;
  std::vector<LayerRow> rows;
  std::size_t outside_p1 = 0;
  std::size_t outside_p1_order_p = 0;
  bool uniserial = true;  // every |P_j : P_(j+1)| = p
  std::vector<std::string> failures;
};

LayerReport verify_layer_orders(const MaximalClassGroup& P);

struct PsiToP {
  bool accepted = false;
  bool surjective = false;
  bool class_bound_verified = false;  // gamma_(i+1)(P) = 1
  std::uint64_t order_s1 = 0;
  std::uint64_t order_image_uv = 0;
  bool image_uv_is_s1 = false;
  std::string failure;
  std::vector<Elem> map;  // materialized psi when accepted
};

/// psi: u -> s^-1, v -> s s1 from H = F/gamma_(i+1)(F) (generators x, y) onto P.
PsiToP psi_to_P(const FiniteGroup& H, const MaximalClassGroup& P);

}  // namespace beauville
