#include <doctest.h>

#include "beauville/errors.hpp"
#include "beauville/group_algorithms.hpp"
#include "beauville/maximal_class.hpp"
#include "beauville/presentation.hpp"

using namespace beauville;

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("cyclotomic ring") {
  for (auto [p, i] : {std::pair{3u, 3u}, {3u, 5u}, {5u, 5u}, {5u, 9u}, {7u, 4u}, {7u, 13u}}) {
    CAPTURE(p);
    CAPTURE(i);
    const CyclotomicRing R(p, i);
    CHECK(R.log_order() == i);
    CHECK(R.dimension() == std::min(i, p - 1));
    // 1 + zeta + ... + zeta^(p-1) = 0
    const CyclotomicElt zeta = R.add(R.one(), R.pi());
    CyclotomicElt sum = R.zero(), power = R.one();
    for (unsigned j = 0; j < p; ++j) {
      sum = R.add(sum, power);
      power = R.mul(power, zeta);
    }
    CHECK(sum == R.zero());
    CHECK(power == R.one());  // zeta^p = 1
    CHECK(R.mul_zeta_pow(R.pi(), p) == R.pi());
    // pi^i = 0 and pi^(i-1) != 0
    CyclotomicElt pik = R.one();
    for (unsigned j = 0; j + 1 < i; ++j) pik = R.mul(pik, R.pi());
    CHECK(pik != R.zero());
    CHECK(R.valuation(pik) == i - 1);
    CHECK(R.mul(pik, R.pi()) == R.zero());
    CHECK(R.add(R.pi(), R.neg(R.pi())) == R.zero());
    CHECK(R.valuation(R.zero()) == i);
    CHECK(R.valuation(R.from_int(p)) == std::min(i, p - 1));
  }
  CHECK_THROWS_AS(CyclotomicRing(4, 3), DomainError);
  CHECK_THROWS_AS(CyclotomicRing(3, 1), DomainError);
}

TEST_CASE("construct_P") {
  const auto P = construct_P(3, 3);
  const FiniteGroup& G = P.group();
  CHECK(G.order() == 81);
  CHECK(element_order(G, P.s) == 3);
  CHECK(P.layer_index(P.s) == 0);
  CHECK(P.layer_index(P.s1) == 1);
  // P_1 is abelian
  const Subset p1 = P.layer(1);
  CHECK(p1.size() == 27);
  for (Elem a : p1.members()) {
    for (Elem b : p1.members()) CHECK(G.mul(a, b) == G.mul(b, a));
  }
  // The multiplication convention, read off the concrete elements.
  const MaxClassElt s1s = P.multiply(P.concrete.element(P.s1), P.concrete.element(P.s));
  CHECK(s1s.eps == 1);
  CHECK(s1s.a == P.ring.add(P.ring.one(), P.ring.pi()));
  CHECK(std::string(kSemidirectConvention).find("zeta^e2") != std::string::npos);
  CHECK_THROWS_AS(P.layer(0), DomainError);
}

TEST_CASE("layer orders") {
  for (auto [p, i] : {std::pair{3u, 3u}, {3u, 5u}, {5u, 5u}}) {
    CAPTURE(p);
    CAPTURE(i);
    const auto P = construct_P(p, i);
    CHECK(P.group().order() == ipow(p, i + 1));
    const LayerReport r = verify_layer_orders(P);
    CHECK(r.ok);
    CHECK(r.uniserial);
    CHECK(r.failures.empty());
    CHECK(r.outside_p1 == P.group().order() - P.group().order() / p);
    CHECK(r.outside_p1_order_p == r.outside_p1);
    // The generic lower central series gives the layers from j = 2 on.
    const auto lcs = lower_central_series(P.group());
    for (unsigned j = 2; j <= i + 1; ++j) {
      CHECK(lcs.at(j - 1).elements == P.layer(j));
    }
  }
  const auto P33 = verify_layer_orders(construct_P(3, 3));
  CHECK(P33.outside_p1 == 54);
  CHECK(P33.rows.at(0).expected_order == 9);
  CHECK(P33.rows.at(0).exponent == 9);
  CHECK(verify_layer_orders(construct_P(5, 5)).rows.at(0).exponent == 25);
}

TEST_CASE("psi onto P") {
  const FiniteGroup H = group_from_presentation(gamma_quotient_presentation(3, 3));
  const auto P = construct_P(3, 3);
  const PsiToP psi = psi_to_P(H, P);
  CHECK(psi.accepted);
  CHECK(psi.surjective);
  CHECK(psi.class_bound_verified);
  CHECK(psi.image_uv_is_s1);
  CHECK(psi.order_s1 == 9);
  CHECK(psi.order_image_uv == 9);
  CHECK(psi.map.size() == H.order());
  // x^3 maps to (s^-1)^3 = 1
  CHECK(P.group().pow(P.group().inv(P.s), 3) == P.group().identity());

  // Too small a target: P(3,2) has class 2 < 3 and psi still exists, but
  // P(3,4) has class 4 and F/gamma_4 cannot map onto it.
  const PsiToP bad = psi_to_P(H, construct_P(3, 4));
  CHECK_FALSE(bad.accepted);
  CHECK_FALSE(bad.failure.empty());
}
