#pragma once

// Exhaustive checks of the intersection and homomorphism lemmas on concrete
// finite p-groups.

#include <cstddef>
#include <string>

#include "beauville/group.hpp"
#include "beauville/group_algorithms.hpp"

namespace beauville {

struct LemmaReport {
  std::size_t cases = 0;  // instances where the hypotheses hold
  std::size_t counterexamples = 0;
  std::string first_counterexample;

  bool ok() const { return counterexamples == 0; }
};

/// For every generating pair (a, b) with o(a) = p: the conjugates of <a> and
/// of <b> meet trivially.
LemmaReport check_intersection1(const FiniteGroup& g);

/// For every x of order p outside Phi(G) and every t in Phi(G) outside
/// {[x, g]}: the conjugates of <x> and of <xt> meet trivially.
LemmaReport check_intersection2(const FiniteGroup& g);

/// For psi: G1 -> G2 and all x1, y1, g, h in G1 with o(x1) = o(psi(x1)):
/// <psi(x1)^psi(g)> meeting <psi(y1)^psi(h)> trivially forces <x1^g> to meet
/// <y1^h> trivially. Conjugating by g^-1 reduces this to g = 1.
LemmaReport check_homomorphism_lemma(const FiniteGroup& g1, const FiniteGroup& g2, const Hom& psi);

}  // namespace beauville
