#pragma once

// Sigma sets, Beauville structures, strong reality, and the commutator
// non-covering checks.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "beauville/group.hpp"
#include "beauville/group_algorithms.hpp"

namespace beauville {

/// Union of all conjugates of <x>.
Subset conjugate_union(const FiniteGroup& g, Elem x);

/// Sigma(x, y): union of all conjugates of <x>, <y> and <xy>.
Subset sigma_set(const FiniteGroup& g, Elem x, Elem y);

struct GeneratingPair {
  Elem x;
  Elem y;
};

struct BeauvilleStructure {
  GeneratingPair pair1;
  GeneratingPair pair2;
};

struct BeauvilleVerdict {
  bool ok = false;
  std::string reason;
  /// A nonidentity element of the Sigma intersection when that is the failure.
  std::optional<Elem> witness;
};

BeauvilleVerdict is_beauville_structure(const FiniteGroup& g, const BeauvilleStructure& s);

struct NonCoveringVerdict {
  bool uncovered = false;
  /// First element of S (in element order) outside {[t, g]}.
  std::optional<Elem> witness;
  Subset commutators;
};

/// The commutator set {[t, g] : g in G}.
Subset commutator_set(const FiniteGroup& g, Elem t);

/// Does {[t, g] : g in G} fail to cover S?
NonCoveringVerdict noncovering_check(const FiniteGroup& g, Elem t, const Subset& s);

struct Witnesses {
  std::optional<Elem> w;  // in H_i, outside {[u, h]}
  std::optional<Elem> z;  // in H_i, outside {[v, h]}
  std::string detail;
  bool found() const { return w.has_value() && z.has_value(); }
};

/// First eligible central elements of order p in `last_term` outside the
/// commutator sets of u and v respectively.
Witnesses witness_search(const FiniteGroup& h, Elem u, Elem v, const Subset& last_term);

/// True iff `theta` sends x1, y1, x2, y2 to their inverses (g_1 = g_2 = 1).
bool strongly_real_check(const FiniteGroup& g, const BeauvilleStructure& s, const Hom& theta);

/// C_n x C_n generated by x = (1,0), y = (0,1), with presentation
/// <x, y | x^n, y^n, [x,y]>. Element values are packed as a*n + b.
ConcreteGroup<std::uint64_t, std::hash<std::uint64_t>> cyclic_square(std::uint32_t n);

struct AbelianSearchResult {
  std::uint32_t n = 0;
  std::array<std::pair<std::uint32_t, std::uint32_t>, 4> coordinates{};  // x1, y1, x2, y2
  bool strongly_real = false;
  std::size_t pairs_examined = 0;
};

/// Exhaustive search for a Beauville structure in C_n x C_n, in element order;
/// empty when none exists.
std::optional<AbelianSearchResult> abelian_beauville_search(std::uint32_t n);

}  // namespace beauville
