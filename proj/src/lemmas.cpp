#include "beauville/lemmas.hpp"

#include <algorithm>
#include <vector>

#include "beauville/beauville.hpp"

namespace beauville {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const Subset& s) {
  Bits b((s.universe() + 63) / 64, 0);
  for (Elem e : s.members()) b[e / 64] |= std::uint64_t{1} << (e % 64);
  return b;
}

// Nonidentity common element, or identity when the sets meet trivially.
Elem meet(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    std::uint64_t m = a[w] & b[w];
    if (w == 0) m &= ~std::uint64_t{1};
    if (m) return static_cast<Elem>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(m)));
  }
  return 0;
}

std::vector<Bits> all_conjugate_unions(const FiniteGroup& g) {
  std::vector<Bits> out;
  out.reserve(g.order());
  for (Elem e = 0; e < g.order(); ++e) out.push_back(to_bits(conjugate_union(g, e)));
  return out;
}

bool generates(const FiniteGroup& g, Elem a, Elem b) {
  const Elem seeds[2] = {a, b};
  return subgroup_closure(g, seeds).order() == g.order();
}

// The unique subgroup of order p inside <e>, labelled by its least nonidentity
// element; 0 for the identity. Two cyclic subgroups of a p-group meet
// trivially iff these labels differ or one of them is trivial.
std::vector<Elem> socle_labels(const FiniteGroup& g, std::uint64_t p) {
  std::vector<Elem> label(g.order(), 0);
  for (Elem e = 1; e < g.order(); ++e) {
    const std::uint64_t o = element_order(g, e);
    const Elem x = g.pow(e, static_cast<std::int64_t>(o / p));
    Elem best = x;
    Elem y = x;
    for (std::uint64_t k = 2; k < p; ++k) {
      y = g.mul(y, x);
      best = std::min(best, y);
    }
    label[e] = best;
  }
  return label;
}

bool cyclic_meet_trivial(const std::vector<Elem>& label, Elem a, Elem b) {
  return label[a] == 0 || label[b] == 0 || label[a] != label[b];
}

}  // namespace

LemmaReport check_intersection1(const FiniteGroup& g) {
  LemmaReport report;
  const std::uint64_t p = p_group_prime(g);
  if (p == 0) return report;
  const auto unions = all_conjugate_unions(g);
  for (Elem a = 0; a < g.order(); ++a) {
    if (element_order(g, a) != p) continue;
    for (Elem b = 0; b < g.order(); ++b) {
      if (!generates(g, a, b)) continue;
      ++report.cases;
      const Elem x = meet(unions[a], unions[b]);
      if (x != 0 && report.counterexamples++ == 0) {
        report.first_counterexample = "a = " + g.format(a) + ", b = " + g.format(b) + " share " + g.format(x);
      }
    }
  }
  return report;
}

LemmaReport check_intersection2(const FiniteGroup& g) {
  LemmaReport report;
  const std::uint64_t p = p_group_prime(g);
  if (p == 0) return report;
  const Subgroup phi = frattini_subgroup(g);
  std::vector<Bits> unions(g.order());
  auto union_of = [&](Elem e) -> const Bits& {
    if (unions[e].empty()) unions[e] = to_bits(conjugate_union(g, e));
    return unions[e];
  };
  for (Elem x = 0; x < g.order(); ++x) {
    if (phi.contains(x) || element_order(g, x) != p) continue;
    const Subset comms = commutator_set(g, x);
    for (Elem t : phi.elements.sorted()) {
      if (comms.contains(t)) continue;
      ++report.cases;
      const Elem xt = g.mul(x, t);
      const Elem y = meet(union_of(x), union_of(xt));
      if (y != 0 && report.counterexamples++ == 0) {
        report.first_counterexample = "x = " + g.format(x) + ", t = " + g.format(t) + " share " + g.format(y);
      }
    }
  }
  return report;
}

LemmaReport check_homomorphism_lemma(const FiniteGroup& g1, const FiniteGroup& g2, const Hom& psi) {
  LemmaReport report;
  const std::uint64_t p1 = p_group_prime(g1);
  const std::uint64_t p2 = p_group_prime(g2);
  if (p1 == 0) return report;
  if (p2 != 0 && p2 != p1) throw DomainError("homomorphism lemma check needs p-groups for the same prime");
  const auto up = socle_labels(g1, p1);
  const auto down = p2 == 0 ? std::vector<Elem>(g2.order(), 0) : socle_labels(g2, p2);
  for (Elem x1 = 0; x1 < g1.order(); ++x1) {
    const Elem x2 = psi(x1);
    if (element_order(g1, x1) != element_order(g2, x2)) continue;
    for (Elem y1 = 0; y1 < g1.order(); ++y1) {
      for (Elem h = 0; h < g1.order(); ++h) {
        const Elem y1h = g1.conj(y1, h);
        if (!cyclic_meet_trivial(down, x2, psi(y1h))) continue;
        ++report.cases;
        if (!cyclic_meet_trivial(up, x1, y1h) && report.counterexamples++ == 0) {
          report.first_counterexample =
              "x1 = " + g1.format(x1) + ", y1 = " + g1.format(y1) + ", h = " + g1.format(h);
        }
      }
    }
  }
  return report;
}

}  // namespace beauville
