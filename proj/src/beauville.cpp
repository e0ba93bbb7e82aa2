#include "beauville/beauville.hpp"

#include <algorithm>

namespace beauville {

Subset conjugate_union(const FiniteGroup& g, Elem x) {
  g.check_member(x);
  // Conjugacy class of x by orbit under the generators; the conjugates of <x>
  // are exactly the <c> for c in that class.
  Subset cls(g.order());
  cls.insert(x);
  const auto xs = g.generators();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const Elem c = cls.members()[i];
    for (Elem t : xs) cls.insert(g.conj(c, t));
  }
  Subset out(g.order());
  for (Elem c : cls.members()) {
    for (Elem e : cyclic_subgroup(g, c)) out.insert(e);
  }
  return out;
}

Subset sigma_set(const FiniteGroup& g, Elem x, Elem y) {
  Subset out = conjugate_union(g, x);
  out = out.unite(conjugate_union(g, y));
  return out.unite(conjugate_union(g, g.mul(x, y)));
}

BeauvilleVerdict is_beauville_structure(const FiniteGroup& g, const BeauvilleStructure& s) {
  BeauvilleVerdict v;
  for (const GeneratingPair& pair : {s.pair1, s.pair2}) {
    const std::vector<Elem> seeds{pair.x, pair.y};
    if (subgroup_closure(g, seeds).order() != g.order()) {
      v.reason = "pair {" + g.format(pair.x) + ", " + g.format(pair.y) + "} does not generate the group";
      return v;
    }
  }
  const Subset meet = sigma_set(g, s.pair1.x, s.pair1.y).intersect(sigma_set(g, s.pair2.x, s.pair2.y));
  for (Elem e : meet.sorted()) {
    if (e != g.identity()) {
      v.witness = e;
      v.reason = "Sigma sets share " + g.format(e);
      return v;
    }
  }
  v.ok = true;
  v.reason = "both pairs generate and the Sigma sets meet trivially";
  return v;
}

Subset commutator_set(const FiniteGroup& g, Elem t) {
  g.check_member(t);
  Subset out(g.order());
  for (Elem h = 0; h < g.order(); ++h) out.insert(g.comm(t, h));
  return out;
}

NonCoveringVerdict noncovering_check(const FiniteGroup& g, Elem t, const Subset& s) {
  NonCoveringVerdict v;
  v.commutators = commutator_set(g, t);
  for (Elem e : s.sorted()) {
    if (!v.commutators.contains(e)) {
      v.uncovered = true;
      v.witness = e;
      break;
    }
  }
  return v;
}

Witnesses witness_search(const FiniteGroup& h, Elem u, Elem v, const Subset& last_term) {
  Witnesses out;
  const std::uint64_t p = p_group_prime(h);
  if (!is_central(h, last_term)) {
    out.detail = "last lower central term is not central";
    return out;
  }
  const Subset cu = commutator_set(h, u);
  const Subset cv = commutator_set(h, v);
  for (Elem e : last_term.sorted()) {
    if (e == h.identity() || element_order(h, e) != p) continue;
    if (!out.w && !cu.contains(e)) out.w = e;
    if (!out.z && !cv.contains(e)) out.z = e;
    if (out.found()) break;
  }
  if (!out.w) out.detail += "no element of the last term avoids the commutators of u; ";
  if (!out.z) out.detail += "no element of the last term avoids the commutators of v; ";
  if (out.found()) out.detail = "w = " + h.format(*out.w) + ", z = " + h.format(*out.z);
  return out;
}

bool strongly_real_check(const FiniteGroup& g, const BeauvilleStructure& s, const Hom& theta) {
  for (Elem e : {s.pair1.x, s.pair1.y, s.pair2.x, s.pair2.y}) {
    if (theta(e) != g.inv(e)) return false;
  }
  return true;
}

ConcreteGroup<std::uint64_t, std::hash<std::uint64_t>> cyclic_square(std::uint32_t n) {
  if (n < 2) throw DomainError("C_n x C_n needs n >= 2");
  auto g = cayley_bfs(
      std::uint64_t{0}, {"x", "y"},
      [n](std::uint64_t v, Letter l) {
        std::uint64_t a = v / n, b = v % n;
        const std::uint64_t delta = l.inverted ? n - 1 : 1;
        if (l.gen == 0) {
          a = (a + delta) % n;
        } else {
          b = (b + delta) % n;
        }
        return a * n + b;
      },
      std::hash<std::uint64_t>{});
  Presentation pres;
  pres.generator_names = {"x", "y"};
  pres.relators = {Word::generator(0).pow(n), Word::generator(1).pow(n),
                   commutator(Word::generator(0), Word::generator(1))};
  g.group.attach_presentation(std::move(pres));
  return g;
}

std::optional<AbelianSearchResult> abelian_beauville_search(std::uint32_t n) {
  const auto concrete = cyclic_square(n);
  const FiniteGroup& g = concrete.group;
  const std::size_t order = g.order();
  const std::size_t words = (order + 63) / 64;

  struct Candidate {
    GeneratingPair pair;
    std::vector<std::uint64_t> sigma;
  };
  std::vector<Candidate> candidates;
  for (Elem a = 0; a < order; ++a) {
    for (Elem b = 0; b < order; ++b) {
      const std::vector<Elem> seeds{a, b};
      if (subgroup_closure(g, seeds).order() != order) continue;
      Candidate c{{a, b}, std::vector<std::uint64_t>(words, 0)};
      const Subset sigma = sigma_set(g, a, b);
      for (Elem e : sigma.members()) c.sigma[e / 64] |= std::uint64_t{1} << (e % 64);
      candidates.push_back(std::move(c));
    }
  }

  AbelianSearchResult result;
  result.n = n;
  for (const Candidate& c1 : candidates) {
    for (const Candidate& c2 : candidates) {
      ++result.pairs_examined;
      bool trivial = true;
      for (std::size_t w = 0; w < words && trivial; ++w) {
        std::uint64_t meet = c1.sigma[w] & c2.sigma[w];
        if (w == 0) meet &= ~std::uint64_t{1};  // the identity is element 0
        trivial = meet == 0;
      }
      if (!trivial) continue;
      const BeauvilleStructure s{c1.pair, c2.pair};
      const std::vector<Elem> images{g.inv(g.generator(0)), g.inv(g.generator(1))};
      const Hom theta = automorphism_from_images(g, images);
      result.strongly_real = strongly_real_check(g, s, theta);
      const Elem elems[4] = {s.pair1.x, s.pair1.y, s.pair2.x, s.pair2.y};
      for (std::size_t i = 0; i < 4; ++i) {
        const std::uint64_t v = concrete.element(elems[i]);
        result.coordinates[i] = {static_cast<std::uint32_t>(v / n), static_cast<std::uint32_t>(v % n)};
      }
      return result;
    }
  }
  return std::nullopt;
}

}  // namespace beauville
