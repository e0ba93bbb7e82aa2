#include "beauville/group_algorithms.hpp"

#include <algorithm>
#include <numeric>

namespace beauville {

namespace {

// Adds t to the generators of s and re-closes: old members need only the new
// generator, new members need all of them.
void extend(const FiniteGroup& g, Subgroup& s, Elem t) {
  if (s.elements.contains(t)) return;
  s.generators.push_back(t);
  const std::size_t old = s.elements.size();
  for (std::size_t i = 0; i < s.elements.size(); ++i) {
    const Elem m = s.elements.members()[i];
    if (i < old) {
      s.elements.insert(g.mul(m, t));
    } else {
      for (Elem x : s.generators) s.elements.insert(g.mul(m, x));
    }
  }
}

std::uint64_t prime_of_order(std::uint64_t n) {
  if (n == 1) return 0;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) throw DomainError("group order is not a prime power");
  return p;
}

}  // namespace

Subgroup trivial_subgroup(const FiniteGroup& g) {
  Subgroup s{Subset(g.order()), {}};
  s.elements.insert(g.identity());
  return s;
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> seeds) {
  Subgroup s = trivial_subgroup(g);
  for (Elem t : seeds) {
    g.check_member(t);
    extend(g, s, t);
  }
  return s;
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s{Subset(g.order()), g.generators()};
  for (Elem e = 0; e < g.order(); ++e) s.elements.insert(e);
  return s;
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> seeds) {
  Subgroup s = subgroup_closure(g, seeds);
  const std::vector<Elem> xs = g.generators();
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    for (Elem x : xs) extend(g, s, g.conj(s.generators[i], x));
  }
  return s;
}

Subgroup commutator_with_group(const FiniteGroup& g, const Subgroup& a) {
  std::vector<Elem> seeds;
  for (Elem t : a.generators) {
    for (Elem x : g.generators()) seeds.push_back(g.comm(t, x));
  }
  return normal_closure(g, seeds);
}

Subgroup derived_subgroup(const FiniteGroup& g) { return commutator_with_group(g, whole_group(g)); }

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  for (;;) {
    Subgroup next = commutator_with_group(g, series.back());
    const bool stable = next.order() == series.back().order();
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

std::uint64_t p_group_prime(const FiniteGroup& g) { return prime_of_order(g.order()); }

Subgroup characteristic_subgroup(const FiniteGroup& g, CharacteristicKind kind, std::uint32_t j) {
  const std::uint64_t p = p_group_prime(g);
  if (p == 0) return trivial_subgroup(g);
  if (kind == CharacteristicKind::frattini) {
    Subgroup agemo = characteristic_subgroup(g, CharacteristicKind::agemo, 1);
    const Subgroup derived = derived_subgroup(g);
    for (Elem t : derived.generators) extend(g, agemo, t);
    return agemo;
  }
  if (j < 1) throw DomainError("omega/agemo index must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < j; ++i) q *= p;
  Subgroup s = trivial_subgroup(g);
  for (Elem e = 0; e < g.order(); ++e) {
    const Elem power = g.pow(e, static_cast<std::int64_t>(q));
    if (kind == CharacteristicKind::agemo) {
      extend(g, s, power);
    } else if (power == g.identity()) {
      extend(g, s, e);
    }
  }
  return s;
}

Subgroup frattini_subgroup(const FiniteGroup& g) { return characteristic_subgroup(g, CharacteristicKind::frattini); }

std::uint64_t element_order(const FiniteGroup& g, Elem e) {
  g.check_member(e);
  std::uint64_t m = 1;
  for (Elem x = e; x != g.identity(); x = g.mul(x, e)) ++m;
  return m;
}

std::uint64_t exponent(const FiniteGroup& g) { return exponent(g, whole_group(g)); }

std::uint64_t exponent(const FiniteGroup& g, const Subgroup& s) {
  std::uint64_t acc = 1;
  for (Elem e : s.elements.members()) acc = std::lcm(acc, element_order(g, e));
  return acc;
}

Subgroup centralizer(const FiniteGroup& g, Elem e) {
  g.check_member(e);
  Subgroup s{Subset(g.order()), {}};
  for (Elem h = 0; h < g.order(); ++h) {
    if (g.mul(h, e) == g.mul(e, h)) {
      s.elements.insert(h);
      s.generators.push_back(h);
    }
  }
  return s;
}

bool is_central(const FiniteGroup& g, const Subset& s) {
  const auto xs = g.generators();
  return std::all_of(s.members().begin(), s.members().end(), [&](Elem m) {
    return std::all_of(xs.begin(), xs.end(), [&](Elem x) { return g.mul(m, x) == g.mul(x, m); });
  });
}

bool is_normal(const FiniteGroup& g, const Subset& s) {
  const auto xs = g.generators();
  return std::all_of(s.members().begin(), s.members().end(), [&](Elem m) {
    return std::all_of(xs.begin(), xs.end(), [&](Elem x) { return s.contains(g.conj(m, x)); });
  });
}

std::vector<Elem> cyclic_subgroup(const FiniteGroup& g, Elem e) {
  g.check_member(e);
  std::vector<Elem> out{g.identity()};
  for (Elem x = e; x != g.identity(); x = g.mul(x, e)) out.push_back(x);
  return out;
}

// ---- Homomorphisms --------------------------------------------------------

Hom::Hom(std::vector<Elem> map, std::vector<Elem> generator_images, std::size_t image_order, std::size_t target_order)
    : map_(std::move(map)),
      images_(std::move(generator_images)),
      image_order_(image_order),
      target_order_(target_order) {}

std::ptrdiff_t first_failing_relator(const Presentation& pres, const FiniteGroup& target,
                                     std::span<const Elem> images) {
  if (images.size() != pres.rank()) throw DomainError("one image per generator required");
  std::vector<Elem> inverses;
  for (Elem e : images) {
    target.check_member(e);
    inverses.push_back(target.inv(e));
  }
  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    Elem acc = target.identity();
    for (Letter l : pres.relators[r].letters()) acc = target.mul(acc, l.inverted ? inverses[l.gen] : images[l.gen]);
    if (acc != target.identity()) return static_cast<std::ptrdiff_t>(r);
  }
  return -1;
}

Hom hom_from_images(const FiniteGroup& source, const FiniteGroup& target, std::span<const Elem> images) {
  if (images.size() != source.rank()) throw DomainError("one image per generator required");
  if (const auto& pres = source.presentation()) {
    const std::ptrdiff_t bad = first_failing_relator(*pres, target, images);
    if (bad >= 0) {
      const std::string text = format_word(pres->relators[static_cast<std::size_t>(bad)], pres->generator_names);
      throw HomRejected("relator " + text + " does not map to the identity", text);
    }
  }
  std::vector<Elem> letter_image(2 * source.rank());
  for (std::size_t i = 0; i < images.size(); ++i) {
    target.check_member(images[i]);
    letter_image[2 * i] = images[i];
    letter_image[2 * i + 1] = target.inv(images[i]);
  }
  std::vector<Elem> map(source.order(), target.identity());
  for (Elem e = 1; e < source.order(); ++e) {
    map[e] = target.mul(map[source.parent(e)], letter_image[source.last_letter(e).column()]);
  }
  // The map is well defined iff it respects every edge of the Cayley graph.
  for (Elem e = 0; e < source.order(); ++e) {
    for (std::size_t c = 0; c < letter_image.size(); ++c) {
      const Letter l = Letter::from_column(c);
      if (map[source.step(e, l)] != target.mul(map[e], letter_image[c])) {
        throw HomRejected("images do not define a homomorphism", "");
      }
    }
  }
  const std::size_t image_order = subgroup_closure(target, images).order();
  return Hom(std::move(map), std::vector<Elem>(images.begin(), images.end()), image_order, target.order());
}

Hom automorphism_from_images(const FiniteGroup& g, std::span<const Elem> images) {
  Hom h = hom_from_images(g, g, images);
  if (!h.surjective()) throw HomRejected("images do not generate the group", "");
  return h;
}

}  // namespace beauville
