#pragma once

// Subgroup closures, characteristic subgroups, element orders and
// homomorphisms given by generator images, all on explicit element tables.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "beauville/group.hpp"

namespace beauville {

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> seeds);
/// Smallest normal subgroup containing the seeds.
Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> seeds);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);

/// gamma_1 = G, gamma_(j+1) = [gamma_j, G], down to the first term that
/// repeats (the trivial group for nilpotent G). The last entry is that term.
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);

/// [A, G] for a normal subgroup A.
Subgroup commutator_with_group(const FiniteGroup& g, const Subgroup& a);
Subgroup derived_subgroup(const FiniteGroup& g);

/// The prime p when |G| is a power of p, 0 for the trivial group.
/// Throws DomainError otherwise.
std::uint64_t p_group_prime(const FiniteGroup& g);

enum class CharacteristicKind { frattini, omega, agemo };

/// Frattini subgroup G^p [G,G] (p-groups only), Omega_j = <g : g^(p^j) = 1>
/// or agemo_j = <g^(p^j)>. `j` is ignored for the Frattini subgroup.
Subgroup characteristic_subgroup(const FiniteGroup& g, CharacteristicKind kind, std::uint32_t j = 1);
Subgroup frattini_subgroup(const FiniteGroup& g);

std::uint64_t element_order(const FiniteGroup& g, Elem e);
std::uint64_t exponent(const FiniteGroup& g);
/// Exponent of a subgroup: lcm of its element orders.
std::uint64_t exponent(const FiniteGroup& g, const Subgroup& s);
Subgroup centralizer(const FiniteGroup& g, Elem e);
/// True when every element of s commutes with every generator of G.
bool is_central(const FiniteGroup& g, const Subset& s);
bool is_normal(const FiniteGroup& g, const Subset& s);
/// The cyclic subgroup <e> as elements e^0, e^1, ...
std::vector<Elem> cyclic_subgroup(const FiniteGroup& g, Elem e);

/// Raised when generator images do not define a homomorphism.
class HomRejected : public Error {
 public:
  HomRejected(const std::string& what, std::string failing_relator)
      : Error(what), failing_relator_(std::move(failing_relator)) {}
  const std::string& failing_relator() const noexcept { return failing_relator_; }

 private:
  std::string failing_relator_;
};

/// A homomorphism between enumerated groups, materialized on every element.
class Hom {
 public:
  Hom(std::vector<Elem> map, std::vector<Elem> generator_images, std::size_t image_order, std::size_t target_order);

  Elem operator()(Elem e) const { return map_.at(e); }
  const std::vector<Elem>& map() const noexcept { return map_; }
  const std::vector<Elem>& generator_images() const noexcept { return images_; }
  std::size_t image_order() const noexcept { return image_order_; }
  bool surjective() const noexcept { return image_order_ == target_order_; }
  bool injective() const noexcept { return image_order_ == map_.size(); }

 private:
  std::vector<Elem> map_;
  std::vector<Elem> images_;
  std::size_t image_order_;
  std::size_t target_order_;
};

/// Index of the first relator of `pres` that does not evaluate to the
/// identity under the images, or -1 when all hold.
std::ptrdiff_t first_failing_relator(const Presentation& pres, const FiniteGroup& target, std::span<const Elem> images);

/// Checks the source presentation (when attached) and the full Cayley-graph
/// consistency of the induced map, then materializes it. Throws HomRejected.
Hom hom_from_images(const FiniteGroup& source, const FiniteGroup& target, std::span<const Elem> images);

/// As hom_from_images with target = source, additionally requiring the map to
/// be onto (hence bijective).
Hom automorphism_from_images(const FiniteGroup& g, std::span<const Elem> images);

}  // namespace beauville
