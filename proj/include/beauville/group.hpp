#pragma once

// Finite groups as fully enumerated element tables.
//
// Every element is an index 0..n-1 in breadth-first order over the signed
// generators, so element 0 is the identity and each element carries a
// shortest defining word (generator order breaks ties). Right multiplication
// by a generator or its inverse is a table lookup; general products trace the
// defining word of the right factor.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "beauville/coset_enum.hpp"
#include "beauville/errors.hpp"
#include "beauville/perm.hpp"
#include "beauville/presentation.hpp"

namespace beauville {

using Elem = std::uint32_t;

/// Default ceiling on the number of elements of an enumerated group.
inline constexpr std::size_t kDefaultElementCeiling = 2'000'000;

class FiniteGroup {
 public:
  /// Raw construction from a BFS-ordered right-multiplication table with
  /// 2*rank columns; parent/letter describe the BFS tree. Prefer cayley_bfs.
  FiniteGroup(std::vector<std::string> generator_names, std::vector<Elem> table, std::vector<Elem> parent,
              std::vector<Letter> last_letter);

  std::size_t order() const noexcept { return parent_.size(); }
  std::size_t rank() const noexcept { return names_.size(); }
  const std::vector<std::string>& generator_names() const noexcept { return names_; }

  Elem identity() const noexcept { return 0; }
  Elem generator(std::size_t g) const { return step(0, Letter{static_cast<std::uint32_t>(g), false}); }
  std::vector<Elem> generators() const;

  Elem step(Elem e, Letter l) const { return table_[static_cast<std::size_t>(e) * 2 * rank() + l.column()]; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, std::int64_t n) const;
  /// g^-1 a g.
  Elem conj(Elem a, Elem g) const { return mul(mul(inv(g), a), g); }
  /// a^-1 b^-1 a b.
  Elem comm(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  /// Shortest defining word of e.
  Word word(Elem e) const;
  std::size_t word_length(Elem e) const { return length_[e]; }
  /// BFS tree: e = parent(e) * last_letter(e) for e != identity.
  Elem parent(Elem e) const { return parent_[e]; }
  Letter last_letter(Elem e) const { return last_letter_[e]; }
  Elem evaluate(const Word& w) const;
  std::string format(Elem e) const { return format_word(word(e), names_); }

  /// Throws DomainError when e is not an element index.
  void check_member(Elem e) const;

  /// The presentation this group was enumerated from, when known exactly.
  const std::optional<Presentation>& presentation() const noexcept { return presentation_; }
  void attach_presentation(Presentation pres);

 private:
  std::vector<std::string> names_;
  std::vector<Elem> table_;
  std::vector<Elem> parent_;
  std::vector<Letter> last_letter_;
  std::vector<std::uint32_t> length_;
  std::vector<Elem> inverse_;
  std::vector<Elem> mul_cache_;  // full Cayley table for small groups
  std::optional<Presentation> presentation_;
};

/// Element indices in BFS order, together with their concrete values.
template <class T, class Hasher>
struct ConcreteGroup {
  FiniteGroup group;
  std::vector<T> elements;
  std::unordered_map<T, Elem, Hasher> index;

  const T& element(Elem e) const { return elements.at(e); }
  /// Index of a concrete value; throws DomainError when absent.
  Elem find(const T& value) const {
    auto it = index.find(value);
    if (it == index.end()) throw DomainError("value is not an element of the group");
    return it->second;
  }
};

/// Breadth-first Cayley enumeration of the group generated by right actions
/// `step(value, letter)` starting from `identity`. Throws LimitExceeded once
/// more than `ceiling` elements are found.
template <class T, class Step, class Hasher>
ConcreteGroup<T, Hasher> cayley_bfs(const T& identity, std::vector<std::string> generator_names, Step step, Hasher hasher,
                            std::size_t ceiling = kDefaultElementCeiling) {
  const std::size_t cols = 2 * generator_names.size();
  std::vector<T> elements{identity};
  std::unordered_map<T, Elem, Hasher> index(1024, hasher);
  index.emplace(identity, 0);
  std::vector<Elem> table;
  std::vector<Elem> parent{0};
  std::vector<Letter> last{Letter{}};
  for (std::size_t e = 0; e < elements.size(); ++e) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Letter l = Letter::from_column(c);
      T next = step(elements[e], l);
      auto [it, inserted] = index.try_emplace(std::move(next), static_cast<Elem>(elements.size()));
      if (inserted) {
        if (elements.size() >= ceiling) throw LimitExceeded("group element ceiling exceeded", elements.size());
        elements.push_back(it->first);
        parent.push_back(static_cast<Elem>(e));
        last.push_back(l);
      }
      table.push_back(it->second);
    }
  }
  return ConcreteGroup<T, Hasher>{
      FiniteGroup(std::move(generator_names), std::move(table), std::move(parent), std::move(last)),
      std::move(elements), std::move(index)};
}

/// The group generated by the given permutations (cayley_elements).
ConcreteGroup<Perm, PermHash> cayley_elements(const std::vector<Perm>& generators, std::vector<std::string> generator_names = {},
                                    std::size_t ceiling = kDefaultElementCeiling);

/// The regular representation read off a complete coset table over the trivial
/// subgroup, relabelled in BFS order. Attaches the presentation.
FiniteGroup group_from_coset_table(const CosetTable& table, const Presentation& pres);

/// Convenience: enumerate and build.
FiniteGroup group_from_presentation(const Presentation& pres, const EnumerationLimits& limits = default_limits());

/// A set of elements of one group, with insertion-ordered member list.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : mask_(universe, 0) {}

  bool contains(Elem e) const { return e < mask_.size() && mask_[e] != 0; }
  bool insert(Elem e) {
    if (mask_.at(e)) return false;
    mask_[e] = 1;
    members_.push_back(e);
    return true;
  }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t universe() const noexcept { return mask_.size(); }
  const std::vector<Elem>& members() const noexcept { return members_; }
  /// Members in increasing element index (BFS word order).
  std::vector<Elem> sorted() const;

  bool subset_of(const Subset& other) const;
  Subset intersect(const Subset& other) const;
  Subset unite(const Subset& other) const;

  bool operator==(const Subset& other) const { return mask_ == other.mask_; }

 private:
  std::vector<std::uint8_t> mask_;
  std::vector<Elem> members_;
};

/// A subgroup as an explicit element set plus a generating list.
struct Subgroup {
  Subset elements;
  std::vector<Elem> generators;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(Elem e) const { return elements.contains(e); }
};

}  // namespace beauville
