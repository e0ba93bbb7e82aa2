#include "beauville/group.hpp"

#include <algorithm>

namespace beauville {

namespace {
constexpr std::size_t kMulCacheLimit = 2048;
}

FiniteGroup::FiniteGroup(std::vector<std::string> generator_names, std::vector<Elem> table, std::vector<Elem> parent,
                         std::vector<Letter> last_letter)
    : names_(std::move(generator_names)),
      table_(std::move(table)),
      parent_(std::move(parent)),
      last_letter_(std::move(last_letter)) {
  const std::size_t n = parent_.size();
  if (n == 0 || table_.size() != n * 2 * rank() || last_letter_.size() != n) {
    throw DomainError("inconsistent group table");
  }
  length_.assign(n, 0);
  for (std::size_t e = 1; e < n; ++e) length_[e] = length_[parent_[e]] + 1;

  inverse_.assign(n, 0);
  for (Elem e = 1; e < n; ++e) {
    // e = l1 ... lk, so e^-1 = lk^-1 ... l1^-1: walk the BFS tree upwards.
    Elem acc = 0;
    for (Elem cur = e; cur != 0; cur = parent_[cur]) acc = step(acc, last_letter_[cur].inverse());
    inverse_[e] = acc;
  }

  if (n <= kMulCacheLimit) {
    mul_cache_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      mul_cache_[a * n] = static_cast<Elem>(a);
      for (std::size_t b = 1; b < n; ++b) {
        mul_cache_[a * n + b] = step(mul_cache_[a * n + parent_[b]], last_letter_[b]);
      }
    }
  }
}

std::vector<Elem> FiniteGroup::generators() const {
  std::vector<Elem> g;
  for (std::size_t i = 0; i < rank(); ++i) g.push_back(generator(i));
  return g;
}

Elem FiniteGroup::mul(Elem a, Elem b) const {
  const std::size_t n = order();
  if (!mul_cache_.empty()) return mul_cache_[a * n + b];
  Letter buf[64];
  std::vector<Letter> heap;
  Letter* letters = buf;
  const std::size_t len = length_[b];
  if (len > 64) {
    heap.resize(len);
    letters = heap.data();
  }
  std::size_t i = len;
  for (Elem cur = b; cur != 0; cur = parent_[cur]) letters[--i] = last_letter_[cur];
  for (std::size_t j = 0; j < len; ++j) a = step(a, letters[j]);
  return a;
}

Elem FiniteGroup::pow(Elem a, std::int64_t n) const {
  Elem base = n < 0 ? inv(a) : a;
  auto e = static_cast<std::uint64_t>(n < 0 ? -n : n);
  Elem result = 0;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Word FiniteGroup::word(Elem e) const {
  check_member(e);
  std::vector<Letter> letters(length_[e]);
  std::size_t i = letters.size();
  for (Elem cur = e; cur != 0; cur = parent_[cur]) letters[--i] = last_letter_[cur];
  return Word(letters);
}

Elem FiniteGroup::evaluate(const Word& w) const {
  if (w.generator_bound() > rank()) throw DomainError("word uses a generator outside the group");
  Elem e = 0;
  for (Letter l : w.letters()) e = step(e, l);
  return e;
}

void FiniteGroup::check_member(Elem e) const {
  if (e >= order()) throw DomainError("element index " + std::to_string(e) + " is not in a group of order " +
                                      std::to_string(order()));
}

void FiniteGroup::attach_presentation(Presentation pres) {
  if (pres.rank() != rank()) throw DomainError("presentation rank does not match the group");
  presentation_ = std::move(pres);
}

ConcreteGroup<Perm, PermHash> cayley_elements(const std::vector<Perm>& generators, std::vector<std::string> names,
                                              std::size_t ceiling) {
  if (generators.empty()) throw DomainError("need at least one generator");
  const std::size_t degree = generators.front().degree();
  std::vector<Perm> inverses;
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw DomainError("generators have different degrees");
    inverses.push_back(g.inverse());
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < generators.size(); ++i) names.push_back("g" + std::to_string(i + 1));
  }
  if (names.size() != generators.size()) throw DomainError("one name per generator required");
  return cayley_bfs(
      Perm::identity(degree), std::move(names),
      [&](const Perm& p, Letter l) { return p * (l.inverted ? inverses[l.gen] : generators[l.gen]); }, PermHash{},
      ceiling);
}

FiniteGroup group_from_coset_table(const CosetTable& table, const Presentation& pres) {
  if (pres.rank() != table.rank()) throw DomainError("presentation rank does not match the coset table");
  auto concrete = cayley_bfs(
      std::uint32_t{0}, pres.generator_names,
      [&](std::uint32_t c, Letter l) { return table.image(c, l); }, std::hash<std::uint32_t>{},
      table.n_cosets() + 1);
  if (concrete.group.order() != table.n_cosets()) throw StateError("coset table is not transitive");
  FiniteGroup g = std::move(concrete.group);
  g.attach_presentation(pres);
  return g;
}

FiniteGroup group_from_presentation(const Presentation& pres, const EnumerationLimits& limits) {
  return group_from_coset_table(enumerate(pres, limits), pres);
}

// ---- Subset ---------------------------------------------------------------

std::vector<Elem> Subset::sorted() const {
  std::vector<Elem> out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

bool Subset::subset_of(const Subset& other) const {
  return std::all_of(members_.begin(), members_.end(), [&](Elem e) { return other.contains(e); });
}

Subset Subset::intersect(const Subset& other) const {
  Subset out(universe());
  for (Elem e : sorted()) {
    if (other.contains(e)) out.insert(e);
  }
  return out;
}

Subset Subset::unite(const Subset& other) const {
  Subset out(std::max(universe(), other.universe()));
  for (Elem e : members_) out.insert(e);
  for (Elem e : other.members_) out.insert(e);
  return out;
}

}  // namespace beauville
