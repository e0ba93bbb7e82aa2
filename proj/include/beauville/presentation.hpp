#pragma once

// Words over signed generators, finite presentations, and the text grammar
//
//   presentation := "<" genlist "|" relatorlist ">"
//   genlist      := name ("," name)*
//   relatorlist  := <empty> | relator ("," relator)*
//   relator      := term+
//   term         := name | name "^" int | "(" relator ")" "^" int
//                 | "[" relator ("," relator)+ "]" | name "^-1"
//
// Brackets are left-normed commutators, [a,b] = a^-1 b^-1 a b.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace beauville {

/// A generator or its inverse. Column 2g is g, column 2g+1 is g^-1.
struct Letter {
  std::uint32_t gen = 0;
  bool inverted = false;

  constexpr Letter inverse() const { return {gen, !inverted}; }
  constexpr std::size_t column() const { return 2 * static_cast<std::size_t>(gen) + (inverted ? 1 : 0); }
  static constexpr Letter from_column(std::size_t column) {
    return {static_cast<std::uint32_t>(column / 2), (column % 2) == 1};
  }

  bool operator==(const Letter&) const = default;
};

/// A freely reduced word; the empty word is the identity.
class Word {
 public:
  Word() = default;
  /// Freely reduces the given letters.
  explicit Word(std::span<const Letter> letters);

  static Word generator(std::uint32_t gen);
  static Word letter(Letter l);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word pow(std::int64_t n) const;
  /// Largest generator index + 1, or 0 for the empty word.
  std::uint32_t generator_bound() const;

  Word operator*(const Word& other) const;
  Word& operator*=(const Word& other);

  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// [w1, w2] = w1^-1 w2^-1 w1 w2.
Word commutator(const Word& a, const Word& b);
/// Left-normed [w1, ..., wn] = [[w1, ..., w(n-1)], wn]; needs n >= 2.
Word expand_commutator(std::span<const Word> args);

/// Letterwise g^e -> g^-e: the endomorphism sending every generator to its inverse.
Word inversion_images(const Word& w);

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  std::size_t rank() const noexcept { return generator_names.size(); }
  /// Throws DomainError unless relators are nonempty and use known generators.
  void validate() const;
};

Presentation parse_presentation(std::string_view text);
/// Parses a single word (possibly empty) over the given generator names.
Word parse_word(std::string_view text, std::span<const std::string> generator_names);

/// Syllable form, e.g. "x^-1 y^2 x"; the empty word prints as "".
std::string format_word(const Word& w, std::span<const std::string> generator_names);
std::string format_presentation(const Presentation& pres);

/// All left-normed commutators [g1, ..., g_weight] of generators x=0, y=1 with
/// g1 != g2, in lexicographic order of (g1, ..., g_weight), before any dedupe.
std::vector<Word> left_normed_generator_commutators(std::size_t weight);

/// <x, y | x^p, y^p, weight-(c+1) left-normed commutators>, the defining
/// presentation of F / gamma_(c+1)(F) for F = C_p * C_p. Relators that reduce
/// to the empty word, or equal an earlier relator or its inverse, are dropped.
Presentation gamma_quotient_presentation(std::uint32_t p, std::uint32_t c);

}  // namespace beauville
