#include "beauville/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "beauville/errors.hpp"

namespace beauville {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

// ---- Word -----------------------------------------------------------------

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) push_reduced(letters_, l);
}

Word Word::generator(std::uint32_t gen) { return letter(Letter{gen, false}); }

Word Word::letter(Letter l) {
  Word w;
  w.letters_.push_back(l);
  return w;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

Word Word::pow(std::int64_t n) const {
  const Word base = n < 0 ? inverse() : *this;
  Word out;
  for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) out *= base;
  return out;
}

std::uint32_t Word::generator_bound() const {
  std::uint32_t bound = 0;
  for (Letter l : letters_) bound = std::max(bound, l.gen + 1);
  return bound;
}

Word Word::operator*(const Word& other) const {
  Word out(*this);
  out *= other;
  return out;
}

Word& Word::operator*=(const Word& other) {
  for (Letter l : other.letters_) push_reduced(letters_, l);
  return *this;
}

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

Word expand_commutator(std::span<const Word> args) {
  if (args.size() < 2) throw DomainError("commutator needs at least two arguments");
  Word acc = args[0];
  for (std::size_t i = 1; i < args.size(); ++i) acc = commutator(acc, args[i]);
  return acc;
}

Word inversion_images(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (Letter l : w.letters()) letters.push_back(l.inverse());
  return Word(letters);
}

// ---- Presentation ---------------------------------------------------------

void Presentation::validate() const {
  if (generator_names.empty()) throw DomainError("presentation needs at least one generator");
  for (std::size_t i = 0; i < relators.size(); ++i) {
    if (relators[i].empty()) throw DomainError("relator " + std::to_string(i + 1) + " is empty");
    if (relators[i].generator_bound() > rank()) {
      throw DomainError("relator " + std::to_string(i + 1) + " uses an unknown generator");
    }
  }
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  std::ostringstream os;
  const auto& ls = w.letters();
  std::size_t i = 0;
  bool first = true;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const auto run = static_cast<std::int64_t>(j - i);
    if (!first) os << ' ';
    first = false;
    os << names[ls[i].gen];
    const std::int64_t e = ls[i].inverted ? -run : run;
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

std::string format_presentation(const Presentation& pres) {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < pres.generator_names.size(); ++i) {
    if (i) os << ", ";
    os << pres.generator_names[i];
  }
  os << " |";
  for (std::size_t i = 0; i < pres.relators.size(); ++i) {
    os << (i ? ", " : " ") << format_word(pres.relators[i], pres.generator_names);
  }
  os << " >";
  return os.str();
}

// ---- Parser ---------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation presentation() {
    Presentation pres;
    expect('<');
    do {
      pres.generator_names.push_back(name());
      const auto& n = pres.generator_names.back();
      if (std::count(pres.generator_names.begin(), pres.generator_names.end(), n) > 1) {
        fail("duplicate generator '" + n + "'");
      }
    } while (accept(','));
    names_ = pres.generator_names;
    expect('|');
    if (!peek_is('>')) {
      do {
        skip_space();
        const std::size_t line = line_, col = col_;
        Word r = relator();
        if (r.empty()) throw ParseError("empty relator", line, col);
        pres.relators.push_back(std::move(r));
      } while (accept(','));
    }
    expect('>');
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return pres;
  }

  Word word_only(std::span<const std::string> names) {
    names_.assign(names.begin(), names.end());
    skip_space();
    if (pos_ == text_.size()) return {};
    Word w = relator();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return w;
  }

 private:
  Word relator() {
    Word w;
    w *= term();
    while (starts_term()) w *= term();
    return w;
  }

  bool starts_term() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == '[' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Word term() {
    skip_space();
    Word base;
    bool needs_exponent = false;
    if (accept('(')) {
      base = relator();
      expect(')');
      needs_exponent = true;
    } else if (accept('[')) {
      std::vector<Word> args;
      args.push_back(relator());
      if (!peek_is(',')) fail("commutator needs at least two entries");
      while (accept(',')) args.push_back(relator());
      expect(']');
      base = expand_commutator(args);
    } else {
      const std::size_t line = line_, col = col_;
      const std::string n = name();
      const auto it = std::find(names_.begin(), names_.end(), n);
      if (it == names_.end()) throw ParseError("unknown generator '" + n + "'", line, col);
      base = Word::generator(static_cast<std::uint32_t>(it - names_.begin()));
    }
    if (accept('^')) return base.pow(integer());
    if (needs_exponent) fail("parenthesized group needs an exponent");
    return base;
  }

  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        advance();
      }
    }
    if (pos_ == start) fail("expected a generator name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) advance();
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    std::int64_t value = 0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
      pos_ = start;
      fail("expected an integer exponent");
    }
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0U) != 0x80U) {
      ++col_;
    }
    ++pos_;
  }

  bool peek_is(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek_is(c)) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, line_, col_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::vector<std::string> names_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

Word parse_word(std::string_view text, std::span<const std::string> generator_names) {
  return Parser(text).word_only(generator_names);
}

// ---- Lower central quotients of C_p * C_p ---------------------------------

std::vector<Word> left_normed_generator_commutators(std::size_t weight) {
  if (weight < 2) throw DomainError("commutator weight must be at least 2");
  if (weight > 24) throw LimitExceeded("commutator weight too large to expand", weight);
  std::vector<Word> out;
  const std::uint64_t count = std::uint64_t{1} << weight;
  std::vector<Word> args(weight);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    // Bit (weight-1-j) selects g_j, so masks run in lexicographic order.
    for (std::size_t j = 0; j < weight; ++j) {
      args[j] = Word::generator(static_cast<std::uint32_t>((mask >> (weight - 1 - j)) & 1U));
    }
    if (args[0] == args[1]) continue;
    out.push_back(expand_commutator(args));
  }
  return out;
}

Presentation gamma_quotient_presentation(std::uint32_t p, std::uint32_t c) {
  if (p < 3 || p % 2 == 0) throw DomainError("p must be an odd prime");
  if (c < 1) throw DomainError("class bound c must be at least 1");
  Presentation pres;
  pres.generator_names = {"x", "y"};
  pres.relators.push_back(Word::generator(0).pow(p));
  pres.relators.push_back(Word::generator(1).pow(p));
  for (Word& w : left_normed_generator_commutators(c + 1)) {
    if (w.empty()) continue;
    const Word winv = w.inverse();
    const bool seen = std::any_of(pres.relators.begin(), pres.relators.end(),
                                  [&](const Word& r) { return r == w || r == winv; });
    if (!seen) pres.relators.push_back(std::move(w));
  }
  return pres;
}

}  // namespace beauville
