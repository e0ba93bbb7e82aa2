#include "beauville/coset_enum.hpp"

#include <cstdlib>
#include <sstream>

#include "beauville/errors.hpp"

namespace beauville {

EnumerationLimits default_limits() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("BEAUVILLE_MAX_COSETS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limits.max_cosets = static_cast<std::size_t>(v);
  }
  return limits;
}

CosetTable::CosetTable(std::size_t rank, std::size_t n_cosets, std::vector<std::uint32_t> table)
    : rank_(rank), n_(n_cosets), table_(std::move(table)) {
  if (table_.size() != n_ * 2 * rank_) throw DomainError("coset table has the wrong shape");
}

std::uint32_t CosetTable::trace(std::uint32_t coset, const Word& w) const {
  for (Letter l : w.letters()) coset = image(coset, l);
  return coset;
}

std::string CosetTable::dump() const {
  std::ostringstream os;
  const std::size_t cols = 2 * rank_;
  for (std::size_t c = 0; c < n_; ++c) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) os << ' ';
      os << (table_[c * cols + j] + 1);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

// HLT enumeration with union-find coincidence processing. Cosets are 1-based
// internally; 0 marks an undefined entry.
class Enumerator {
 public:
  Enumerator(const Presentation& pres, const EnumerationLimits& limits)
      : cols_(2 * pres.rank()), limits_(limits) {
    for (const Word& r : pres.relators) {
      std::vector<std::uint32_t> cols;
      cols.reserve(r.size());
      for (Letter l : r.letters()) cols.push_back(static_cast<std::uint32_t>(l.column()));
      relators_.push_back(std::move(cols));
    }
    table_.assign(2 * cols_, 0);  // row 0 unused, row 1 is the subgroup
    parent_ = {0, 1};
  }

  CosetTable run() {
    for (std::uint32_t alpha = 1; alpha <= defined_; ++alpha) {
      if (parent_[alpha] != alpha) continue;
      for (const auto& r : relators_) {
        if (parent_[alpha] != alpha) break;
        scan_and_fill(alpha, r);
      }
      if (parent_[alpha] != alpha) continue;
      for (std::uint32_t x = 0; x < cols_; ++x) {
        if (at(alpha, x) == 0) define(alpha, x);
      }
    }
    return compact();
  }

 private:
  std::uint32_t& at(std::uint32_t c, std::uint32_t col) { return table_[static_cast<std::size_t>(c) * cols_ + col]; }

  void define(std::uint32_t c, std::uint32_t x) {
    if (defined_ >= limits_.max_cosets) {
      throw LimitExceeded("coset limit of " + std::to_string(limits_.max_cosets) + " exceeded", defined_);
    }
    const auto d = static_cast<std::uint32_t>(++defined_);
    table_.resize(table_.size() + cols_, 0);
    parent_.push_back(d);
    at(c, x) = d;
    at(d, x ^ 1U) = c;
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::uint32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    const std::uint32_t lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = lo;
    queue_.push_back(hi);
    if (queue_.size() > limits_.max_deductions) {
      throw LimitExceeded("coincidence queue limit exceeded", queue_.size());
    }
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::uint32_t gamma = queue_[i];
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const std::uint32_t delta = at(gamma, x);
        if (delta == 0) continue;
        at(delta, x ^ 1U) = 0;
        const std::uint32_t mu = rep(gamma);
        const std::uint32_t nu = rep(delta);
        if (at(mu, x) != 0) {
          merge(nu, at(mu, x));
        } else if (at(nu, x ^ 1U) != 0) {
          merge(mu, at(nu, x ^ 1U));
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1U) = mu;
        }
      }
    }
  }

  void scan_and_fill(std::uint32_t alpha, const std::vector<std::uint32_t>& w) {
    if (w.empty()) return;
    std::uint32_t f = alpha, b = alpha;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i..j)
    for (;;) {
      while (i < j && at(f, w[i]) != 0) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1U) != 0) b = at(b, w[--j] ^ 1U);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1U) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  CosetTable compact() {
    std::vector<std::uint32_t> index(defined_ + 1, 0);
    std::uint32_t n = 0;
    for (std::uint32_t c = 1; c <= defined_; ++c) {
      if (parent_[c] == c) index[c] = n++;
    }
    std::vector<std::uint32_t> out(static_cast<std::size_t>(n) * cols_);
    for (std::uint32_t c = 1; c <= defined_; ++c) {
      if (parent_[c] != c) continue;
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const std::uint32_t d = at(c, x);
        if (d == 0) throw StateError("coset enumeration left an undefined entry");
        out[static_cast<std::size_t>(index[c]) * cols_ + x] = index[rep(d)];
      }
    }
    CosetTable table(cols_ / 2, n, std::move(out));
    table.set_cosets_defined(defined_);
    return table;
  }

  std::uint32_t cols_;
  EnumerationLimits limits_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> queue_;
  std::size_t defined_ = 1;
};

}  // namespace

CosetTable enumerate(const Presentation& pres, const EnumerationLimits& limits) {
  pres.validate();
  if (limits.max_cosets < 1) throw DomainError("max_cosets must be at least 1");
  return Enumerator(pres, limits).run();
}

std::vector<Perm> permutation_rep(const CosetTable& table) {
  std::vector<Perm> perms;
  const std::size_t n = table.n_cosets();
  for (std::uint32_t g = 0; g < table.rank(); ++g) {
    std::vector<std::uint32_t> images(n);
    for (std::uint32_t c = 0; c < n; ++c) {
      const std::uint32_t d = table.image(c, Letter{g, false});
      if (d >= n || table.image(d, Letter{g, true}) != c) {
        throw StateError("coset table is incomplete or inconsistent");
      }
      images[c] = d;
    }
    perms.emplace_back(std::move(images));
  }
  return perms;
}

}  // namespace beauville
