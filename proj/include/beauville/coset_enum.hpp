#pragma once

// Todd-Coxeter coset enumeration over the trivial subgroup (HLT strategy).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "beauville/perm.hpp"
#include "beauville/presentation.hpp"

namespace beauville {

struct EnumerationLimits {
  /// Ceiling on cosets ever defined (live plus dead).
  std::size_t max_cosets = 2'000'000;
  /// Ceiling on the pending coincidence queue.
  std::size_t max_deductions = 10'000'000;
};

/// Honors BEAUVILLE_MAX_COSETS when set.
EnumerationLimits default_limits();

/// A complete coset table. Cosets are numbered 0..n-1 here; coset 0 is the
/// trivial subgroup itself, so n is the group order.
class CosetTable {
 public:
  CosetTable(std::size_t rank, std::size_t n_cosets, std::vector<std::uint32_t> table);

  std::size_t n_cosets() const noexcept { return n_; }
  std::size_t rank() const noexcept { return rank_; }
  /// Image of coset c under letter l.
  std::uint32_t image(std::uint32_t coset, Letter l) const { return table_[coset * 2 * rank_ + l.column()]; }
  /// Coset reached from `coset` by reading w.
  std::uint32_t trace(std::uint32_t coset, const Word& w) const;

  /// One line per coset, images in column order x, x^-1, y, y^-1, ... (1-based).
  std::string dump() const;
  /// High-water mark of cosets defined during the enumeration.
  std::size_t cosets_defined() const noexcept { return defined_; }
  void set_cosets_defined(std::size_t d) { defined_ = d; }

  bool operator==(const CosetTable& other) const { return rank_ == other.rank_ && table_ == other.table_; }

 private:
  std::size_t rank_;
  std::size_t n_;
  std::vector<std::uint32_t> table_;
  std::size_t defined_ = 0;
};

/// Enumerates the cosets of the trivial subgroup. Throws LimitExceeded when
/// the presented group is infinite or larger than the limits allow.
CosetTable enumerate(const Presentation& pres, const EnumerationLimits& limits = default_limits());

/// One permutation of {0..n-1} per generator. Throws StateError on an
/// incomplete table.
std::vector<Perm> permutation_rep(const CosetTable& table);

}  // namespace beauville
