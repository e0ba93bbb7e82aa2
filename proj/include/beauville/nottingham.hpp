#pragma once

// The Nottingham group over F_p through its finite quotients N/N_m, realized
// as normalized series at precision m.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "beauville/fp_series.hpp"
#include "beauville/group.hpp"

namespace beauville {

struct NottinghamGenerators {
  TruncSeries a;  // t (1 - t)^-1, depth 1
  TruncSeries b;  // t (1 - 2t^2)^-1/2, depth 2
};

/// The two order-p topological generators at precision M (M >= 3).
NottinghamGenerators nottingham_generators(std::uint32_t p, std::size_t precision);

using SeriesGroup = ConcreteGroup<TruncSeries, TruncSeriesHash>;

/// <a, b> in N/N_m, enumerated; generators are named "a" and "b".
SeriesGroup nottingham_quotient(std::uint32_t p, std::size_t m, std::size_t ceiling = kDefaultElementCeiling);

/// Elements of depth >= k, i.e. the image of N_k.
Subset depth_filter(const SeriesGroup& g, std::uint32_t k);

/// A subgroup of N/N_m stored as one element per occupied depth (an induced
/// polycyclic sequence for the filtration N_k, whose factors all have order p).
/// Its order is p^(number of occupied depths).
class EchelonSubgroup {
 public:
  EchelonSubgroup(std::uint32_t p, std::size_t m);

  /// Adds f and closes under products; with `normalizers` also closes under
  /// conjugation by them. Returns true when the subgroup grew.
  bool add(const TruncSeries& f, const std::vector<TruncSeries>& normalizers = {});
  bool contains(const TruncSeries& f) const;

  /// Depths k with an element of exact depth k, ascending.
  std::vector<std::uint32_t> depths() const;
  std::size_t log_order() const;
  std::vector<TruncSeries> generators() const;

 private:
  /// Reduces f against the table; the identity iff f is in the subgroup.
  TruncSeries sift(TruncSeries f) const;

  std::uint32_t p_;
  std::size_t m_;
  std::vector<std::optional<TruncSeries>> table_;  // indexed by depth
};

/// gamma_1 ⊇ gamma_2 ⊇ ... of N/N_m down to the trivial group, each term
/// computed as the normal closure of commutators of the previous term with a, b.
std::vector<EchelonSubgroup> nottingham_lower_central_series(std::uint32_t p, std::size_t m);

struct LcsRow {
  std::uint32_t j;
  std::uint32_t expected_index;   // r(j)
  std::uint32_t observed_index;   // least occupied depth of gamma_j (m when trivial)
  std::size_t expected_log_order;  // m - r(j)
  std::size_t observed_log_order;
  bool matches;
};

/// Compares gamma_j(N/N_m) against the depth filter N_r(j)/N_m for every
/// j >= 2 with r(j+1) <= m.
std::vector<LcsRow> check_lcs_formula(std::uint32_t p, std::size_t m);

/// Random element of exact depth d at precision M (d < M).
TruncSeries random_series_of_depth(std::uint32_t p, std::size_t precision, std::uint32_t d, std::mt19937_64& rng);

struct CommutatorDepthReport {
  std::size_t pairs = 0;
  std::size_t lower_bound_violations = 0;   // depth([f,g]) < depth f + depth g
  std::size_t strictness_violations = 0;    // congruent depths but no extra step
  std::size_t congruent_pairs = 0;
  std::size_t exact_when_incongruent = 0;   // measurable incongruent pairs hitting equality
  std::size_t measurable_incongruent = 0;
  std::size_t composition_violations = 0;   // depth(fg) < min(depth f, depth g)
};

/// Random pairs of elements with depths in [1, (M-1)/2].
CommutatorDepthReport check_commutator_depths(std::uint32_t p, std::size_t precision, std::size_t pairs,
                                              std::uint64_t seed);

}  // namespace beauville
