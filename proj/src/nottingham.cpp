#include "beauville/nottingham.hpp"

#include <deque>

#include "beauville/errors.hpp"

namespace beauville {

NottinghamGenerators nottingham_generators(std::uint32_t p, std::size_t precision) {
  if (precision < 3) throw DomainError("Nottingham generators need precision >= 3");
  // a(t) = t + t^2 + t^3 + ...
  TruncSeries a = TruncSeries::from_coefficients(p, std::vector<std::uint32_t>(precision, 1));
  // b(t) = t * (1 - 2t^2)^(-1/2)
  PowerSeries s = PowerSeries::constant(p, precision - 1, 1);
  s.set(2, -2);
  const PowerSeries g = inv_sqrt(s);
  std::vector<std::uint32_t> c(g.coefficients().begin(), g.coefficients().end());
  TruncSeries b = TruncSeries::from_coefficients(p, std::move(c));
  return {std::move(a), std::move(b)};
}

SeriesGroup nottingham_quotient(std::uint32_t p, std::size_t m, std::size_t ceiling) {
  const auto gens = nottingham_generators(p, m);
  const std::vector<TruncSeries> letters{gens.a, inverse(gens.a), gens.b, inverse(gens.b)};
  return cayley_bfs(
      TruncSeries::identity(p, m), {"a", "b"},
      [&](const TruncSeries& f, Letter l) { return f * letters[l.column()]; }, TruncSeriesHash{}, ceiling);
}

Subset depth_filter(const SeriesGroup& g, std::uint32_t k) {
  Subset s(g.group.order());
  for (Elem e = 0; e < g.group.order(); ++e) {
    if (g.element(e).depth() >= Depth(k)) s.insert(e);
  }
  return s;
}

// ---- EchelonSubgroup ------------------------------------------------------

EchelonSubgroup::EchelonSubgroup(std::uint32_t p, std::size_t m) : p_(p), m_(m), table_(m) {
  if (m < 2) throw DomainError("quotient precision must be at least 2");
}

TruncSeries EchelonSubgroup::sift(TruncSeries f) const {
  while (!f.is_identity()) {
    const std::uint32_t k = f.depth().value();
    const auto& pivot = table_[k];
    if (!pivot) break;
    // Leading coefficients add on N_k / N_(k+1).
    const std::uint32_t c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(f.leading_coefficient()) *
                                                       inverse_mod(pivot->leading_coefficient(), p_) % p_);
    f = f * power(*pivot, -static_cast<std::int64_t>(c));
  }
  return f;
}

bool EchelonSubgroup::contains(const TruncSeries& f) const { return sift(f).is_identity(); }

bool EchelonSubgroup::add(const TruncSeries& f, const std::vector<TruncSeries>& normalizers) {
  if (f.p() != p_ || f.precision() != m_) throw DomainError("series does not live in this quotient");
  std::deque<TruncSeries> pending{f};
  bool grew = false;
  while (!pending.empty()) {
    TruncSeries h = sift(pending.front());
    pending.pop_front();
    if (h.is_identity()) continue;
    grew = true;
    const std::uint32_t k = h.depth().value();
    table_[k] = h;
    // Closure: p-th power, commutators with every entry, conjugation by the normalizers.
    pending.push_back(power(h, p_));
    for (const auto& e : table_) {
      if (e) pending.push_back(commutator(h, *e));
    }
    for (const auto& x : normalizers) pending.push_back(commutator(h, x));
  }
  return grew;
}

std::vector<std::uint32_t> EchelonSubgroup::depths() const {
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < table_.size(); ++k) {
    if (table_[k]) out.push_back(static_cast<std::uint32_t>(k));
  }
  return out;
}

std::size_t EchelonSubgroup::log_order() const { return depths().size(); }

std::vector<TruncSeries> EchelonSubgroup::generators() const {
  std::vector<TruncSeries> out;
  for (const auto& e : table_) {
    if (e) out.push_back(*e);
  }
  return out;
}

std::vector<EchelonSubgroup> nottingham_lower_central_series(std::uint32_t p, std::size_t m) {
  const auto gens = nottingham_generators(p, m);
  const std::vector<TruncSeries> xs{gens.a, gens.b};
  std::vector<EchelonSubgroup> series;
  EchelonSubgroup whole(p, m);
  whole.add(gens.a, xs);
  whole.add(gens.b, xs);
  series.push_back(std::move(whole));
  while (series.back().log_order() > 0) {
    EchelonSubgroup next(p, m);
    for (const auto& t : series.back().generators()) {
      for (const auto& x : xs) next.add(commutator(t, x), xs);
    }
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<LcsRow> check_lcs_formula(std::uint32_t p, std::size_t m) {
  const auto series = nottingham_lower_central_series(p, m);
  std::vector<LcsRow> rows;
  for (std::uint32_t j = 2; lcs_index(j + 1, p) <= m; ++j) {
    LcsRow row{};
    row.j = j;
    row.expected_index = lcs_index(j, p);
    row.expected_log_order = m - row.expected_index;
    if (j - 1 < series.size()) {
      const auto d = series[j - 1].depths();
      row.observed_index = d.empty() ? static_cast<std::uint32_t>(m) : d.front();
      row.observed_log_order = d.size();
    } else {
      row.observed_index = static_cast<std::uint32_t>(m);
      row.observed_log_order = 0;
    }
    // Occupying every depth from r(j) up is the same as equalling the filter.
    row.matches = row.observed_index == row.expected_index && row.observed_log_order == row.expected_log_order;
    rows.push_back(row);
  }
  return rows;
}

TruncSeries random_series_of_depth(std::uint32_t p, std::size_t precision, std::uint32_t d, std::mt19937_64& rng) {
  if (d < 1 || d >= precision) throw DomainError("depth out of range for this precision");
  std::uniform_int_distribution<std::uint32_t> any(0, p - 1), nonzero(1, p - 1);
  std::vector<std::uint32_t> c(precision, 0);
  c[0] = 1;
  c[d] = nonzero(rng);  // a_(d+1)
  for (std::size_t i = d + 1; i < precision; ++i) c[i] = any(rng);
  return TruncSeries::from_coefficients(p, std::move(c));
}

CommutatorDepthReport check_commutator_depths(std::uint32_t p, std::size_t precision, std::size_t pairs,
                                              std::uint64_t seed) {
  if (precision < 3) throw DomainError("precision too small for commutator checks");
  std::mt19937_64 rng(seed);
  const auto max_depth = static_cast<std::uint32_t>(std::max<std::size_t>(1, (precision - 1) / 2));
  std::uniform_int_distribution<std::uint32_t> depth_dist(1, max_depth);
  CommutatorDepthReport report;
  for (std::size_t n = 0; n < pairs; ++n) {
    const std::uint32_t k = depth_dist(rng), l = depth_dist(rng);
    const TruncSeries f = random_series_of_depth(p, precision, k, rng);
    const TruncSeries g = random_series_of_depth(p, precision, l, rng);
    ++report.pairs;
    if ((f * g).depth() < Depth(std::min(k, l))) ++report.composition_violations;
    const Depth d = commutator(f, g).depth();
    if (d < Depth(k + l)) ++report.lower_bound_violations;
    if (k % p == l % p) {
      ++report.congruent_pairs;
      if (d < Depth(k + l + 1)) ++report.strictness_violations;
    } else if (k + l < precision) {
      ++report.measurable_incongruent;
      if (d == Depth(k + l)) ++report.exact_when_incongruent;
    }
  }
  return report;
}

}  // namespace beauville
