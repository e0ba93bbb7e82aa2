#include "beauville/maximal_class.hpp"

#include <algorithm>

#include "beauville/errors.hpp"
#include "beauville/fp_series.hpp"

namespace beauville {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint32_t ceil_div(std::int64_t a, std::int64_t b) {
  if (a <= 0) return 0;
  return static_cast<std::uint32_t>((a + b - 1) / b);
}

}  // namespace

CyclotomicRing::CyclotomicRing(std::uint32_t p, std::uint32_t i) : p_(p), i_(i) {
  if (p < 3 || !is_prime(p)) throw DomainError("p must be an odd prime");
  if (i < 2) throw DomainError("maximal class quotient needs i >= 2");
  const std::uint32_t e0 = ceil_div(i, p - 1);
  work_modulus_ = ipow(p, e0);
  if (work_modulus_ >= (std::uint64_t{1} << 31)) throw LimitExceeded("cyclotomic precision too large", i);
  const std::uint32_t d = std::min(i, p - 1);
  for (std::uint32_t m = 0; m < d; ++m) moduli_.push_back(ipow(p, ceil_div(static_cast<std::int64_t>(i) - m, p - 1)));
  // C(p, m+1) for m = 0..p-2, from the row of Pascal's triangle mod the work modulus.
  std::vector<std::uint64_t> row{1};
  for (std::uint32_t n = 1; n <= p; ++n) {
    std::vector<std::uint64_t> next(n + 1, 1);
    for (std::uint32_t k = 1; k < n; ++k) next[k] = (row[k - 1] + row[k]) % work_modulus_;
    row = std::move(next);
  }
  for (std::uint32_t m = 0; m + 1 < p; ++m) binom_.push_back(row[m + 1]);
  zeta_ = add(one(), pi());
}

CyclotomicElt CyclotomicRing::zero() const { return {std::vector<std::uint64_t>(dimension(), 0)}; }

CyclotomicElt CyclotomicRing::one() const { return from_int(1); }

CyclotomicElt CyclotomicRing::pi() const {
  CyclotomicElt e = zero();
  e.coeffs[1] = 1 % moduli_[1];
  return e;
}

CyclotomicElt CyclotomicRing::from_int(std::int64_t v) const {
  CyclotomicElt e = zero();
  const auto m = static_cast<std::int64_t>(moduli_[0]);
  e.coeffs[0] = static_cast<std::uint64_t>(((v % m) + m) % m);
  return e;
}

CyclotomicElt CyclotomicRing::reduce(std::vector<std::uint64_t> wide) const {
  // pi^(p-1) = -sum_{m=0}^{p-2} C(p, m+1) pi^m, applied from the top degree down.
  const std::size_t top = p_ - 1;
  for (std::size_t n = wide.size(); n-- > top;) {
    const std::uint64_t c = wide[n] % work_modulus_;
    if (c == 0) continue;
    wide[n] = 0;
    for (std::size_t m = 0; m < top; ++m) {
      const std::uint64_t t = c * binom_[m] % work_modulus_;
      std::uint64_t& slot = wide[n - top + m];
      slot = (slot % work_modulus_ + work_modulus_ - t) % work_modulus_;
    }
  }
  CyclotomicElt out = zero();
  for (std::size_t m = 0; m < dimension() && m < wide.size(); ++m) out.coeffs[m] = wide[m] % moduli_[m];
  return out;
}

CyclotomicElt CyclotomicRing::add(const CyclotomicElt& a, const CyclotomicElt& b) const {
  CyclotomicElt out = zero();
  for (std::size_t m = 0; m < dimension(); ++m) out.coeffs[m] = (a.coeffs[m] + b.coeffs[m]) % moduli_[m];
  return out;
}

CyclotomicElt CyclotomicRing::neg(const CyclotomicElt& a) const {
  CyclotomicElt out = zero();
  for (std::size_t m = 0; m < dimension(); ++m) out.coeffs[m] = (moduli_[m] - a.coeffs[m]) % moduli_[m];
  return out;
}

CyclotomicElt CyclotomicRing::mul(const CyclotomicElt& a, const CyclotomicElt& b) const {
  const std::size_t d = dimension();
  std::vector<std::uint64_t> wide(2 * d - 1, 0);
  for (std::size_t x = 0; x < d; ++x) {
    if (a.coeffs[x] == 0) continue;
    for (std::size_t y = 0; y < d; ++y) {
      wide[x + y] = (wide[x + y] + a.coeffs[x] % work_modulus_ * (b.coeffs[y] % work_modulus_)) % work_modulus_;
    }
  }
  return reduce(std::move(wide));
}

CyclotomicElt CyclotomicRing::mul_zeta_pow(const CyclotomicElt& a, std::uint32_t n) const {
  CyclotomicElt out = a;
  for (std::uint32_t k = 0; k < n % p_; ++k) out = mul(out, zeta_);
  return out;
}

std::uint32_t CyclotomicRing::valuation(const CyclotomicElt& a) const {
  std::uint32_t best = i_;
  for (std::size_t m = 0; m < dimension(); ++m) {
    std::uint64_t c = a.coeffs[m];
    if (c == 0) continue;
    std::uint32_t v = 0;
    while (c % p_ == 0) {
      c /= p_;
      ++v;
    }
    best = std::min(best, static_cast<std::uint32_t>((p_ - 1) * v + m));
  }
  return best;
}

std::uint32_t CyclotomicRing::log_order() const {
  std::uint32_t total = 0;
  for (std::uint64_t q : moduli_) {
    while (q > 1) {
      q /= p_;
      ++total;
    }
  }
  return total;
}

std::size_t MaxClassEltHash::operator()(const MaxClassElt& x) const noexcept {
  std::size_t h = x.eps;
  for (auto c : x.a.coeffs) h = h * 1000003U ^ c;
  return h;
}

MaxClassElt MaximalClassGroup::multiply(const MaxClassElt& x, const MaxClassElt& y) const {
  return {(x.eps + y.eps) % ring.p(), ring.add(ring.mul_zeta_pow(x.a, y.eps), y.a)};
}

Subset MaximalClassGroup::layer(std::uint32_t j) const {
  if (j < 1) throw DomainError("layers start at P_1");
  Subset out(group().order());
  for (Elem e = 0; e < group().order(); ++e) {
    const MaxClassElt& x = concrete.element(e);
    if (x.eps == 0 && ring.valuation(x.a) + 1 >= j) out.insert(e);
  }
  return out;
}

std::uint32_t MaximalClassGroup::layer_index(Elem e) const {
  const MaxClassElt& x = concrete.element(e);
  if (x.eps != 0) return 0;
  return ring.valuation(x.a) + 1;
}

MaximalClassGroup construct_P(std::uint32_t p, std::uint32_t i) {
  CyclotomicRing ring(p, i);
  const MaxClassElt s{1, ring.zero()};
  const MaxClassElt s_inv{p - 1, ring.zero()};
  const MaxClassElt s1{0, ring.one()};
  const MaxClassElt s1_inv{0, ring.neg(ring.one())};
  MaximalClassGroup P{ring, {FiniteGroup({"s"}, {0, 0}, {0}, {Letter{}}), {}, {}}, 0, 0};
  const std::vector<MaxClassElt> letters{s, s_inv, s1, s1_inv};
  P.concrete = cayley_bfs(
      MaxClassElt{0, ring.zero()}, {"s", "s1"},
      [&](const MaxClassElt& x, Letter l) { return P.multiply(x, letters[l.column()]); }, MaxClassEltHash{});
  P.s = P.group().generator(0);
  P.s1 = P.group().generator(1);
  return P;
}

LayerReport verify_layer_orders(const MaximalClassGroup& P) {
  LayerReport report;
  const FiniteGroup& G = P.group();
  const std::uint32_t p = P.ring.p(), i = P.ring.precision();
  std::vector<std::uint64_t> orders(G.order());
  for (Elem e = 0; e < G.order(); ++e) orders[e] = element_order(G, e);

  for (Elem e = 0; e < G.order(); ++e) {
    if (P.layer_index(e) == 0) {
      ++report.outside_p1;
      if (orders[e] == p) ++report.outside_p1_order_p;
    }
  }
  if (report.outside_p1_order_p != report.outside_p1) {
    report.ok = false;
    report.failures.push_back("some element outside P_1 does not have order p");
  }

  std::size_t previous = G.order();
  for (std::uint32_t j = 1; j <= i + 1; ++j) {
    LayerRow row{};
    row.j = j;
    row.expected_order = ipow(p, ceil_div(static_cast<std::int64_t>(i) + 1 - j, p - 1));
    row.exact_layer_orders = true;
    row.exponent = 1;
    for (Elem e = 0; e < G.order(); ++e) {
      const std::uint32_t idx = P.layer_index(e);
      if (idx < j || idx == 0) continue;
      ++row.size;
      row.exponent = std::max(row.exponent, orders[e]);
      if (idx == j && j <= i && orders[e] != row.expected_order) row.exact_layer_orders = false;
    }
    if (previous != row.size * p) report.uniserial = false;
    previous = row.size;
    if (j <= i && (row.exponent != row.expected_order || !row.exact_layer_orders)) {
      report.ok = false;
      report.failures.push_back("layer P_" + std::to_string(j) + " has the wrong element orders");
    }
    report.rows.push_back(row);
  }
  if (!report.uniserial) {
    report.ok = false;
    report.failures.push_back("layer chain is not uniserial");
  }
  return report;
}

PsiToP psi_to_P(const FiniteGroup& H, const MaximalClassGroup& P) {
  PsiToP out;
  const FiniteGroup& G = P.group();
  const std::uint32_t i = P.ring.precision();
  const auto series = lower_central_series(G);
  // series[j-1] is gamma_j; gamma_(i+1) is the (i+1)-th entry when it exists.
  out.class_bound_verified = series.size() > i && series[i].order() == 1;
  out.order_s1 = element_order(G, P.s1);
  const std::vector<Elem> images{G.inv(P.s), G.mul(P.s, P.s1)};
  try {
    const Hom psi = hom_from_images(H, G, images);
    out.accepted = true;
    out.surjective = psi.surjective();
    const Elem uv = H.mul(H.generator(0), H.generator(1));
    out.image_uv_is_s1 = psi(uv) == P.s1;
    out.order_image_uv = element_order(G, psi(uv));
    out.map = psi.map();
  } catch (const HomRejected& e) {
    out.failure = e.what();
  }
  return out;
}

}  // namespace beauville
