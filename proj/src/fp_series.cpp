#include "beauville/fp_series.hpp"

#include <sstream>

#include "beauville/errors.hpp"

namespace beauville {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

void require_same_field(std::uint32_t p, std::uint32_t q) {
  if (p != q) throw DomainError("mismatched characteristic: " + std::to_string(p) + " vs " + std::to_string(q));
}

void require_odd_prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw DomainError("modulus must be an odd prime, got " + std::to_string(p));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t inverse_mod(std::uint32_t value, std::uint32_t p) {
  if (value % p == 0) throw DomainError("zero has no inverse mod " + std::to_string(p));
  // Extended Euclid.
  std::int64_t a = value % p, b = p, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return reduce(x0, p);
}

// ---- FpScalar -------------------------------------------------------------

FpScalar::FpScalar(std::uint32_t p, std::int64_t value) : p_(p), value_(0) {
  require_odd_prime(p);
  value_ = reduce(value, p);
}

FpScalar FpScalar::operator+(FpScalar other) const {
  require_same_field(p_, other.p_);
  return {p_, static_cast<std::int64_t>(value_) + other.value_};
}

FpScalar FpScalar::operator-(FpScalar other) const {
  require_same_field(p_, other.p_);
  return {p_, static_cast<std::int64_t>(value_) - other.value_};
}

FpScalar FpScalar::operator*(FpScalar other) const {
  require_same_field(p_, other.p_);
  return {p_, static_cast<std::int64_t>(static_cast<std::uint64_t>(value_) * other.value_ % p_)};
}

FpScalar FpScalar::operator-() const { return {p_, -static_cast<std::int64_t>(value_)}; }

FpScalar FpScalar::inverse() const { return {p_, inverse_mod(value_, p_)}; }

// ---- PowerSeries ----------------------------------------------------------

PowerSeries::PowerSeries(std::uint32_t p, std::size_t precision) : p_(p), coeffs_(precision + 1, 0) {
  require_odd_prime(p);
}

PowerSeries::PowerSeries(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  require_odd_prime(p);
  if (coeffs_.empty()) throw DomainError("power series needs at least a constant term");
  for (auto& c : coeffs_) c %= p_;
}

PowerSeries PowerSeries::constant(std::uint32_t p, std::size_t precision, std::int64_t c) {
  PowerSeries s(p, precision);
  s.set(0, c);
  return s;
}

void PowerSeries::set(std::size_t i, std::int64_t value) { coeffs_.at(i) = reduce(value, p_); }

PowerSeries PowerSeries::operator+(const PowerSeries& other) const {
  require_same_field(p_, other.p_);
  if (precision() != other.precision()) throw DomainError("mismatched precision");
  PowerSeries out(*this);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = (coeffs_[i] + other.coeffs_[i]) % p_;
  return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& other) const {
  require_same_field(p_, other.p_);
  if (precision() != other.precision()) throw DomainError("mismatched precision");
  PowerSeries out(*this);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = (coeffs_[i] + p_ - other.coeffs_[i]) % p_;
  return out;
}

PowerSeries PowerSeries::operator*(const PowerSeries& other) const {
  require_same_field(p_, other.p_);
  if (precision() != other.precision()) throw DomainError("mismatched precision");
  const std::size_t n = coeffs_.size();
  std::vector<std::uint64_t> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(coeffs_[i]) * other.coeffs_[j]) % p_;
    }
  }
  PowerSeries out(p_, precision());
  for (std::size_t i = 0; i < n; ++i) out.coeffs_[i] = static_cast<std::uint32_t>(acc[i]);
  return out;
}

PowerSeries PowerSeries::scaled(std::int64_t c) const {
  const std::uint64_t k = reduce(c, p_);
  PowerSeries out(*this);
  for (auto& x : out.coeffs_) x = static_cast<std::uint32_t>(x * k % p_);
  return out;
}

PowerSeries PowerSeries::with_precision(std::size_t precision) const {
  PowerSeries out(p_, precision);
  for (std::size_t i = 0; i <= precision && i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i];
  return out;
}

PowerSeries inv_sqrt(const PowerSeries& s) {
  if (s.p() == 2) throw DomainError("inverse square root needs odd characteristic");
  if (s[0] != 1) throw DomainError("inverse square root needs constant term 1");
  const std::size_t target = s.precision();
  const std::int64_t half = inverse_mod(2, s.p());

  // Newton step g <- g (3 - s g^2) / 2 doubles the number of correct terms.
  PowerSeries g = PowerSeries::constant(s.p(), 0, 1);
  std::size_t prec = 0;
  while (prec < target) {
    prec = std::min(target, 2 * prec + 1);
    g = g.with_precision(prec);
    const PowerSeries sp = s.with_precision(prec);
    const PowerSeries three = PowerSeries::constant(s.p(), prec, 3);
    g = (g * (three - sp * g * g)).scaled(half);
  }
  return g.with_precision(target);
}

// ---- Depth ----------------------------------------------------------------

std::string Depth::to_string() const { return is_infinite() ? std::string("inf") : std::to_string(value_); }

// ---- TruncSeries ----------------------------------------------------------

TruncSeries TruncSeries::identity(std::uint32_t p, std::size_t precision) {
  require_odd_prime(p);
  if (precision < 1) throw DomainError("precision must be at least 1");
  std::vector<std::uint32_t> c(precision, 0);
  c[0] = 1;
  return {p, std::move(c)};
}

TruncSeries TruncSeries::from_coefficients(std::uint32_t p, std::vector<std::uint32_t> coeffs) {
  require_odd_prime(p);
  if (coeffs.empty()) throw DomainError("precision must be at least 1");
  for (auto& c : coeffs) c %= p;
  if (coeffs[0] != 1) throw DomainError("normalized automorphism needs a_1 = 1");
  return {p, std::move(coeffs)};
}

TruncSeries TruncSeries::from_power_series(const PowerSeries& s) {
  if (s[0] != 0) throw DomainError("series automorphism needs zero constant term");
  auto c = s.coefficients();
  return from_coefficients(s.p(), std::vector<std::uint32_t>(c.begin() + 1, c.end()));
}

bool TruncSeries::is_identity() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Depth TruncSeries::depth() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    // coeffs_[i] is a_(i+1); a_(k+1) != 0 first means depth k.
    if (coeffs_[i] != 0) return Depth(static_cast<std::uint32_t>(i));
  }
  return Depth::infinite();
}

std::uint32_t TruncSeries::leading_coefficient() const {
  const Depth d = depth();
  return d.is_infinite() ? 0 : coeffs_[d.value()];
}

PowerSeries TruncSeries::as_power_series() const {
  std::vector<std::uint32_t> c(coeffs_.size() + 1, 0);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
  return {p_, std::move(c)};
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  os << "t";
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) os << " + " << coeffs_[i] << "t^" << (i + 1);
  }
  os << " + O(t^" << (coeffs_.size() + 1) << ")";
  return os.str();
}

TruncSeries compose(const TruncSeries& f, const TruncSeries& g) {
  require_same_field(f.p(), g.p());
  if (f.precision() != g.precision()) throw DomainError("mismatched truncation degree");
  const std::size_t m = f.precision();
  const PowerSeries fs = f.as_power_series();
  // Horner: g(f) = f (b_1 + f (b_2 + ... + f b_M)).
  PowerSeries acc = PowerSeries::constant(f.p(), m, g.coeff(m));
  for (std::size_t j = m - 1; j >= 1; --j) {
    acc = acc * fs;
    acc.set(0, static_cast<std::int64_t>(acc[0]) + g.coeff(j));
  }
  return TruncSeries::from_power_series(acc * fs);
}

TruncSeries inverse(const TruncSeries& f) {
  // Back-substitution: fix h_2, h_3, ... so that f(h(t)) = t degree by degree.
  const std::size_t m = f.precision();
  std::vector<std::uint32_t> h(m, 0);
  h[0] = 1;
  for (std::size_t n = 2; n <= m; ++n) {
    const TruncSeries trial = TruncSeries::from_coefficients(f.p(), h);
    const std::uint32_t c = compose(trial, f).coeff(n);
    h[n - 1] = (f.p() - c) % f.p();
  }
  return TruncSeries::from_coefficients(f.p(), std::move(h));
}

TruncSeries commutator(const TruncSeries& f, const TruncSeries& g) {
  return inverse(f) * inverse(g) * f * g;
}

TruncSeries power(const TruncSeries& f, std::int64_t n) {
  TruncSeries base = n < 0 ? inverse(f) : f;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  TruncSeries result = TruncSeries::identity(f.p(), f.precision());
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Depth depth(const TruncSeries& f) { return f.depth(); }

std::uint32_t lcs_index(std::uint32_t i, std::uint32_t p) {
  if (i < 2) throw DomainError("lower central index needs i >= 2");
  require_odd_prime(p);
  return i + 1 + (i - 2) / (p - 1);
}

std::size_t TruncSeriesHash::operator()(const TruncSeries& f) const noexcept {
  std::size_t h = f.p();
  for (auto c : f.coefficients()) h = h * 1000003U ^ c;
  return h;
}

}  // namespace beauville
