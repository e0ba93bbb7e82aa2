#include "beauville/perm.hpp"

#include <sstream>

#include "beauville/errors.hpp"

namespace beauville {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto i : images_) {
    if (i >= images_.size() || hit[i]) throw DomainError("image list is not a permutation");
    hit[i] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  Perm p;
  p.images_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<std::uint32_t>(i);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Perm Perm::operator*(const Perm& other) const {
  if (degree() != other.degree()) throw DomainError("permutation degrees differ");
  Perm out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[i] = other.images_[images_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) out.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return out;
}

Perm Perm::pow(std::int64_t n) const {
  Perm base = n < 0 ? inverse() : *this;
  auto e = static_cast<std::uint64_t>(n < 0 ? -n : n);
  Perm result = identity(degree());
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      first = false;
      os << (j + 1);
      j = images_[j];
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = p.degree();
  for (auto i : p.images()) h = h * 1000003U ^ i;
  return h;
}

}  // namespace beauville
