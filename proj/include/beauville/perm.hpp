#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace beauville {

/// A permutation of {0..n-1}. Products act on the right: (a*b)(i) = b(a(i)).
class Perm {
 public:
  Perm() = default;
  /// Throws DomainError unless `images` is a bijection.
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }
  bool is_identity() const;

  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  Perm pow(std::int64_t n) const;

  /// Cycle notation with 1-based points, "()" for the identity.
  std::string cycles() const;

  bool operator==(const Perm&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace beauville
