#pragma once

// The serialized record of one main-theorem verification run.

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "beauville/coset_enum.hpp"

namespace beauville {

inline constexpr const char* kVersion = "0.1.0";

struct CheckOutcome {
  std::string name;
  bool pass = false;
  std::string detail;

  bool operator==(const CheckOutcome&) const = default;
};

struct Certificate {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t i = 0;
  std::uint64_t group_order = 0;
  std::uint64_t exponent = 0;
  std::uint64_t order_uv = 0;
  std::string witness_w;
  std::string witness_z;
  std::array<std::string, 2> pair1;
  std::array<std::string, 2> pair2;
  std::vector<CheckOutcome> checks;
  std::string version = kVersion;
  std::int64_t wall_ms = 0;

  bool all_pass() const;
  /// The named check, or nullptr.
  const CheckOutcome* find(const std::string& name) const;

  bool operator==(const Certificate&) const = default;
};

/// Pretty-printed JSON with the normative field names.
std::string to_json(const Certificate& c);
/// Throws ParseError on malformed JSON or missing fields.
Certificate certificate_from_json(const std::string& text);

/// Writes to a temporary file next to `path` and renames it into place.
void write_atomically(const std::filesystem::path& path, const std::string& contents);

/// Rebuilds H from its defining presentation and re-checks the recorded
/// words: group order, witnesses, the Beauville structure and strong reality.
std::vector<CheckOutcome> recheck_certificate(const Certificate& c, const EnumerationLimits& limits = default_limits());

}  // namespace beauville
