#pragma once

// End-to-end verification that F/gamma_(i+1)(F), F = C_p * C_p and
// i = k(p-1)+1, is a strongly real Beauville group.

#include <cstdint>

#include "beauville/certificate.hpp"
#include "beauville/coset_enum.hpp"

namespace beauville {

/// Throws DomainError for bad (p, k) and LimitExceeded when the group cannot
/// fit in `limits`. Every mathematical check, passing or not, is recorded in
/// the certificate.
Certificate verify_main_theorem(std::uint32_t p, std::uint32_t k, const EnumerationLimits& limits = default_limits());

/// ceil(i / (p-1)): log_p of the expected exponent of H and order of uv.
std::uint32_t expected_exponent_log(std::uint32_t p, std::uint32_t i);

}  // namespace beauville
