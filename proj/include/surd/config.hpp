#pragma once

namespace surd {

inline constexpr const char* kEngineVersion = "0.1.0";

// Working precision for certified numeric evaluation, in bits.
inline constexpr unsigned kDefaultPrecisionBits = 256;

// Sign refinement doubles precision up to this hard cap; past it the
// query fails with a resource error rather than returning a guess.
inline constexpr unsigned kSignPrecisionCapBits = 1u << 16;

// Largest field dimension accepted by the exact linear-solve inversion.
inline constexpr unsigned kDefaultDimensionBound = 512;

// Enumeration ceiling for denesting searches (candidates, not results).
inline constexpr unsigned long long kDenestCandidateCeiling = 100'000'000ull;

}  // namespace surd
