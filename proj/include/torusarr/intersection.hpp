#pragma once

#include "torusarr/lattice.hpp"
#include "torusarr/numeric.hpp"

#include <span>

namespace torusarr::intersection {

/// Number of connected components of {x_1 ≡ 0} ∩ {b·x ≡ c}: gcd(b_2, ..., b_d).
/// Throws NonPrimitive, InvalidInput for d < 2, ParallelNormals when b = ±e_1.
Int components_coordinate(std::span<const Int> b);

/// Component count of the intersection of the linear subtori with primitive normals a and b,
/// evaluated with the nested-gcd formula over the Bézout chain of a.
///
/// The formula divides by prefix gcds of a, so a nonzero entry of a is first moved to the
/// front (a coordinate permutation, which is a lattice automorphism).
Int components_pair(std::span<const Int> a, std::span<const Int> b);

/// The nested-gcd formula itself for a caller-supplied chain. Requires a_1 != 0 and a chain
/// certifying a; throws InvalidInput otherwise.
///
///   gcd_j ( a_{j+1} (Σ_{i≤j} b_i u_i^{(j-1)}) - b_{j+1} g_j ) / g_{j+1},   j = 1..d-1,
///
/// with g_j = gcd(a_1..a_j) and u^{(0)} = (sign a_1).
Int nested_gcd_formula(std::span<const Int> a, std::span<const Int> b, const lattice::BezoutChain& chain);

} // namespace torusarr::intersection
