#pragma once

#include <cstddef>
#include <vector>

#include "klie/root_systems.hpp"

namespace klie {

/// Orthogonal reflection phi_alpha(H) = H - 2<H,alpha>/<alpha,alpha> alpha.
/// alpha must be a root of rs.
CartanVector reflect(const RootSystem& rs, const Root& alpha, const CartanVector& h);

/// Full Weyl orbit of h, computed as the closure of {h} under the simple
/// reflections. Returned in lexicographic order. Throws std::length_error
/// when the orbit would exceed `cap` elements.
std::vector<CartanVector> weyl_orbit(const RootSystem& rs, const CartanVector& h,
                                     std::size_t cap = 10'000'000);

/// The unique orbit element in the closed Weyl chamber, reached by
/// repeatedly reflecting at a simple root with negative pairing.
CartanVector dominant_representative(const RootSystem& rs, const CartanVector& h);

/// Same, but also accumulates the ambient-space matrix of the Weyl group
/// element w with w(h) dominant (as the list of simple reflections applied).
CartanVector dominant_representative_tracked(const RootSystem& rs, const CartanVector& h,
                                             std::vector<int>& simple_reflections);

/// Whether -Id belongs to the Weyl group. Decided by computing the longest
/// element on a dominant vector with pairwise-distinct simple pairings:
/// -Id is in W exactly when that vector's orbit contains its negative.
bool contains_minus_identity(const RootSystem& rs);

/// Half-sum of the positive roots.
CartanVector weyl_vector(const RootSystem& rs);

/// A dominant regular vector with <v, pi_i> = i; its stabilizer under
/// diagram symmetries is trivial, which contains_minus_identity relies on.
CartanVector asymmetric_dominant_vector(const RootSystem& rs);

}  // namespace klie
