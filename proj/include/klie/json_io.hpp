#pragma once

#include <json.hpp>

#include "klie/centralizer.hpp"
#include "klie/geometry_verifier.hpp"
#include "klie/matrix_lie.hpp"
#include "klie/root_systems.hpp"

namespace klie {

// Ordered JSON so that emitted payloads are byte-stable.
using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);          // [num, den]
Json vector_json(const RatVec& v);              // [[num,den], ...]
Rational rational_from_json(const Json& j);
RatVec vector_from_json(const Json& j);

Json root_system_json(const RootSystem& rs);
Json orbit_json(const std::vector<CartanVector>& orbit);
Json spectrum_json(const RootSystem& rs, const CartanVector& z);
Json classification_json(const RootSystem& rs, const CartanVector& z);
Json decomposition_json(const RootSystem& rs, const CartanVector& z);
Json report_json(const SampleReport& report);

/// Real entries as [num, den]; complex entries as [[num,den],[num,den]].
Json matrix_json(const AlgebraElement& x);

}  // namespace klie
