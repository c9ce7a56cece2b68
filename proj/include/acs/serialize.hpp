#pragma once

// JSON forms of the artifact's records. Big integers are written as decimal
// strings; rationals as "p/q".

#include <json.hpp>

#include "acs/chern.hpp"
#include "acs/ktheory.hpp"
#include "acs/ring.hpp"
#include "acs/search.hpp"
#include "acs/topology.hpp"

namespace acs {

inline constexpr const char* kSchemaVersion = "1";

/// {"m", "d", "domain", "c0", "lower": [[j, k, "v"], ...], "top"} with lower
/// sorted by (j, k) and zero entries omitted.
template <class S>
nlohmann::json to_json(const Truncated<S>& z);

/// Inverse of to_json. The top class is attributed to generator 1.
IntClass int_class_from_json(const nlohmann::json& j);
RatClass rat_class_from_json(const nlohmann::json& j);

/// {"m", "n", "a": [{"j", "k", "value"}], "b": [{"j", "value"}]}; zero
/// entries are omitted.
nlohmann::json to_json(const SacsCoefficients& c);

/// Validates shape; absent entries mean zero. Throws InvalidInput on
/// malformed JSON and ShapeError on out-of-family keys.
SacsCoefficients coefficients_from_json(const nlohmann::json& j);

/// {"c": ["1", [c_1 per generator], ..., "c_2n"]}
nlohmann::json to_json(const ChernData& c);

/// {"m", "n", "coeffs", "c_top", "chi", "verdict"}
nlohmann::json to_json(const WitnessRecord& r);

nlohmann::json to_json(const ManifoldInvariants& inv);

} // namespace acs
