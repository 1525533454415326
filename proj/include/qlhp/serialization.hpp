#pragma once

// JSON forms. Classes are lists of {"exponents": [...], "num": "p", "den": "q"}
// in canonical term order; every number that can be non-integral is a string.

#include "qlhp/graded_algebra.hpp"
#include "qlhp/qlhp_checker.hpp"

#include <json.hpp>

namespace qlhp {

nlohmann::json ring_to_json(const RingDescriptor& ring);
RingPtr ring_from_json(const nlohmann::json& j);

nlohmann::json class_to_json(const GradedClass& a);
GradedClass class_from_json(const nlohmann::json& j, const RingPtr& ring);

/// CheckReport field names verbatim, plus "ring" describing the X-side ring
/// so the document is self-contained.
nlohmann::json report_to_json(const CheckReport& report);
CheckReport report_from_json(const nlohmann::json& j);

}  // namespace qlhp
