#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "schubert/poly.hpp"
#include "schubert/schubert_union.hpp"

namespace schubert {

/// {"l":2,"m":7,"maxima":[[1,7],[3,5]]}
nlohmann::json to_json(const SchubertUnion& u);
SchubertUnion union_from_json(const nlohmann::json& j);

/// Coefficients lowest degree first; values beyond 64 bits become decimal strings.
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

/// "1,7;3,5" -> S_(1,7) ∪ S_(3,5); "empty" or "" -> ∅.
SchubertUnion parse_maxima(const GrassParams& params, std::string_view text);

}  // namespace schubert
