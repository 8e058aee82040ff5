#pragma once

#include <json.hpp>

#include "eqschubert/gkm/gkm_class.hpp"

namespace eqschubert {

using Json = nlohmann::ordered_json;

/// {"rank": n, "terms": [{"exponents": [...], "coeff": "p/q"}, ...]}
Json poly_to_json(const PolyS& p);
Json poly_to_json(const LaurentR& p);
PolyS poly_from_json(const Json& j);
LaurentR laurent_from_json(const Json& j);

/// {"group": "A3", "theory": "coh", "values": {"2143": "<canonical poly>", ...}}
Json gkm_to_json(const GkmClassS& phi);
Json gkm_to_json(const GkmClassK& psi);
/// Throws ParseError when the group label or a window does not match `datum`.
GkmClassS gkm_from_json(const Json& j, const DatumPtr& datum);
GkmClassK gkm_k_from_json(const Json& j, const DatumPtr& datum);

/// {"group": "A3", "terms": {"3412": "<coefficient>", ...}} in basis order.
Json expansion_to_json(const SchubertExpansionS& e);
Json expansion_to_json(const SchubertExpansionK& e);
SchubertExpansionS expansion_from_json(const Json& j, const DatumPtr& datum);
SchubertExpansionK expansion_k_from_json(const Json& j, const DatumPtr& datum);

}  // namespace eqschubert
