#pragma once

#include <string>

#include <json.hpp>

#include "pombox/poset.hpp"

namespace pombox {

/// Reads {"events":[{"id":..,"label":..}],"order":[[u,v],..],"boxes":[[..],..]}.
/// Ids may be any distinct integers; they are renumbered densely in ascending
/// order. "order" and "boxes" are optional. Throws PosetError on duplicate or
/// unknown ids, empty boxes and cycles.
Poset poset_from_json(const nlohmann::json &j);
Poset poset_from_json_text(const std::string &text);

/// Writes ids 0..n-1 and covering edges only.
nlohmann::json poset_to_json(const Poset &p);

/// Graphviz rendering: nodes `id:label`, covering edges, boxes as clusters.
/// Laminar box families nest as clusters; otherwise clusters are emitted for a
/// laminar subfamily and the remaining boxes become dashed note nodes.
std::string poset_to_dot(const Poset &p, const std::string &name = "P");

} // namespace pombox
