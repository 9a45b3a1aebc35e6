#include "pombox/poset_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pombox {

using nlohmann::json;

Poset poset_from_json(const json &j) {
  if (!j.is_object() || !j.contains("events") || !j["events"].is_array())
    throw PosetError("poset JSON needs an \"events\" array");
  std::map<long long, std::string> by_id;
  for (const auto &ev : j["events"]) {
    if (!ev.is_object() || !ev.contains("id") || !ev.contains("label"))
      throw PosetError("each event needs \"id\" and \"label\"");
    const long long id = ev["id"].get<long long>();
    if (!by_id.emplace(id, ev["label"].get<std::string>()).second)
      throw PosetError("duplicate event id " + std::to_string(id));
  }
  std::map<long long, EventId> dense;
  std::vector<Label> labels;
  for (const auto &[id, label] : by_id) {
    dense.emplace(id, static_cast<EventId>(labels.size()));
    labels.push_back(label);
  }
  const auto lookup = [&](const json &v) {
    const long long id = v.get<long long>();
    auto it = dense.find(id);
    if (it == dense.end()) throw PosetError("unknown event id " + std::to_string(id));
    return it->second;
  };
  std::vector<std::pair<EventId, EventId>> edges;
  if (j.contains("order"))
    for (const auto &e : j["order"]) {
      if (!e.is_array() || e.size() != 2) throw PosetError("order entries must be [from, to] pairs");
      edges.emplace_back(lookup(e[0]), lookup(e[1]));
    }
  std::vector<EventSet> boxes;
  if (j.contains("boxes"))
    for (const auto &b : j["boxes"]) {
      if (!b.is_array()) throw PosetError("boxes must be arrays of event ids");
      EventSet s;
      for (const auto &v : b) s.insert(lookup(v));
      if (s.empty()) throw PosetError("boxes must be non-empty");
      boxes.push_back(s);
    }
  return Poset::from_edges(std::move(labels), edges, boxes);
}

Poset poset_from_json_text(const std::string &text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error &e) {
    throw PosetError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return poset_from_json(j);
  } catch (const json::type_error &e) {
    throw PosetError(std::string("malformed poset JSON: ") + e.what());
  }
}

json poset_to_json(const Poset &p) {
  json events = json::array();
  for (EventId e = 0; e < p.size(); ++e) events.push_back({{"id", e}, {"label", p.label(e)}});
  json order = json::array();
  for (auto [u, v] : p.covering_pairs()) order.push_back({u, v});
  json boxes = json::array();
  for (EventSet b : p.boxes()) boxes.push_back(b.to_vector());
  return {{"events", events}, {"order", order}, {"boxes", boxes}};
}

namespace {

std::string quote(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

struct Cluster {
  EventSet box;
  std::vector<std::size_t> children;
};

} // namespace

std::string poset_to_dot(const Poset &p, const std::string &name) {
  // Largest first, so every box is placed after any box that could contain it.
  std::vector<EventSet> boxes = p.boxes();
  std::stable_sort(boxes.begin(), boxes.end(), [](EventSet a, EventSet b) { return a.size() > b.size(); });

  std::vector<Cluster> clusters;
  std::vector<std::size_t> roots;
  std::vector<EventSet> loose;
  for (EventSet b : boxes) {
    bool clash = false;
    long parent = -1;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      const EventSet c = clusters[i].box;
      if (b.subset_of(c)) parent = static_cast<long>(i);  // later entries are smaller
      else if (b.intersects(c)) clash = true;
    }
    if (clash) {
      loose.push_back(b);
      continue;
    }
    clusters.push_back({b, {}});
    if (parent < 0) roots.push_back(clusters.size() - 1);
    else clusters[static_cast<std::size_t>(parent)].children.push_back(clusters.size() - 1);
  }

  std::ostringstream out;
  out << "digraph " << quote(name) << " {\n  rankdir=LR;\n  node [shape=plaintext];\n";
  int counter = 0;
  const auto emit = [&](auto &&self, std::size_t ci, int depth) -> void {
    const std::string pad(2 * depth, ' ');
    out << pad << "subgraph cluster_" << counter++ << " {\n" << pad << "  style=solid;\n";
    EventSet inner;
    for (std::size_t k : clusters[ci].children) inner |= clusters[k].box;
    for (std::size_t k : clusters[ci].children) self(self, k, depth + 1);
    for (EventId e : clusters[ci].box - inner) out << pad << "  e" << e << ";\n";
    out << pad << "}\n";
  };
  for (EventId e = 0; e < p.size(); ++e)
    out << "  e" << e << " [label=" << quote(std::to_string(e) + ":" + p.label(e)) << "];\n";
  for (std::size_t r : roots) emit(emit, r, 1);
  for (auto [u, v] : p.covering_pairs()) out << "  e" << u << " -> e" << v << ";\n";
  for (std::size_t i = 0; i < loose.size(); ++i) {
    std::string members;
    for (EventId e : loose[i]) members += (members.empty() ? "" : ",") + std::to_string(e);
    out << "  box" << i << " [shape=note, style=dashed, label=" << quote("box {" + members + "}") << "];\n";
    for (EventId e : loose[i]) out << "  box" << i << " -> e" << e << " [style=dashed, arrowhead=none];\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace pombox
