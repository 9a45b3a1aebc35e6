#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "pombox/interp.hpp"
#include "pombox/poset.hpp"
#include "pombox/term.hpp"

namespace test {

using namespace pombox;

inline Poset sp(const char *text) { return interp_sp(parse_term(text)); }

inline EventSet ev(std::initializer_list<EventId> ids) { return EventSet::of(std::vector<EventId>(ids)); }

inline Poset mk(std::vector<Label> labels, std::vector<std::pair<EventId, EventId>> edges,
                std::vector<EventSet> boxes = {}) {
  return Poset::from_edges(std::move(labels), edges, boxes);
}

// Checks the raw definition for one map: labels kept, order kept, every source
// box maps onto a target box. With `reflect` order and boxes correspond exactly.
inline bool hom_via(const Poset &s, const Poset &t, const std::vector<EventId> &m, bool reflect) {
  if (s.size() != t.size()) return false;
  for (EventId e = 0; e < s.size(); ++e)
    if (s.label(e) != t.label(m[e])) return false;
  for (EventId e = 0; e < s.size(); ++e)
    for (EventId f = 0; f < s.size(); ++f) {
      if (s.less(e, f) && !t.less(m[e], m[f])) return false;
      if (reflect && t.less(m[e], m[f]) && !s.less(e, f)) return false;
    }
  std::vector<EventSet> images;
  for (EventSet b : s.boxes()) {
    EventSet img;
    for (EventId e : b) img.insert(m[e]);
    images.push_back(img);
    if (std::find(t.boxes().begin(), t.boxes().end(), img) == t.boxes().end()) return false;
  }
  if (reflect)
    for (EventSet b : t.boxes())
      if (std::find(images.begin(), images.end(), b) == images.end()) return false;
  return true;
}

// Brute-force hom search over all permutations.
inline bool brute_hom(const Poset &s, const Poset &t, bool reflect) {
  if (s.size() != t.size()) return false;
  std::vector<EventId> m(s.size());
  std::iota(m.begin(), m.end(), 0);
  do {
    if (hom_via(s, t, m, reflect)) return true;
  } while (std::next_permutation(m.begin(), m.end()));
  return false;
}

// The map sending A's events (ascending) first and then the rest (ascending),
// which is how seq/par of the two restrictions number their events.
inline std::vector<EventId> split_map(const Poset &p, EventSet a) {
  std::vector<EventId> m(p.size());
  EventId next = 0;
  for (EventId e : a) m[e] = next++;
  for (EventId e : p.events() - a) m[e] = next++;
  return m;
}

inline bool brute_iso(const Poset &a, const Poset &b) { return brute_hom(a, b, true); }
// P ⊑ Q iff Q maps homomorphically onto P.
inline bool brute_subsumed(const Poset &p, const Poset &q) { return brute_hom(q, p, false); }

} // namespace test
