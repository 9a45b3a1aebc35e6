#include "pombox/series_parallel.hpp"

#include <algorithm>

namespace pombox {

std::string pattern_name(Pattern p) {
  switch (p) {
  case Pattern::P1: return "P1";
  case Pattern::P2: return "P2";
  case Pattern::P3: return "P3";
  case Pattern::P4: return "P4";
  }
  return "?";
}

namespace {

bool n_shape(const Poset &p, EventId e1, EventId e2, EventId e3, EventId e4) {
  return p.less(e1, e3) && p.less(e2, e3) && p.less(e2, e4) && !p.less(e1, e4) && !p.less(e2, e1) &&
         !p.less(e4, e3);
}

bool overlap(EventSet a, EventSet b, EventId e1, EventId e2, EventId e3) {
  return a.contains(e1) && !b.contains(e1) && a.contains(e2) && b.contains(e2) && b.contains(e3) &&
         !a.contains(e3);
}

bool below_part(const Poset &p, EventSet a, EventId e1, EventId e2, EventId e3) {
  return !a.contains(e1) && a.contains(e2) && a.contains(e3) && p.less(e1, e2) && !p.less(e1, e3);
}

bool above_part(const Poset &p, EventSet a, EventId e1, EventId e2, EventId e3) {
  return !a.contains(e1) && a.contains(e2) && a.contains(e3) && p.less(e2, e1) && !p.less(e3, e1);
}

} // namespace

bool validate_witness(const Poset &p, const PatternWitness &w) {
  const auto &e = w.events;
  for (EventId x : e)
    if (x >= p.size()) return false;
  for (EventSet b : w.boxes)
    if (!p.has_box(b)) return false;
  switch (w.pattern) {
  case Pattern::P1: return e.size() == 4 && w.boxes.empty() && n_shape(p, e[0], e[1], e[2], e[3]);
  case Pattern::P2:
    return e.size() == 3 && w.boxes.size() == 2 && overlap(w.boxes[0], w.boxes[1], e[0], e[1], e[2]);
  case Pattern::P3:
    return e.size() == 3 && w.boxes.size() == 1 && below_part(p, w.boxes[0], e[0], e[1], e[2]);
  case Pattern::P4:
    return e.size() == 3 && w.boxes.size() == 1 && above_part(p, w.boxes[0], e[0], e[1], e[2]);
  }
  return false;
}

std::optional<PatternWitness> sp_check(const Poset &p) {
  const EventId n = static_cast<EventId>(p.size());
  for (EventId e1 = 0; e1 < n; ++e1)
    for (EventId e2 = 0; e2 < n; ++e2)
      for (EventId e3 : p.successors(e1) & p.successors(e2))
        for (EventId e4 : p.successors(e2))
          if (n_shape(p, e1, e2, e3, e4)) return PatternWitness{Pattern::P1, {e1, e2, e3, e4}, {}};

  const auto &boxes = p.boxes();
  for (EventSet a : boxes)
    for (EventSet b : boxes) {
      if (a == b) continue;
      const EventSet only_a = a - b, both = a & b, only_b = b - a;
      if (!only_a.empty() && !both.empty() && !only_b.empty())
        return PatternWitness{Pattern::P2, {only_a.first(), both.first(), only_b.first()}, {a, b}};
    }

  for (EventSet a : boxes)
    for (EventId e1 : p.events() - a)
      for (EventId e2 : a & p.successors(e1))
        for (EventId e3 : a - p.successors(e1))
          return PatternWitness{Pattern::P3, {e1, e2, e3}, {a}};

  for (EventSet a : boxes)
    for (EventId e1 : p.events() - a)
      for (EventId e2 : a & p.predecessors(e1))
        for (EventId e3 : a - p.predecessors(e1))
          return PatternWitness{Pattern::P4, {e1, e2, e3}, {a}};
  return std::nullopt;
}

namespace {

std::optional<Term> synth(const Poset &p) {
  const std::size_t n = p.size();
  if (n == 0) return Term::one();
  if (p.has_full_box()) {
    auto inner = synth(p.without_full_box());
    if (!inner) return std::nullopt;
    return Term::box(*inner);
  }
  if (n == 1) return Term::atom(p.label(0));
  for (EventSet a : ordered_subsets(p.events())) {
    if (a.empty() || a == p.events()) continue;
    const SubsetClass c = classify_subset(p, a);
    if (!c.nested || !(c.prefix || c.isolated)) continue;
    auto l = synth(restrict(p, a));
    auto r = synth(restrict(p, p.events() - a));
    if (!l || !r) return std::nullopt;
    return c.prefix ? Term::seq(*l, *r) : Term::par(*l, *r);
  }
  return std::nullopt;
}

} // namespace

std::optional<Term> synthesize_term(const Poset &p) {
  if (sp_check(p)) return std::nullopt;
  return synth(p);
}

} // namespace pombox
