#include "pombox/enumerate.hpp"

namespace pombox {

namespace {

using Rows = std::vector<EventSet>;

bool closed(const Rows &rows) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (EventId j : rows[i])
      if (!rows[j].subset_of(rows[i])) return false;
  return true;
}

bool acyclic_strict(const Rows &rows) {
  for (EventId i = 0; i < rows.size(); ++i) {
    if (rows[i].contains(i)) return false;
    for (EventId j : rows[i])
      if (rows[j].contains(i)) return false;
  }
  return true;
}

// Calls fn(rows) for each transitively closed sub-relation of P's order.
template <typename Fn>
bool for_each_closed_suborder(const Poset &p, Fn &&fn) {
  const auto pairs = p.order_pairs();
  const std::size_t k = pairs.size();
  if (k >= 63) throw PosetError("order too large to enumerate sub-relations");
  Rows rows(p.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    for (auto &r : rows) r = EventSet{};
    for (std::size_t b = 0; b < k; ++b)
      if ((mask >> b) & 1u) rows[pairs[b].first].insert(pairs[b].second);
    if (!closed(rows)) continue;
    if (!fn(rows)) return false;
  }
  return true;
}

template <typename Fn>
bool for_each_box_subset(const std::vector<EventSet> &boxes, Fn &&fn) {
  const std::size_t k = boxes.size();
  if (k >= 63) throw PosetError("too many boxes to enumerate subsets");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<EventSet> chosen;
    for (std::size_t b = 0; b < k; ++b)
      if ((mask >> b) & 1u) chosen.push_back(boxes[b]);
    if (!fn(std::move(chosen))) return false;
  }
  return true;
}

template <typename Visit>
std::vector<Poset> collect(const Poset &p, Visit &&visit_fn) {
  std::vector<Poset> out;
  visit_fn(p, [&](const Poset &q) {
    out.push_back(q);
    return true;
  });
  return out;
}

} // namespace

bool for_each_weakening(const Poset &p, const PosetVisitor &visit) {
  return for_each_closed_suborder(p, [&](const Rows &rows) {
    return for_each_box_subset(p.boxes(), [&](std::vector<EventSet> boxes) {
      return visit(Poset::from_closed(p.labels(), rows, std::move(boxes)));
    });
  });
}

std::vector<Poset> weakenings(const Poset &p) { return collect(p, for_each_weakening); }

bool for_each_box_weakening(const Poset &p, const PosetVisitor &visit) {
  return for_each_box_subset(p.boxes(), [&](std::vector<EventSet> boxes) {
    return visit(p.with_boxes(std::move(boxes)));
  });
}

std::vector<Poset> box_weakenings(const Poset &p) { return collect(p, for_each_box_weakening); }

std::vector<Rows> order_extensions(const Poset &p) {
  const std::size_t n = p.size();
  std::vector<std::pair<EventId, EventId>> free;
  for (EventId i = 0; i < n; ++i)
    for (EventId j = 0; j < n; ++j)
      if (i != j && !p.less(i, j) && !p.less(j, i)) free.emplace_back(i, j);
  if (free.size() >= 63) throw PosetError("too many incomparable pairs to enumerate extensions");
  std::vector<Rows> out;
  Rows rows(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    for (EventId i = 0; i < n; ++i) rows[i] = p.successors(i);
    for (std::size_t b = 0; b < free.size(); ++b)
      if ((mask >> b) & 1u) rows[free[b].first].insert(free[b].second);
    if (acyclic_strict(rows) && closed(rows)) out.push_back(rows);
  }
  return out;
}

bool for_each_strengthening(const Poset &p, std::size_t max_new_boxes, const PosetVisitor &visit) {
  const EventSet all = p.events();
  std::vector<EventSet> fresh;
  for_each_subset(all, [&](EventSet s) {
    if (!s.empty() && !p.has_box(s)) fresh.push_back(s);
  });
  // Box sets: P's boxes plus a combination of at most max_new_boxes fresh ones.
  std::vector<std::vector<EventSet>> box_sets;
  std::vector<EventSet> current = p.boxes();
  const auto extend = [&](auto &&self, std::size_t from, std::size_t left) -> void {
    box_sets.push_back(current);
    if (left == 0) return;
    for (std::size_t i = from; i < fresh.size(); ++i) {
      current.push_back(fresh[i]);
      self(self, i + 1, left - 1);
      current.pop_back();
    }
  };
  extend(extend, 0, max_new_boxes);

  for (const Rows &rows : order_extensions(p))
    for (const auto &boxes : box_sets)
      if (!visit(Poset::from_closed(p.labels(), rows, boxes))) return false;
  return true;
}

std::vector<Poset> strengthenings(const Poset &p, std::size_t max_new_boxes) {
  std::vector<Poset> out;
  for_each_strengthening(p, max_new_boxes, [&](const Poset &q) {
    out.push_back(q);
    return true;
  });
  return out;
}

} // namespace pombox
