#include "pombox/poset.hpp"

#include <algorithm>
#include <numeric>

namespace pombox {

std::vector<EventSet> ordered_subsets(EventSet mask) {
  std::vector<EventSet> out;
  out.reserve(std::size_t{1} << mask.size());
  for_each_subset(mask, [&](EventSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), [](EventSet a, EventSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    // Lexicographic on ascending id lists: the first differing id decides, and the
    // set holding the smaller id comes first.
    EventSet diff((a.bits() ^ b.bits()));
    if (diff.empty()) return false;
    return a.contains(diff.first());
  });
  return out;
}

Poset Poset::atom(Label label) {
  Poset p;
  p.labels_.push_back(std::move(label));
  p.succ_.assign(1, EventSet{});
  p.pred_.assign(1, EventSet{});
  return p;
}

Poset Poset::from_edges(std::vector<Label> labels,
                        std::span<const std::pair<EventId, EventId>> edges,
                        std::span<const EventSet> boxes) {
  const std::size_t n = labels.size();
  if (n > kMaxEvents) throw PosetError("poset exceeds " + std::to_string(kMaxEvents) + " events");
  std::vector<EventSet> succ(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw PosetError("order edge references unknown event");
    if (u == v) throw PosetError("order edge is a self loop; order must be strict");
    succ[u].insert(v);
  }
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (succ[i].contains(static_cast<EventId>(k))) succ[i] |= succ[k];
  for (std::size_t i = 0; i < n; ++i)
    if (succ[i].contains(static_cast<EventId>(i))) throw PosetError("order edges contain a cycle");
  return from_closed(std::move(labels), std::move(succ), {boxes.begin(), boxes.end()});
}

Poset Poset::from_closed(std::vector<Label> labels, std::vector<EventSet> successors,
                         std::vector<EventSet> boxes) {
  Poset p;
  p.labels_ = std::move(labels);
  p.succ_ = std::move(successors);
  p.boxes_ = std::move(boxes);
  p.validate_and_normalize();
  return p;
}

void Poset::validate_and_normalize() {
  const std::size_t n = labels_.size();
  if (n > kMaxEvents) throw PosetError("poset exceeds " + std::to_string(kMaxEvents) + " events");
  if (succ_.size() != n) throw PosetError("successor table size mismatch");
  const EventSet all = events();
  for (auto &l : labels_)
    if (l.empty()) throw PosetError("labels must be non-empty");
  pred_.assign(n, EventSet{});
  for (EventId i = 0; i < n; ++i) {
    if (!succ_[i].subset_of(all)) throw PosetError("order references unknown event");
    if (succ_[i].contains(i)) throw PosetError("order is not irreflexive");
    for (EventId j : succ_[i]) {
      if (!succ_[j].subset_of(succ_[i])) throw PosetError("order is not transitively closed");
      pred_[j].insert(i);
    }
  }
  for (EventSet b : boxes_) {
    if (b.empty()) throw PosetError("boxes must be non-empty");
    if (!b.subset_of(all)) throw PosetError("box references unknown event");
  }
  std::sort(boxes_.begin(), boxes_.end());
  boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
}

std::size_t Poset::order_size() const {
  std::size_t n = 0;
  for (auto s : succ_) n += s.size();
  return n;
}

std::vector<std::pair<EventId, EventId>> Poset::order_pairs() const {
  std::vector<std::pair<EventId, EventId>> out;
  for (EventId i = 0; i < size(); ++i)
    for (EventId j : succ_[i]) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<EventId, EventId>> Poset::covering_pairs() const {
  std::vector<std::pair<EventId, EventId>> out;
  for (EventId i = 0; i < size(); ++i) {
    EventSet indirect;
    for (EventId j : succ_[i]) indirect |= succ_[j];
    for (EventId j : succ_[i] - indirect) out.emplace_back(i, j);
  }
  return out;
}

bool Poset::has_box(EventSet b) const {
  return std::binary_search(boxes_.begin(), boxes_.end(), b);
}

std::size_t Poset::box_count(EventId e) const {
  return static_cast<std::size_t>(
      std::count_if(boxes_.begin(), boxes_.end(), [e](EventSet b) { return b.contains(e); }));
}

Poset Poset::without_full_box() const {
  Poset p = *this;
  if (!empty()) std::erase(p.boxes_, events());
  return p;
}

Poset Poset::with_boxes(std::vector<EventSet> boxes) const {
  return from_closed(labels_, succ_, std::move(boxes));
}

namespace {

Poset disjoint_union(const Poset &p, const Poset &q, bool ordered) {
  const std::size_t np = p.size(), nq = q.size();
  if (np + nq > kMaxEvents)
    throw PosetError("composition exceeds " + std::to_string(kMaxEvents) + " events");
  std::vector<Label> labels = p.labels();
  labels.insert(labels.end(), q.labels().begin(), q.labels().end());
  const auto shift = [np](EventSet s) { return EventSet(np >= 64 ? 0 : s.bits() << np); };
  const EventSet q_events = shift(q.events());
  std::vector<EventSet> succ;
  succ.reserve(np + nq);
  for (EventId i = 0; i < np; ++i) succ.push_back(ordered ? (p.successors(i) | q_events) : p.successors(i));
  for (EventId i = 0; i < nq; ++i) succ.push_back(shift(q.successors(i)));
  std::vector<EventSet> boxes = p.boxes();
  for (EventSet b : q.boxes()) boxes.push_back(shift(b));
  return Poset::from_closed(std::move(labels), std::move(succ), std::move(boxes));
}

} // namespace

Poset seq(const Poset &p, const Poset &q) { return disjoint_union(p, q, true); }
Poset par(const Poset &p, const Poset &q) { return disjoint_union(p, q, false); }

Poset boxed(const Poset &p) {
  if (p.empty() || p.has_full_box()) return p;
  std::vector<EventSet> boxes = p.boxes();
  boxes.push_back(p.events());
  return p.with_boxes(std::move(boxes));
}

namespace {

// Packs the bits of `s` selected by `a` into the low bits, keeping their order.
EventSet compress(EventSet s, EventSet a) {
  std::uint64_t out = 0;
  unsigned k = 0;
  for (EventId e : a) {
    if (s.contains(e)) out |= std::uint64_t{1} << k;
    ++k;
  }
  return EventSet(out);
}

} // namespace

Poset restrict(const Poset &p, EventSet a) {
  if (!a.subset_of(p.events())) throw std::domain_error("restriction set is not a subset of the events");
  std::vector<Label> labels;
  std::vector<EventSet> succ;
  for (EventId e : a) {
    labels.push_back(p.label(e));
    succ.push_back(compress(p.successors(e), a));
  }
  std::vector<EventSet> boxes;
  for (EventSet b : p.boxes())
    if (b.subset_of(a)) boxes.push_back(compress(b, a));
  return Poset::from_closed(std::move(labels), std::move(succ), std::move(boxes));
}

bool is_nested(const Poset &p, EventSet a) {
  return std::all_of(p.boxes().begin(), p.boxes().end(),
                     [a](EventSet b) { return b.subset_of(a) || !b.intersects(a); });
}

bool is_prefix(const Poset &p, EventSet a) {
  const EventSet rest = p.events() - a;
  for (EventId e : a)
    if (!rest.subset_of(p.successors(e))) return false;
  return true;
}

bool is_downset(const Poset &p, EventSet a) {
  for (EventId f : p.events() - a)
    if (p.successors(f).intersects(a)) return false;
  return true;
}

bool is_isolated(const Poset &p, EventSet a) {
  return is_downset(p, a) && is_downset(p, p.events() - a);
}

SubsetClass classify_subset(const Poset &p, EventSet a) {
  if (!a.subset_of(p.events())) throw std::domain_error("subset is not contained in the events");
  SubsetClass c;
  c.nontrivial = !a.empty() && a != p.events();
  c.nested = is_nested(p, a);
  c.prefix = is_prefix(p, a);
  c.downset = is_downset(p, a);
  c.isolated = c.downset && is_downset(p, p.events() - a);
  return c;
}

bool split_check(const Poset &p, EventSet a, SplitMode mode) {
  const SubsetClass c = classify_subset(p, a);
  return c.nested && (mode == SplitMode::Seq ? c.prefix : c.isolated);
}

} // namespace pombox
