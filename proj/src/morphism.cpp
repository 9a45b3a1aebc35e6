#include "pombox/morphism.hpp"

#include <algorithm>
#include <map>

namespace pombox {

namespace {

EventSet image(const std::vector<EventId> &map, EventSet s) {
  EventSet out;
  for (EventId e : s) out.insert(map[e]);
  return out;
}

bool same_label_multiset(const Poset &a, const Poset &b) {
  auto la = a.labels(), lb = b.labels();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  return la == lb;
}

bool wants_order_reflection(HomMode m) { return m == HomMode::OrderReflecting || m == HomMode::Iso; }
bool wants_box_reflection(HomMode m) { return m == HomMode::BoxReflecting || m == HomMode::Iso; }

// A preserving bijection is order-reflecting exactly when both orders have the
// same number of pairs, and box-reflecting exactly when both box sets have the same
// size. Both searches below rely on this to reduce reflection to counting.
bool counts_admissible(const Poset &s, const Poset &t, HomMode mode) {
  const std::size_t os = s.order_size(), ot = t.order_size();
  const std::size_t bs = s.boxes().size(), bt = t.boxes().size();
  if (wants_order_reflection(mode) ? os != ot : os > ot) return false;
  if (wants_box_reflection(mode) ? bs != bt : bs > bt) return false;
  return true;
}

class PrunedSearch {
public:
  PrunedSearch(const Poset &s, const Poset &t, HomMode mode) : s_(s), t_(t), mode_(mode) {}

  std::optional<std::vector<EventId>> run() {
    const std::size_t n = s_.size();
    if (!build_candidates()) return std::nullopt;
    plan_order();
    map_.assign(n, 0);
    used_ = EventSet{};
    if (search(0)) return map_;
    return std::nullopt;
  }

private:
  bool build_candidates() {
    const std::size_t n = s_.size();
    const bool refl_o = wants_order_reflection(mode_), refl_b = wants_box_reflection(mode_);
    cands_.assign(n, {});
    for (EventId i = 0; i < n; ++i) {
      const std::size_t out_s = s_.successors(i).size(), in_s = s_.predecessors(i).size();
      const std::size_t box_s = s_.box_count(i);
      for (EventId j = 0; j < n; ++j) {
        if (s_.label(i) != t_.label(j)) continue;
        const std::size_t out_t = t_.successors(j).size(), in_t = t_.predecessors(j).size();
        const std::size_t box_t = t_.box_count(j);
        if (refl_o ? (out_s != out_t || in_s != in_t) : (out_s > out_t || in_s > in_t)) continue;
        if (refl_b ? box_s != box_t : box_s > box_t) continue;
        cands_[i].insert(j);
      }
      if (cands_[i].empty()) return false;
    }
    return true;
  }

  // Most constrained first, preferring events related to already planned ones.
  void plan_order() {
    const std::size_t n = s_.size();
    order_.clear();
    EventSet planned;
    for (std::size_t step = 0; step < n; ++step) {
      EventId best = 0;
      long best_score = -1;
      for (EventId i = 0; i < n; ++i) {
        if (planned.contains(i)) continue;
        const long related = static_cast<long>(((s_.successors(i) | s_.predecessors(i)) & planned).size());
        const long score = related * 1000 + (64 - static_cast<long>(cands_[i].size()));
        if (score > best_score) { best_score = score; best = i; }
      }
      order_.push_back(best);
      planned.insert(best);
    }
    // A box is checked once its last event in plan order is assigned.
    box_checks_.assign(n, {});
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[order_[k]] = k;
    for (EventSet b : s_.boxes()) {
      std::size_t last = 0;
      for (EventId e : b) last = std::max(last, pos[e]);
      box_checks_[last].push_back(b);
    }
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const EventId i = order_[depth];
    const bool refl_o = wants_order_reflection(mode_);
    for (EventId t : cands_[i] - used_) {
      if (!order_consistent(i, t, refl_o, depth)) continue;
      map_[i] = t;
      used_.insert(t);
      bool ok = true;
      for (EventSet b : box_checks_[depth])
        if (!t_.has_box(image(map_, b))) { ok = false; break; }
      if (ok && search(depth + 1)) return true;
      used_.erase(t);
    }
    return false;
  }

  bool order_consistent(EventId i, EventId t, bool reflect, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const EventId j = order_[k];
      const EventId u = map_[j];
      const bool s_ji = s_.less(j, i), s_ij = s_.less(i, j);
      const bool t_ut = t_.less(u, t), t_tu = t_.less(t, u);
      if (s_ji && !t_ut) return false;
      if (s_ij && !t_tu) return false;
      if (reflect && (t_ut != s_ji || t_tu != s_ij)) return false;
    }
    return true;
  }

  const Poset &s_;
  const Poset &t_;
  HomMode mode_;
  std::vector<EventSet> cands_;
  std::vector<EventId> order_;
  std::vector<std::vector<EventSet>> box_checks_;
  std::vector<EventId> map_;
  EventSet used_;
};

class ReferenceSearch {
public:
  ReferenceSearch(const Poset &s, const Poset &t, HomMode mode) : s_(s), t_(t), mode_(mode) {}

  std::optional<std::vector<EventId>> run() {
    map_.assign(s_.size(), 0);
    used_ = EventSet{};
    if (search(0)) return map_;
    return std::nullopt;
  }

private:
  bool search(EventId i) {
    if (i == s_.size()) {
      auto m = check_morphism(s_, t_, map_);
      if (!m) return false;
      if (wants_order_reflection(mode_) && !m->order_reflecting) return false;
      if (wants_box_reflection(mode_) && !m->box_reflecting) return false;
      return true;
    }
    for (EventId t = 0; t < t_.size(); ++t) {
      if (used_.contains(t) || s_.label(i) != t_.label(t)) continue;
      map_[i] = t;
      used_.insert(t);
      if (search(i + 1)) return true;
      used_.erase(t);
    }
    return false;
  }

  const Poset &s_;
  const Poset &t_;
  HomMode mode_;
  std::vector<EventId> map_;
  EventSet used_;
};

} // namespace

std::optional<Morphism> check_morphism(const Poset &source, const Poset &target,
                                       std::vector<EventId> map) {
  const std::size_t n = source.size();
  if (target.size() != n || map.size() != n) return std::nullopt;
  EventSet seen;
  for (EventId i = 0; i < n; ++i) {
    if (map[i] >= n || seen.contains(map[i])) return std::nullopt;
    seen.insert(map[i]);
    if (source.label(i) != target.label(map[i])) return std::nullopt;
  }
  for (auto [u, v] : source.order_pairs())
    if (!target.less(map[u], map[v])) return std::nullopt;
  for (EventSet b : source.boxes())
    if (!target.has_box(image(map, b))) return std::nullopt;
  Morphism m;
  m.order_reflecting = source.order_size() == target.order_size();
  m.box_reflecting = source.boxes().size() == target.boxes().size();
  m.map = std::move(map);
  return m;
}

std::optional<Morphism> find_homomorphism(const Poset &source, const Poset &target, HomMode mode,
                                          SearchStrategy strategy) {
  if (source.size() != target.size()) return std::nullopt;
  if (strategy == SearchStrategy::Reference) {
    auto map = ReferenceSearch(source, target, mode).run();
    if (!map) return std::nullopt;
    return check_morphism(source, target, std::move(*map));
  }
  if (!same_label_multiset(source, target)) return std::nullopt;
  if (!counts_admissible(source, target, mode)) return std::nullopt;
  auto map = PrunedSearch(source, target, mode).run();
  if (!map) return std::nullopt;
  return check_morphism(source, target, std::move(*map));
}

bool iso(const Poset &p, const Poset &q) {
  return find_homomorphism(p, q, HomMode::Iso).has_value();
}

bool subsumed_by(const Poset &p, const Poset &q) {
  return find_homomorphism(q, p, HomMode::Any).has_value();
}

std::optional<std::pair<Poset, Poset>> factorize_subsumption(const Poset &p, const Poset &q) {
  auto hom = find_homomorphism(q, p, HomMode::Any);
  if (!hom) return std::nullopt;
  const auto &phi = hom->map;
  std::vector<EventId> inverse(phi.size());
  for (EventId i = 0; i < phi.size(); ++i) inverse[phi[i]] = i;

  std::vector<EventSet> pulled;
  for (EventSet b : p.boxes()) pulled.push_back(image(inverse, b));
  Poset r1 = q.with_boxes(std::move(pulled));

  std::vector<EventSet> pushed;
  for (EventSet b : q.boxes()) pushed.push_back(image(phi, b));
  Poset r2 = p.with_boxes(std::move(pushed));
  return std::pair{std::move(r1), std::move(r2)};
}

} // namespace pombox
