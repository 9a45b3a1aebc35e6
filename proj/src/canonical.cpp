#include "pombox/canonical.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace pombox {

namespace {

using Signature = std::vector<long>;

// Iso-invariant partition of the events, as a rank per event. Ranks come from
// sorting signatures, so equal ranks mean equal invariants.
std::vector<long> refine_classes(const Poset &p) {
  const std::size_t n = p.size();
  std::vector<long> rank(n, 0);
  {
    std::vector<std::tuple<Label, std::size_t, std::size_t, std::vector<std::size_t>>> sig(n);
    for (EventId e = 0; e < n; ++e) {
      std::vector<std::size_t> box_sizes;
      for (EventSet b : p.boxes())
        if (b.contains(e)) box_sizes.push_back(b.size());
      std::sort(box_sizes.begin(), box_sizes.end());
      sig[e] = {p.label(e), p.predecessors(e).size(), p.successors(e).size(), std::move(box_sizes)};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (EventId e = 0; e < n; ++e)
      rank[e] = std::lower_bound(sorted.begin(), sorted.end(), sig[e]) - sorted.begin();
  }
  std::size_t classes = 0;
  while (true) {
    std::vector<Signature> sig(n);
    for (EventId e = 0; e < n; ++e) {
      Signature s{rank[e]};
      const auto push_ranks = [&](EventSet set) {
        std::vector<long> r;
        for (EventId f : set) r.push_back(rank[f]);
        std::sort(r.begin(), r.end());
        s.push_back(-1);
        s.insert(s.end(), r.begin(), r.end());
      };
      push_ranks(p.successors(e));
      push_ranks(p.predecessors(e));
      std::vector<Signature> boxes;
      for (EventSet b : p.boxes()) {
        if (!b.contains(e)) continue;
        Signature bs;
        for (EventId f : b) bs.push_back(rank[f]);
        std::sort(bs.begin(), bs.end());
        boxes.push_back(std::move(bs));
      }
      std::sort(boxes.begin(), boxes.end());
      for (auto &bs : boxes) {
        s.push_back(-2);
        s.insert(s.end(), bs.begin(), bs.end());
      }
      sig[e] = std::move(s);
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (EventId e = 0; e < n; ++e)
      rank[e] = std::lower_bound(sorted.begin(), sorted.end(), sig[e]) - sorted.begin();
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }
  return rank;
}

bool twins(const Poset &p, EventId u, EventId v) {
  if (p.label(u) != p.label(v)) return false;
  if (p.predecessors(u) != p.predecessors(v) || p.successors(u) != p.successors(v)) return false;
  for (EventSet b : p.boxes())
    if (b.contains(u) != b.contains(v)) return false;
  return true;
}

std::string encode(const Poset &p, const std::vector<EventId> &perm) {
  const std::size_t n = p.size();
  std::vector<EventId> pos(n);
  for (EventId k = 0; k < n; ++k) pos[perm[k]] = k;
  std::string out;
  out.push_back(static_cast<char>(n));
  for (EventId k = 0; k < n; ++k) {
    out += p.label(perm[k]);
    out.push_back('\0');
  }
  for (EventId k = 0; k < n; ++k) {
    std::uint64_t row = 0;
    for (EventId f : p.successors(perm[k])) row |= std::uint64_t{1} << pos[f];
    for (int byte = 0; byte < 8; ++byte) out.push_back(static_cast<char>((row >> (56 - 8 * byte)) & 0xff));
  }
  std::vector<std::uint64_t> boxes;
  for (EventSet b : p.boxes()) {
    std::uint64_t m = 0;
    for (EventId e : b) m |= std::uint64_t{1} << pos[e];
    boxes.push_back(m);
  }
  std::sort(boxes.begin(), boxes.end());
  out.push_back('|');
  for (auto m : boxes)
    for (int byte = 0; byte < 8; ++byte) out.push_back(static_cast<char>((m >> (56 - 8 * byte)) & 0xff));
  return out;
}

struct Best {
  std::string bytes;
  std::vector<EventId> perm;
  bool set = false;
};

struct ClassPlan {
  std::vector<int> groups;                     // twin-group id per slot, permuted
  std::vector<std::vector<EventId>> members;   // events of each twin group, ascending
};

void enumerate(const Poset &p, std::vector<ClassPlan> &plans, std::size_t ci,
               std::vector<EventId> &perm, Best &best) {
  if (ci == plans.size()) {
    std::string enc = encode(p, perm);
    if (!best.set || enc < best.bytes) {
      best.bytes = std::move(enc);
      best.perm = perm;
      best.set = true;
    }
    return;
  }
  ClassPlan &plan = plans[ci];
  std::sort(plan.groups.begin(), plan.groups.end());
  const std::size_t start = perm.size();
  do {
    perm.resize(start);
    std::vector<std::size_t> next(plan.members.size(), 0);
    for (int g : plan.groups) perm.push_back(plan.members[g][next[g]++]);
    enumerate(p, plans, ci + 1, perm, best);
  } while (std::next_permutation(plan.groups.begin(), plan.groups.end()));
  perm.resize(start);
}

Best minimize(const Poset &p) {
  const std::size_t n = p.size();
  const auto rank = refine_classes(p);
  std::map<long, std::vector<EventId>> by_rank;
  for (EventId e = 0; e < n; ++e) by_rank[rank[e]].push_back(e);

  std::vector<ClassPlan> plans;
  for (auto &[r, events] : by_rank) {
    ClassPlan plan;
    for (EventId e : events) {
      bool placed = false;
      for (std::size_t g = 0; g < plan.members.size(); ++g) {
        if (twins(p, plan.members[g].front(), e)) {
          plan.members[g].push_back(e);
          plan.groups.push_back(static_cast<int>(g));
          placed = true;
          break;
        }
      }
      if (!placed) {
        plan.groups.push_back(static_cast<int>(plan.members.size()));
        plan.members.push_back({e});
      }
    }
    plans.push_back(std::move(plan));
  }
  Best best;
  std::vector<EventId> perm;
  perm.reserve(n);
  enumerate(p, plans, 0, perm, best);
  return best;
}

} // namespace

CanonicalKey canonical_key(const Poset &p) { return CanonicalKey{minimize(p).bytes}; }

Poset canonical_form(const Poset &p) {
  const Best best = minimize(p);
  const std::size_t n = p.size();
  std::vector<EventId> pos(n);
  for (EventId k = 0; k < n; ++k) pos[best.perm[k]] = k;
  std::vector<Label> labels(n);
  std::vector<EventSet> succ(n);
  for (EventId k = 0; k < n; ++k) {
    labels[k] = p.label(best.perm[k]);
    for (EventId f : p.successors(best.perm[k])) succ[k].insert(pos[f]);
  }
  std::vector<EventSet> boxes;
  for (EventSet b : p.boxes()) {
    EventSet m;
    for (EventId e : b) m.insert(pos[e]);
    boxes.push_back(m);
  }
  return Poset::from_closed(std::move(labels), std::move(succ), std::move(boxes));
}

} // namespace pombox
