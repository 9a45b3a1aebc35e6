#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pombox/event_set.hpp"

namespace pombox {

using Label = std::string;

/// Raised when a poset would violate its invariants (cycle, empty box, bad id).
class PosetError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A finite labelled strict partial order together with a set of non-empty boxes.
///
/// Events are the dense ids 0..size()-1. The order is kept transitively closed,
/// so `less(e, f)` is a single bit test. Boxes are kept sorted and duplicate-free.
/// Values are immutable once built; every constructor checks the invariants.
class Poset {
public:
  /// The empty poset.
  Poset() = default;

  static Poset unit() { return {}; }
  static Poset atom(Label label);

  /// Builds a poset from arbitrary DAG edges, taking their transitive closure.
  /// Throws PosetError on out-of-range ids, self loops, cycles, or empty boxes.
  /// Duplicate boxes are merged.
  static Poset from_edges(std::vector<Label> labels,
                          std::span<const std::pair<EventId, EventId>> edges,
                          std::span<const EventSet> boxes);

  /// Builds from an already closed successor relation. Used by the enumerators and
  /// by restriction; still validated.
  static Poset from_closed(std::vector<Label> labels, std::vector<EventSet> successors,
                           std::vector<EventSet> boxes);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  EventSet events() const { return EventSet::all(size()); }

  const Label &label(EventId e) const { return labels_[e]; }
  const std::vector<Label> &labels() const { return labels_; }

  bool less(EventId e, EventId f) const { return succ_[e].contains(f); }
  EventSet successors(EventId e) const { return succ_[e]; }
  EventSet predecessors(EventId e) const { return pred_[e]; }
  const std::vector<EventSet> &successor_rows() const { return succ_; }

  /// Number of pairs in the strict order.
  std::size_t order_size() const;
  std::vector<std::pair<EventId, EventId>> order_pairs() const;
  /// Covering pairs (transitive reduction).
  std::vector<std::pair<EventId, EventId>> covering_pairs() const;

  const std::vector<EventSet> &boxes() const { return boxes_; }
  bool has_box(EventSet b) const;
  bool has_full_box() const { return !empty() && has_box(events()); }
  /// Number of boxes containing e.
  std::size_t box_count(EventId e) const;

  /// Same events and order, with the box equal to the whole event set removed.
  Poset without_full_box() const;
  /// Same events and order, with the given box set (validated).
  Poset with_boxes(std::vector<EventSet> boxes) const;

  friend bool operator==(const Poset &, const Poset &) = default;

private:
  void validate_and_normalize();

  std::vector<Label> labels_;
  std::vector<EventSet> succ_;
  std::vector<EventSet> pred_;
  std::vector<EventSet> boxes_;
};

Poset seq(const Poset &p, const Poset &q);
Poset par(const Poset &p, const Poset &q);
/// Adds the full event set as a box. boxed(unit) is unit; re-adding is a no-op.
Poset boxed(const Poset &p);

/// Restriction to `a`, re-indexed densely in ascending id order. Only boxes that
/// lie entirely inside `a` survive. Throws std::domain_error if a is not a subset.
Poset restrict(const Poset &p, EventSet a);

struct SubsetClass {
  bool nontrivial = false;
  bool nested = false;
  bool prefix = false;
  bool isolated = false;
  /// No event outside the set precedes an event inside it.
  bool downset = false;
};

SubsetClass classify_subset(const Poset &p, EventSet a);

bool is_nested(const Poset &p, EventSet a);
bool is_prefix(const Poset &p, EventSet a);
bool is_isolated(const Poset &p, EventSet a);
bool is_downset(const Poset &p, EventSet a);

enum class SplitMode { Seq, Par };

/// True iff P decomposes along `a`: seq mode checks prefix and nested, par mode
/// checks isolated and nested.
bool split_check(const Poset &p, EventSet a, SplitMode mode);

} // namespace pombox
