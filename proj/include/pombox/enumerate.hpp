#pragma once

#include <functional>
#include <vector>

#include "pombox/poset.hpp"

namespace pombox {

/// Visitor for the enumerators; return false to stop early.
using PosetVisitor = std::function<bool(const Poset &)>;

/// Every poset with P's events and labels whose order is a transitively closed
/// subset of P's order and whose boxes are a subset of P's boxes. These are
/// exactly the Q with P ⊑ Q, up to isomorphism. Returns false if stopped early.
bool for_each_weakening(const Poset &p, const PosetVisitor &visit);
std::vector<Poset> weakenings(const Poset &p);

/// Fixed order, every subset of P's boxes.
bool for_each_box_weakening(const Poset &p, const PosetVisitor &visit);
std::vector<Poset> box_weakenings(const Poset &p);

/// Every poset with P's events and labels whose order is a partial order
/// containing P's and whose boxes extend P's by at most `max_new_boxes` further
/// non-empty subsets. Every result Q satisfies Q ⊑ P. Exponential; intended for
/// at most four or five events.
bool for_each_strengthening(const Poset &p, std::size_t max_new_boxes, const PosetVisitor &visit);
std::vector<Poset> strengthenings(const Poset &p, std::size_t max_new_boxes);

/// All strict partial orders on P's events containing P's order, as closed rows.
std::vector<std::vector<EventSet>> order_extensions(const Poset &p);

} // namespace pombox
