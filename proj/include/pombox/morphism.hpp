#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pombox/poset.hpp"

namespace pombox {

/// A label-preserving bijection that maps order into order and boxes into boxes.
struct Morphism {
  std::vector<EventId> map;  // source event -> target event
  bool order_reflecting = false;
  bool box_reflecting = false;

  bool is_iso() const { return order_reflecting && box_reflecting; }
};

enum class HomMode { Any, OrderReflecting, BoxReflecting, Iso };

/// Pruned is the production search. Reference enumerates every label-compatible
/// bijection and checks it at the leaves; it exists for differential testing.
enum class SearchStrategy { Pruned, Reference };

/// Finds a homomorphism source -> target of the requested mode, if one exists.
/// The search is exhaustive.
std::optional<Morphism> find_homomorphism(const Poset &source, const Poset &target, HomMode mode,
                                          SearchStrategy strategy = SearchStrategy::Pruned);

/// Checks that `map` is a homomorphism source -> target and fills the flags.
std::optional<Morphism> check_morphism(const Poset &source, const Poset &target,
                                       std::vector<EventId> map);

bool iso(const Poset &p, const Poset &q);
/// P ⊑ Q: P carries at least Q's order and boxes, i.e. there is a hom Q -> P.
bool subsumed_by(const Poset &p, const Poset &q);

/// For P ⊑ Q returns (R1, R2) with P ⊑° R1 ⊑ᵇ Q and P ⊑ᵇ R2 ⊑° Q, where ⊑ᵇ has an
/// order-reflecting witness and ⊑° a box-reflecting one.
///
/// R1 keeps Q's events and order and takes the preimages of P's boxes; R2 keeps
/// P's events and order and takes the images of Q's boxes.
std::optional<std::pair<Poset, Poset>> factorize_subsumption(const Poset &p, const Poset &q);

} // namespace pombox
