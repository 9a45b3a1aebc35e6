#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "pombox/canonical.hpp"
#include "pombox/term.hpp"

namespace pombox {

/// Finite set of posets with no two members isomorphic.
class PosetSet {
public:
  PosetSet() = default;

  /// Inserts p unless an isomorphic member exists. Returns true if inserted.
  bool insert(const Poset &p);
  bool contains_iso(const Poset &p) const;

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Poset> &members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

private:
  std::vector<Poset> members_;
  std::unordered_set<CanonicalKey> keys_;
};

/// Interpretation of an SP term. Left operands take the lower event ids.
/// Throws FragmentError on 0 or +.
Poset interp_sp(const Term &s);

/// Interpretation of a general term as a set of posets.
PosetSet interp(const Term &e);

/// The set T_e of SP terms whose interpretations make up interp(e). Structurally
/// equal terms appear once; BSP-equal but distinct terms are kept.
std::vector<Term> expand(const Term &e);

/// Syntactic restriction of an SP term to events of interp_sp(s).
/// Throws std::domain_error if `a` is not a subset of those events.
Term syntactic_restrict(const Term &s, EventSet a);

/// For an SP term whose interpretation carries the full box, a term t with
/// [t] BSP-equal to s and no full box on interp_sp(t). Event-less terms yield One.
std::optional<Term> strip_outer_box(const Term &s);

} // namespace pombox
