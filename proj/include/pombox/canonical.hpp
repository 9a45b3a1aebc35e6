#pragma once

#include <compare>
#include <functional>
#include <string>

#include "pombox/poset.hpp"

namespace pombox {

/// Isomorphism-invariant encoding of a poset: key(P) == key(Q) iff P ≅ Q.
struct CanonicalKey {
  std::string bytes;

  friend bool operator==(const CanonicalKey &, const CanonicalKey &) = default;
  friend auto operator<=>(const CanonicalKey &, const CanonicalKey &) = default;
};

/// Minimum encoding over all label-compatible relabellings, with the relabellings
/// restricted to an invariant-refined event partition and with interchangeable
/// twin events fixed in ascending order. Exponential in the worst case; meant for
/// posets of about ten events.
CanonicalKey canonical_key(const Poset &p);

/// The relabelled poset whose encoding is the canonical key.
Poset canonical_form(const Poset &p);

} // namespace pombox

template <>
struct std::hash<pombox::CanonicalKey> {
  std::size_t operator()(const pombox::CanonicalKey &k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};
