#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <vector>

namespace pombox {

/// Dense event identifier, local to one Poset.
using EventId = std::uint32_t;

/// Upper bound on events per poset; sets of events are single machine words.
inline constexpr std::size_t kMaxEvents = 64;

/// A set of events of one poset, stored as a bitmask.
class EventSet {
public:
  constexpr EventSet() = default;
  constexpr explicit EventSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr EventSet all(std::size_t n) {
    return EventSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr EventSet single(EventId e) { return EventSet(std::uint64_t{1} << e); }

  template <typename Range>
  static EventSet of(const Range &ids) {
    EventSet s;
    for (auto e : ids) s.insert(static_cast<EventId>(e));
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(EventId e) const { return (bits_ >> e) & 1u; }
  constexpr void insert(EventId e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(EventId e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr bool subset_of(EventSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(EventSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr EventId first() const { return static_cast<EventId>(std::countr_zero(bits_)); }

  friend constexpr EventSet operator|(EventSet a, EventSet b) { return EventSet(a.bits_ | b.bits_); }
  friend constexpr EventSet operator&(EventSet a, EventSet b) { return EventSet(a.bits_ & b.bits_); }
  friend constexpr EventSet operator-(EventSet a, EventSet b) { return EventSet(a.bits_ & ~b.bits_); }
  constexpr EventSet &operator|=(EventSet o) { bits_ |= o.bits_; return *this; }
  constexpr EventSet &operator&=(EventSet o) { bits_ &= o.bits_; return *this; }
  constexpr EventSet &operator-=(EventSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(EventSet a, EventSet b) = default;
  /// Orders by raw bitmask; used only for storage order, not for subset order.
  friend constexpr auto operator<=>(EventSet a, EventSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = EventId;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = EventId;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr EventId operator*() const { return static_cast<EventId>(std::countr_zero(rest_)); }
    constexpr iterator &operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator a, iterator b) = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<EventId> to_vector() const { return {begin(), end()}; }

private:
  std::uint64_t bits_ = 0;
};

/// Calls fn(sub) for every subset of `mask`, including the empty set and mask itself.
template <typename Fn>
void for_each_subset(EventSet mask, Fn &&fn) {
  std::uint64_t m = mask.bits();
  std::uint64_t s = 0;
  while (true) {
    fn(EventSet(s));
    if (s == m) break;
    s = (s - m) & m;
  }
}

/// Subsets of `mask` in ascending cardinality, lexicographic on sorted ids within
/// one cardinality. Deterministic witness order for search procedures.
std::vector<EventSet> ordered_subsets(EventSet mask);

} // namespace pombox
