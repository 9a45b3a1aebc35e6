#include <doctest.h>

#include "helpers.hpp"
#include "pombox/morphism.hpp"
#include "pombox/testkit.hpp"

using namespace test;

TEST_CASE("unit and atom") {
  CHECK(Poset::unit().size() == 0);
  CHECK(Poset::unit().boxes().empty());
  const Poset a = Poset::atom("a");
  CHECK(a.size() == 1);
  CHECK(a.label(0) == "a");
  CHECK_FALSE(brute_iso(a, Poset::atom("b")));
}

TEST_CASE("from_edges closes and validates") {
  const Poset p = mk({"a", "b", "c"}, {{0, 1}, {1, 2}});
  CHECK(p.less(0, 2));
  CHECK(p.order_size() == 3);
  CHECK(p.covering_pairs().size() == 2);
  CHECK_THROWS_AS(mk({"a", "b"}, {{0, 1}, {1, 0}}), PosetError);
  CHECK_THROWS_AS(mk({"a"}, {{0, 0}}), PosetError);
  CHECK_THROWS_AS(mk({"a"}, {{0, 3}}), PosetError);
  CHECK_THROWS_AS(mk({"a"}, {}, {EventSet()}), PosetError);
  CHECK(mk({"a", "b"}, {}, {ev({0, 1}), ev({0, 1})}).boxes().size() == 1);
}

TEST_CASE("seq and par") {
  const Poset s = seq(Poset::atom("a"), Poset::atom("b"));
  CHECK(s.size() == 2);
  CHECK(s.order_pairs() == std::vector<std::pair<EventId, EventId>>{{0, 1}});
  const Poset p = par(Poset::atom("a"), Poset::atom("b"));
  CHECK(p.size() == 2);
  CHECK(p.order_size() == 0);
}

TEST_CASE("unit laws and box laws on random posets") {
  GenConfig cfg;
  cfg.max_events = 5;
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const Poset p = gen_poset(cfg, rng);
    CHECK(brute_iso(seq(p, Poset::unit()), p));
    CHECK(brute_iso(seq(Poset::unit(), p), p));
    CHECK(brute_iso(par(p, Poset::unit()), p));
    CHECK(boxed(boxed(p)) == boxed(p));
    CHECK(brute_iso(restrict(p, p.events()), p));
    CHECK(restrict(p, EventSet()).empty());
  }
}

TEST_CASE("boxed") {
  CHECK(boxed(Poset::atom("a")).boxes() == std::vector<EventSet>{ev({0})});
  CHECK(boxed(Poset::unit()).empty());
  CHECK(boxed(Poset::unit()).boxes().empty());
}

TEST_CASE("restriction cuts straddling boxes") {
  // [a;b];c restricted to the a and c events.
  const Poset p = sp("[a;b];c");
  const Poset r = restrict(p, ev({0, 2}));
  CHECK(r.size() == 2);
  CHECK(r.label(0) == "a");
  CHECK(r.label(1) == "c");
  CHECK(r.less(0, 1));
  CHECK(r.boxes().empty());
  CHECK_THROWS_AS(restrict(p, ev({5})), std::domain_error);
}

TEST_CASE("subset classification") {
  const SubsetClass ab = classify_subset(sp("a;b"), ev({0}));
  CHECK(ab.prefix);
  CHECK(ab.nested);
  CHECK(ab.nontrivial);
  CHECK_FALSE(ab.isolated);

  const SubsetClass par = classify_subset(sp("a|b"), ev({0}));
  CHECK(par.isolated);
  CHECK(par.nested);

  CHECK_FALSE(is_nested(sp("[a;b]"), ev({0})));
  CHECK(is_nested(sp("[a;b]"), ev({0, 1})));
  CHECK(is_nested(sp("[a;b]"), EventSet()));
  CHECK(is_downset(sp("a;b"), ev({0})));
  CHECK_FALSE(is_downset(sp("a;b"), ev({1})));
  CHECK_FALSE(classify_subset(sp("a;b"), ev({0, 1})).nontrivial);
}

TEST_CASE("split_check") {
  CHECK(split_check(sp("a;b"), ev({0}), SplitMode::Seq));
  CHECK_FALSE(split_check(sp("a;b"), ev({1}), SplitMode::Seq));
  CHECK_FALSE(split_check(sp("[a|b]"), ev({0}), SplitMode::Par));
  // Independent confirmation: [a|b] is not the parallel product of its parts.
  const Poset p = sp("[a|b]");
  CHECK_FALSE(brute_iso(p, par(restrict(p, ev({0})), restrict(p, ev({1})))));
}

TEST_CASE("split_check agrees with explicit recomposition") {
  GenConfig cfg;
  cfg.max_events = 5;
  Rng rng(11);
  for (int i = 0; i < 150; ++i) {
    const Poset p = gen_poset(cfg, rng);
    for_each_subset(p.events(), [&](EventSet a) {
      const Poset l = restrict(p, a), r = restrict(p, p.events() - a);
      const auto m = split_map(p, a);
      CHECK(split_check(p, a, SplitMode::Seq) == hom_via(p, seq(l, r), m, true));
      CHECK(split_check(p, a, SplitMode::Par) == hom_via(p, par(l, r), m, true));
    });
  }
}

TEST_CASE("ordered_subsets is by size then lexicographic") {
  const auto subs = ordered_subsets(EventSet::all(3));
  REQUIRE(subs.size() == 8);
  CHECK(subs[0].empty());
  CHECK(subs[1] == ev({0}));
  CHECK(subs[3] == ev({2}));
  CHECK(subs[4] == ev({0, 1}));
  CHECK(subs[7] == EventSet::all(3));
}
