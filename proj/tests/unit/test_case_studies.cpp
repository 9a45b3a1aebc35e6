#include <doctest.h>

#include "helpers.hpp"
#include "pombox/case_studies.hpp"
#include "pombox/sat_oracle.hpp"

using namespace test;

TEST_CASE("voting terms") {
  const PosetSet one = interp(build_voting(1, 1));
  REQUIRE(one.size() == 1);
  CHECK(one.members()[0].size() == 5);
  CHECK(brute_iso(one.members()[0], sp("[choose_1_1;read_1;inc;write_1];send_1")));
  CHECK(interp(build_voting(2, 2)).size() == 4);
  CHECK(interp(build_voting(2, 3, false)).size() == 9);
  CHECK(render_term(voting_publish(3)) == "send_1 | send_2 | send_3");
}

TEST_CASE("voting formulas") {
  CHECK(voting_conflict(2) == parse_formula("<>((read_2 || read_2) |> (write_2 || write_2))"));
  CHECK(voting_seqsep(2, 1) == parse_formula("<>~(send_1 \\/ send_2) |> <>~(choose_1_1 \\/ choose_2_1)"));
  CHECK(voting_votethensend(2, 2) ==
        parse_formula("<>((choose_1_1 \\/ choose_1_2) |> send_1 || (choose_2_1 \\/ choose_2_2) |> send_2)"));
  CHECK(voting_unique_votes(1) == parse_formula("<>[<>(write_1 || write_1)]"));
  CHECK(voting_frame_phi(2) == parse_formula("~(emp \\/ <>[<>(write_1 \\/ write_2)])"));
  CHECK(voting_frame_target(1) == parse_formula("<>(write_1 |> write_1) |> [~(emp \\/ <>[<>write_1])]"));
}

TEST_CASE("counter run against the conflict formula") {
  // The context modality picks the four accesses; the remaining check is on
  // the chain rx < ry < wx < wy, small enough for the brute-force oracle.
  const Poset run = counter_linearized_run();
  const Poset accesses = restrict(run, ev({1, 2, 5, 6}));
  CHECK(accesses.labels() == std::vector<Label>{"rx", "ry", "wx", "wy"});
  const Formula body = parse_formula("(rx||ry)|>(wx||wy)");
  // Under ⊒ a witness can only add order, so rx < ry blocks the split.
  CHECK(sat_oracle(accesses, body, Relation::RevSubsume) == OracleVerdict::False);
  CHECK(sat_oracle(accesses, body, Relation::Subsume) == OracleVerdict::True);
  CHECK_FALSE(sat(run, counter_conflict(), Relation::RevSubsume));
  CHECK(sat(run, counter_conflict(), Relation::Subsume));
}

TEST_CASE("boxed counter against the conflict formula") {
  // Restricting to the four accesses cuts both increment boxes.
  const Poset boxed_counter = interp_sp(build_counter(true));
  const Poset accesses = restrict(boxed_counter, ev({1, 3, 4, 6}));
  CHECK(accesses.boxes().empty());
  CHECK(brute_iso(accesses, sp("rx;wx | ry;wy")));
  CHECK(sat_oracle(accesses, parse_formula("(rx||ry)|>(wx||wy)"), Relation::RevSubsume, {4, 2, 0}) == OracleVerdict::True);
  CHECK(sat(boxed_counter, counter_conflict(), Relation::RevSubsume));
}

TEST_CASE("voting study rows") {
  const auto rows = voting_study(2, 2);
  REQUIRE(rows.size() == 10);
  const auto row = [&](const std::string &name) {
    for (const auto &r : rows)
      if (r.name == name) return r;
    FAIL("missing row " << name);
    return rows[0];
  };
  CHECK(row("VoteProc' |=rev,some conflict_j (every j)").actual);
  CHECK(row("VoteProc |=iso,all seqsep").actual);
  CHECK(row("VoteProc |=sub,all votethensend").actual);
  CHECK_FALSE(row("VoteProc |=sub,some unique-votes").actual);
  CHECK(row("[Publish] |=iso,all [phi]").actual);
  CHECK_FALSE(row("[Choose] |=iso,all <>(W|>W)").actual);
  CHECK_FALSE(row("[Choose];[Publish] |=iso,all <>(W|>W)|>[phi]").actual);
}

TEST_CASE("a boxed vote is not independent of the frame formula") {
  // A single boxed vote restricted to itself keeps its box, and its unboxed
  // body is a non-empty chain without boxes, so it satisfies phi.
  const Poset vote = sp("[choose_1_1;read_1;inc;write_1]");
  const Formula phi = voting_frame_phi(1);
  CHECK(sat(vote.without_full_box(), phi, Relation::Iso));
  CHECK(sat(vote, Formula::box(phi), Relation::Iso));
  CHECK_FALSE(independent(vote, phi, Relation::Iso));
}
