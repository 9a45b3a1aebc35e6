#pragma once

#include <string>
#include <vector>

#include "pombox/morphism.hpp"
#include "pombox/sat.hpp"

namespace pombox {

/// print;(rx;ix;wx | ry;iy;wy);print, with the two branches boxed if requested.
Term build_counter(bool boxed);
/// The faulty interleaving print, rx, ry, ix, iy, wx, wy, print as a chain.
Poset counter_linearized_run();
/// Both reads before both writes: <>((rx||ry)|>(wx||wy)).
Formula counter_conflict();

/// Voting protocol with n voters and k counters. Labels: choose_i_j, read_j,
/// inc, write_j, send_i (1-based). boxed=false gives the faulty variant.
Term build_voting(std::size_t n, std::size_t k, bool boxed = true);
Term voting_choose(std::size_t n, std::size_t k, bool boxed = true);
Term voting_publish(std::size_t n);

Formula voting_conflict(std::size_t j);
Formula voting_seqsep(std::size_t n, std::size_t k);
Formula voting_votethensend(std::size_t n, std::size_t k);
Formula voting_unique_votes(std::size_t k);
/// Some write: write_1 \/ ... \/ write_k.
Formula voting_write_any(std::size_t k);
/// Non-empty, with no box around a write: ~(emp \/ <>[<>W]).
Formula voting_frame_phi(std::size_t k);
/// <>(W |> W) |> [phi]
Formula voting_frame_target(std::size_t k);

struct CaseCheck {
  std::string name;
  /// The published verdict.
  bool expected = false;
  bool actual = false;
  bool pass() const { return expected == actual; }
};

std::vector<CaseCheck> counter_study();
std::vector<CaseCheck> voting_study(std::size_t n, std::size_t k);

} // namespace pombox
