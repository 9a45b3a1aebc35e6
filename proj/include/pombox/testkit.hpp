#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <json.hpp>

#include "pombox/sat_oracle.hpp"

namespace pombox {

struct GenConfig {
  std::size_t max_events = 4;
  std::size_t max_box_attempts = 2;
  std::size_t alphabet_size = 3;
  std::size_t term_depth = 3;
  std::size_t formula_depth = 3;
  std::uint64_t seed = 1;
};

/// Seeded generator with a platform-independent stream: mt19937_64 is fully
/// specified, and ranges are reduced by modulo rather than through a
/// library distribution.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform-ish in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <typename T>
  void shuffle(std::vector<T> &v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

private:
  std::mt19937_64 eng_;
};

/// "a", "b", ... up to the alphabet size.
Label gen_label(const GenConfig &cfg, Rng &rng);

/// Random DAG on a random event order, transitively closed, plus boxes. Most
/// boxes are intervals of the event order; some are arbitrary subsets, so both
/// SP and non-SP posets occur.
Poset gen_poset(const GenConfig &cfg, Rng &rng);
Term gen_sp_term(const GenConfig &cfg, Rng &rng);
Term gen_term(const GenConfig &cfg, Rng &rng);
Formula gen_formula(const GenConfig &cfg, Rng &rng, bool positive_only);

struct Discrepancy {
  Poset poset;
  Formula formula;
  Relation relation = Relation::Iso;
  /// Oracle answer.
  bool expected = false;
  /// Engine answer.
  bool actual = false;
  bool shrunk = false;
};

nlohmann::json discrepancy_to_json(const Discrepancy &d);

struct DifferentialReport {
  std::vector<Discrepancy> discrepancies;
  std::size_t compared = 0;
  std::size_t unknown = 0;
};

/// Compares the engine (with `opts`) against the oracle on n_cases random
/// (poset, formula) pairs for relation r. Unknown oracle answers are skipped.
DifferentialReport differential_run(const GenConfig &cfg, std::size_t n_cases, Relation r,
                                    SatOptions opts = {}, OracleCaps caps = {});

/// Greedily removes events, boxes, order edges and formula nodes while the
/// mismatch persists.
Discrepancy shrink(const Discrepancy &d, SatOptions opts = {}, OracleCaps caps = {});

} // namespace pombox
