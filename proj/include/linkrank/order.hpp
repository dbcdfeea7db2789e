#pragma once

#include <optional>
#include <vector>

#include "linkrank/tournament.hpp"

namespace linkrank {

// A strict total order of options, most preferred first.
struct Ranking {
  std::vector<OptionId> order;

  bool operator==(const Ranking&) const = default;
};

struct NaturalityReport {
  bool natural = true;
  // (i, j): i is ranked above j but i does not reach j.
  std::vector<OptionPair> violations;
};

// Throws UnknownOption.
bool reaches(const Tournament& t, const OptionId& i, const OptionId& j);

std::optional<OptionId> condorcet_winner(const Tournament& t);
std::optional<OptionId> condorcet_loser(const Tournament& t);

// Insertion construction: options are taken in the tournament's option
// order, and each is placed before the first already-placed option it
// beats, or appended if it beats none. Every consecutive pair of the result
// is a direct win.
Ranking hamilton_path(const Tournament& t);

// Throws OptionSetMismatch when r is not a permutation of t's options.
NaturalityReport is_natural(const Ranking& r, const Tournament& t);

// The transitive tournament induced by a ranking (earlier beats later).
Tournament total_order(const Ranking& r);

}  // namespace linkrank
