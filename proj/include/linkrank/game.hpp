#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "linkrank/tournament.hpp"

namespace linkrank {

// Cost outcomes (e.g. years of imprisonment) prefer lower values; utility
// outcomes prefer higher ones.
enum class Orientation { Cost, Utility };

// A joint choice, one strategy per player.
struct Solution {
  std::string first;
  std::string second;

  // Concatenated labels, first player first: "CS".
  std::string label() const { return first + second; }
  bool operator==(const Solution&) const = default;
};

// Two-player strategic-form game. outcomes[p](a, b) is player p's outcome
// when the first player plays strategies[0][a] and the second plays
// strategies[1][b].
class StrategicGame {
 public:
  // Throws MalformedGame on empty strategy lists, duplicate names, shape
  // mismatches or non-finite outcomes. Ties are reported lazily by the
  // analyses (TiedOutcomes).
  StrategicGame(std::array<std::string, 2> players, std::array<std::vector<std::string>, 2> strategies,
                std::array<Eigen::MatrixXd, 2> outcomes, Orientation orientation);

  const std::array<std::string, 2>& players() const noexcept { return players_; }
  const std::vector<std::string>& strategies(int player) const { return strategies_.at(player); }
  const Eigen::MatrixXd& outcomes(int player) const { return outcomes_.at(player); }
  Orientation orientation() const noexcept { return orientation_; }

  // Throws UnknownPlayer.
  int player_index(const std::string& name) const;

 private:
  std::array<std::string, 2> players_;
  std::array<std::vector<std::string>, 2> strategies_;
  std::array<Eigen::MatrixXd, 2> outcomes_;
  Orientation orientation_;
};

// Cartesian product, first player's strategy varying slowest.
std::vector<Solution> solutions(const StrategicGame& g);

// Total order over solution labels, better outcome first. Throws
// UnknownPlayer, TiedOutcomes.
Tournament preference_order(const StrategicGame& g, const std::string& player);

// Every (t, s) with t strictly better than s for both players.
std::vector<std::pair<Solution, Solution>> dominating_pairs(const StrategicGame& g);

// Solutions not dominated by any other, in solution order.
std::vector<Solution> pareto_optimal(const StrategicGame& g);

}  // namespace linkrank
