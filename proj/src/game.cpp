#include "linkrank/game.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "linkrank/error.hpp"

namespace linkrank {
namespace {

// Outcome per solution for player p, flattened in solution order and signed
// so that larger is better.
Eigen::VectorXd merit(const StrategicGame& g, int p) {
  const Eigen::MatrixXd& o = g.outcomes(p);
  Eigen::VectorXd v(o.size());
  Eigen::Index k = 0;
  for (Eigen::Index a = 0; a < o.rows(); ++a) {
    for (Eigen::Index b = 0; b < o.cols(); ++b) v(k++) = o(a, b);
  }
  return g.orientation() == Orientation::Cost ? Eigen::VectorXd(-v) : v;
}

void require_strict(const StrategicGame& g, int p, const Eigen::VectorXd& v) {
  std::vector<double> sorted(v.data(), v.data() + v.size());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::TiedOutcomes, "player '" + g.players()[p] + "' has equal outcomes for two solutions");
  }
}

}  // namespace

StrategicGame::StrategicGame(std::array<std::string, 2> players, std::array<std::vector<std::string>, 2> strategies,
                             std::array<Eigen::MatrixXd, 2> outcomes, Orientation orientation)
    : players_(std::move(players)),
      strategies_(std::move(strategies)),
      outcomes_(std::move(outcomes)),
      orientation_(orientation) {
  if (players_[0].empty() || players_[1].empty() || players_[0] == players_[1]) {
    throw Error(ErrorCode::MalformedGame, "two distinct, non-empty player names are required");
  }
  for (int p = 0; p < 2; ++p) {
    const auto& s = strategies_[p];
    if (s.empty()) throw Error(ErrorCode::MalformedGame, "player '" + players_[p] + "' has no strategies");
    if (std::set<std::string>(s.begin(), s.end()).size() != s.size()) {
      throw Error(ErrorCode::MalformedGame, "player '" + players_[p] + "' repeats a strategy name");
    }
    if (std::any_of(s.begin(), s.end(), [](const std::string& x) { return x.empty(); })) {
      throw Error(ErrorCode::MalformedGame, "strategy names must be non-empty");
    }
  }
  const auto rows = static_cast<Eigen::Index>(strategies_[0].size());
  const auto cols = static_cast<Eigen::Index>(strategies_[1].size());
  for (int p = 0; p < 2; ++p) {
    if (outcomes_[p].rows() != rows || outcomes_[p].cols() != cols) {
      throw Error(ErrorCode::MalformedGame, "outcome table of '" + players_[p] + "' must be " +
                                                std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (!outcomes_[p].allFinite()) {
      throw Error(ErrorCode::MalformedGame, "outcome table of '" + players_[p] + "' has non-finite entries");
    }
  }
}

int StrategicGame::player_index(const std::string& name) const {
  for (int p = 0; p < 2; ++p) {
    if (players_[p] == name) return p;
  }
  throw Error(ErrorCode::UnknownPlayer, "'" + name + "' is not a player");
}

std::vector<Solution> solutions(const StrategicGame& g) {
  std::vector<Solution> out;
  for (const auto& a : g.strategies(0)) {
    for (const auto& b : g.strategies(1)) out.push_back({a, b});
  }
  return out;
}

Tournament preference_order(const StrategicGame& g, const std::string& player) {
  const int p = g.player_index(player);
  const Eigen::VectorXd v = merit(g, p);
  require_strict(g, p, v);

  std::vector<OptionId> labels;
  for (const auto& s : solutions(g)) labels.push_back(s.label());
  const auto n = v.size();
  BeatsMatrix beats(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) beats(i, j) = v(i) > v(j);
  }
  return Tournament(std::move(labels), std::move(beats));
}

std::vector<std::pair<Solution, Solution>> dominating_pairs(const StrategicGame& g) {
  const Eigen::VectorXd first = merit(g, 0);
  const Eigen::VectorXd second = merit(g, 1);
  require_strict(g, 0, first);
  require_strict(g, 1, second);

  const auto sol = solutions(g);
  std::vector<std::pair<Solution, Solution>> pairs;
  for (std::size_t t = 0; t < sol.size(); ++t) {
    for (std::size_t s = 0; s < sol.size(); ++s) {
      const auto ti = static_cast<Eigen::Index>(t);
      const auto si = static_cast<Eigen::Index>(s);
      if (t != s && first(ti) > first(si) && second(ti) > second(si)) pairs.emplace_back(sol[t], sol[s]);
    }
  }
  return pairs;
}

std::vector<Solution> pareto_optimal(const StrategicGame& g) {
  const auto pairs = dominating_pairs(g);
  std::vector<Solution> out;
  for (const auto& s : solutions(g)) {
    const bool dominated =
        std::any_of(pairs.begin(), pairs.end(), [&](const auto& pr) { return pr.second == s; });
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace linkrank
