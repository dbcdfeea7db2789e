#include "linkrank/tournament.hpp"

#include <algorithm>

#include "linkrank/error.hpp"

namespace linkrank {

Tournament::Tournament(std::vector<OptionId> options, const std::vector<OptionPair>& beats_pairs)
    : options_(std::move(options)) {
  index_options();
  const auto n = static_cast<Eigen::Index>(options_.size());
  beats_ = BeatsMatrix::Constant(n, n, false);
  for (const auto& [winner, loser] : beats_pairs) {
    const auto i = static_cast<Eigen::Index>(index_of(winner));
    const auto j = static_cast<Eigen::Index>(index_of(loser));
    if (i == j) throw Error(ErrorCode::SelfPair, "option '" + winner + "' paired with itself");
    if (beats_(j, i) || beats_(i, j)) {
      throw Error(ErrorCode::Conflict, "pair {'" + winner + "', '" + loser + "'} listed more than once");
    }
    beats_(i, j) = true;
  }
  validate_complete();
  compute_closure();
}

Tournament::Tournament(std::vector<OptionId> options, BeatsMatrix beats)
    : options_(std::move(options)), beats_(std::move(beats)) {
  index_options();
  const auto n = static_cast<Eigen::Index>(options_.size());
  if (beats_.rows() != n || beats_.cols() != n) {
    throw Error(ErrorCode::Incomplete, "adjacency shape does not match option count");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (beats_(i, i)) throw Error(ErrorCode::SelfPair, "option '" + options_[i] + "' beats itself");
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (beats_(i, j) && beats_(j, i)) {
        throw Error(ErrorCode::Conflict, "'" + options_[i] + "' and '" + options_[j] + "' beat each other");
      }
    }
  }
  validate_complete();
  compute_closure();
}

void Tournament::index_options() {
  if (options_.empty()) throw Error(ErrorCode::EmptyTournament, "a tournament needs at least one option");
  for (std::size_t k = 0; k < options_.size(); ++k) {
    if (options_[k].empty()) throw Error(ErrorCode::UnknownOption, "option names must be non-empty");
    if (!index_.emplace(options_[k], k).second) {
      throw Error(ErrorCode::DuplicateOption, "option '" + options_[k] + "' listed twice");
    }
  }
}

void Tournament::validate_complete() const {
  const auto n = beats_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (!beats_(i, j) && !beats_(j, i)) {
        throw Error(ErrorCode::Incomplete, "no verdict for pair {'" + options_[i] + "', '" + options_[j] + "'}");
      }
    }
  }
}

// Warshall over the boolean adjacency, seeded with the identity.
void Tournament::compute_closure() {
  const auto n = beats_.rows();
  closure_ = beats_;
  closure_.diagonal().setConstant(true);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!closure_(i, k)) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        closure_(i, j) = closure_(i, j) || closure_(k, j);
      }
    }
  }
}

std::size_t Tournament::index_of(const OptionId& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::UnknownOption, "'" + id + "' is not an option");
  return it->second;
}

bool Tournament::beats(const OptionId& i, const OptionId& j) const {
  return beats(index_of(i), index_of(j));
}

bool Tournament::reaches(const OptionId& i, const OptionId& j) const {
  return reaches(index_of(i), index_of(j));
}

std::vector<OptionPair> Tournament::beats_pairs() const {
  std::vector<OptionPair> pairs;
  const auto n = beats_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (beats_(i, j)) pairs.emplace_back(options_[i], options_[j]);
    }
  }
  return pairs;
}

bool Tournament::same_relation(const Tournament& other) const {
  if (!same_option_set(options_, other.options_)) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (i != j && beats(i, j) != other.beats(options_[i], options_[j])) return false;
    }
  }
  return true;
}

Tournament build_tournament(std::vector<OptionId> options, const std::vector<OptionPair>& beats_pairs) {
  return Tournament(std::move(options), beats_pairs);
}

bool same_option_set(const std::vector<OptionId>& a, const std::vector<OptionId>& b) {
  if (a.size() != b.size()) return false;
  auto sa = a;
  auto sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

}  // namespace linkrank
