#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace linkrank {

using OptionId = std::string;
using OptionPair = std::pair<OptionId, OptionId>;

// Dense adjacency: entry (i, j) is true when option i beats option j.
using BeatsMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

// A complete, antisymmetric, possibly intransitive relation over named
// options. Immutable after construction; the reachability closure is
// computed once in the constructor.
class Tournament {
 public:
  // beats(i, j) holds exactly for the listed pairs. Every unordered pair
  // must appear once, in one orientation.
  Tournament(std::vector<OptionId> options, const std::vector<OptionPair>& beats_pairs);

  // Index-based form; `beats` must be irreflexive with exactly one of
  // (i, j), (j, i) set for each i != j.
  Tournament(std::vector<OptionId> options, BeatsMatrix beats);

  std::size_t size() const noexcept { return options_.size(); }
  const std::vector<OptionId>& options() const noexcept { return options_; }
  const OptionId& option(std::size_t i) const { return options_.at(i); }

  bool contains(const OptionId& id) const { return index_.count(id) != 0; }
  // Throws UnknownOption.
  std::size_t index_of(const OptionId& id) const;

  bool beats(std::size_t i, std::size_t j) const { return beats_(i, j); }
  bool beats(const OptionId& i, const OptionId& j) const;

  // Direct-or-indirect precedence; reflexive.
  bool reaches(std::size_t i, std::size_t j) const { return closure_(i, j); }
  bool reaches(const OptionId& i, const OptionId& j) const;

  const BeatsMatrix& adjacency() const noexcept { return beats_; }
  const BeatsMatrix& closure() const noexcept { return closure_; }

  // The list of beats pairs in option order, suitable for serialization.
  std::vector<OptionPair> beats_pairs() const;

  // Same relation over the same option set (option order may differ).
  bool same_relation(const Tournament& other) const;

 private:
  void index_options();
  void validate_complete() const;
  void compute_closure();

  std::vector<OptionId> options_;
  std::unordered_map<OptionId, std::size_t> index_;
  BeatsMatrix beats_;
  BeatsMatrix closure_;
};

Tournament build_tournament(std::vector<OptionId> options, const std::vector<OptionPair>& beats_pairs);

// True when both lists hold the same options, ignoring order.
bool same_option_set(const std::vector<OptionId>& a, const std::vector<OptionId>& b);

}  // namespace linkrank
