#include "linkrank/order.hpp"

#include "linkrank/error.hpp"

namespace linkrank {

bool reaches(const Tournament& t, const OptionId& i, const OptionId& j) { return t.reaches(i, j); }

std::optional<OptionId> condorcet_winner(const Tournament& t) {
  const auto n = static_cast<Eigen::Index>(t.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (t.adjacency().row(i).count() == n - 1) return t.option(i);
  }
  return std::nullopt;
}

std::optional<OptionId> condorcet_loser(const Tournament& t) {
  const auto n = static_cast<Eigen::Index>(t.size());
  for (Eigen::Index j = 0; j < n; ++j) {
    if (t.adjacency().col(j).count() == n - 1) return t.option(j);
  }
  return std::nullopt;
}

Ranking hamilton_path(const Tournament& t) {
  if (t.size() == 0) throw Error(ErrorCode::EmptyTournament, "no options to rank");
  std::vector<std::size_t> path;
  path.reserve(t.size());
  for (std::size_t next = 0; next < t.size(); ++next) {
    auto pos = path.begin();
    while (pos != path.end() && !t.beats(next, *pos)) ++pos;
    path.insert(pos, next);
  }
  Ranking r;
  r.order.reserve(path.size());
  for (const auto k : path) r.order.push_back(t.option(k));
  return r;
}

NaturalityReport is_natural(const Ranking& r, const Tournament& t) {
  if (r.order.size() != t.size()) {
    throw Error(ErrorCode::OptionSetMismatch, "ranking and tournament have different option counts");
  }
  std::vector<std::size_t> idx;
  idx.reserve(r.order.size());
  std::vector<bool> seen(t.size(), false);
  for (const auto& id : r.order) {
    if (!t.contains(id)) throw Error(ErrorCode::OptionSetMismatch, "'" + id + "' is not a tournament option");
    const auto k = t.index_of(id);
    if (seen[k]) throw Error(ErrorCode::OptionSetMismatch, "'" + id + "' ranked twice");
    seen[k] = true;
    idx.push_back(k);
  }

  NaturalityReport report;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      if (!t.reaches(idx[a], idx[b])) report.violations.emplace_back(r.order[a], r.order[b]);
    }
  }
  report.natural = report.violations.empty();
  return report;
}

Tournament total_order(const Ranking& r) {
  const auto n = static_cast<Eigen::Index>(r.order.size());
  BeatsMatrix beats = BeatsMatrix::Constant(n, n, false);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) beats(i, j) = true;
  }
  return Tournament(r.order, std::move(beats));
}

}  // namespace linkrank
