#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "generators.hpp"
#include "linkrank/aggregate.hpp"
#include "linkrank/diagram.hpp"
#include "linkrank/game.hpp"
#include "linkrank/order.hpp"
#include "oracles.hpp"

using namespace linkrank;

TEST_CASE("reaches agrees with path enumeration and is a total preorder (n <= 5, exhaustive)") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const auto t = oracle::enumerate_tournament(n, mask);
      const auto reach = oracle::reach_table(oracle::adjacency_of(t));
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(t.reaches(i, i));
        for (std::size_t j = 0; j < n; ++j) {
          REQUIRE(t.reaches(i, j) == reach[i][j]);
          CHECK((t.reaches(i, j) || t.reaches(j, i)));
          for (std::size_t k = 0; k < n; ++k) {
            if (t.reaches(i, j) && t.reaches(j, k)) REQUIRE(t.reaches(i, k));
          }
        }
      }
    }
  }
}

TEST_CASE("natural rankings equal the brute-force set (n <= 5, exhaustive)") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const auto t = oracle::enumerate_tournament(n, mask);
      const auto expected = oracle::natural_permutations(oracle::adjacency_of(t));
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::size_t accepted = 0;
      do {
        Ranking r;
        for (const auto k : perm) r.order.push_back(t.option(k));
        if (is_natural(r, t).natural) {
          ++accepted;
          REQUIRE(std::binary_search(expected.begin(), expected.end(), perm));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      REQUIRE(accepted == expected.size());
    }
  }
}

TEST_CASE("hamilton_path yields consecutive wins and a natural ranking") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const auto t = oracle::random_tournament(n, rng);
    const auto r = hamilton_path(t);
    REQUIRE(r.order.size() == n);
    for (std::size_t k = 0; k + 1 < n; ++k) REQUIRE(t.beats(r.order[k], r.order[k + 1]));
    REQUIRE(is_natural(r, t).natural);
    if (const auto w = condorcet_winner(t)) CHECK(r.order.front() == *w);
    if (const auto l = condorcet_loser(t)) CHECK(r.order.back() == *l);
  }
}

TEST_CASE("geometric mean reverses under transposition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = gen::reciprocal_matrix(std::uniform_int_distribution<Eigen::Index>(2, 7)(rng), rng);
    const auto w = gm_weights(m);
    const auto wt = gm_weights(transpose(m));
    CHECK((w.weights.cwiseProduct(wt.weights).array() - 1).abs().maxCoeff() < 1e-12);
    auto r = ranking_from_weights(w).order;
    std::reverse(r.begin(), r.end());
    CHECK(ranking_from_weights(wt).order == r);
  }
}

TEST_CASE("consistent matrices recover the generating vector") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> value(0.1, 10);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<Eigen::Index>(2, 8)(rng);
    Eigen::VectorXd v(n);
    for (Eigen::Index k = 0; k < n; ++k) v(k) = value(rng);
    Eigen::MatrixXd a = v * v.cwiseInverse().transpose();
    a.diagonal().setOnes();
    const ComparisonMatrix<> m(a);
    std::vector<OptionId> expected = m.options();
    std::sort(expected.begin(), expected.end(), [&](const OptionId& a, const OptionId& b) {
      return v(std::stoi(a) - 1) > v(std::stoi(b) - 1);
    });
    CHECK(ranking_from_weights(gm_weights(m)).order == expected);
    CHECK(ranking_from_weights(ev_weights(m)).order == expected);
    CHECK((ev_weights(m).weights - v / v.sum()).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("geometric mean is permutation equivariant") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = std::uniform_int_distribution<Eigen::Index>(2, 7)(rng);
    const auto m = gen::reciprocal_matrix(n, rng);
    Eigen::PermutationMatrix<Eigen::Dynamic> p(n);
    p.setIdentity();
    std::shuffle(p.indices().data(), p.indices().data() + n, rng);
    std::vector<OptionId> names(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < n; ++k) names[static_cast<std::size_t>(p.indices()(k))] = m.options()[k];
    const ComparisonMatrix<> pm(names, p * m.entries() * p.transpose());
    const auto w = gm_weights(m);
    const auto pw = gm_weights(pm);
    CHECK(((p * w.weights) - pw.weights).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(ranking_from_weights(w).order == ranking_from_weights(pw).order);
  }
}

TEST_CASE("induced tournament depends only on the side of 1") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> stretch(0.2, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = std::uniform_int_distribution<Eigen::Index>(2, 7)(rng);
    const auto m = gen::reciprocal_matrix(n, rng);
    Eigen::MatrixXd a = m.entries();
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        a(i, j) = std::pow(a(i, j), stretch(rng));
        a(j, i) = 1 / a(i, j);
      }
    }
    CHECK(tournament_of(ComparisonMatrix<>(a)).same_relation(tournament_of(m)));
  }
}

TEST_CASE("three-option eigenvector and geometric mean rankings agree") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = gen::reciprocal_matrix(3, rng);
    CHECK(ranking_from_weights(gm_weights(m)).order == ranking_from_weights(ev_weights(m)).order);
  }
}

TEST_CASE("Pareto analysis matches the dominance scan and the diagram") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = gen::strict_game(rng);
    const auto sols = solutions(g);
    std::vector<double> first, second;
    const double sign = g.orientation() == Orientation::Cost ? -1 : 1;
    for (Eigen::Index a = 0; a < g.outcomes(0).rows(); ++a) {
      for (Eigen::Index b = 0; b < g.outcomes(0).cols(); ++b) {
        first.push_back(sign * g.outcomes(0)(a, b));
        second.push_back(sign * g.outcomes(1)(a, b));
      }
    }
    const auto dominated = oracle::dominated(first, second);
    const auto pareto = pareto_optimal(g);
    REQUIRE_FALSE(pareto.empty());
    const auto d = diagram(preference_order(g, "A"), preference_order(g, "B"));
    for (std::size_t k = 0; k < sols.size(); ++k) {
      const bool in_set = std::find(pareto.begin(), pareto.end(), sols[k]) != pareto.end();
      CHECK(in_set == !dominated[k]);
      CHECK(pareto_by_diagram(d, sols[k].label()) == in_set);
    }
  }
}

TEST_CASE("game analyses are invariant to orientation flips and monotone relabeling") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = gen::strict_game(rng);
    const auto flipped_orientation =
        g.orientation() == Orientation::Cost ? Orientation::Utility : Orientation::Cost;
    const StrategicGame flipped(g.players(), {g.strategies(0), g.strategies(1)},
                                {Eigen::MatrixXd(-g.outcomes(0)), Eigen::MatrixXd(-g.outcomes(1))},
                                flipped_orientation);
    const StrategicGame warped(g.players(), {g.strategies(0), g.strategies(1)},
                               {Eigen::MatrixXd(g.outcomes(0).array().exp()), g.outcomes(1)}, g.orientation());
    for (const auto* other : {&flipped, &warped}) {
      CHECK(pareto_optimal(*other) == pareto_optimal(g));
      CHECK(dominating_pairs(*other) == dominating_pairs(g));
      for (const auto& p : g.players()) CHECK(preference_order(*other, p).same_relation(preference_order(g, p)));
    }
  }
}

TEST_CASE("splittable is symmetric and identical blocks unlink") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const auto left = oracle::random_tournament(n, rng);
    auto right = oracle::random_tournament(n, rng);
    const auto d = diagram(left, right);
    for (const auto& i : d.loops()) {
      for (const auto& j : d.loops()) {
        if (i != j) CHECK(splittable(d, i, j) == splittable(d, j, i));
      }
    }
    const auto same = diagram(left, left);
    for (const auto& i : same.loops()) CHECK(splittable_from_all(same, i));
  }
}

TEST_CASE("a natural ranking splits the Condorcet winner from every loop") {
  std::mt19937_64 rng(41);
  int bridged = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    const auto t = oracle::random_tournament(n, rng);
    const auto r = hamilton_path(t);
    const auto d = diagram(t, total_order(r));
    if (const auto w = condorcet_winner(t)) {
      ++bridged;
      CHECK(r.order.front() == *w);
      CHECK(splittable_from_all(d, *w));
    }
    if (const auto l = condorcet_loser(t)) CHECK(splittable_from_all(d, *l));
  }
  CHECK(bridged > 0);
}
