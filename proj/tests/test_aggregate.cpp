#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "linkrank/aggregate.hpp"

using namespace linkrank;

namespace {

Eigen::MatrixXd eq1_entries() {
  Eigen::MatrixXd a(3, 3);
  a << 1, 2, 2, 0.5, 1, 9, 0.5, 1.0 / 9, 1;
  return a;
}

Eigen::MatrixXd consistent(const Eigen::VectorXd& v) {
  Eigen::MatrixXd a = v * v.cwiseInverse().transpose();
  a.diagonal().setOnes();
  return a;
}

ErrorCode parse_error(std::string_view doc, MatrixFormat f = MatrixFormat::Csv) {
  try {
    parse_matrix(doc, f);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected linkrank::Error");
  return ErrorCode::SyntaxError;
}

}  // namespace

TEST_CASE("parse_matrix reads the three-option example") {
  const auto m = parse_matrix("1,2,2\n0.5,1,9\n0.5,0.111111111,1\n", MatrixFormat::Csv);
  CHECK(m.size() == 3);
  CHECK(m.options() == std::vector<OptionId>{"1", "2", "3"});
  CHECK(m(1, 2) == 9);

  const auto j = parse_matrix(R"({"options":["a","b","c"],"matrix":[[1,2,2],["1/2",1,9],["1/2","1/9",1]]})",
                              MatrixFormat::Json);
  CHECK(j.options() == std::vector<OptionId>{"a", "b", "c"});
  CHECK(j(2, 1) == doctest::Approx(1.0 / 9));

  const auto h = parse_matrix("x, y\n1, 3e0\n1/3, 1\n", MatrixFormat::Csv);
  CHECK(h.options() == std::vector<OptionId>{"x", "y"});
  CHECK(h(1, 0) == 1.0 / 3);
}

TEST_CASE("parse_matrix validation errors") {
  CHECK(parse_error("2,2,2\n0.5,1,9\n0.5,0.111111111,1") == ErrorCode::DiagonalNotOne);
  CHECK(parse_error("1,1\n1,1") == ErrorCode::TiedComparison);
  CHECK(parse_error("1,2\n0.5") == ErrorCode::NotSquare);
  CHECK(parse_error("1,2,3\n0.5,1,2") == ErrorCode::NotSquare);
  CHECK(parse_error("1,-2\n-0.5,1") == ErrorCode::NonPositiveEntry);
  CHECK(parse_error("1,0\n0,1") == ErrorCode::NonPositiveEntry);
  CHECK(parse_error("1,2\n0.6,1") == ErrorCode::ReciprocityViolation);
  CHECK(parse_error("1,1.0000001\n1.0000001,1") == ErrorCode::TiedComparison);
  CHECK(parse_error("1,2/0\n0.5,1") == ErrorCode::SyntaxError);
  CHECK(parse_error("a,b\n1,2\n0.5,x") == ErrorCode::SyntaxError);
  CHECK(parse_error("") == ErrorCode::SyntaxError);
  CHECK(parse_error("{\"matrix\": [[1, 2], [0.5]]}", MatrixFormat::Json) == ErrorCode::NotSquare);
  CHECK(parse_error("{\"matrix\": [[1, true], [0.5, 1]]}", MatrixFormat::Json) == ErrorCode::SyntaxError);
  CHECK(parse_error("{not json", MatrixFormat::Json) == ErrorCode::SyntaxError);
  CHECK(parse_error("{\"options\":[\"a\"],\"matrix\":[[1,2],[0.5,1]]}", MatrixFormat::Json) == ErrorCode::NotSquare);
}

TEST_CASE("reciprocity violation names the worst pair") {
  try {
    parse_matrix("1,2,4\n0.5,1,2\n0.2,0.5,1", MatrixFormat::Csv);
    FAIL("expected ReciprocityViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReciprocityViolation);
    CHECK(std::string(e.what()).find("(1, 3)") != std::string::npos);
  }
}

TEST_CASE("tournament_of reads a_ij > 1 as a win") {
  const ComparisonMatrix<> m(eq1_entries());
  const auto t = tournament_of(m);
  CHECK(t.beats("1", "2"));
  CHECK(t.beats("1", "3"));
  CHECK(t.beats("2", "3"));

  const auto tt = tournament_of(transpose(m));
  CHECK(tt.beats("2", "1"));
  CHECK(tt.beats("3", "1"));
  CHECK(tt.beats("3", "2"));

  const auto one = tournament_of(ComparisonMatrix<>(Eigen::MatrixXd::Ones(1, 1)));
  CHECK(one.size() == 1);
  CHECK(one.beats_pairs().empty());
}

TEST_CASE("geometric mean weights") {
  const auto w = gm_weights(ComparisonMatrix<>(eq1_entries()));
  CHECK(w.weights(0) == doctest::Approx(std::cbrt(4.0)).epsilon(1e-12));
  CHECK(w.weights(1) == doctest::Approx(std::cbrt(4.5)).epsilon(1e-12));
  CHECK(w.weights(2) == doctest::Approx(std::cbrt(1.0 / 18)).epsilon(1e-12));
  CHECK(w.weights(0) == doctest::Approx(1.587401).epsilon(1e-6));
  CHECK(w.weights(1) == doctest::Approx(1.650964).epsilon(1e-6));
  CHECK(w.weights(2) == doctest::Approx(0.381571).epsilon(1e-6));
  CHECK(ranking_from_weights(w).order == std::vector<OptionId>{"2", "1", "3"});

  // Row i of a consistent matrix has geometric mean v_i / (prod v)^(1/n) = v_i / 2.
  const auto c = gm_weights(ComparisonMatrix<>(consistent(Eigen::Vector3d(1, 2, 4))));
  CHECK(c.weights(0) == doctest::Approx(0.5));
  CHECK(c.weights(1) == doctest::Approx(1.0));
  CHECK(c.weights(2) == doctest::Approx(2.0));

  CHECK(gm_weights(ComparisonMatrix<>(Eigen::MatrixXd::Ones(1, 1))).weights(0) == 1.0);
}

TEST_CASE("geometric mean weights templated on long double") {
  using M = ComparisonMatrix<long double>;
  M::Matrix a = eq1_entries().cast<long double>();
  a(2, 1) = 1.0L / 9;
  const auto w = gm_weights(M(a));
  CHECK(static_cast<double>(w.weights(1)) == doctest::Approx(std::cbrt(4.5)).epsilon(1e-12));
}

TEST_CASE("eigenvector weights") {
  const auto c = ev_weights(ComparisonMatrix<>(consistent(Eigen::Vector3d(1, 2, 4))));
  CHECK(c.weights(0) == doctest::Approx(1.0 / 7).epsilon(1e-10));
  CHECK(c.weights(1) == doctest::Approx(2.0 / 7).epsilon(1e-10));
  CHECK(c.weights(2) == doctest::Approx(4.0 / 7).epsilon(1e-10));

  // Reference values from an independent dense eigensolver, 6 significant digits.
  const ComparisonMatrix<> m(eq1_entries());
  const auto w = ev_weights(m);
  CHECK(w.weights(0) == doctest::Approx(0.438516).epsilon(2e-6));
  CHECK(w.weights(1) == doctest::Approx(0.456075).epsilon(2e-6));
  CHECK(w.weights(2) == doctest::Approx(0.105408).epsilon(2e-6));
  CHECK(w.weights.sum() == doctest::Approx(1.0));
  CHECK(ranking_from_weights(w).order == std::vector<OptionId>{"2", "1", "3"});

  Eigen::EigenSolver<Eigen::MatrixXd> es(m.entries());
  Eigen::Index k = 0;
  es.eigenvalues().real().maxCoeff(&k);
  Eigen::VectorXd v = es.eigenvectors().col(k).real().cwiseAbs();
  v /= v.sum();
  CHECK((v - w.weights).cwiseAbs().maxCoeff() < 1e-10);

  CHECK(ev_weights(ComparisonMatrix<>(Eigen::MatrixXd::Ones(1, 1))).weights(0) == 1.0);
}

TEST_CASE("ev_weights reports non-convergence") {
  try {
    ev_weights(ComparisonMatrix<>(eq1_entries()), 1e-300, 3);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoConvergence);
  }
}

TEST_CASE("ranking_from_weights refuses ties") {
  WeightVector<> w{{"a", "b"}, Eigen::Vector2d(1, 1)};
  try {
    ranking_from_weights(w);
    FAIL("expected TiedWeights");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TiedWeights);
  }
  w.weights(1) = 1 + 1e-14;
  CHECK_THROWS_AS(ranking_from_weights(w), Error);
  w.weights(1) = 1 + 1e-9;
  CHECK(ranking_from_weights(w).order == std::vector<OptionId>{"b", "a"});

  WeightVector<> single{{"z"}, Eigen::VectorXd::Constant(1, 3.0)};
  CHECK(ranking_from_weights(single).order == std::vector<OptionId>{"z"});
}

TEST_CASE("parse_ratio accepts decimals, exponents and fractions") {
  CHECK(parse_ratio("2") == 2.0);
  CHECK(parse_ratio(" 1.5e1 ") == 15.0);
  CHECK(parse_ratio("1/9") == 1.0 / 9);
  CHECK(parse_ratio("+3") == 3.0);
  CHECK_THROWS_AS(parse_ratio("nine"), Error);
  CHECK_THROWS_AS(parse_ratio("1/"), Error);
}
