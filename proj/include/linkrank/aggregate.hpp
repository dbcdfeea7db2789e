#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "linkrank/error.hpp"
#include "linkrank/order.hpp"
#include "linkrank/tournament.hpp"

namespace linkrank {

inline constexpr double kReciprocityTolerance = 1e-6;
inline constexpr double kWeightTieTolerance = 1e-12;
inline constexpr double kPowerIterationTolerance = 1e-12;
inline constexpr int kPowerIterationMaxIter = 10'000;

// Options "1".."n", used when a matrix document carries no names.
std::vector<OptionId> numbered_options(std::size_t n);

// Positive reciprocal matrix of preference ratios; a(i, j) > 1 means option
// i is preferred to option j. The constructor enforces a unit diagonal,
// strictly positive finite entries, no off-diagonal ties and reciprocity
// |a_ij * a_ji - 1| <= reciprocity_tol.
template <typename Scalar = double>
class ComparisonMatrix {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  ComparisonMatrix(std::vector<OptionId> options, Matrix entries,
                   Scalar reciprocity_tol = Scalar(kReciprocityTolerance))
      : options_(std::move(options)), entries_(std::move(entries)) {
    validate(reciprocity_tol);
  }

  explicit ComparisonMatrix(Matrix entries, Scalar reciprocity_tol = Scalar(kReciprocityTolerance))
      : options_(numbered_options(static_cast<std::size_t>(entries.rows()))), entries_(std::move(entries)) {
    validate(reciprocity_tol);
  }

  Eigen::Index size() const noexcept { return entries_.rows(); }
  const std::vector<OptionId>& options() const noexcept { return options_; }
  const Matrix& entries() const noexcept { return entries_; }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

 private:
  void validate(Scalar reciprocity_tol) const;

  std::vector<OptionId> options_;
  Matrix entries_;
};

template <typename Scalar = double>
struct WeightVector {
  std::vector<OptionId> options;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;
};

template <typename Scalar>
void ComparisonMatrix<Scalar>::validate(Scalar reciprocity_tol) const {
  using std::abs;
  using std::isfinite;
  const auto n = entries_.rows();
  if (n == 0) throw Error(ErrorCode::NotSquare, "matrix is empty");
  if (entries_.cols() != n) {
    throw Error(ErrorCode::NotSquare,
                std::to_string(entries_.rows()) + "x" + std::to_string(entries_.cols()) + " matrix");
  }
  if (static_cast<Eigen::Index>(options_.size()) != n) {
    throw Error(ErrorCode::NotSquare, std::to_string(options_.size()) + " option names for a " +
                                          std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  std::vector<OptionId> sorted = options_;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(ErrorCode::DuplicateOption, "option '" + *dup + "' listed twice");
  }

  const auto at = [&](Eigen::Index i, Eigen::Index j) {
    return "(" + options_[i] + ", " + options_[j] + ")";
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Scalar a = entries_(i, j);
      if (!isfinite(a) || !(a > Scalar(0))) throw Error(ErrorCode::NonPositiveEntry, "entry " + at(i, j));
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (entries_(i, i) != Scalar(1)) throw Error(ErrorCode::DiagonalNotOne, "entry " + at(i, i));
  }

  Scalar worst = 0;
  Eigen::Index wi = 0, wj = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries_(i, j) == Scalar(1)) throw Error(ErrorCode::TiedComparison, "entry " + at(i, j) + " is 1");
      const Scalar residual = abs(entries_(i, j) * entries_(j, i) - Scalar(1));
      if (residual > worst) {
        worst = residual;
        wi = i;
        wj = j;
      }
    }
  }
  if (worst > reciprocity_tol) {
    throw Error(ErrorCode::ReciprocityViolation,
                "worst pair " + at(wi, wj) + " with residual " + std::to_string(static_cast<double>(worst)));
  }
  // Both entries of a pair on the same side of 1 can only survive the
  // reciprocity check when both are within tolerance of 1.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if ((entries_(i, j) > Scalar(1)) == (entries_(j, i) > Scalar(1))) {
        throw Error(ErrorCode::TiedComparison, "entries " + at(i, j) + " and " + at(j, i) + " agree");
      }
    }
  }
}

template <typename Scalar>
ComparisonMatrix<Scalar> transpose(const ComparisonMatrix<Scalar>& m) {
  return ComparisonMatrix<Scalar>(m.options(), m.entries().transpose());
}

// beats(i, j) iff a_ij > 1.
template <typename Scalar>
Tournament tournament_of(const ComparisonMatrix<Scalar>& m) {
  BeatsMatrix beats = (m.entries().array() > Scalar(1)).matrix();
  return Tournament(m.options(), std::move(beats));
}

// Unnormalized row geometric means, evaluated in log space.
template <typename Scalar>
WeightVector<Scalar> gm_weights(const ComparisonMatrix<Scalar>& m) {
  WeightVector<Scalar> w{m.options(), m.entries().array().log().rowwise().mean().exp().matrix()};
  return w;
}

// Principal eigenvector by power iteration from the uniform vector,
// normalized to unit sum. Converged when successive iterates differ by less
// than tol in max-norm; throws NoConvergence after max_iter steps.
template <typename Scalar>
WeightVector<Scalar> ev_weights(const ComparisonMatrix<Scalar>& m, Scalar tol = Scalar(kPowerIterationTolerance),
                                int max_iter = kPowerIterationMaxIter) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const auto n = m.size();
  Vector x = Vector::Constant(n, Scalar(1) / Scalar(n));
  for (int iter = 0; iter < max_iter; ++iter) {
    Vector y = m.entries() * x;
    y /= y.sum();
    const Scalar delta = (y - x).cwiseAbs().maxCoeff();
    x = std::move(y);
    if (delta < tol) return {m.options(), x};
  }
  throw Error(ErrorCode::NoConvergence, "power iteration did not converge in " + std::to_string(max_iter) +
                                            " iterations");
}

// Options by strictly decreasing weight. Throws TiedWeights when two weights
// agree within tie_tol relative to the larger one.
template <typename Scalar>
Ranking ranking_from_weights(const WeightVector<Scalar>& w, Scalar tie_tol = Scalar(kWeightTieTolerance)) {
  using std::abs;
  using std::max;
  const auto n = static_cast<std::size_t>(w.weights.size());
  if (w.options.size() != n) throw Error(ErrorCode::OptionSetMismatch, "weights and options differ in length");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return w.weights(static_cast<Eigen::Index>(a)) > w.weights(static_cast<Eigen::Index>(b));
  });
  Ranking r;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      const Scalar hi = w.weights(static_cast<Eigen::Index>(idx[k - 1]));
      const Scalar lo = w.weights(static_cast<Eigen::Index>(idx[k]));
      if (abs(hi - lo) <= tie_tol * max(abs(hi), abs(lo))) {
        throw Error(ErrorCode::TiedWeights,
                    "'" + w.options[idx[k - 1]] + "' and '" + w.options[idx[k]] + "' carry equal weight");
      }
    }
    r.order.push_back(w.options[idx[k]]);
  }
  return r;
}

enum class MatrixFormat { Csv, Json };

// Parses and validates a comparison matrix document. CSV is a numeric grid
// with an optional header row of option names; JSON is
// {"options": [...], "matrix": [[...]]}. Cells may be decimals, scientific
// notation or "p/q" fractions (strings, in JSON). A CSV first row in which no
// cell is numeric is read as the header.
ComparisonMatrix<double> parse_matrix(std::string_view document, MatrixFormat format);

// Parses one cell: decimal, scientific, or an exact "p/q" fraction.
double parse_ratio(std::string_view cell);

}  // namespace linkrank
