#ifndef TECHREC_EVAL_HPP_
#define TECHREC_EVAL_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <techrec/baseline.hpp>
#include <techrec/factorization.hpp>
#include <techrec/neighborhood.hpp>
#include <techrec/slopeone.hpp>

namespace techrec {

struct HoldoutTriple {
  long user = 0;  // external ids
  long item = 0;
  double value = 0;
};

struct SplitResult {
  RatingsMatrix train;
  std::vector<HoldoutTriple> holdout;
};

/// Moves k seeded-random ratings per user into the holdout; users with at
/// most k ratings keep everything and contribute no holdout triples.
SplitResult leave_k_out_split(const RatingsMatrix &m, std::size_t k,
                              std::uint64_t seed);

struct CoverageResult {
  double coverage = 0;
  std::size_t users_served = 0;
  std::size_t users_total = 0;
};

/// Fraction of users receiving at least one recommendation, no fallback.
CoverageResult coverage(const RatingsMatrix &m, const Recommender &rec,
                        std::size_t n);

/// Rating predictor over external ids; absent predictions are skipped.
using Predictor =
    std::function<std::optional<double>(long user_ext_id, long item_ext_id)>;

struct RmseResult {
  double value = 0;
  std::size_t n_predicted = 0;
  std::size_t n_skipped = 0;
};

RmseResult rmse(const std::vector<HoldoutTriple> &holdout, const Predictor &pred);

struct PrecisionRecall {
  double precision = 0;
  double recall = 0;
};

/// Hits are top-k recommendations appearing in the user's holdout; both
/// metrics average over users that received recommendations.
PrecisionRecall precision_recall_at_k(const std::vector<HoldoutTriple> &holdout,
                                      const Recommender &rec, std::size_t k);

struct EvalReport {
  std::string algorithm;
  double coverage = 0;
  std::size_t users_served = 0;
  std::size_t users_total = 0;
  std::optional<double> rmse;
  std::optional<double> precision_at_k;
  std::optional<double> recall_at_k;
  double wall_time_ms = 0;
};

struct BenchmarkConfig {
  std::vector<std::string> algorithms = {"user", "item", "slopeone", "mf", "pop"};
  std::size_t holdout_k = 1;
  std::uint64_t seed = 42;
  std::size_t top_n = 10;
  NeighborhoodConfig neighborhood;
  SimilarityOptions user_similarity{Kernel::pearson, 100, 0};
  SimilarityOptions item_similarity{Kernel::cosine, 100, 0};
  TrainConfig mf;
};

struct AlgorithmBundle {
  Recommender recommender;
  Predictor predictor;  // null for popularity
};

/// Builds recommender and predictor closures over the given matrix for one of
/// {user, item, slopeone, mf, pop}. The closures reference the matrix; it must
/// outlive them.
AlgorithmBundle make_algorithm(const std::string &name, const RatingsMatrix &m,
                               const BenchmarkConfig &cfg);

/// Runs every requested algorithm over one shared leave-k-out split.
std::vector<EvalReport> run_benchmark(const RatingsMatrix &m,
                                      const BenchmarkConfig &cfg = {});

/// Tab-delimited table, one row per algorithm. Wall time is excluded by
/// default so report files are reproducible byte for byte.
void write_report_table(std::ostream &out, const std::vector<EvalReport> &reports,
                        bool include_wall_time = false);

/// One key: value record block per algorithm.
void write_report_records(std::ostream &out, const std::vector<EvalReport> &reports);

}  // namespace techrec

#endif  // TECHREC_EVAL_HPP_
