#ifndef TECHREC_RATINGS_MATRIX_HPP_
#define TECHREC_RATINGS_MATRIX_HPP_

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include <techrec/errors.hpp>
#include <techrec/ingest.hpp>

namespace techrec {

using SparseVec = std::vector<std::pair<std::size_t, double>>;  // sorted by index

/// Sparse user x technology matrix with both orientations and interned ids.
/// Immutable after construction.
class RatingsMatrix {
 public:
  static RatingsMatrix from_rating_rows(const std::vector<RatingRow> &rows);

  std::size_t n_users() const { return by_user_.size(); }
  std::size_t n_items() const { return by_item_.size(); }
  std::size_t n_ratings() const { return n_ratings_; }

  const SparseVec &rated_items(std::size_t u) const;
  const SparseVec &item_raters(std::size_t i) const;

  double user_mean(std::size_t u) const;
  double global_mean() const { return global_mean_; }

  std::optional<double> rating(std::size_t u, std::size_t i) const;

  long user_ext_id(std::size_t u) const;
  long item_ext_id(std::size_t i) const;
  std::optional<std::size_t> user_index(long ext_id) const;
  std::optional<std::size_t> item_index(long ext_id) const;

  std::vector<RatingRow> to_rows() const;

 private:
  std::vector<SparseVec> by_user_;
  std::vector<SparseVec> by_item_;
  std::vector<double> user_means_;
  std::vector<long> user_ids_;
  std::vector<long> item_ids_;
  std::unordered_map<long, std::size_t> user_index_;
  std::unordered_map<long, std::size_t> item_index_;
  double global_mean_ = 0;
  std::size_t n_ratings_ = 0;
};

}  // namespace techrec

#endif  // TECHREC_RATINGS_MATRIX_HPP_
