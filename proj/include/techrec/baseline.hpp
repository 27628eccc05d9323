#ifndef TECHREC_BASELINE_HPP_
#define TECHREC_BASELINE_HPP_

#include <functional>
#include <utility>
#include <vector>

#include <techrec/neighborhood.hpp>

namespace techrec {

struct PopularityEntry {
  long item = 0;          // external id
  std::size_t raters = 0;
  double rating_sum = 0;
};

/// Items ranked by rater count descending, ties by rating sum descending,
/// then ascending external item id.
std::vector<PopularityEntry> popularity_rank(const RatingsMatrix &m);

enum class Provenance { model, fallback };

/// Recommender over external ids; must tolerate unknown users by returning [].
using Recommender =
    std::function<std::vector<Recommendation>(long user_ext_id, std::size_t n)>;

/// Serves the primary recommender's list when non-empty; unknown users and
/// users the primary cannot serve get the top-n popularity items they have not
/// rated. Fallback scores are rater counts, not predicted ratings.
std::pair<std::vector<Recommendation>, Provenance> recommend_with_fallback(
    const RatingsMatrix &m, const Recommender &primary, long user_ext_id,
    std::size_t n);

}  // namespace techrec

#endif  // TECHREC_BASELINE_HPP_
