#ifndef TECHREC_NEIGHBORHOOD_HPP_
#define TECHREC_NEIGHBORHOOD_HPP_

#include <optional>
#include <vector>

#include <techrec/similarity.hpp>

namespace techrec {

struct Recommendation {
  long item = 0;    // external technology id
  double score = 0;
};

struct NeighborhoodConfig {
  std::size_t k = 20;
  std::size_t min_neighbors = 1;
  double similarity_threshold = 0;  // contribute iff sim > threshold
};

enum class PredictorKind { user_based, item_based };

/// mean_u + sum sim(u,v) * (r_vi - mean_v) / sum |sim(u,v)| over the top-k
/// eligible neighbors, clamped to [1,5]. Absent when fewer than min_neighbors
/// contribute.
std::optional<double> predict_user_based(const RatingsMatrix &m,
                                         const SimilarityModel &sim,
                                         std::size_t u, std::size_t i,
                                         const NeighborhoodConfig &cfg = {});

/// sum sim(i,j) * r_uj / sum |sim(i,j)| over the top-k similar items the user
/// rated, clamped to [1,5].
std::optional<double> predict_item_based(const RatingsMatrix &m,
                                         const SimilarityModel &sim,
                                         std::size_t u, std::size_t i,
                                         const NeighborhoodConfig &cfg = {});

/// Scores every unrated item, returns up to n sorted by score descending,
/// ties by ascending external item id. Throws UnknownUser for ids not in the
/// matrix; an empty list is a valid result.
std::vector<Recommendation> recommend_top_n(const RatingsMatrix &m,
                                            const SimilarityModel &sim,
                                            long user_ext_id, std::size_t n,
                                            const NeighborhoodConfig &cfg,
                                            PredictorKind kind);

/// Shared ranking rule for all recommenders: score desc, external id asc.
std::vector<Recommendation> top_n_recommendations(std::vector<Recommendation> scored,
                                                  std::size_t n);

}  // namespace techrec

#endif  // TECHREC_NEIGHBORHOOD_HPP_
