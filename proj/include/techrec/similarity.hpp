#ifndef TECHREC_SIMILARITY_HPP_
#define TECHREC_SIMILARITY_HPP_

#include <cstddef>
#include <vector>

#include <techrec/ratings_matrix.hpp>

namespace techrec {

enum class Axis { user, item };
enum class Kernel { pearson, cosine };

/// Pearson correlation over the co-rated index set only; means are taken over
/// that set. Degenerate cases (fewer than 2 co-rated entries, zero variance)
/// give 0.
double pearson(const SparseVec &a, const SparseVec &b);

/// Cosine over the full vectors, missing entries treated as 0. Zero norm gives 0.
double cosine(const SparseVec &a, const SparseVec &b);

struct SimilarityOptions {
  Kernel kernel = Kernel::cosine;
  std::size_t model_size = 100;
  double shrinkage_beta = 0;  // sim * |I| / (|I| + beta); 0 disables
};

/// Precomputed top-model_size neighbors per entity, zero scores excluded,
/// sorted by score descending with ties broken by ascending entity index.
struct SimilarityModel {
  Axis axis = Axis::user;
  std::vector<std::vector<std::pair<std::size_t, double>>> neighbors;
};

SimilarityModel build_similarity_model(const RatingsMatrix &m, Axis axis,
                                       const SimilarityOptions &opts = {});

}  // namespace techrec

#endif  // TECHREC_SIMILARITY_HPP_
