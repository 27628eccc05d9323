#ifndef TECHREC_FACTORIZATION_HPP_
#define TECHREC_FACTORIZATION_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <techrec/ratings_matrix.hpp>

namespace techrec {

struct TrainConfig {
  std::size_t factors = 8;
  double learning_rate = 0.02;
  double regularization = 0.01;
  std::size_t epochs = 200;
  std::uint64_t seed = 42;
  double init_scale = 0.05;
};

/// Biased matrix-factorization model: mu + b_u + b_i + p_u . q_i.
/// mu is fixed to the training global mean; factors are row-major.
struct FactorModel {
  double mu = 0;
  std::size_t f = 0;
  std::uint64_t seed = 0;
  std::vector<double> b_user, b_item;
  std::vector<double> p, q;                // n_users*f, n_items*f
  std::vector<long> user_ids, item_ids;    // external ids, matrix intern order
  std::vector<double> epoch_loss;          // regularized loss after each epoch

  std::size_t n_users() const { return b_user.size(); }
  std::size_t n_items() const { return b_item.size(); }

  double predict_raw(std::size_t u, std::size_t i) const;
  double predict(std::size_t u, std::size_t i) const;  // clamped to [1,5]

  void save(std::ostream &out) const;
  static FactorModel load(std::istream &in);
};

/// Per-rating SGD on the squared error with L2 regularization. Visit order is
/// reshuffled each epoch from the seeded generator; identical seeds give
/// bitwise-identical models. Throws DivergenceDetected when any parameter
/// becomes non-finite.
FactorModel mf_train(const RatingsMatrix &m, const TrainConfig &cfg = {});

/// Max relative error between the analytic gradient of the regularized loss
/// and central finite differences (step 1e-5) on a small probe matrix.
double mf_gradient_check(const TrainConfig &cfg, const RatingsMatrix &probe);

}  // namespace techrec

#endif  // TECHREC_FACTORIZATION_HPP_
