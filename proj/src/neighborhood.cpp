#include <techrec/neighborhood.hpp>

#include <algorithm>
#include <cmath>

namespace techrec {

namespace {
double clamp_rating(double v) { return std::clamp(v, 1.0, 5.0); }
}  // namespace

std::optional<double> predict_user_based(const RatingsMatrix &m,
                                         const SimilarityModel &sim,
                                         std::size_t u, std::size_t i,
                                         const NeighborhoodConfig &cfg) {
  if (sim.axis != Axis::user) throw AxisMismatch("user-based predictor needs a user model");
  if (u >= m.n_users()) throw IndexOutOfRange("user index " + std::to_string(u));
  if (i >= m.n_items()) throw IndexOutOfRange("item index " + std::to_string(i));
  double num = 0, den = 0;
  std::size_t used = 0;
  for (const auto &[v, s] : sim.neighbors[u]) {
    if (s <= cfg.similarity_threshold) break;  // sorted descending
    auto r = m.rating(v, i);
    if (!r) continue;
    num += s * (*r - m.user_mean(v));
    den += std::abs(s);
    if (++used == cfg.k) break;
  }
  if (used < cfg.min_neighbors || den == 0) return std::nullopt;
  return clamp_rating(m.user_mean(u) + num / den);
}

std::optional<double> predict_item_based(const RatingsMatrix &m,
                                         const SimilarityModel &sim,
                                         std::size_t u, std::size_t i,
                                         const NeighborhoodConfig &cfg) {
  if (sim.axis != Axis::item) throw AxisMismatch("item-based predictor needs an item model");
  if (u >= m.n_users()) throw IndexOutOfRange("user index " + std::to_string(u));
  if (i >= m.n_items()) throw IndexOutOfRange("item index " + std::to_string(i));
  double num = 0, den = 0;
  std::size_t used = 0;
  for (const auto &[j, s] : sim.neighbors[i]) {
    if (s <= cfg.similarity_threshold) break;
    auto r = m.rating(u, j);
    if (!r) continue;
    num += s * *r;
    den += std::abs(s);
    if (++used == cfg.k) break;
  }
  if (used < cfg.min_neighbors || den == 0) return std::nullopt;
  return clamp_rating(num / den);
}

std::vector<Recommendation> top_n_recommendations(std::vector<Recommendation> scored,
                                                  std::size_t n) {
  std::sort(scored.begin(), scored.end(), [](const Recommendation &a, const Recommendation &b) {
    if (a.score != b.score) return a.score > b.score;
    return a.item < b.item;
  });
  if (scored.size() > n) scored.resize(n);
  return scored;
}

std::vector<Recommendation> recommend_top_n(const RatingsMatrix &m,
                                            const SimilarityModel &sim,
                                            long user_ext_id, std::size_t n,
                                            const NeighborhoodConfig &cfg,
                                            PredictorKind kind) {
  auto u = m.user_index(user_ext_id);
  if (!u) throw UnknownUser(user_ext_id);
  std::vector<Recommendation> scored;
  for (std::size_t i = 0; i < m.n_items(); ++i) {
    if (m.rating(*u, i)) continue;
    auto p = kind == PredictorKind::user_based
                 ? predict_user_based(m, sim, *u, i, cfg)
                 : predict_item_based(m, sim, *u, i, cfg);
    if (p) scored.push_back({m.item_ext_id(i), *p});
  }
  return top_n_recommendations(std::move(scored), n);
}

}  // namespace techrec
