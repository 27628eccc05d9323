#include <techrec/baseline.hpp>

#include <algorithm>

namespace techrec {

std::vector<PopularityEntry> popularity_rank(const RatingsMatrix &m) {
  std::vector<PopularityEntry> ranked;
  ranked.reserve(m.n_items());
  for (std::size_t i = 0; i < m.n_items(); ++i) {
    const auto &raters = m.item_raters(i);
    double sum = 0;
    for (const auto &[u, v] : raters) sum += v;
    ranked.push_back({m.item_ext_id(i), raters.size(), sum});
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const PopularityEntry &a, const PopularityEntry &b) {
              if (a.raters != b.raters) return a.raters > b.raters;
              if (a.rating_sum != b.rating_sum) return a.rating_sum > b.rating_sum;
              return a.item < b.item;
            });
  return ranked;
}

std::pair<std::vector<Recommendation>, Provenance> recommend_with_fallback(
    const RatingsMatrix &m, const Recommender &primary, long user_ext_id,
    std::size_t n) {
  auto u = m.user_index(user_ext_id);
  if (u) {
    auto recs = primary(user_ext_id, n);
    if (!recs.empty()) return {std::move(recs), Provenance::model};
  }
  std::vector<Recommendation> fallback;
  for (const auto &e : popularity_rank(m)) {
    if (fallback.size() == n) break;
    if (u && m.rating(*u, *m.item_index(e.item))) continue;
    fallback.push_back({e.item, static_cast<double>(e.raters)});
  }
  return {std::move(fallback), Provenance::fallback};
}

}  // namespace techrec
