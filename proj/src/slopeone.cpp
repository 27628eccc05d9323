#include <techrec/slopeone.hpp>

#include <algorithm>
#include <cmath>

namespace techrec {

namespace {
std::uint64_t pair_key(std::size_t lo, std::size_t hi) {
  return (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint64_t>(hi);
}
}  // namespace

std::optional<DeviationModel::Entry> DeviationModel::deviation(std::size_t j,
                                                               std::size_t i) const {
  if (j == i) return std::nullopt;
  bool flipped = j > i;
  auto it = pairs_.find(flipped ? pair_key(i, j) : pair_key(j, i));
  if (it == pairs_.end()) return std::nullopt;
  Entry e = it->second;
  if (flipped) e.avg = -e.avg;
  return e;
}

DeviationModel build_deviations(const RatingsMatrix &m) {
  std::unordered_map<std::uint64_t, std::pair<double, long>> sums;
  for (std::size_t u = 0; u < m.n_users(); ++u) {
    const auto &row = m.rated_items(u);
    for (std::size_t a = 0; a < row.size(); ++a) {
      for (std::size_t b = a + 1; b < row.size(); ++b) {
        auto &acc = sums[pair_key(row[a].first, row[b].first)];
        acc.first += row[a].second - row[b].second;
        acc.second += 1;
      }
    }
  }
  DeviationModel model;
  model.pairs_.reserve(sums.size());
  for (const auto &[key, acc] : sums)
    model.pairs_[key] = {acc.first / static_cast<double>(acc.second), acc.second};
  return model;
}

std::optional<double> predict_slope_one(const RatingsMatrix &m,
                                        const DeviationModel &d, std::size_t u,
                                        std::size_t j, bool clamp) {
  if (j >= m.n_items()) throw IndexOutOfRange("item index " + std::to_string(j));
  if (m.rating(u, j)) throw AlreadyRated(u, j);
  double num = 0;
  long den = 0;
  for (const auto &[i, r_ui] : m.rated_items(u)) {
    auto e = d.deviation(j, i);
    if (!e) continue;
    num += (e->avg + r_ui) * static_cast<double>(e->count);
    den += e->count;
  }
  if (den == 0) return std::nullopt;
  double p = num / static_cast<double>(den);
  return clamp ? std::clamp(p, 1.0, 5.0) : p;
}

}  // namespace techrec
