// Brute-force reference implementations used only by tests. These stay
// independent of the library's prediction paths: everything is computed from a
// dense 0-padded matrix with direct loops over the defining formulas.
#ifndef TECHREC_TESTS_ORACLES_HPP_
#define TECHREC_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <techrec/ingest.hpp>

namespace oracle {

// 0 marks a missing rating; stored ratings are in [1,5]
struct Dense {
  std::size_t n_users = 0, n_items = 0;
  std::vector<std::vector<double>> r;

  double at(std::size_t u, std::size_t i) const { return r[u][i]; }
  bool rated(std::size_t u, std::size_t i) const { return r[u][i] != 0; }

  long user_ext(std::size_t u) const { return 100 + static_cast<long>(u) * 3; }
  long item_ext(std::size_t i) const { return 1000 + static_cast<long>(i) * 7; }

  std::vector<techrec::RatingRow> rows() const {
    std::vector<techrec::RatingRow> out;
    for (std::size_t u = 0; u < n_users; ++u)
      for (std::size_t i = 0; i < n_items; ++i)
        if (rated(u, i)) out.push_back({user_ext(u), item_ext(i), r[u][i]});
    return out;
  }
};

// every user rates >=1 item and every item has >=1 rater
inline Dense random_dense(std::uint64_t seed, std::size_t n_users,
                          std::size_t n_items, double density = 0.4,
                          bool integer_values = true) {
  std::mt19937_64 rng(seed);
  Dense d;
  d.n_users = n_users;
  d.n_items = n_items;
  d.r.assign(n_users, std::vector<double>(n_items, 0.0));
  auto draw_value = [&]() {
    if (integer_values) return 1.0 + static_cast<double>(rng() % 5);
    return 1.0 + static_cast<double>(rng() % 9) * 0.5;
  };
  for (std::size_t u = 0; u < n_users; ++u)
    for (std::size_t i = 0; i < n_items; ++i)
      if ((rng() % 1000) < static_cast<std::uint64_t>(density * 1000))
        d.r[u][i] = draw_value();
  for (std::size_t u = 0; u < n_users; ++u) {
    bool any = false;
    for (std::size_t i = 0; i < n_items; ++i) any |= d.rated(u, i);
    if (!any) d.r[u][rng() % n_items] = draw_value();
  }
  for (std::size_t i = 0; i < n_items; ++i) {
    bool any = false;
    for (std::size_t u = 0; u < n_users; ++u) any |= d.rated(u, i);
    if (!any) d.r[rng() % n_users][i] = draw_value();
  }
  return d;
}

inline std::vector<double> axis_row(const Dense &d, bool user_axis, std::size_t e) {
  if (user_axis) return d.r[e];
  std::vector<double> col(d.n_users);
  for (std::size_t u = 0; u < d.n_users; ++u) col[u] = d.r[u][e];
  return col;
}

inline double pearson_ref(const std::vector<double> &a, const std::vector<double> &b) {
  std::vector<std::size_t> common;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) common.push_back(i);
  if (common.size() < 2) return 0;
  double ma = 0, mb = 0;
  for (auto i : common) { ma += a[i]; mb += b[i]; }
  ma /= common.size();
  mb /= common.size();
  double num = 0, va = 0, vb = 0;
  for (auto i : common) {
    num += (a[i] - ma) * (b[i] - mb);
    va += (a[i] - ma) * (a[i] - ma);
    vb += (b[i] - mb) * (b[i] - mb);
  }
  if (va == 0 || vb == 0) return 0;
  return std::clamp(num / std::sqrt(va * vb), -1.0, 1.0);
}

inline double cosine_ref(const std::vector<double> &a, const std::vector<double> &b) {
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0 || nb == 0) return 0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

inline double kernel_ref(const Dense &d, bool user_axis, bool use_pearson,
                         std::size_t a, std::size_t b) {
  auto ra = axis_row(d, user_axis, a);
  auto rb = axis_row(d, user_axis, b);
  return use_pearson ? pearson_ref(ra, rb) : cosine_ref(ra, rb);
}

// all pairs, zero scores dropped, sorted by (score desc, index asc), truncated
inline std::vector<std::vector<std::pair<std::size_t, double>>> sim_model_ref(
    const Dense &d, bool user_axis, bool use_pearson, std::size_t model_size) {
  std::size_t n = user_axis ? d.n_users : d.n_items;
  std::vector<std::vector<std::pair<std::size_t, double>>> model(n);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t o = 0; o < n; ++o) {
      if (o == e) continue;
      double s = kernel_ref(d, user_axis, use_pearson, e, o);
      if (s != 0) model[e].push_back({o, s});
    }
    std::sort(model[e].begin(), model[e].end(), [](const auto &x, const auto &y) {
      if (x.second != y.second) return x.second > y.second;
      return x.first < y.first;
    });
    if (model[e].size() > model_size) model[e].resize(model_size);
  }
  return model;
}

inline double user_mean_ref(const Dense &d, std::size_t u) {
  double s = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < d.n_items; ++i)
    if (d.rated(u, i)) { s += d.at(u, i); ++n; }
  return s / static_cast<double>(n);
}

// untruncated user-based estimate: every neighbor with sim > threshold
inline std::optional<double> predict_user_ref(const Dense &d, std::size_t u,
                                              std::size_t i, bool use_pearson,
                                              double threshold = 0) {
  double num = 0, den = 0;
  std::size_t used = 0;
  for (std::size_t v = 0; v < d.n_users; ++v) {
    if (v == u || !d.rated(v, i)) continue;
    double s = kernel_ref(d, true, use_pearson, u, v);
    if (s <= threshold) continue;
    num += s * (d.at(v, i) - user_mean_ref(d, v));
    den += std::abs(s);
    ++used;
  }
  if (used == 0 || den == 0) return std::nullopt;
  return std::clamp(user_mean_ref(d, u) + num / den, 1.0, 5.0);
}

inline std::optional<double> predict_item_ref(const Dense &d, std::size_t u,
                                              std::size_t i, bool use_pearson,
                                              double threshold = 0) {
  double num = 0, den = 0;
  std::size_t used = 0;
  for (std::size_t j = 0; j < d.n_items; ++j) {
    if (j == i || !d.rated(u, j)) continue;
    double s = kernel_ref(d, false, use_pearson, i, j);
    if (s <= threshold) continue;
    num += s * d.at(u, j);
    den += std::abs(s);
    ++used;
  }
  if (used == 0 || den == 0) return std::nullopt;
  return std::clamp(num / den, 1.0, 5.0);
}

inline std::optional<std::pair<double, long>> slope_dev_ref(const Dense &d,
                                                            std::size_t j,
                                                            std::size_t i) {
  if (j == i) return std::nullopt;
  double sum = 0;
  long count = 0;
  for (std::size_t u = 0; u < d.n_users; ++u)
    if (d.rated(u, j) && d.rated(u, i)) { sum += d.at(u, j) - d.at(u, i); ++count; }
  if (count == 0) return std::nullopt;
  return std::make_pair(sum / count, count);
}

inline std::optional<double> slope_predict_ref(const Dense &d, std::size_t u,
                                               std::size_t j, bool clamp = true) {
  double num = 0;
  long den = 0;
  for (std::size_t i = 0; i < d.n_items; ++i) {
    if (i == j || !d.rated(u, i)) continue;
    auto dev = slope_dev_ref(d, j, i);
    if (!dev) continue;
    num += (dev->first + d.at(u, i)) * static_cast<double>(dev->second);
    den += dev->second;
  }
  if (den == 0) return std::nullopt;
  double p = num / static_cast<double>(den);
  return clamp ? std::clamp(p, 1.0, 5.0) : p;
}

struct PopRef {
  long item_ext;
  std::size_t raters;
  double sum;
};

inline std::vector<PopRef> popularity_ref(const Dense &d) {
  std::vector<PopRef> out;
  for (std::size_t i = 0; i < d.n_items; ++i) {
    std::size_t raters = 0;
    double sum = 0;
    for (std::size_t u = 0; u < d.n_users; ++u)
      if (d.rated(u, i)) { ++raters; sum += d.at(u, i); }
    out.push_back({d.item_ext(i), raters, sum});
  }
  std::sort(out.begin(), out.end(), [](const PopRef &a, const PopRef &b) {
    if (a.raters != b.raters) return a.raters > b.raters;
    if (a.sum != b.sum) return a.sum > b.sum;
    return a.item_ext < b.item_ext;
  });
  return out;
}

}  // namespace oracle

#endif  // TECHREC_TESTS_ORACLES_HPP_
