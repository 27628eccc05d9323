#include <techrec/similarity.hpp>

#include <algorithm>
#include <cmath>

namespace techrec {

namespace {

// walks two index-sorted sparse vectors over their common support
template <class F>
std::size_t for_each_corated(const SparseVec &a, const SparseVec &b, F &&f) {
  std::size_t ia = 0, ib = 0, n = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia].first < b[ib].first) {
      ++ia;
    } else if (b[ib].first < a[ia].first) {
      ++ib;
    } else {
      f(a[ia].second, b[ib].second);
      ++n; ++ia; ++ib;
    }
  }
  return n;
}

std::size_t corated_count(const SparseVec &a, const SparseVec &b) {
  return for_each_corated(a, b, [](double, double) {});
}

double clamp_unit(double s) { return std::clamp(s, -1.0, 1.0); }

}  // namespace

double pearson(const SparseVec &a, const SparseVec &b) {
  double sa = 0, sb = 0;
  std::size_t n = for_each_corated(a, b, [&](double x, double y) { sa += x; sb += y; });
  if (n < 2) return 0;
  double ma = sa / n, mb = sb / n;
  double num = 0, va = 0, vb = 0;
  for_each_corated(a, b, [&](double x, double y) {
    num += (x - ma) * (y - mb);
    va += (x - ma) * (x - ma);
    vb += (y - mb) * (y - mb);
  });
  if (va == 0 || vb == 0) return 0;
  return clamp_unit(num / std::sqrt(va * vb));
}

double cosine(const SparseVec &a, const SparseVec &b) {
  double dot = 0;
  for_each_corated(a, b, [&](double x, double y) { dot += x * y; });
  double na = 0, nb = 0;
  for (const auto &[i, v] : a) na += v * v;
  for (const auto &[i, v] : b) nb += v * v;
  if (na == 0 || nb == 0) return 0;
  return clamp_unit(dot / (std::sqrt(na) * std::sqrt(nb)));
}

SimilarityModel build_similarity_model(const RatingsMatrix &m, Axis axis,
                                       const SimilarityOptions &opts) {
  std::size_t n = axis == Axis::user ? m.n_users() : m.n_items();
  auto row = [&](std::size_t e) -> const SparseVec & {
    return axis == Axis::user ? m.rated_items(e) : m.item_raters(e);
  };
  SimilarityModel model;
  model.axis = axis;
  model.neighbors.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    auto &nbrs = model.neighbors[e];
    for (std::size_t o = 0; o < n; ++o) {
      if (o == e) continue;
      double s = opts.kernel == Kernel::pearson ? pearson(row(e), row(o))
                                                : cosine(row(e), row(o));
      if (opts.shrinkage_beta > 0 && s != 0) {
        double c = static_cast<double>(corated_count(row(e), row(o)));
        s *= c / (c + opts.shrinkage_beta);
      }
      if (s != 0) nbrs.push_back({o, s});
    }
    std::sort(nbrs.begin(), nbrs.end(), [](const auto &x, const auto &y) {
      if (x.second != y.second) return x.second > y.second;
      return x.first < y.first;
    });
    if (nbrs.size() > opts.model_size) nbrs.resize(opts.model_size);
  }
  return model;
}

}  // namespace techrec
