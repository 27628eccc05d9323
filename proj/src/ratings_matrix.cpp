#include <techrec/ratings_matrix.hpp>

#include <algorithm>

namespace techrec {

RatingsMatrix RatingsMatrix::from_rating_rows(const std::vector<RatingRow> &rows) {
  if (rows.empty()) throw EmptyInput("no rating rows");
  RatingsMatrix m;
  double sum = 0;
  for (const auto &r : rows) {
    if (r.value < 1.0 || r.value > 5.0)
      throw std::invalid_argument("rating value outside [1,5]");
    auto [uit, unew] = m.user_index_.try_emplace(r.user_id, m.user_ids_.size());
    if (unew) {
      m.user_ids_.push_back(r.user_id);
      m.by_user_.emplace_back();
    }
    auto [iit, inew] = m.item_index_.try_emplace(r.technology_id, m.item_ids_.size());
    if (inew) {
      m.item_ids_.push_back(r.technology_id);
      m.by_item_.emplace_back();
    }
    std::size_t u = uit->second, i = iit->second;
    auto &row = m.by_user_[u];
    auto pos = std::lower_bound(row.begin(), row.end(), i,
                                [](const auto &p, std::size_t v) { return p.first < v; });
    if (pos != row.end() && pos->first == i)
      throw DuplicatePair(r.user_id, r.technology_id);
    row.insert(pos, {i, r.value});
    sum += r.value;
    ++m.n_ratings_;
  }
  for (std::size_t u = 0; u < m.by_user_.size(); ++u)
    for (const auto &[i, v] : m.by_user_[u]) m.by_item_[i].push_back({u, v});
  for (auto &col : m.by_item_)
    std::sort(col.begin(), col.end());
  m.user_means_.resize(m.by_user_.size());
  for (std::size_t u = 0; u < m.by_user_.size(); ++u) {
    double s = 0;
    for (const auto &[i, v] : m.by_user_[u]) s += v;
    m.user_means_[u] = s / static_cast<double>(m.by_user_[u].size());
  }
  m.global_mean_ = sum / static_cast<double>(m.n_ratings_);
  return m;
}

const SparseVec &RatingsMatrix::rated_items(std::size_t u) const {
  if (u >= by_user_.size()) throw IndexOutOfRange("user index " + std::to_string(u));
  return by_user_[u];
}

const SparseVec &RatingsMatrix::item_raters(std::size_t i) const {
  if (i >= by_item_.size()) throw IndexOutOfRange("item index " + std::to_string(i));
  return by_item_[i];
}

double RatingsMatrix::user_mean(std::size_t u) const {
  if (u >= user_means_.size()) throw IndexOutOfRange("user index " + std::to_string(u));
  return user_means_[u];
}

std::optional<double> RatingsMatrix::rating(std::size_t u, std::size_t i) const {
  const auto &row = rated_items(u);
  auto pos = std::lower_bound(row.begin(), row.end(), i,
                              [](const auto &p, std::size_t v) { return p.first < v; });
  if (pos == row.end() || pos->first != i) return std::nullopt;
  return pos->second;
}

long RatingsMatrix::user_ext_id(std::size_t u) const {
  if (u >= user_ids_.size()) throw IndexOutOfRange("user index " + std::to_string(u));
  return user_ids_[u];
}

long RatingsMatrix::item_ext_id(std::size_t i) const {
  if (i >= item_ids_.size()) throw IndexOutOfRange("item index " + std::to_string(i));
  return item_ids_[i];
}

std::optional<std::size_t> RatingsMatrix::user_index(long ext_id) const {
  auto it = user_index_.find(ext_id);
  if (it == user_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RatingsMatrix::item_index(long ext_id) const {
  auto it = item_index_.find(ext_id);
  if (it == item_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<RatingRow> RatingsMatrix::to_rows() const {
  std::vector<RatingRow> rows;
  rows.reserve(n_ratings_);
  for (std::size_t u = 0; u < by_user_.size(); ++u)
    for (const auto &[i, v] : by_user_[u])
      rows.push_back({user_ids_[u], item_ids_[i], v});
  return rows;
}

}  // namespace techrec
