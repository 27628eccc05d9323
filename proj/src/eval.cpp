#include <techrec/eval.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <ostream>
#include <random>
#include <set>

namespace techrec {

SplitResult leave_k_out_split(const RatingsMatrix &m, std::size_t k,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RatingRow> train_rows;
  std::vector<HoldoutTriple> holdout;
  for (std::size_t u = 0; u < m.n_users(); ++u) {
    const auto &row = m.rated_items(u);
    long user = m.user_ext_id(u);
    if (row.size() <= k) {
      for (const auto &[i, v] : row)
        train_rows.push_back({user, m.item_ext_id(i), v});
      continue;
    }
    std::vector<std::size_t> pos(row.size());
    for (std::size_t p = 0; p < pos.size(); ++p) pos[p] = p;
    for (std::size_t p = 0; p < k; ++p)
      std::swap(pos[p], pos[p + rng() % (pos.size() - p)]);
    std::set<std::size_t> held(pos.begin(), pos.begin() + k);
    for (std::size_t p = 0; p < row.size(); ++p) {
      long item = m.item_ext_id(row[p].first);
      if (held.count(p))
        holdout.push_back({user, item, row[p].second});
      else
        train_rows.push_back({user, item, row[p].second});
    }
  }
  return {RatingsMatrix::from_rating_rows(train_rows), std::move(holdout)};
}

CoverageResult coverage(const RatingsMatrix &m, const Recommender &rec,
                        std::size_t n) {
  CoverageResult out;
  out.users_total = m.n_users();
  for (std::size_t u = 0; u < m.n_users(); ++u)
    if (!rec(m.user_ext_id(u), n).empty()) ++out.users_served;
  out.coverage = out.users_total == 0
                     ? 0.0
                     : static_cast<double>(out.users_served) /
                           static_cast<double>(out.users_total);
  return out;
}

RmseResult rmse(const std::vector<HoldoutTriple> &holdout, const Predictor &pred) {
  if (holdout.empty()) throw EmptyHoldout();
  RmseResult out;
  double sq = 0;
  for (const auto &t : holdout) {
    auto p = pred(t.user, t.item);
    if (!p) {
      ++out.n_skipped;
      continue;
    }
    sq += (*p - t.value) * (*p - t.value);
    ++out.n_predicted;
  }
  out.value = out.n_predicted == 0
                  ? 0.0
                  : std::sqrt(sq / static_cast<double>(out.n_predicted));
  return out;
}

PrecisionRecall precision_recall_at_k(const std::vector<HoldoutTriple> &holdout,
                                      const Recommender &rec, std::size_t k) {
  std::map<long, std::set<long>> by_user;
  for (const auto &t : holdout) by_user[t.user].insert(t.item);
  double psum = 0, rsum = 0;
  std::size_t served = 0;
  for (const auto &[user, items] : by_user) {
    auto recs = rec(user, k);
    if (recs.empty()) continue;
    std::size_t hits = 0;
    for (const auto &r : recs)
      if (items.count(r.item)) ++hits;
    psum += static_cast<double>(hits) / static_cast<double>(k);
    rsum += static_cast<double>(hits) / static_cast<double>(items.size());
    ++served;
  }
  if (served == 0) return {0, 0};
  return {psum / static_cast<double>(served), rsum / static_cast<double>(served)};
}

namespace {

std::vector<Recommendation> score_unrated(const RatingsMatrix &m, long user_ext,
                                          std::size_t n,
                                          const Predictor &pred) {
  auto u = m.user_index(user_ext);
  if (!u) return {};
  std::vector<Recommendation> scored;
  for (std::size_t i = 0; i < m.n_items(); ++i) {
    if (m.rating(*u, i)) continue;
    auto p = pred(user_ext, m.item_ext_id(i));
    if (p) scored.push_back({m.item_ext_id(i), *p});
  }
  return top_n_recommendations(std::move(scored), n);
}

}  // namespace

AlgorithmBundle make_algorithm(const std::string &name, const RatingsMatrix &train,
                               const BenchmarkConfig &cfg) {
  if (name == "user" || name == "item") {
    bool user_based = name == "user";
    auto sim = std::make_shared<SimilarityModel>(build_similarity_model(
        train, user_based ? Axis::user : Axis::item,
        user_based ? cfg.user_similarity : cfg.item_similarity));
    auto nbr = cfg.neighborhood;
    Predictor pred = [&train, sim, nbr, user_based](long ue, long ie)
        -> std::optional<double> {
      auto u = train.user_index(ue);
      auto i = train.item_index(ie);
      if (!u || !i) return std::nullopt;
      return user_based ? predict_user_based(train, *sim, *u, *i, nbr)
                        : predict_item_based(train, *sim, *u, *i, nbr);
    };
    Recommender rec = [&train, sim, nbr, user_based](long ue, std::size_t n)
        -> std::vector<Recommendation> {
      if (!train.user_index(ue)) return {};
      return recommend_top_n(train, *sim, ue, n, nbr,
                             user_based ? PredictorKind::user_based
                                        : PredictorKind::item_based);
    };
    return {std::move(rec), std::move(pred)};
  }
  if (name == "slopeone") {
    auto dev = std::make_shared<DeviationModel>(build_deviations(train));
    Predictor pred = [&train, dev](long ue, long ie) -> std::optional<double> {
      auto u = train.user_index(ue);
      auto i = train.item_index(ie);
      if (!u || !i || train.rating(*u, *i)) return std::nullopt;
      return predict_slope_one(train, *dev, *u, *i);
    };
    Recommender rec = [&train, pred](long ue, std::size_t n) {
      return score_unrated(train, ue, n, pred);
    };
    return {std::move(rec), std::move(pred)};
  }
  if (name == "mf") {
    auto model = std::make_shared<FactorModel>(mf_train(train, cfg.mf));
    Predictor pred = [&train, model](long ue, long ie) -> std::optional<double> {
      auto u = train.user_index(ue);
      auto i = train.item_index(ie);
      if (!u || !i) return std::nullopt;
      return model->predict(*u, *i);
    };
    Recommender rec = [&train, pred](long ue, std::size_t n) {
      return score_unrated(train, ue, n, pred);
    };
    return {std::move(rec), std::move(pred)};
  }
  if (name == "pop") {
    Recommender rec = [&train](long ue, std::size_t n) {
      auto u = train.user_index(ue);
      std::vector<Recommendation> recs;
      for (const auto &e : popularity_rank(train)) {
        if (recs.size() == n) break;
        if (u && train.rating(*u, *train.item_index(e.item))) continue;
        recs.push_back({e.item, static_cast<double>(e.raters)});
      }
      return recs;
    };
    return {std::move(rec), nullptr};
  }
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::vector<EvalReport> run_benchmark(const RatingsMatrix &m,
                                      const BenchmarkConfig &cfg) {
  auto split = leave_k_out_split(m, cfg.holdout_k, cfg.seed);
  std::vector<EvalReport> reports;
  for (const auto &name : cfg.algorithms) {
    auto start = std::chrono::steady_clock::now();
    auto algo = make_algorithm(name, split.train, cfg);
    EvalReport rep;
    rep.algorithm = name;
    auto cov = coverage(split.train, algo.recommender, cfg.top_n);
    rep.coverage = cov.coverage;
    rep.users_served = cov.users_served;
    rep.users_total = cov.users_total;
    if (algo.predictor && !split.holdout.empty())
      rep.rmse = rmse(split.holdout, algo.predictor).value;
    if (!split.holdout.empty()) {
      auto pr = precision_recall_at_k(split.holdout, algo.recommender, cfg.top_n);
      rep.precision_at_k = pr.precision;
      rep.recall_at_k = pr.recall;
    }
    rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start).count();
    reports.push_back(std::move(rep));
  }
  return reports;
}

namespace {
std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}
std::string opt4(const std::optional<double> &v) { return v ? fmt4(*v) : "-"; }
}  // namespace

void write_report_table(std::ostream &out, const std::vector<EvalReport> &reports,
                        bool include_wall_time) {
  out << "algorithm\tcoverage\tusers_served\tusers_total\trmse\tprecision_at_k"
         "\trecall_at_k";
  if (include_wall_time) out << "\twall_time_ms";
  out << '\n';
  for (const auto &r : reports) {
    out << r.algorithm << '\t' << fmt4(r.coverage) << '\t' << r.users_served
        << '\t' << r.users_total << '\t' << opt4(r.rmse) << '\t'
        << opt4(r.precision_at_k) << '\t' << opt4(r.recall_at_k);
    if (include_wall_time) out << '\t' << fmt4(r.wall_time_ms);
    out << '\n';
  }
}

void write_report_records(std::ostream &out, const std::vector<EvalReport> &reports) {
  for (const auto &r : reports) {
    out << "algorithm: " << r.algorithm << '\n'
        << "coverage: " << fmt4(r.coverage) << '\n'
        << "users_served: " << r.users_served << '\n'
        << "users_total: " << r.users_total << '\n'
        << "rmse: " << opt4(r.rmse) << '\n'
        << "precision_at_k: " << opt4(r.precision_at_k) << '\n'
        << "recall_at_k: " << opt4(r.recall_at_k) << '\n'
        << '\n';
  }
}

}  // namespace techrec
