#include <techrec/factorization.hpp>

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

namespace techrec {

namespace {

// engine-independent draws so models reproduce bit-for-bit under one seed
double uniform_unit(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void shuffle_indices(std::vector<std::size_t> &idx, std::mt19937_64 &rng) {
  for (std::size_t i = idx.size(); i > 1; --i)
    std::swap(idx[i - 1], idx[rng() % i]);
}

struct Triple {
  std::size_t u, i;
  double r;
};

std::vector<Triple> triples_of(const RatingsMatrix &m) {
  std::vector<Triple> t;
  t.reserve(m.n_ratings());
  for (std::size_t u = 0; u < m.n_users(); ++u)
    for (const auto &[i, r] : m.rated_items(u)) t.push_back({u, i, r});
  return t;
}

double regularized_loss(const FactorModel &mdl, const std::vector<Triple> &data,
                        double lambda) {
  double loss = 0;
  for (const auto &t : data) {
    double e = t.r - mdl.predict_raw(t.u, t.i);
    double pn = 0, qn = 0;
    for (std::size_t k = 0; k < mdl.f; ++k) {
      pn += mdl.p[t.u * mdl.f + k] * mdl.p[t.u * mdl.f + k];
      qn += mdl.q[t.i * mdl.f + k] * mdl.q[t.i * mdl.f + k];
    }
    loss += e * e + lambda * (mdl.b_user[t.u] * mdl.b_user[t.u] +
                              mdl.b_item[t.i] * mdl.b_item[t.i] + pn + qn);
  }
  return loss;
}

}  // namespace

double FactorModel::predict_raw(std::size_t u, std::size_t i) const {
  if (u >= n_users()) throw IndexOutOfRange("user index " + std::to_string(u));
  if (i >= n_items()) throw IndexOutOfRange("item index " + std::to_string(i));
  double dot = 0;
  for (std::size_t k = 0; k < f; ++k) dot += p[u * f + k] * q[i * f + k];
  return mu + b_user[u] + b_item[i] + dot;
}

double FactorModel::predict(std::size_t u, std::size_t i) const {
  return std::clamp(predict_raw(u, i), 1.0, 5.0);
}

FactorModel mf_train(const RatingsMatrix &m, const TrainConfig &cfg) {
  if (m.n_ratings() == 0) throw EmptyInput("empty matrix");
  std::mt19937_64 rng(cfg.seed);

  FactorModel mdl;
  mdl.mu = m.global_mean();
  mdl.f = cfg.factors;
  mdl.seed = cfg.seed;
  mdl.b_user.assign(m.n_users(), 0.0);
  mdl.b_item.assign(m.n_items(), 0.0);
  mdl.p.resize(m.n_users() * cfg.factors);
  mdl.q.resize(m.n_items() * cfg.factors);
  for (auto &v : mdl.p) v = (2 * uniform_unit(rng) - 1) * cfg.init_scale;
  for (auto &v : mdl.q) v = (2 * uniform_unit(rng) - 1) * cfg.init_scale;
  mdl.user_ids.resize(m.n_users());
  mdl.item_ids.resize(m.n_items());
  for (std::size_t u = 0; u < m.n_users(); ++u) mdl.user_ids[u] = m.user_ext_id(u);
  for (std::size_t i = 0; i < m.n_items(); ++i) mdl.item_ids[i] = m.item_ext_id(i);

  auto data = triples_of(m);
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), 0);

  const double eta = cfg.learning_rate, lambda = cfg.regularization;
  mdl.epoch_loss.reserve(cfg.epochs);
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    shuffle_indices(order, rng);
    for (std::size_t idx : order) {
      const auto &t = data[idx];
      double e = t.r - mdl.predict_raw(t.u, t.i);
      if (!std::isfinite(e))
        throw DivergenceDetected("non-finite residual at epoch " + std::to_string(epoch));
      double bu = mdl.b_user[t.u], bi = mdl.b_item[t.i];
      mdl.b_user[t.u] += eta * (e - lambda * bu);
      mdl.b_item[t.i] += eta * (e - lambda * bi);
      double *pu = &mdl.p[t.u * mdl.f];
      double *qi = &mdl.q[t.i * mdl.f];
      for (std::size_t k = 0; k < mdl.f; ++k) {
        double pk = pu[k], qk = qi[k];
        pu[k] += eta * (e * qk - lambda * pk);
        qi[k] += eta * (e * pk - lambda * qk);
      }
    }
    double loss = regularized_loss(mdl, data, lambda);
    if (!std::isfinite(loss))
      throw DivergenceDetected("non-finite loss at epoch " + std::to_string(epoch));
    mdl.epoch_loss.push_back(loss);
  }
  return mdl;
}

double mf_gradient_check(const TrainConfig &cfg, const RatingsMatrix &probe) {
  std::mt19937_64 rng(cfg.seed);
  FactorModel mdl;
  mdl.mu = probe.global_mean();
  mdl.f = cfg.factors;
  mdl.seed = cfg.seed;
  mdl.b_user.resize(probe.n_users());
  mdl.b_item.resize(probe.n_items());
  mdl.p.resize(probe.n_users() * cfg.factors);
  mdl.q.resize(probe.n_items() * cfg.factors);
  for (auto *vec : {&mdl.b_user, &mdl.b_item, &mdl.p, &mdl.q})
    for (auto &v : *vec) v = (2 * uniform_unit(rng) - 1) * cfg.init_scale;

  auto data = triples_of(probe);
  const double lambda = cfg.regularization;

  // analytic gradient, ordered (b_user, b_item, P, Q)
  std::vector<double> grad(mdl.b_user.size() + mdl.b_item.size() + mdl.p.size() +
                           mdl.q.size(), 0.0);
  std::size_t off_bi = mdl.b_user.size();
  std::size_t off_p = off_bi + mdl.b_item.size();
  std::size_t off_q = off_p + mdl.p.size();
  for (const auto &t : data) {
    double e = t.r - mdl.predict_raw(t.u, t.i);
    grad[t.u] += -2 * e + 2 * lambda * mdl.b_user[t.u];
    grad[off_bi + t.i] += -2 * e + 2 * lambda * mdl.b_item[t.i];
    for (std::size_t k = 0; k < mdl.f; ++k) {
      grad[off_p + t.u * mdl.f + k] +=
          -2 * e * mdl.q[t.i * mdl.f + k] + 2 * lambda * mdl.p[t.u * mdl.f + k];
      grad[off_q + t.i * mdl.f + k] +=
          -2 * e * mdl.p[t.u * mdl.f + k] + 2 * lambda * mdl.q[t.i * mdl.f + k];
    }
  }

  auto param = [&](std::size_t idx) -> double & {
    if (idx < off_bi) return mdl.b_user[idx];
    if (idx < off_p) return mdl.b_item[idx - off_bi];
    if (idx < off_q) return mdl.p[idx - off_p];
    return mdl.q[idx - off_q];
  };

  const double h = 1e-5;
  double max_rel = 0;
  for (std::size_t idx = 0; idx < grad.size(); ++idx) {
    double &v = param(idx);
    double saved = v;
    v = saved + h;
    double lp = regularized_loss(mdl, data, lambda);
    v = saved - h;
    double lm = regularized_loss(mdl, data, lambda);
    v = saved;
    double numeric = (lp - lm) / (2 * h);
    double rel = std::abs(grad[idx] - numeric) /
                 std::max({std::abs(grad[idx]), std::abs(numeric), 1.0});
    max_rel = std::max(max_rel, rel);
  }
  return max_rel;
}

void FactorModel::save(std::ostream &out) const {
  out.precision(std::numeric_limits<double>::max_digits10);
  out << "TECHREC-MF 1\n";
  out << f << ' ' << n_users() << ' ' << n_items() << ' ' << seed << '\n';
  out << mu << '\n';
  for (std::size_t u = 0; u < n_users(); ++u) {
    out << "U " << user_ids[u] << ' ' << b_user[u];
    for (std::size_t k = 0; k < f; ++k) out << ' ' << p[u * f + k];
    out << '\n';
  }
  for (std::size_t i = 0; i < n_items(); ++i) {
    out << "I " << item_ids[i] << ' ' << b_item[i];
    for (std::size_t k = 0; k < f; ++k) out << ' ' << q[i * f + k];
    out << '\n';
  }
}

FactorModel FactorModel::load(std::istream &in) {
  std::string magic;
  int version = 0;
  in >> magic >> version;
  if (magic != "TECHREC-MF" || version != 1)
    throw std::runtime_error("not a TECHREC-MF v1 snapshot");
  FactorModel mdl;
  std::size_t nu = 0, ni = 0;
  in >> mdl.f >> nu >> ni >> mdl.seed >> mdl.mu;
  mdl.b_user.resize(nu);
  mdl.b_item.resize(ni);
  mdl.p.resize(nu * mdl.f);
  mdl.q.resize(ni * mdl.f);
  mdl.user_ids.resize(nu);
  mdl.item_ids.resize(ni);
  for (std::size_t u = 0; u < nu; ++u) {
    std::string tag;
    in >> tag >> mdl.user_ids[u] >> mdl.b_user[u];
    for (std::size_t k = 0; k < mdl.f; ++k) in >> mdl.p[u * mdl.f + k];
    if (tag != "U" || !in) throw std::runtime_error("corrupt user block");
  }
  for (std::size_t i = 0; i < ni; ++i) {
    std::string tag;
    in >> tag >> mdl.item_ids[i] >> mdl.b_item[i];
    for (std::size_t k = 0; k < mdl.f; ++k) in >> mdl.q[i * mdl.f + k];
    if (tag != "I" || !in) throw std::runtime_error("corrupt item block");
  }
  return mdl;
}

}  // namespace techrec
