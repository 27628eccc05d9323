#include <techrec/fixtures.hpp>

#include <algorithm>
#include <ostream>
#include <random>
#include <string>

namespace techrec {

namespace {

std::vector<long> distinct_ids(std::mt19937_64 &rng, std::size_t n, long start) {
  std::vector<long> ids(n);
  long next = start;
  for (auto &id : ids) {
    next += 1 + static_cast<long>(rng() % 97);
    id = next;
  }
  return ids;
}

std::string label(const char *stem, std::size_t i) {
  return std::string(stem) + " " + std::to_string(i);
}

std::vector<ProjectRecord> generate_paper_like(const FixtureConfig &cfg,
                                               std::mt19937_64 &rng) {
  const std::size_t n_users = cfg.n_pm_users;
  // the correlated trio needs 7 projects and enough spare users
  const std::size_t n_power =
      (n_users >= 6 && cfg.n_projects >= n_users + 4) ? 3 : 0;
  const std::size_t n_chain = n_users - n_power;
  const std::size_t power_counts[3] = {2, 3, 2};

  std::size_t base_projects = n_chain;
  for (std::size_t p = 0; p < n_power; ++p) base_projects += power_counts[p];
  std::size_t n_projects = std::max(cfg.n_projects, base_projects);

  auto dev_ids = distinct_ids(rng, n_users, 1000);
  auto proj_ids = distinct_ids(rng, n_projects, 100);
  std::size_t next_proj = 0;

  std::vector<ProjectRecord> records;

  // trio of users whose shared (language, topic) ratings co-vary, so a few
  // user-based neighborhoods do exist
  for (std::size_t p = 0; p < n_power; ++p) {
    long dev = dev_ids[p];
    for (std::size_t j = 0; j < power_counts[p]; ++j) {
      ProjectRecord r;
      r.dev_id = dev;
      r.proj_id = proj_ids[next_proj++];
      r.audience = label("Audience P", p);
      r.environment = label("Env P", p);
      r.os_system = label("OS P", p);
      r.language = "Java";
      r.topic = j == 0 ? "Shared Topic" : label("Topic P", p);
      records.push_back(std::move(r));
    }
  }

  // chained users: user c shares exactly one technology (a language) with
  // user c+1 and nothing with anyone else
  for (std::size_t c = 0; c < n_chain; ++c) {
    ProjectRecord r;
    r.dev_id = dev_ids[n_power + c];
    r.proj_id = proj_ids[next_proj++];
    r.audience = label("Audience C", c);
    r.environment = label("Env C", c);
    r.os_system = label("OS C", c);
    r.language = label("Lang", c);
    r.topic = label("Topic C", c);
    records.push_back(r);
    if (n_chain >= 2) {
      r.language = label("Lang", (c + 1) % n_chain);
      records.push_back(r);
    }
  }

  // remaining projects repeat a chain user's own labels (counts rise, no new
  // co-rating)
  std::size_t c = 0;
  while (next_proj < n_projects && n_chain > 0) {
    ProjectRecord r;
    r.dev_id = dev_ids[n_power + c];
    r.proj_id = proj_ids[next_proj++];
    r.audience = label("Audience C", c);
    r.environment = label("Env C", c);
    r.os_system = label("OS C", c);
    r.language = label("Lang", c);
    r.topic = label("Topic C", c);
    records.push_back(std::move(r));
    c = (c + 1) % n_chain;
  }
  return records;
}

std::vector<ProjectRecord> generate_dense(const FixtureConfig &cfg,
                                          std::mt19937_64 &rng) {
  constexpr std::size_t kPool = 6;
  auto dev_ids = distinct_ids(rng, cfg.n_pm_users, 1000);
  auto proj_ids = distinct_ids(rng, cfg.n_projects, 100);
  std::vector<ProjectRecord> records;
  records.reserve(cfg.n_projects);
  for (std::size_t j = 0; j < cfg.n_projects; ++j) {
    ProjectRecord r;
    r.dev_id = dev_ids[j % cfg.n_pm_users];
    r.proj_id = proj_ids[j];
    r.audience = label("Audience", rng() % kPool);
    r.environment = label("Env", rng() % kPool);
    r.os_system = label("OS", rng() % kPool);
    r.language = label("Lang", rng() % kPool);
    r.topic = label("Topic", rng() % kPool);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace

std::vector<ProjectRecord> generate_ow2_like(const FixtureConfig &cfg) {
  std::mt19937_64 rng(cfg.seed);
  if (cfg.profile == SparsityProfile::dense) return generate_dense(cfg, rng);
  return generate_paper_like(cfg, rng);
}

void write_figure2_format(std::ostream &out,
                          const std::vector<ProjectRecord> &records,
                          char delimiter) {
  const char d = delimiter;
  out << "dev_id" << d << "proj_id_num" << d << "audience" << d << "environment"
      << d << "OS_system" << d << "language" << d << "topic" << d
      << "PREFERENCE_COUNT" << '\n';
  for (const auto &r : records) {
    out << r.dev_id << d << r.proj_id << d << r.audience << d << r.environment
        << d << r.os_system << d << r.language << d << r.topic << d
        << r.preference_count << '\n';
  }
}

}  // namespace techrec
