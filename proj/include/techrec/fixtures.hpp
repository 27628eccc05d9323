#ifndef TECHREC_FIXTURES_HPP_
#define TECHREC_FIXTURES_HPP_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <techrec/ingest.hpp>

namespace techrec {

enum class SparsityProfile {
  /// Near-disjoint user pairs (user-based CF starves) while every item stays
  /// co-rated with some other item (item-based CF serves everyone).
  paper_like,
  /// Small label pools drawn at random; heavy co-rating everywhere.
  dense,
};

struct FixtureConfig {
  std::uint64_t seed = 42;
  std::size_t n_pm_users = 103;
  std::size_t n_projects = 150;
  SparsityProfile profile = SparsityProfile::paper_like;
};

/// Deterministic synthetic project-metadata table with the Figure-2 column
/// shape. Identical configs produce identical record lists.
std::vector<ProjectRecord> generate_ow2_like(const FixtureConfig &cfg = {});

void write_figure2_format(std::ostream &out,
                          const std::vector<ProjectRecord> &records,
                          char delimiter = '\t');

}  // namespace techrec

#endif  // TECHREC_FIXTURES_HPP_
