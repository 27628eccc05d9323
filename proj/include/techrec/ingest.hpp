#ifndef TECHREC_INGEST_HPP_
#define TECHREC_INGEST_HPP_

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <techrec/errors.hpp>

namespace techrec {

enum class Aspect { audience = 1, environment = 2, os = 3, language = 4, topic = 5 };

constexpr std::array<Aspect, 5> kAspects = {Aspect::audience, Aspect::environment,
                                            Aspect::os, Aspect::language,
                                            Aspect::topic};

const char *aspect_name(Aspect a);

/// One denormalized row of project metadata. The same (dev, project) pair may
/// appear on several rows when an aspect has multiple values.
struct ProjectRecord {
  long dev_id = 0;
  long proj_id = 0;
  std::string audience;
  std::string environment;
  std::string os_system;
  std::string language;
  std::string topic;
  int preference_count = 5;  // [1,5]

  const std::string &aspect_label(Aspect a) const;
  bool operator==(const ProjectRecord &) const = default;
};

struct TechnologyEntry {
  long id = 0;
  Aspect aspect = Aspect::audience;
  std::string label;
  std::string title;  // equals label
  std::string genre;  // equals aspect name
};

/// Distinct (aspect, label) pairs with deterministic ids:
/// id = aspect_code * 10000 + 1-based first-appearance ordinal within the aspect.
struct TechnologyCatalog {
  std::vector<TechnologyEntry> entries;  // sorted by id

  std::optional<long> find(Aspect a, const std::string &label) const;
  const TechnologyEntry *by_id(long id) const;
};

struct RatingRow {
  long user_id = 0;
  long technology_id = 0;
  double value = 0;  // [1,5]

  bool operator==(const RatingRow &) const = default;
};

struct ParseOptions {
  char delimiter = '\t';
};

/// Parses the eight-column Figure-2-shaped table. Header is matched
/// case-insensitively; an optional trailing "role" column is accepted and,
/// when present, rows are kept only if the role mentions "manager".
/// Exact duplicate rows are collapsed.
std::vector<ProjectRecord> parse_project_metadata(std::istream &in,
                                                  const ParseOptions &opts = {});

TechnologyCatalog build_catalog(const std::vector<ProjectRecord> &records);

/// For each user and technology, the rating is the number of distinct projects
/// on which the user's rows carry that label, clamped to [1,5].
/// Output sorted by (user_id, technology_id).
std::vector<RatingRow> derive_ratings(const std::vector<ProjectRecord> &records,
                                      const TechnologyCatalog &catalog);

void write_ratings_file(std::ostream &out, const std::vector<RatingRow> &rows);
void write_technology_file(std::ostream &out, const TechnologyCatalog &catalog);
std::vector<RatingRow> read_ratings_file(std::istream &in);

}  // namespace techrec

#endif  // TECHREC_INGEST_HPP_
