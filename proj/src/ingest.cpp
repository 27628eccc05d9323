#include <techrec/ingest.hpp>

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace techrec {

namespace {

std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split(const std::string &line, char delim) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, delim)) out.push_back(field);
  if (!line.empty() && line.back() == delim) out.emplace_back();
  return out;
}

long parse_positive_long(const std::string &raw, std::size_t row,
                         const std::string &column) {
  std::string s = trim(raw);
  if (s.empty()) throw RowParseError(row, column, "missing value");
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception &) {
    throw RowParseError(row, column, "not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw RowParseError(row, column, "not an integer: '" + s + "'");
  if (v <= 0) throw RowParseError(row, column, "must be positive");
  return v;
}

constexpr const char *kHeader[8] = {"dev_id",    "proj_id_num", "audience",
                                    "environment", "os_system", "language",
                                    "topic",     "preference_count"};

}  // namespace

const char *aspect_name(Aspect a) {
  switch (a) {
    case Aspect::audience: return "audience";
    case Aspect::environment: return "environment";
    case Aspect::os: return "os";
    case Aspect::language: return "language";
    case Aspect::topic: return "topic";
  }
  return "?";
}

const std::string &ProjectRecord::aspect_label(Aspect a) const {
  switch (a) {
    case Aspect::audience: return audience;
    case Aspect::environment: return environment;
    case Aspect::os: return os_system;
    case Aspect::language: return language;
    case Aspect::topic: return topic;
  }
  return audience;
}

std::vector<ProjectRecord> parse_project_metadata(std::istream &in,
                                                  const ParseOptions &opts) {
  std::string line;
  if (!std::getline(in, line)) throw EmptyInput("empty stream");

  auto header = split(line, opts.delimiter);
  bool has_role = false;
  if (header.size() == 9 && lower(trim(header[8])) == "role") {
    has_role = true;
  } else if (header.size() != 8) {
    throw MalformedHeader("expected 8 columns, got " +
                          std::to_string(header.size()));
  }
  for (int c = 0; c < 8; ++c) {
    if (lower(trim(header[c])) != kHeader[c])
      throw MalformedHeader("column " + std::to_string(c + 1) + " is '" +
                            trim(header[c]) + "', expected '" + kHeader[c] + "'");
  }

  std::vector<ProjectRecord> records;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    auto fields = split(line, opts.delimiter);
    if (fields.size() != (has_role ? 9u : 8u))
      throw RowParseError(row, "*", "expected " +
                          std::to_string(has_role ? 9 : 8) + " fields, got " +
                          std::to_string(fields.size()));
    if (has_role && lower(trim(fields[8])).find("manager") == std::string::npos)
      continue;

    ProjectRecord r;
    r.dev_id = parse_positive_long(fields[0], row, "dev_id");
    r.proj_id = parse_positive_long(fields[1], row, "proj_id_num");
    r.audience = trim(fields[2]);
    r.environment = trim(fields[3]);
    r.os_system = trim(fields[4]);
    r.language = trim(fields[5]);
    r.topic = trim(fields[6]);
    for (Aspect a : kAspects) {
      if (r.aspect_label(a).empty())
        throw RowParseError(row, aspect_name(a), "empty label");
    }
    long pc = parse_positive_long(fields[7], row, "preference_count");
    if (pc > 5) throw RowParseError(row, "preference_count", "outside [1,5]");
    r.preference_count = static_cast<int>(pc);
    records.push_back(std::move(r));
  }
  if (records.empty()) throw EmptyInput("no data rows");

  // collapse exact duplicate rows, keeping first-appearance order
  std::vector<ProjectRecord> unique;
  unique.reserve(records.size());
  for (auto &r : records) {
    if (std::find(unique.begin(), unique.end(), r) == unique.end())
      unique.push_back(std::move(r));
  }
  return unique;
}

std::optional<long> TechnologyCatalog::find(Aspect a, const std::string &label) const {
  for (const auto &e : entries)
    if (e.aspect == a && e.label == label) return e.id;
  return std::nullopt;
}

const TechnologyEntry *TechnologyCatalog::by_id(long id) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), id,
                             [](const TechnologyEntry &e, long v) { return e.id < v; });
  if (it == entries.end() || it->id != id) return nullptr;
  return &*it;
}

TechnologyCatalog build_catalog(const std::vector<ProjectRecord> &records) {
  if (records.empty()) throw EmptyInput("no records");
  TechnologyCatalog catalog;
  std::map<std::pair<int, std::string>, long> seen;
  std::array<long, 6> next_ordinal = {0, 1, 1, 1, 1, 1};
  for (const auto &r : records) {
    for (Aspect a : kAspects) {
      int code = static_cast<int>(a);
      const std::string &label = r.aspect_label(a);
      auto key = std::make_pair(code, label);
      if (seen.count(key)) continue;
      long id = code * 10000 + next_ordinal[code]++;
      seen[key] = id;
      catalog.entries.push_back({id, a, label, label, aspect_name(a)});
    }
  }
  std::sort(catalog.entries.begin(), catalog.entries.end(),
            [](const TechnologyEntry &x, const TechnologyEntry &y) { return x.id < y.id; });
  return catalog;
}

std::vector<RatingRow> derive_ratings(const std::vector<ProjectRecord> &records,
                                      const TechnologyCatalog &catalog) {
  // (user, technology) -> distinct projects carrying that label
  std::map<std::pair<long, long>, std::set<long>> projects;
  for (const auto &r : records) {
    for (Aspect a : kAspects) {
      auto id = catalog.find(a, r.aspect_label(a));
      if (!id) throw UnknownLabel(aspect_name(a), r.aspect_label(a));
      projects[{r.dev_id, *id}].insert(r.proj_id);
    }
  }
  std::vector<RatingRow> rows;
  rows.reserve(projects.size());
  for (const auto &[key, projs] : projects) {
    double value = std::min<std::size_t>(5, projs.size());
    rows.push_back({key.first, key.second, value});
  }
  return rows;  // map iteration order is already (user_id, technology_id)
}

void write_ratings_file(std::ostream &out, const std::vector<RatingRow> &rows) {
  for (const auto &r : rows) {
    out << r.user_id << ',' << r.technology_id << ',';
    if (r.value == static_cast<long>(r.value))
      out << static_cast<long>(r.value);
    else
      out << r.value;
    out << '\n';
  }
}

void write_technology_file(std::ostream &out, const TechnologyCatalog &catalog) {
  for (const auto &e : catalog.entries)
    out << e.id << ',' << e.title << ',' << e.genre << '\n';
}

std::vector<RatingRow> read_ratings_file(std::istream &in) {
  std::vector<RatingRow> rows;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (trim(line).empty()) continue;
    auto fields = split(line, ',');
    if (fields.size() != 3) throw RowParseError(n, "*", "expected 3 fields");
    RatingRow r;
    r.user_id = parse_positive_long(fields[0], n, "userID");
    r.technology_id = parse_positive_long(fields[1], n, "technologyID");
    try {
      r.value = std::stod(trim(fields[2]));
    } catch (const std::exception &) {
      throw RowParseError(n, "value", "not a number");
    }
    rows.push_back(r);
  }
  if (rows.empty()) throw EmptyInput("empty ratings file");
  return rows;
}

}  // namespace techrec
