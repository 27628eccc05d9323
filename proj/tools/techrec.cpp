#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <techrec/eval.hpp>
#include <techrec/fixtures.hpp>
#include <techrec/ingest.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUnknownEntity = 3;
constexpr int kExitUsage = 64;

char parse_delimiter(const std::string &s) {
  if (s == "tab" || s == "\\t") return '\t';
  if (s.size() == 1) return s[0];
  throw CLI::ValidationError("--delimiter", "must be a single character or 'tab'");
}

techrec::RatingsMatrix load_matrix(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return techrec::RatingsMatrix::from_rating_rows(techrec::read_ratings_file(in));
}

std::string fmt_score(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct Options {
  // shared
  std::string ratings_path;
  std::string out_path;
  std::uint64_t seed = 42;
  std::string delimiter = "tab";
  // ingest
  std::string input_path;
  std::string out_dir = ".";
  // recommend
  long user_id = 0;
  std::string algorithm = "item";
  std::size_t top_n = 10;
  bool fallback = false;
  techrec::BenchmarkConfig bench;
  // evaluate/benchmark
  std::string algorithms_csv = "user,item,slopeone,mf,pop";
  std::string format = "table";
  bool wall_time = false;
  // generate-fixture
  std::size_t users = 103;
  std::size_t projects = 150;
  std::string profile = "paper-like";
};

int cmd_generate_fixture(const Options &opt) {
  techrec::FixtureConfig cfg;
  cfg.seed = opt.seed;
  cfg.n_pm_users = opt.users;
  cfg.n_projects = opt.projects;
  cfg.profile = opt.profile == "dense" ? techrec::SparsityProfile::dense
                                       : techrec::SparsityProfile::paper_like;
  auto records = techrec::generate_ow2_like(cfg);
  char delim = parse_delimiter(opt.delimiter);
  if (opt.out_path.empty()) {
    techrec::write_figure2_format(std::cout, records, delim);
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw std::ios_base::failure("cannot write " + opt.out_path);
    techrec::write_figure2_format(out, records, delim);
  }
  std::cerr << "records=" << records.size() << " users=" << opt.users
            << " projects=" << opt.projects << '\n';
  return kExitOk;
}

int cmd_ingest(const Options &opt) {
  std::ifstream in(opt.input_path);
  if (!in) throw std::ios_base::failure("cannot open " + opt.input_path);
  techrec::ParseOptions popts;
  popts.delimiter = parse_delimiter(opt.delimiter);
  auto records = techrec::parse_project_metadata(in, popts);
  auto catalog = techrec::build_catalog(records);
  auto ratings = techrec::derive_ratings(records, catalog);

  std::filesystem::create_directories(opt.out_dir);
  auto ratings_path = std::filesystem::path(opt.out_dir) / "ratings.csv";
  auto tech_path = std::filesystem::path(opt.out_dir) / "technology.csv";
  {
    std::ofstream out(ratings_path);
    if (!out) throw std::ios_base::failure("cannot write " + ratings_path.string());
    techrec::write_ratings_file(out, ratings);
  }
  {
    std::ofstream out(tech_path);
    if (!out) throw std::ios_base::failure("cannot write " + tech_path.string());
    techrec::write_technology_file(out, catalog);
  }

  std::set<long> users;
  for (const auto &r : ratings) users.insert(r.user_id);
  std::cout << "rows=" << records.size() << " users=" << users.size()
            << " technologies=" << catalog.entries.size()
            << " ratings=" << ratings.size() << '\n';
  return kExitOk;
}

int cmd_recommend(const Options &opt) {
  auto matrix = load_matrix(opt.ratings_path);
  auto cfg = opt.bench;
  cfg.seed = opt.seed;
  cfg.mf.seed = opt.seed;
  auto bundle = techrec::make_algorithm(opt.algorithm, matrix, cfg);

  std::vector<techrec::Recommendation> recs;
  const char *provenance = "model";
  if (opt.fallback) {
    auto [list, prov] =
        techrec::recommend_with_fallback(matrix, bundle.recommender, opt.user_id,
                                         opt.top_n);
    recs = std::move(list);
    provenance = prov == techrec::Provenance::fallback ? "fallback" : "model";
  } else {
    if (!matrix.user_index(opt.user_id)) throw techrec::UnknownUser(opt.user_id);
    recs = bundle.recommender(opt.user_id, opt.top_n);
  }
  for (const auto &r : recs)
    std::cout << r.item << '\t' << fmt_score(r.score) << '\t' << provenance << '\n';
  return kExitOk;  // an empty list is a result, not an error
}

int cmd_evaluate(const Options &opt) {
  auto matrix = load_matrix(opt.ratings_path);
  auto cfg = opt.bench;
  cfg.seed = opt.seed;
  cfg.mf.seed = opt.seed;
  cfg.top_n = opt.top_n;
  cfg.algorithms.clear();
  std::stringstream ss(opt.algorithms_csv);
  std::string name;
  while (std::getline(ss, name, ','))
    if (!name.empty()) cfg.algorithms.push_back(name);

  auto reports = techrec::run_benchmark(matrix, cfg);
  auto emit = [&](std::ostream &out) {
    if (opt.format == "records")
      techrec::write_report_records(out, reports);
    else
      techrec::write_report_table(out, reports, opt.wall_time);
  };
  if (opt.out_path.empty()) {
    emit(std::cout);
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw std::ios_base::failure("cannot write " + opt.out_path);
    emit(out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Technology recommender for software project metadata"};
  app.require_subcommand(1);
  app.set_config("--config");

  Options opt;

  auto *gen = app.add_subcommand("generate-fixture",
                                 "Write a synthetic Figure-2-shaped metadata table");
  gen->add_option("--seed", opt.seed, "Deterministic seed");
  gen->add_option("--users", opt.users, "Number of project-manager users")
      ->check(CLI::PositiveNumber);
  gen->add_option("--projects", opt.projects, "Number of projects")
      ->check(CLI::PositiveNumber);
  gen->add_option("--profile", opt.profile, "Sparsity profile")
      ->check(CLI::IsMember({"paper-like", "dense"}));
  gen->add_option("--out", opt.out_path, "Output file (default stdout)");
  gen->add_option("--delimiter", opt.delimiter, "Field delimiter ('tab' or a character)");

  auto *ing = app.add_subcommand("ingest",
                                 "Derive ratings and technology files from metadata");
  ing->add_option("input", opt.input_path, "Project metadata file")->required();
  ing->add_option("--out-dir", opt.out_dir, "Output directory");
  ing->add_option("--delimiter", opt.delimiter, "Field delimiter ('tab' or a character)");

  auto add_model_flags = [&](CLI::App *cmd) {
    cmd->add_option("--k", opt.bench.neighborhood.k, "Neighbors per prediction")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--min-neighbors", opt.bench.neighborhood.min_neighbors,
                    "Minimum contributing neighbors")->check(CLI::PositiveNumber);
    cmd->add_option("--threshold", opt.bench.neighborhood.similarity_threshold,
                    "Similarity must exceed this to contribute");
    cmd->add_option("--model-size", opt.bench.user_similarity.model_size,
                    "Neighbors kept per entity in the similarity model")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--factors", opt.bench.mf.factors, "Latent factor count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--epochs", opt.bench.mf.epochs, "Training epochs")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--learning-rate", opt.bench.mf.learning_rate, "SGD step size");
    cmd->add_option("--regularization", opt.bench.mf.regularization, "L2 strength");
  };

  auto *rec = app.add_subcommand("recommend", "Rank technologies for one user");
  rec->add_option("--ratings", opt.ratings_path, "Ratings file")->required();
  rec->add_option("--user", opt.user_id, "External user id")->required();
  rec->add_option("--algorithm", opt.algorithm, "Predictor")
      ->check(CLI::IsMember({"user", "item", "slopeone", "mf", "pop"}));
  rec->add_option("-n,--top-n", opt.top_n, "List length")->check(CLI::PositiveNumber);
  rec->add_flag("--fallback", opt.fallback,
                "Serve popularity items when the model cannot");
  rec->add_option("--seed", opt.seed, "Deterministic seed");
  add_model_flags(rec);

  for (const char *name : {"evaluate", "benchmark"}) {
    auto *ev = app.add_subcommand(name, "Run the algorithm comparison over a split");
    ev->add_option("--ratings", opt.ratings_path, "Ratings file")->required();
    ev->add_option("--holdout-k", opt.bench.holdout_k, "Held-out ratings per user")
        ->check(CLI::PositiveNumber);
    ev->add_option("--seed", opt.seed, "Deterministic seed");
    ev->add_option("--top-n", opt.top_n, "Recommendation list length")
        ->check(CLI::PositiveNumber);
    ev->add_option("--algorithms", opt.algorithms_csv, "Comma-separated algorithm list");
    ev->add_option("--out", opt.out_path, "Report file (default stdout)");
    ev->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"table", "records"}));
    ev->add_flag("--wall-time", opt.wall_time, "Include wall time in the table");
    add_model_flags(ev);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    // sync item-side model size with the shared --model-size flag
    opt.bench.item_similarity.model_size = opt.bench.user_similarity.model_size;
    if (app.got_subcommand("generate-fixture")) return cmd_generate_fixture(opt);
    if (app.got_subcommand("ingest")) return cmd_ingest(opt);
    if (app.got_subcommand("recommend")) return cmd_recommend(opt);
    return cmd_evaluate(opt);
  } catch (const techrec::UnknownUser &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnknownEntity;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
