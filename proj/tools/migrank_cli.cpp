#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "migrank/errors.hpp"
#include "migrank/eval/evaluator.hpp"
#include "migrank/git.hpp"
#include "migrank/ltr/dataset.hpp"
#include "migrank/ltr/model.hpp"
#include "migrank/metrics/feature_json.hpp"
#include "migrank/metrics/features.hpp"
#include "migrank/miner/history.hpp"
#include "migrank/miner/migration_io.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

bool ends_with(const std::string& text, const std::string& suffix) {
  return text.size() >= suffix.size() &&
         text.compare(text.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Every ".java" file under root, with repo-relative forward-slash paths.
std::vector<migrank::metrics::SnapshotFile> load_java_files(const fs::path& root) {
  std::vector<migrank::metrics::SnapshotFile> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    std::string rel = fs::relative(entry.path(), root).generic_string();
    if (!ends_with(rel, ".java")) continue;
    files.push_back({rel, read_file(entry.path())});
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.path < b.path; });
  return files;
}

migrank::metrics::AndroidCatalog load_catalog(const std::string& path) {
  if (path.empty()) return migrank::metrics::AndroidCatalog::bundled();
  return migrank::metrics::AndroidCatalog::from_file(path);
}

// Feature files of one directory, ordered by file name for reproducibility.
std::vector<migrank::metrics::CommitFeatures> load_feature_dir(const fs::path& dir) {
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  std::vector<migrank::metrics::CommitFeatures> commits;
  commits.reserve(paths.size());
  for (const fs::path& path : paths)
    commits.push_back(migrank::metrics::commit_features_from_json(read_file(path)));
  return commits;
}

migrank::ltr::RankerModel load_model(const std::string& path) {
  return migrank::ltr::deserialize_model(read_file(path));
}

struct MineArgs {
  std::string log_file;
  std::string repo;
  std::string out_dir = ".";
};

int run_mine(const MineArgs& args) {
  if (args.log_file.empty() == args.repo.empty())
    throw std::invalid_argument("mine needs exactly one of --log or --git");
  std::string text = args.log_file.empty() ? migrank::git::name_status_log(args.repo)
                                           : read_file(args.log_file);
  auto history = migrank::miner::parse_name_status_log(text);
  auto events = migrank::miner::detect_migrations(history);
  auto histogram = migrank::miner::summarize_migrations(events);

  fs::create_directories(args.out_dir);
  fs::path jsonl = fs::path(args.out_dir) / "migrations.jsonl";
  fs::path csv = fs::path(args.out_dir) / "histogram.csv";
  write_file(jsonl, migrank::miner::to_jsonl(events));
  write_file(csv, migrank::miner::histogram_csv(histogram));

  std::printf("mined %zu commits: %zu migration commits, %zu file migrations\n",
              history.size(), events.size(), histogram.total_pairs);
  std::printf("wrote %s and %s\n", jsonl.string().c_str(), csv.string().c_str());
  return 0;
}

struct ExtractArgs {
  std::string migrations_file;
  std::string snapshots_dir;
  std::string repo;
  std::string catalog_file;
  std::string out_dir = ".";
};

int run_extract(const ExtractArgs& args) {
  if (args.snapshots_dir.empty() == args.repo.empty())
    throw std::invalid_argument("extract needs exactly one of --snapshots or --git");
  auto events = migrank::miner::from_jsonl(read_file(args.migrations_file));
  auto catalog = load_catalog(args.catalog_file);
  fs::create_directories(args.out_dir);

  for (const auto& event : events) {
    fs::path snapshot_dir;
    fs::path scratch;
    if (!args.snapshots_dir.empty()) {
      snapshot_dir = fs::path(args.snapshots_dir) / event.sha;
      if (!fs::is_directory(snapshot_dir)) throw migrank::MissingSnapshot(event.sha);
    } else {
      scratch = fs::path(args.out_dir) / (".checkout-" + event.sha);
      fs::remove_all(scratch);
      migrank::git::export_tree(args.repo, migrank::git::parent_rev(event.sha),
                                scratch.string());
      snapshot_dir = scratch;
    }

    migrank::metrics::ProjectSnapshot snapshot(load_java_files(snapshot_dir), catalog);
    migrank::metrics::CommitFeatures commit;
    commit.sha = event.sha;
    for (const std::string& path : snapshot.java_paths()) {
      auto result = snapshot.extract(path);
      int label = 0;
      for (const auto& pair : event.pairs)
        if (pair.java_path == path) label = 1;
      commit.files.push_back(
          {path, label, result.features, std::move(result.diagnostics)});
    }
    for (const auto& pair : event.pairs)
      if (!snapshot.has_file(pair.java_path))
        std::fprintf(stderr, "warning: %s: migrated file %s missing from snapshot\n",
                     event.sha.c_str(), pair.java_path.c_str());

    write_file(fs::path(args.out_dir) / (event.sha + ".json"),
               migrank::metrics::to_json(commit));
    if (!scratch.empty()) fs::remove_all(scratch);
  }
  std::printf("extracted features for %zu commits into %s\n", events.size(),
              args.out_dir.c_str());
  return 0;
}

struct TrainArgs {
  std::string feature_dir;
  std::string model_file = "model.json";
  migrank::ltr::TrainConfig config;
};

int run_train(const TrainArgs& args) {
  auto commits = load_feature_dir(args.feature_dir);
  std::vector<std::string> diagnostics;
  auto queries = migrank::ltr::queries_from_commit_features(commits, &diagnostics);
  for (const auto& note : diagnostics) std::fprintf(stderr, "note: %s\n", note.c_str());

  migrank::ltr::TrainLog log;
  auto model = migrank::ltr::train(queries, args.config, &log);
  write_file(args.model_file, migrank::ltr::serialize_model(model));

  std::size_t docs = 0;
  for (const auto& query : queries) docs += query.documents.size();
  std::printf("trained on %zu queries (%zu documents) for %d rounds\n", queries.size(),
              docs, args.config.rounds);
  if (!log.round_loss.empty())
    std::printf("pairwise loss %.6f -> %.6f\n", log.round_loss.front(),
                log.round_loss.back());
  std::printf("fingerprint %s\n", model.fingerprint.c_str());
  std::printf("model written to %s\n", args.model_file.c_str());
  return 0;
}

struct RankArgs {
  std::string snapshot_dir;
  std::string model_file;
  std::string catalog_file;
  std::string out_dir;
};

int run_rank(const RankArgs& args) {
  auto model = load_model(args.model_file);
  auto files = load_java_files(args.snapshot_dir);
  migrank::metrics::ProjectSnapshot snapshot(std::move(files),
                                             load_catalog(args.catalog_file));

  std::vector<migrank::ltr::RankingDocument> documents;
  for (const std::string& path : snapshot.java_paths()) {
    auto result = snapshot.extract(path);
    auto values = result.features.to_array();
    documents.push_back({path, {values.begin(), values.end()}, 0});
  }

  nlohmann::ordered_json report;
  report["model_fingerprint"] = model.fingerprint;
  auto& candidates = report["candidates"] = nlohmann::ordered_json::array();

  if (documents.empty()) {
    std::fprintf(stderr, "notice: no .java candidates under %s\n",
                 args.snapshot_dir.c_str());
  } else {
    auto scores = migrank::ltr::predict(model, documents);
    auto order = migrank::ltr::rank(documents, scores);
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::printf("%4zu  %10.6f  %s\n", i + 1, scores[order[i]],
                  documents[order[i]].doc_id.c_str());
      nlohmann::ordered_json row;
      row["rank"] = i + 1;
      row["score"] = scores[order[i]];
      row["path"] = documents[order[i]].doc_id;
      candidates.push_back(std::move(row));
    }
  }

  if (!args.out_dir.empty()) {
    fs::create_directories(args.out_dir);
    write_file(fs::path(args.out_dir) / "recommendations.json",
               report.dump(2) + "\n");
  }
  return 0;
}

struct EvaluateArgs {
  std::string feature_dir;
  std::string model_file;
  std::string strategies = "learned,random,guideline";
  std::size_t k_max = 10;
  int trials = 30;
  std::uint64_t seed = 17;
  bool all_relevant = false;
  std::string out_dir;
};

int run_evaluate(const EvaluateArgs& args) {
  auto commits = load_feature_dir(args.feature_dir);
  auto queries = migrank::ltr::queries_from_commit_features_keep_all(commits);

  migrank::eval::EvaluationOptions options;
  options.k_max = args.k_max;
  options.strategies = migrank::eval::parse_strategies(args.strategies);
  options.random_trials = args.trials;
  options.random_seed = args.seed;
  options.normalization = args.all_relevant
                              ? migrank::eval::ApNormalization::all_relevant
                              : migrank::eval::ApNormalization::relevant_in_top_k;

  bool wants_learned =
      std::find(options.strategies.begin(), options.strategies.end(),
                migrank::eval::Strategy::learned) != options.strategies.end();
  migrank::ltr::RankerModel model;
  if (wants_learned) {
    if (args.model_file.empty())
      throw std::invalid_argument("the learned strategy requires --model");
    model = load_model(args.model_file);
  }

  auto report = migrank::eval::evaluate(wants_learned ? &model : nullptr, queries,
                                        options);
  std::fputs(migrank::eval::report_csv(report).c_str(), stdout);
  if (report.skipped_queries > 0)
    std::fprintf(stderr, "notice: skipped %zu queries without relevant documents\n",
                 report.skipped_queries);

  if (!args.out_dir.empty()) {
    fs::create_directories(args.out_dir);
    write_file(fs::path(args.out_dir) / "report.csv",
               migrank::eval::report_csv(report));
    write_file(fs::path(args.out_dir) / "report.json",
               migrank::eval::report_json(report));
  }
  return 0;
}

int run_importance(const std::string& model_file) {
  auto importance = migrank::ltr::feature_importance(load_model(model_file));
  std::vector<std::pair<std::string, double>> rows(importance.begin(),
                                                   importance.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  for (const auto& [name, share] : rows)
    std::printf("%.6f  %s\n", share, name.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learns which Java files to migrate to Kotlin next from a "
               "project's own migration history, and serves ranked candidate "
               "lists."};
  app.require_subcommand(1);

  MineArgs mine_args;
  auto* mine = app.add_subcommand(
      "mine", "Detect file migrations in version-control history");
  mine->add_option("--log", mine_args.log_file, "name-status history listing")
      ->check(CLI::ExistingFile);
  mine->add_option("--git", mine_args.repo, "repository to read history from")
      ->check(CLI::ExistingDirectory);
  mine->add_option("--out", mine_args.out_dir, "output directory");

  ExtractArgs extract_args;
  auto* extract = app.add_subcommand(
      "extract", "Compute per-file feature vectors for each migration commit");
  extract->add_option("migrations", extract_args.migrations_file,
                      "migrations.jsonl from mine")
      ->required()
      ->check(CLI::ExistingFile);
  extract
      ->add_option("--snapshots", extract_args.snapshots_dir,
                   "directory with one source tree per commit sha")
      ->check(CLI::ExistingDirectory);
  extract
      ->add_option("--git", extract_args.repo,
                   "repository to check parent versions out of")
      ->check(CLI::ExistingDirectory);
  extract->add_option("--catalog", extract_args.catalog_file, "framework class catalog")
      ->check(CLI::ExistingFile);
  extract->add_option("--out", extract_args.out_dir, "output directory");

  TrainArgs train_args;
  auto* train = app.add_subcommand("train", "Fit the ranking model");
  train->add_option("features", train_args.feature_dir, "directory of feature JSON")
      ->required()
      ->check(CLI::ExistingDirectory);
  train->add_option("--model", train_args.model_file, "model output file");
  train->add_option("--rounds", train_args.config.rounds, "boosting rounds")
      ->check(CLI::Range(1, 100000));
  train->add_option("--eta", train_args.config.learning_rate, "learning rate");
  train->add_option("--depth", train_args.config.max_depth, "maximum tree depth")
      ->check(CLI::Range(1, 64));
  train->add_option("--seed", train_args.config.seed, "training seed");

  RankArgs rank_args;
  auto* rank = app.add_subcommand(
      "rank", "Rank a snapshot's Java files by migration priority");
  rank->add_option("snapshot", rank_args.snapshot_dir, "project source tree")
      ->required()
      ->check(CLI::ExistingDirectory);
  rank->add_option("--model", rank_args.model_file, "trained model file")
      ->required()
      ->check(CLI::ExistingFile);
  rank->add_option("--catalog", rank_args.catalog_file, "framework class catalog")
      ->check(CLI::ExistingFile);
  rank->add_option("--out", rank_args.out_dir, "directory for recommendations.json");

  EvaluateArgs eval_args;
  auto* evaluate = app.add_subcommand(
      "evaluate", "Score strategies on held-out migration commits");
  evaluate->add_option("features", eval_args.feature_dir, "directory of feature JSON")
      ->required()
      ->check(CLI::ExistingDirectory);
  evaluate->add_option("--model", eval_args.model_file, "trained model file")
      ->check(CLI::ExistingFile);
  evaluate->add_option("--kmax", eval_args.k_max, "largest cutoff")
      ->check(CLI::Range(1, 100));
  evaluate->add_option("--strategies", eval_args.strategies,
                       "comma-separated: learned,random,guideline");
  evaluate->add_option("--trials", eval_args.trials, "random baseline trials")
      ->check(CLI::Range(1, 100000));
  evaluate->add_option("--seed", eval_args.seed, "random baseline base seed");
  evaluate->add_flag("--ap-all-relevant", eval_args.all_relevant,
                     "normalize average precision by all relevant documents "
                     "instead of those retrieved in the top-k");
  evaluate->add_option("--out", eval_args.out_dir, "directory for report files");

  std::string importance_model;
  auto* importance =
      app.add_subcommand("importance", "Print normalized feature gain shares");
  importance->add_option("--model", importance_model, "trained model file")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(mine)) return run_mine(mine_args);
    if (app.got_subcommand(extract)) return run_extract(extract_args);
    if (app.got_subcommand(train)) return run_train(train_args);
    if (app.got_subcommand(rank)) return run_rank(rank_args);
    if (app.got_subcommand(evaluate)) return run_evaluate(eval_args);
    if (app.got_subcommand(importance)) return run_importance(importance_model);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 3;
  }
  return 0;
}
