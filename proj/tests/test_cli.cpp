#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "migrank/miner/migration_io.hpp"
#include "test_support.hpp"

using nlohmann::json;
using namespace testsupport;

namespace {

std::string cli() { return shell_quote(cli_path()); }

// Runs git inside `repo` with a fixed identity so commits are scripted.
void git(const std::filesystem::path& repo, const std::string& args) {
  auto result = run("git -C " + shell_quote(repo.string()) +
                    " -c user.name=dev -c user.email=dev@example.com " + args +
                    " 2>&1");
  REQUIRE_MESSAGE(result.exit_code == 0, result.output);
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("help and usage errors") {
  CHECK(run(cli() + " --help 2>/dev/null").exit_code == 0);
  auto help = run(cli() + " --help 2>/dev/null").output;
  for (const char* name : {"mine", "extract", "train", "rank", "evaluate",
                           "importance"})
    CHECK(help.find(name) != std::string::npos);

  CHECK(run(cli() + " 2>/dev/null").exit_code == 2);
  CHECK(run(cli() + " mine --no-such-flag 2>/dev/null").exit_code == 2);
  CHECK(run(cli() + " frobnicate 2>/dev/null").exit_code == 2);
}

TEST_CASE("mine reads a history listing") {
  TempDir tmp("cli-mine");
  write_file(tmp / "history.log",
             "commit aaaa\n"
             "A\tsrc/Main.java\n"
             "A\tsrc/Util.java\n"
             "commit bbbb\n"
             "D\tsrc/Main.java\n"
             "A\tsrc/Main.kt\n"
             "M\tsrc/Util.java\n");
  auto out = (tmp / "mined").string();
  auto result = run(cli() + " mine --log " + shell_quote((tmp / "history.log").string()) +
                    " --out " + shell_quote(out) + " 2>&1");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("mined 2 commits: 1 migration commits, 1 file migrations") !=
        std::string::npos);

  auto jsonl = read_file(tmp / "mined/migrations.jsonl");
  CHECK(jsonl ==
        "{\"sha\":\"bbbb\",\"pairs\":[{\"java\":\"src/Main.java\","
        "\"kotlin\":\"src/Main.kt\"}],\"ambiguous\":false}\n");
  CHECK(read_file(tmp / "mined/histogram.csv") == "files_migrated,commits\n1,1\n");
}

TEST_CASE("mine on an empty history is not an error") {
  TempDir tmp("cli-mine-empty");
  write_file(tmp / "empty.log", "");
  auto result = run(cli() + " mine --log " + shell_quote((tmp / "empty.log").string()) +
                    " --out " + shell_quote((tmp / "out").string()) + " 2>&1");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("mined 0 commits") != std::string::npos);
  CHECK(read_file(tmp / "out/migrations.jsonl").empty());
  CHECK(read_file(tmp / "out/histogram.csv") == "files_migrated,commits\n");
}

TEST_CASE("mine reports the offending line of a broken listing") {
  TempDir tmp("cli-mine-bad");
  write_file(tmp / "bad.log", "commit abc123\nX\tF.java\n");
  auto result = run(cli() + " mine --log " + shell_quote((tmp / "bad.log").string()) +
                    " --out " + shell_quote((tmp / "out").string()) + " 2>&1");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("error:") != std::string::npos);
  CHECK(result.output.find("line 2") != std::string::npos);
  CHECK(result.output.find("unknown status") != std::string::npos);
}

TEST_CASE("mine wants exactly one history source") {
  TempDir tmp("cli-mine-src");
  write_file(tmp / "history.log", "");
  auto neither = run(cli() + " mine 2>&1");
  CHECK(neither.exit_code == 2);
  CHECK(neither.output.find("exactly one of --log or --git") != std::string::npos);
  git(tmp.path(), "init -q");
  auto both = run(cli() + " mine --log " + shell_quote((tmp / "history.log").string()) +
                  " --git " + shell_quote(tmp.path().string()) + " 2>&1");
  CHECK(both.exit_code == 2);
}

TEST_CASE("the full pipeline runs against a scripted repository") {
  TempDir tmp("cli-e2e");
  auto repo = tmp / "repo";
  std::filesystem::create_directories(repo);
  git(repo, "init -q");

  // Five ports over an eight-file tree give training enough pairwise weight
  // to grow real splits under the default hyperparameters.
  write_file(repo / "m1.java", "class M1 {\n}\n");
  write_file(repo / "m2.java", "class M2 {\n  int a;\n}\n");
  write_file(repo / "m3.java",
             "class M3 {\n  int a;\n  int b() {\n    return a;\n  }\n}\n");
  write_file(repo / "m4.java",
             "class M4 {\n  int a;\n  int b;\n  int c() {\n    return a + b;\n"
             "  }\n}\n");
  write_file(repo / "m5.java",
             "class M5 {\n  int a;\n  int c() {\n    return a;\n  }\n"
             "  int d() {\n    return a + 1;\n  }\n}\n");
  write_file(repo / "K.java",
             "class K {\n  int y;\n  int g() {\n    return y + 2;\n  }\n"
             "  int h() {\n    return y * 3;\n  }\n}\n");
  write_file(repo / "L.java",
             "class L {\n  int p;\n  int q;\n  int r() {\n    return p + q;\n  }\n"
             "  int s() {\n    return p - q;\n  }\n  int t() {\n    return p * q;\n"
             "  }\n}\n");
  write_file(repo / "app/C.java", "package app;\n\nclass C {\n}\n");
  git(repo, "add .");
  git(repo, "commit -q -m 'initial sources'");

  git(repo, "mv m1.java m1.kt");
  write_file(repo / "K.java",
             "class K {\n  int y;\n  int z;\n  int g() {\n    return y + 2;\n  }\n"
             "  int h() {\n    return y * 3;\n  }\n}\n");
  git(repo, "add .");
  git(repo, "commit -q -m 'port m1 to kotlin'");

  git(repo, "mv m2.java m2.kt");
  git(repo, "commit -q -m 'port m2 to kotlin'");
  git(repo, "mv m3.java m3.kt");
  git(repo, "commit -q -m 'port m3 to kotlin'");
  git(repo, "mv m4.java m4.kt");
  git(repo, "commit -q -m 'port m4 to kotlin'");
  git(repo, "mv m5.java m5.kt");
  git(repo, "commit -q -m 'port m5 to kotlin'");

  auto mined = (tmp / "mined").string();
  auto mine_run = run(cli() + " mine --git " + shell_quote(repo.string()) + " --out " +
                      shell_quote(mined) + " 2>&1");
  CHECK(mine_run.exit_code == 0);
  CHECK(mine_run.output.find("mined 6 commits: 5 migration commits, 5 file migrations") !=
        std::string::npos);

  auto events = migrank::miner::from_jsonl(read_file(tmp / "mined/migrations.jsonl"));
  REQUIRE(events.size() == 5);
  REQUIRE(events[0].pairs.size() == 1);
  CHECK(events[0].pairs[0].java_path == "m1.java");
  CHECK(events[0].pairs[0].kotlin_path == "m1.kt");
  CHECK_FALSE(events[0].ambiguous);
  CHECK(events[4].pairs[0].java_path == "m5.java");
  const std::string sha = events[0].sha;

  auto features_dir = (tmp / "features").string();
  auto extract_run = run(cli() + " extract " +
                         shell_quote((tmp / "mined/migrations.jsonl").string()) +
                         " --git " + shell_quote(repo.string()) + " --out " +
                         shell_quote(features_dir) + " 2>&1");
  CHECK(extract_run.exit_code == 0);
  CHECK(extract_run.output.find("extracted features for 5 commits") !=
        std::string::npos);

  auto commit = json::parse(read_file(tmp / ("features/" + sha + ".json")));
  CHECK(commit.at("sha") == sha);
  REQUIRE(commit.at("files").size() == 8);
  CHECK(commit.at("files").at(0).at("path") == "K.java");
  CHECK(commit.at("files").at(0).at("label") == 0);
  CHECK(commit.at("files").at(3).at("path") == "m1.java");
  CHECK(commit.at("files").at(3).at("label") == 1);
  CHECK(commit.at("files").at(5).at("path") == "m3.java");
  CHECK(commit.at("files").at(5).at("label") == 0);
  // The snapshot is the parent state, before K.java gained its second field.
  CHECK(commit.at("files").at(0).at("features").at("sloc") == 9);

  auto model_file = (tmp / "model.json").string();
  auto train_run = run(cli() + " train " + shell_quote(features_dir) + " --model " +
                       shell_quote(model_file) + " --rounds 5 2>&1");
  CHECK(train_run.exit_code == 0);
  CHECK(train_run.output.find("trained on 5 queries (30 documents) for 5 rounds") !=
        std::string::npos);
  CHECK(train_run.output.find("fingerprint ") != std::string::npos);

  auto importance_run = run(cli() + " importance --model " + shell_quote(model_file) +
                            " 2>/dev/null");
  CHECK(importance_run.exit_code == 0);
  double share_sum = 0;
  std::size_t rows = 0;
  for (std::size_t at = 0; at < importance_run.output.size();) {
    auto end = importance_run.output.find('\n', at);
    if (end == std::string::npos) break;
    share_sum += std::strtod(importance_run.output.c_str() + at, nullptr);
    ++rows;
    at = end + 1;
  }
  CHECK(rows >= 1);
  CHECK(std::abs(share_sum - 1.0) < 1e-6);

  auto rank_out = (tmp / "ranked").string();
  auto rank_run = run(cli() + " rank " + shell_quote(repo.string()) + " --model " +
                      shell_quote(model_file) + " --out " + shell_quote(rank_out) +
                      " 2>/dev/null");
  CHECK(rank_run.exit_code == 0);
  CHECK(rank_run.output.find("   1  ") == 0);
  CHECK(rank_run.output.find("  K.java") != std::string::npos);
  CHECK(rank_run.output.find("  app/C.java") != std::string::npos);
  CHECK(rank_run.output.find("m1.java") == std::string::npos);  // already ported

  auto recommendations = json::parse(read_file(tmp / "ranked/recommendations.json"));
  auto model_json = json::parse(read_file(model_file));
  CHECK(recommendations.at("model_fingerprint") == model_json.at("fingerprint"));
  REQUIRE(recommendations.at("candidates").size() == 3);
  CHECK(recommendations.at("candidates").at(0).at("rank") == 1);
  CHECK(recommendations.at("candidates").at(2).at("rank") == 3);

  auto eval_out = (tmp / "evaluated").string();
  auto eval_run = run(cli() + " evaluate " + shell_quote(features_dir) + " --model " +
                      shell_quote(model_file) + " --kmax 3 --trials 5 --out " +
                      shell_quote(eval_out) + " 2>/dev/null");
  CHECK(eval_run.exit_code == 0);
  CHECK(eval_run.output.rfind("strategy,k=1,k=2,k=3\n", 0) == 0);
  CHECK(eval_run.output.find("\nlearned,") != std::string::npos);
  auto report = json::parse(read_file(tmp / "evaluated/report.json"));
  CHECK(report.at("queries") == 5);
  CHECK(report.at("strategies").at("learned").size() == 3);
  CHECK(read_file(tmp / "evaluated/report.csv") == eval_run.output);
}

TEST_CASE("training the same features twice is byte identical") {
  TempDir tmp("cli-train-det");
  auto corpus = min_sloc_corpus(6, 5, 31);
  write_feature_dir(tmp / "features", corpus);
  auto one = (tmp / "m1.json").string();
  auto two = (tmp / "m2.json").string();
  auto base = cli() + " train " + shell_quote((tmp / "features").string()) +
              " --rounds 4 --model ";
  CHECK(run(base + shell_quote(one) + " 2>/dev/null").exit_code == 0);
  CHECK(run(base + shell_quote(two) + " 2>/dev/null").exit_code == 0);
  auto first = read_file(one);
  CHECK(first == read_file(two));
  CHECK(!first.empty());
}

TEST_CASE("training a degenerate corpus fails loudly") {
  TempDir tmp("cli-train-degenerate");
  auto corpus = min_sloc_corpus(2, 4, 32);
  for (auto& query : corpus)
    for (auto& doc : query.documents) doc.label = 0;
  write_feature_dir(tmp / "features", corpus);
  auto result = run(cli() + " train " + shell_quote((tmp / "features").string()) +
                    " --model " + shell_quote((tmp / "m.json").string()) + " 2>&1");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("note: dropped query") != std::string::npos);
  CHECK(result.output.find("error:") != std::string::npos);
}

TEST_CASE("rank refuses a damaged model") {
  TempDir tmp("cli-rank-bad-model");
  write_file(tmp / "model.json", "{ not json");
  write_file(tmp / "src/A.java", "class A {}\n");
  auto result = run(cli() + " rank " + shell_quote((tmp / "src").string()) +
                    " --model " + shell_quote((tmp / "model.json").string()) + " 2>&1");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("error:") != std::string::npos);
}

TEST_CASE("rank on a kotlin-only tree prints a notice and succeeds") {
  TempDir tmp("cli-rank-empty");
  auto corpus = min_sloc_corpus(4, 4, 33);
  write_feature_dir(tmp / "features", corpus);
  auto model_file = (tmp / "model.json").string();
  REQUIRE(run(cli() + " train " + shell_quote((tmp / "features").string()) +
              " --rounds 3 --model " + shell_quote(model_file) + " 2>/dev/null")
              .exit_code == 0);

  write_file(tmp / "src/Main.kt", "fun main() {}\n");
  auto out_dir = (tmp / "out").string();
  auto result = run(cli() + " rank " + shell_quote((tmp / "src").string()) +
                    " --model " + shell_quote(model_file) + " --out " +
                    shell_quote(out_dir) + " 2>&1");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("notice: no .java candidates") != std::string::npos);
  auto report = json::parse(read_file(tmp / "out/recommendations.json"));
  CHECK(report.at("candidates").empty());
}

TEST_CASE("evaluate validates its strategy list and model flag") {
  TempDir tmp("cli-eval-flags");
  auto corpus = min_sloc_corpus(3, 4, 34);
  write_feature_dir(tmp / "features", corpus);
  auto features = shell_quote((tmp / "features").string());

  auto unknown = run(cli() + " evaluate " + features + " --strategies nope 2>&1");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.output.find("unknown strategy") != std::string::npos);

  auto missing_model = run(cli() + " evaluate " + features + " 2>&1");
  CHECK(missing_model.exit_code == 2);
  CHECK(missing_model.output.find("requires --model") != std::string::npos);

  auto baselines_only = run(cli() + " evaluate " + features +
                            " --strategies random,guideline --kmax 2 2>/dev/null");
  CHECK(baselines_only.exit_code == 0);
  CHECK(baselines_only.output.rfind("strategy,k=1,k=2\n", 0) == 0);
  CHECK(baselines_only.output.find("improvement_vs_") == std::string::npos);
}

TEST_SUITE_END();
