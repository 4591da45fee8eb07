#include "migrank/miner/migration_io.hpp"

#include <sstream>

#include <json.hpp>

#include "migrank/errors.hpp"

namespace migrank::miner {

std::string to_jsonl(const std::vector<MigrationEvent>& events) {
  std::string out;
  for (const MigrationEvent& event : events) {
    nlohmann::ordered_json j;
    j["sha"] = event.sha;
    auto& pairs = j["pairs"] = nlohmann::ordered_json::array();
    for (const MigrationPair& p : event.pairs) {
      nlohmann::ordered_json pj;
      pj["java"] = p.java_path;
      pj["kotlin"] = p.kotlin_path;
      pairs.push_back(std::move(pj));
    }
    j["ambiguous"] = event.ambiguous;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<MigrationEvent> from_jsonl(const std::string& text) {
  std::vector<MigrationEvent> events;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("sha") || !j.contains("pairs"))
      throw MalformedLog(line_no, "not a migration event object");
    MigrationEvent event;
    event.sha = j.at("sha").get<std::string>();
    event.ambiguous = j.value("ambiguous", false);
    for (const auto& pj : j.at("pairs"))
      event.pairs.push_back({pj.at("java").get<std::string>(),
                             pj.at("kotlin").get<std::string>()});
    events.push_back(std::move(event));
  }
  return events;
}

std::string histogram_csv(const MigrationHistogram& histogram) {
  std::string out = "files_migrated,commits\n";
  for (const auto& [pairs, commits] : histogram.commits_by_pair_count)
    out += std::to_string(pairs) + "," + std::to_string(commits) + "\n";
  return out;
}

}  // namespace migrank::miner
