#include "migrank/miner/history.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string_view>
#include <utility>

#include "migrank/errors.hpp"

namespace migrank::miner {

namespace {

bool is_hex(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isxdigit(c); });
}

bool has_suffix(std::string_view path, std::string_view suffix) {
  return path.size() >= suffix.size() &&
         path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// "src/a/Login.java" -> directory "src/a", stem "Login".
std::pair<std::string, std::string> split_dir_stem(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string dir = slash == std::string::npos ? std::string() : path.substr(0, slash);
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = name.find_last_of('.');
  if (dot != std::string::npos) name.erase(dot);
  return {std::move(dir), std::move(name)};
}

struct Candidate {
  std::string dir;
  std::string path;
  bool used = false;
};

void sort_candidates(std::vector<Candidate>& v) {
  std::sort(v.begin(), v.end(),
            [](const Candidate& a, const Candidate& b) { return a.path < b.path; });
}

}  // namespace

std::vector<CommitDelta> parse_name_status_log(const std::string& text) {
  std::vector<CommitDelta> history;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) {
      if (pos > text.size()) break;
      continue;
    }

    if (line.rfind("commit ", 0) == 0) {
      std::string_view sha = line.substr(7);
      if (!is_hex(sha))
        throw MalformedLog(line_no, "bad commit header '" + std::string(line) + "'");
      history.push_back({std::string(sha), history.size(), {}});
      continue;
    }

    auto tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw MalformedLog(line_no, "expected status and path separated by a tab");
    std::string_view status = line.substr(0, tab);
    std::string_view rest = line.substr(tab + 1);
    if (history.empty())
      throw MalformedLog(line_no, "change record before any commit header");
    if (rest.empty()) throw MalformedLog(line_no, "missing path");

    ChangeRecord rec;
    if (status == "A") {
      rec.status = ChangeStatus::added;
    } else if (status == "D") {
      rec.status = ChangeStatus::deleted;
    } else if (status == "M") {
      rec.status = ChangeStatus::modified;
    } else if (status.size() > 1 && status[0] == 'R' &&
               std::all_of(status.begin() + 1, status.end(),
                           [](unsigned char c) { return std::isdigit(c); })) {
      rec.status = ChangeStatus::renamed;
      auto tab2 = rest.find('\t');
      if (tab2 == std::string_view::npos)
        throw MalformedLog(line_no, "rename needs old and new path");
      rec.old_path = std::string(rest.substr(0, tab2));
      rest = rest.substr(tab2 + 1);
      if (rec.old_path.empty() || rest.empty())
        throw MalformedLog(line_no, "rename needs old and new path");
    } else {
      throw MalformedLog(line_no, "unknown status '" + std::string(status) + "'");
    }
    if (rec.status != ChangeStatus::renamed && rest.find('\t') != std::string_view::npos)
      throw MalformedLog(line_no, "unexpected extra field");
    rec.path = std::string(rest);
    history.back().changes.push_back(std::move(rec));
  }
  return history;
}

std::vector<MigrationEvent> detect_migrations(const std::vector<CommitDelta>& history) {
  std::vector<MigrationEvent> events;
  for (const CommitDelta& commit : history) {
    // Pools of removed .java and added .kt files, grouped by stem. A rename
    // contributes its old path to the removals and its new path to the adds.
    std::map<std::string, std::vector<Candidate>> removed, added;
    auto consider = [&](const std::string& path, bool removal) {
      if (removal && !has_suffix(path, ".java")) return;
      if (!removal && !has_suffix(path, ".kt")) return;
      auto [dir, stem] = split_dir_stem(path);
      (removal ? removed : added)[stem].push_back({std::move(dir), path});
    };
    for (const ChangeRecord& rec : commit.changes) {
      switch (rec.status) {
        case ChangeStatus::added:
          consider(rec.path, false);
          break;
        case ChangeStatus::deleted:
          consider(rec.path, true);
          break;
        case ChangeStatus::renamed:
          consider(rec.old_path, true);
          consider(rec.path, false);
          break;
        case ChangeStatus::modified:
          break;
      }
    }

    MigrationEvent event;
    event.sha = commit.sha;
    for (auto& [stem, javas] : removed) {
      auto it = added.find(stem);
      if (it == added.end()) continue;
      auto& kotlins = it->second;
      if (javas.size() > 1 || kotlins.size() > 1) event.ambiguous = true;
      sort_candidates(javas);
      sort_candidates(kotlins);
      // Same-directory matches first, then whatever is left in order.
      for (auto& j : javas) {
        for (auto& k : kotlins) {
          if (!k.used && k.dir == j.dir) {
            j.used = k.used = true;
            event.pairs.push_back({j.path, k.path});
            break;
          }
        }
      }
      for (auto& j : javas) {
        if (j.used) continue;
        for (auto& k : kotlins) {
          if (!k.used) {
            j.used = k.used = true;
            event.pairs.push_back({j.path, k.path});
            break;
          }
        }
      }
    }
    if (event.pairs.empty()) continue;
    std::sort(event.pairs.begin(), event.pairs.end(),
              [](const MigrationPair& a, const MigrationPair& b) {
                return a.java_path < b.java_path;
              });
    events.push_back(std::move(event));
  }
  return events;
}

MigrationHistogram summarize_migrations(const std::vector<MigrationEvent>& events) {
  MigrationHistogram histogram;
  for (const MigrationEvent& event : events) {
    histogram.commits_by_pair_count[event.pairs.size()] += 1;
    histogram.total_pairs += event.pairs.size();
    histogram.total_commits += 1;
  }
  return histogram;
}

}  // namespace migrank::miner
