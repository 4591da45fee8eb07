#pragma once

#include <string>
#include <vector>

#include "migrank/miner/history.hpp"

namespace migrank::miner {

// One event per line:
//   {"sha":"...","pairs":[{"java":"...","kotlin":"..."}],"ambiguous":false}
std::string to_jsonl(const std::vector<MigrationEvent>& events);
std::vector<MigrationEvent> from_jsonl(const std::string& text);

// CSV with header "files_migrated,commits", rows ascending by key.
std::string histogram_csv(const MigrationHistogram& histogram);

}  // namespace migrank::miner
