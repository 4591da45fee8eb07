#pragma once

#include <string>

namespace migrank::git {

// Full name-status history of a repository, oldest commit first, in the
// format parse_name_status_log understands. Throws std::runtime_error when
// git fails (not a repository, no commits, ...).
std::string name_status_log(const std::string& repo);

// Extracts the tree of `rev` into `dest` (created if needed). Throws
// MissingSnapshot when the revision cannot be archived.
void export_tree(const std::string& repo, const std::string& rev,
                 const std::string& dest);

// Revision naming the state just before `sha` was applied.
inline std::string parent_rev(const std::string& sha) { return sha + "^"; }

}  // namespace migrank::git
