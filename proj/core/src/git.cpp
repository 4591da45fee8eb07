#include "migrank/git.hpp"

#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include <sys/wait.h>

#include "migrank/errors.hpp"

namespace migrank::git {

namespace {

std::string shell_quote(const std::string& text) {
  std::string out = "'";
  for (char c : text) {
    if (c == '\'')
      out += "'\\''";
    else
      out += c;
  }
  out += "'";
  return out;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_command(const std::string& command) {
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("failed to spawn: " + command);
  CommandResult result;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) result.output.append(buf, n);
  int status = ::pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace

std::string name_status_log(const std::string& repo) {
  std::string command = "git -C " + shell_quote(repo) +
                        " log --reverse --name-status"
                        " '--pretty=format:commit %H' 2>/dev/null";
  CommandResult result = run_command(command);
  if (result.exit_code != 0)
    throw std::runtime_error("git log failed for repository " + repo);
  return result.output;
}

void export_tree(const std::string& repo, const std::string& rev,
                 const std::string& dest) {
  std::filesystem::create_directories(dest);
  // Absolute so `git -C` does not resolve it inside the repository.
  std::filesystem::path tar =
      std::filesystem::absolute(std::filesystem::path(dest) / ".migrank-export.tar");
  std::string archive = "git -C " + shell_quote(repo) + " archive --format=tar -o " +
                        shell_quote(tar.string()) + " " + shell_quote(rev) +
                        " 2>/dev/null";
  if (run_command(archive).exit_code != 0) {
    std::error_code ec;
    std::filesystem::remove(tar, ec);
    throw MissingSnapshot(rev);
  }
  std::string extract =
      "tar -xf " + shell_quote(tar.string()) + " -C " + shell_quote(dest);
  int code = run_command(extract).exit_code;
  std::error_code ec;
  std::filesystem::remove(tar, ec);
  if (code != 0)
    throw std::runtime_error("archive extraction failed for revision " + rev);
}

}  // namespace migrank::git
