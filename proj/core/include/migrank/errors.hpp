#pragma once

#include <stdexcept>
#include <string>

namespace migrank {

// Input that violates a documented file format. Carries the offending line
// where one can be pinpointed.
class MalformedLog : public std::runtime_error {
 public:
  MalformedLog(int line, const std::string& what)
      : std::runtime_error("malformed log, line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class UnterminatedLiteral : public std::runtime_error {
 public:
  UnterminatedLiteral(int line, const std::string& what)
      : std::runtime_error("unterminated literal at line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class MissingSnapshot : public std::runtime_error {
 public:
  explicit MissingSnapshot(const std::string& sha)
      : std::runtime_error("no snapshot available for commit " + sha), sha_(sha) {}
  const std::string& sha() const { return sha_; }

 private:
  std::string sha_;
};

class EmptyDataset : public std::runtime_error {
 public:
  EmptyDataset() : std::runtime_error("training set contains no usable query") {}
};

class EmptyResults : public std::runtime_error {
 public:
  EmptyResults() : std::runtime_error("no query results to evaluate") {}
};

class EmptyTestSet : public std::runtime_error {
 public:
  EmptyTestSet() : std::runtime_error("no evaluable query in the test set") {}
};

class FeatureArityMismatch : public std::runtime_error {
 public:
  FeatureArityMismatch(std::size_t expected, std::size_t got)
      : std::runtime_error("feature vector has " + std::to_string(got) +
                           " values, model expects " + std::to_string(expected)) {}
};

class SchemaVersionMismatch : public std::runtime_error {
 public:
  explicit SchemaVersionMismatch(long long found)
      : std::runtime_error("unsupported model schema version " + std::to_string(found)) {}
};

class CorruptModel : public std::runtime_error {
 public:
  explicit CorruptModel(const std::string& what)
      : std::runtime_error("corrupt model file: " + what) {}
};

class NoSplits : public std::runtime_error {
 public:
  NoSplits() : std::runtime_error("model has no splits, importance undefined") {}
};

class ZeroBaseline : public std::runtime_error {
 public:
  ZeroBaseline() : std::runtime_error("baseline mean average precision is zero") {}
};

}  // namespace migrank
