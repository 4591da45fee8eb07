#pragma once

#include <map>
#include <string>

namespace migrank::metrics {

// Catalog of Android framework class simple names, grouped by the app
// feature they indicate. Feature keys: "activity", "view", "receiver",
// "service", "provider", "fragment".
//
// File format, one entry per line: feature<TAB>SimpleName. Blank lines and
// lines starting with '#' are ignored.
class AndroidCatalog {
 public:
  static const AndroidCatalog& bundled();
  static AndroidCatalog parse(const std::string& text);
  static AndroidCatalog from_file(const std::string& path);

  bool contains(const std::string& simple_name) const {
    return feature_by_name_.count(simple_name) > 0;
  }
  // Returns the feature key, or nullptr for names outside the catalog.
  const std::string* feature_of(const std::string& simple_name) const {
    auto it = feature_by_name_.find(simple_name);
    return it == feature_by_name_.end() ? nullptr : &it->second;
  }
  std::size_t size() const { return feature_by_name_.size(); }

 private:
  std::map<std::string, std::string> feature_by_name_;
};

}  // namespace migrank::metrics
