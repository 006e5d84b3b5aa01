#pragma once

#include <string>
#include <vector>

namespace coringlab {

/// List of violated identities; empty means every check passed.
struct CheckReport {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
  void merge(const std::string& prefix, const CheckReport& other) {
    for (const auto& f : other.failures) failures.push_back(prefix + ": " + f);
  }
};

}  // namespace coringlab
