#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zcross {

struct Violation {
  std::string check;
  std::vector<std::int64_t> index;
  std::string detail;
};

// Outcome of an exhaustive sweep; violations are content, not errors.
struct Report {
  std::string name;
  std::uint64_t visited = 0;
  std::uint64_t total = 0;
  bool complete = true;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string check, std::vector<std::int64_t> index, std::string detail = {}) {
    violations.push_back({std::move(check), std::move(index), std::move(detail)});
  }

  void merge(const Report& o) {
    visited += o.visited;
    total += o.total;
    complete = complete && o.complete;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

}  // namespace zcross
