#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace coxric {

// Pass/fail tally for one named invariant, keeping the first few counterexamples.
struct CheckTally {
  CheckTally() = default;
  explicit CheckTally(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> counterexamples;

  bool pass() const { return failed == 0; }
  void record(bool ok, const std::string& detail);

  // Same as record, building the detail only on failure.
  template <typename MakeDetail>
  void expect(bool ok, MakeDetail&& make_detail) {
    if (ok) {
      ++checked;
    } else {
      record(false, make_detail());
    }
  }
};

}  // namespace coxric
