#include "coxric/check.hpp"

namespace coxric {

namespace {
constexpr std::size_t kMaxCounterexamples = 8;
}

void CheckTally::record(bool ok, const std::string& detail) {
  ++checked;
  if (ok) return;
  ++failed;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(detail);
}

}  // namespace coxric
