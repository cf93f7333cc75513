#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coxric/graph.hpp"
#include "coxric/rng.hpp"

namespace coxric {

// Number of edges with exactly one endpoint in the subset.
std::size_t boundary_size(const Graph& g, std::span<const Vertex> subset);

// 1/2 min{sqrt(lambda), lambda / sqrt(2|K|)} |A| (1 - |A|/|V|).
// Throws InputError for K == 0 or lambda <= 0.
double iso_bound(std::size_t size_a, std::size_t size_v, double lambda, double ricci_lower);

// 1/2 |A| (1 - |A|/|V|), the Bruhat-graph specialization (lambda >= 2, K = 2).
double bruhat_bound(std::size_t size_a, std::size_t size_v);

// Seeded subset generator; see Rng for the reproducibility contract.
class SubsetSampler {
 public:
  explicit SubsetSampler(std::uint64_t seed) : rng_(seed) {}

  // Each vertex included independently with probability 1/2.
  std::vector<Vertex> uniform(std::size_t order);
  // Uniform among subsets of exactly k vertices (partial Fisher-Yates), sorted.
  std::vector<Vertex> of_size(std::size_t order, std::size_t k);

 private:
  Rng rng_;
};

enum class IsoMode { exhaustive, sampled };
enum class SubsetKind { exhaustive, uniform, stratified };

inline constexpr std::size_t kExhaustiveMaxOrder = 20;

struct IsoOptions {
  IsoMode mode = IsoMode::sampled;
  std::uint64_t seed = 42;
  std::size_t samples = 10'000;
  bool stratified = true;  // one extra sample per size 1..|V|-1
  // Measured spectral gap and curvature lower bound; computed when absent.
  std::optional<double> lambda;
  std::optional<double> ricci;
  bool check_bruhat_bound = true;
};

struct IsoReport {
  SubsetKind kind = SubsetKind::uniform;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;      // sample index, or the membership bitmask when exhaustive
  std::vector<Vertex> members;  // empty for exhaustive subsets (see index)
  std::size_t size = 0;
  std::size_t boundary = 0;
  std::optional<double> curvature_bound;  // absent when K = 0
  std::optional<double> bruhat_bound;
  double slack = 0.0;  // boundary minus the largest checked bound
  bool pass = true;
};

struct IsoSummary {
  double lambda = 0.0;
  double ricci = 0.0;
  std::vector<IsoReport> reports;  // ordered by (size, kind, index)

  std::size_t failures() const;
  const IsoReport* tightest() const;
};

IsoSummary verify_isoperimetry(const Graph& g, const IsoOptions& opts);

const char* to_string(SubsetKind kind);

}  // namespace coxric
