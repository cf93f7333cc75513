#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "coxric/coxeter.hpp"

namespace coxric {

using RootIndex = std::int32_t;

struct Root {
  std::vector<double> coords;  // coefficients over the simple roots
  bool positive = false;
};

// Roots are stored positive first: indices [0, N) are the positive roots in
// discovery order (simple root i at index i), and index k + N holds -root(k).
class RootSystem {
 public:
  RootSystem(CoxeterMatrix cm, std::vector<Root> roots);

  const CoxeterMatrix& matrix() const { return cm_; }
  const BilinearForm& form() const { return form_; }
  std::size_t rank() const { return cm_.rank(); }
  std::size_t size() const { return roots_.size(); }
  std::size_t positive_count() const { return roots_.size() / 2; }
  const Root& root(RootIndex i) const { return roots_[static_cast<std::size_t>(i)]; }
  const std::vector<Root>& roots() const { return roots_; }

  RootIndex negative_of(RootIndex i) const {
    const auto n = static_cast<RootIndex>(positive_count());
    return i < n ? i + n : i - n;
  }

  double pairing(RootIndex a, RootIndex b) const { return form_.pairing(root(a).coords, root(b).coords); }

  // Stored root within 1e-6 (max norm) of coords, if any.
  std::optional<RootIndex> find(const std::vector<double>& coords) const;

 private:
  CoxeterMatrix cm_;
  BilinearForm form_;
  std::vector<Root> roots_;
};

// Permutation of root indices induced by a reflection.
using RootPermutation = std::vector<RootIndex>;

inline constexpr std::size_t kRootCap = 10'000;
inline constexpr double kRootMatchTol = 1e-6;
inline constexpr double kRootSeparationTol = 1e-4;
inline constexpr double kPositivityTol = 1e-8;

// Closure of the simple roots under the simple reflections.
RootSystem generate_roots(const CoxeterMatrix& cm);

// r_a(x) = x - 2<x,a>/<a,a> a, in simple-root coordinates.
std::vector<double> reflect(const BilinearForm& form, const std::vector<double>& alpha,
                            const std::vector<double>& x);

RootPermutation reflection_action(const RootSystem& rs, RootIndex root);

nlohmann::json to_json(const RootSystem& rs);

}  // namespace coxric
