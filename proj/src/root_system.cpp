#include "coxric/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "coxric/errors.hpp"

namespace coxric {

namespace {

double max_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool is_nonnegative(const std::vector<double>& c) {
  return std::all_of(c.begin(), c.end(), [](double x) { return x >= -kPositivityTol; });
}

bool is_nonpositive(const std::vector<double>& c) {
  return std::all_of(c.begin(), c.end(), [](double x) { return x <= kPositivityTol; });
}

// Index of a root within kRootMatchTol, or nullopt. Throws when a candidate is
// close but not close enough, which means coordinates have drifted.
std::optional<std::size_t> lookup(const std::vector<std::vector<double>>& pool,
                                  const std::vector<double>& x) {
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const double d = max_distance(pool[i], x);
    if (d < kRootMatchTol) return i;
    if (d < kRootSeparationTol) {
      throw NumericError("root dedup ambiguity: candidate within " + std::to_string(d) +
                         " of a stored root");
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<double> reflect(const BilinearForm& form, const std::vector<double>& alpha,
                            const std::vector<double>& x) {
  const double scale = 2.0 * form.pairing(x, alpha) / form.pairing(alpha, alpha);
  std::vector<double> out(x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= scale * alpha[i];
  return out;
}

RootSystem::RootSystem(CoxeterMatrix cm, std::vector<Root> roots)
    : cm_(std::move(cm)), form_(cm_), roots_(std::move(roots)) {}

std::optional<RootIndex> RootSystem::find(const std::vector<double>& coords) const {
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (max_distance(roots_[i].coords, coords) < kRootMatchTol) return static_cast<RootIndex>(i);
  }
  return std::nullopt;
}

RootSystem generate_roots(const CoxeterMatrix& cm) {
  if (!is_finite_type(cm)) {
    throw InputError("Coxeter matrix is not of finite type");
  }
  const std::size_t n = cm.rank();
  const BilinearForm form(cm);

  std::vector<std::vector<double>> simple(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) simple[i][i] = 1.0;

  // BFS over roots; every discovered root is reflected by every simple root.
  std::vector<std::vector<double>> found;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    found.push_back(simple[i]);
    queue.push_back(i);
  }
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<double> image = reflect(form, simple[s], found[cur]);
      if (lookup(found, image)) continue;
      if (found.size() >= kRootCap) {
        throw NumericError("root closure diverged (more than " + std::to_string(kRootCap) +
                           " roots)");
      }
      found.push_back(std::move(image));
      queue.push_back(found.size() - 1);
    }
  }

  std::vector<Root> positive;
  for (const auto& c : found) {
    const bool pos = is_nonnegative(c);
    if (!pos && !is_nonpositive(c)) {
      throw NumericError("root with mixed-sign coordinates; the input is not of finite type");
    }
    if (pos) positive.push_back({c, true});
  }
  if (positive.size() * 2 != found.size()) {
    throw NumericError("root system is not symmetric under negation");
  }
  std::vector<Root> roots = positive;
  for (const auto& r : positive) {
    std::vector<double> neg(r.coords);
    for (double& x : neg) x = -x;
    if (!lookup(found, neg)) throw NumericError("negative of a root is missing");
    roots.push_back({std::move(neg), false});
  }
  return RootSystem(cm, std::move(roots));
}

RootPermutation reflection_action(const RootSystem& rs, RootIndex root) {
  if (root < 0 || static_cast<std::size_t>(root) >= rs.size()) {
    throw InputError("root index out of range");
  }
  const auto& alpha = rs.root(root).coords;
  RootPermutation perm(rs.size());
  for (std::size_t b = 0; b < rs.size(); ++b) {
    const auto image = rs.find(reflect(rs.form(), alpha, rs.roots()[b].coords));
    if (!image) throw NumericError("reflected root not found in the root system");
    perm[b] = *image;
  }
  return perm;
}

nlohmann::json to_json(const RootSystem& rs) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : rs.roots()) {
    roots.push_back({{"coords", r.coords}, {"positive", r.positive}});
  }
  nlohmann::json form = nlohmann::json::array();
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < rs.rank(); ++j) row.push_back(rs.form()(i, j));
    form.push_back(std::move(row));
  }
  return {{"rank", rs.rank()},
          {"matrix", to_json(rs.matrix())["m"]},
          {"form", std::move(form)},
          {"positive_count", rs.positive_count()},
          {"roots", std::move(roots)}};
}

}  // namespace coxric
