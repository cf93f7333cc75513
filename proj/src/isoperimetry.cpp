#include "coxric/isoperimetry.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <numeric>
#include <string>

#include "coxric/errors.hpp"
#include "coxric/gamma.hpp"
#include "coxric/spectral.hpp"

namespace coxric {

std::size_t boundary_size(const Graph& g, std::span<const Vertex> subset) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : subset) {
    if (!g.contains(v)) throw InputError("subset vertex " + std::to_string(v) + " out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::size_t count = 0;
  for (const auto& [u, v] : g.edges()) {
    if (in[static_cast<std::size_t>(u)] != in[static_cast<std::size_t>(v)]) ++count;
  }
  return count;
}

double iso_bound(std::size_t size_a, std::size_t size_v, double lambda, double ricci_lower) {
  if (ricci_lower == 0.0) throw InputError("isoperimetric bound needs a nonzero curvature bound");
  if (!(lambda > 0.0)) throw InputError("isoperimetric bound needs a positive spectral gap");
  const double coeff = std::min(std::sqrt(lambda), lambda / std::sqrt(2.0 * std::abs(ricci_lower)));
  const double a = static_cast<double>(size_a);
  return 0.5 * coeff * a * (1.0 - a / static_cast<double>(size_v));
}

double bruhat_bound(std::size_t size_a, std::size_t size_v) {
  const double a = static_cast<double>(size_a);
  return 0.5 * a * (1.0 - a / static_cast<double>(size_v));
}

std::vector<Vertex> SubsetSampler::uniform(std::size_t order) {
  std::vector<Vertex> out;
  std::uint64_t word = 0;
  for (std::size_t v = 0; v < order; ++v) {
    if (v % 64 == 0) word = rng_.next();
    if ((word >> (v % 64)) & 1U) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<Vertex> SubsetSampler::of_size(std::size_t order, std::size_t k) {
  std::vector<Vertex> pool(order);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng_.below(order - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::size_t IsoSummary::failures() const {
  return static_cast<std::size_t>(std::count_if(reports.begin(), reports.end(),
                                                [](const IsoReport& r) { return !r.pass; }));
}

const IsoReport* IsoSummary::tightest() const {
  // Subsets with a positive bound only; the empty set and V are trivially tight.
  const IsoReport* best = nullptr;
  for (const auto& r : reports) {
    const double bound = std::max(r.curvature_bound.value_or(0.0), r.bruhat_bound.value_or(0.0));
    if (bound <= 0.0) continue;
    if (!best || r.slack < best->slack) best = &r;
  }
  return best;
}

const char* to_string(SubsetKind kind) {
  switch (kind) {
    case SubsetKind::exhaustive: return "exhaustive";
    case SubsetKind::uniform: return "uniform";
    case SubsetKind::stratified: return "stratified";
  }
  return "unknown";
}

namespace {

void evaluate(IsoReport& r, std::size_t order, const IsoSummary& s, const IsoOptions& opts) {
  const double boundary = static_cast<double>(r.boundary);
  double worst = -std::numeric_limits<double>::infinity();
  if (s.ricci != 0.0 && s.lambda > 0.0) {
    r.curvature_bound = iso_bound(r.size, order, s.lambda, s.ricci);
    worst = std::max(worst, *r.curvature_bound);
  }
  if (opts.check_bruhat_bound) {
    r.bruhat_bound = bruhat_bound(r.size, order);
    worst = std::max(worst, *r.bruhat_bound);
  }
  r.slack = std::isfinite(worst) ? boundary - worst : boundary;
  r.pass = r.slack >= -1e-9;
}

}  // namespace

IsoSummary verify_isoperimetry(const Graph& g, const IsoOptions& opts) {
  const std::size_t n = g.order();
  if (n == 0) throw InputError("isoperimetry on an empty graph");
  if (opts.mode == IsoMode::exhaustive && n > kExhaustiveMaxOrder) {
    throw InputError("exhaustive isoperimetry needs at most " + std::to_string(kExhaustiveMaxOrder) +
                     " vertices, graph has " + std::to_string(n));
  }

  IsoSummary s;
  s.lambda = opts.lambda ? *opts.lambda : spectral_gap(g).gap;
  s.ricci = opts.ricci ? *opts.ricci : global_ricci(g);

  const auto edges = g.edges();
  if (opts.mode == IsoMode::exhaustive) {
    const std::uint64_t total = std::uint64_t{1} << n;
    s.reports.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      IsoReport r;
      r.kind = SubsetKind::exhaustive;
      r.index = mask;
      r.size = static_cast<std::size_t>(std::popcount(mask));
      for (const auto& [u, v] : edges) {
        if (((mask >> u) ^ (mask >> v)) & 1U) ++r.boundary;
      }
      evaluate(r, n, s, opts);
      s.reports.push_back(std::move(r));
    }
  } else {
    SubsetSampler sampler(opts.seed);
    auto add = [&](SubsetKind kind, std::uint64_t index, std::vector<Vertex> members) {
      IsoReport r;
      r.kind = kind;
      r.seed = opts.seed;
      r.index = index;
      r.size = members.size();
      r.boundary = boundary_size(g, members);
      r.members = std::move(members);
      evaluate(r, n, s, opts);
      s.reports.push_back(std::move(r));
    };
    for (std::size_t i = 0; i < opts.samples; ++i) add(SubsetKind::uniform, i, sampler.uniform(n));
    if (opts.stratified) {
      for (std::size_t k = 1; k < n; ++k) add(SubsetKind::stratified, k, sampler.of_size(n, k));
    }
  }
  std::stable_sort(s.reports.begin(), s.reports.end(), [](const IsoReport& a, const IsoReport& b) {
    if (a.size != b.size) return a.size < b.size;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.index < b.index;
  });
  return s;
}

}  // namespace coxric
