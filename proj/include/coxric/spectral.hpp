#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxric/graph.hpp"
#include "coxric/linalg.hpp"

namespace coxric {

// D - A, the positive semidefinite Laplacian.
SymMatrix laplacian(const Graph& g);

inline constexpr std::size_t kSpectralMaxOrder = 1500;
inline constexpr std::size_t kSpectralForcedMaxOrder = 20'000;

struct SpectralOptions {
  double eigen_tol = 1e-12;
  // Lifts the default order limit up to kSpectralForcedMaxOrder.
  bool force = false;
};

struct SpectralReport {
  std::size_t order = 0;
  std::vector<double> eigenvalues;  // ascending
  double gap = 0.0;                 // least eigenvalue above the zero threshold
  double zero_threshold = 0.0;
  std::size_t zero_multiplicity = 0;
  std::size_t components = 0;
  std::vector<std::string> warnings;

  double max_eigenvalue() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
};

SpectralReport spectral_gap(const Graph& g, const SpectralOptions& opts = {});

struct GapVerdict {
  bool pass = false;
  bool vacuous = false;  // ricci <= 0, no lower bound on the gap
  bool equality = false; // gap == ricci within 1e-8
  double gap = 0.0;
  double ricci = 0.0;
};

GapVerdict check_gap_vs_ricci(const SpectralReport& report, double ricci);
GapVerdict check_gap_vs_ricci(const Graph& g, double ricci, const SpectralOptions& opts = {});

}  // namespace coxric
