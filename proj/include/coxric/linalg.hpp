#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace coxric {

// Dense symmetric matrix, stored full and row-major.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

  // Accepts a row-major square matrix. Asymmetry below 1e-12 is averaged
  // away; anything larger throws NumericError.
  static SymMatrix from_dense(std::size_t order, std::vector<double> data);

  std::size_t order() const { return order_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
  const std::vector<double>& data() const { return data_; }

  // Adds v at (i, j) and (j, i); once on the diagonal.
  void add(std::size_t i, std::size_t j, double v);
  void set(std::size_t i, std::size_t j, double v);

  double trace() const;

 private:
  std::size_t order_ = 0;
  std::vector<double> data_;
};

enum class EigenMethod {
  automatic,       // jacobi up to kJacobiMaxOrder, tridiagonal_ql beyond
  jacobi,          // cyclic sweeps of 2x2 rotations
  tridiagonal_ql,  // Householder reduction + implicit-shift QL
};

inline constexpr std::size_t kJacobiMaxOrder = 256;

struct EigenOptions {
  double tol = 1e-12;
  bool vectors = false;
  EigenMethod method = EigenMethod::automatic;
  int max_sweeps = 100;
};

struct EigenResult {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column k (stride order) pairs with values[k]; empty unless requested
  std::size_t order = 0;
  int iterations = 0;           // sweeps (jacobi) or QL steps

  std::span<const double> vector(std::size_t k) const {
    return {vectors.data() + k * order, order};
  }
};

EigenResult sym_eigen(const SymMatrix& m, const EigenOptions& opts = {});

double quadratic_form(const SymMatrix& m, std::span<const double> y);

}  // namespace coxric
