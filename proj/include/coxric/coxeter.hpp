#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace coxric {

using BondOrder = int;

// Internal marker for an infinite bond; serialized as 0.
inline constexpr BondOrder kInfiniteBond = std::numeric_limits<BondOrder>::max();

// Symmetric matrix of bond orders m_ij with m_ii = 1 and m_ij >= 2 off the diagonal.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  // Validates the Coxeter matrix invariants; throws InputError.
  CoxeterMatrix(std::size_t rank, std::vector<BondOrder> entries);

  std::size_t rank() const { return rank_; }
  BondOrder operator()(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
  bool has_infinite_bond() const;

  bool operator==(const CoxeterMatrix&) const = default;

 private:
  std::size_t rank_ = 0;
  std::vector<BondOrder> entries_;
};

// Gram matrix of the simple roots: B_ij = -cos(pi / m_ij), -1 for infinite bonds.
class BilinearForm {
 public:
  explicit BilinearForm(const CoxeterMatrix& cm);

  std::size_t rank() const { return rank_; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * rank_ + j]; }
  const std::vector<double>& values() const { return values_; }

  // <x, y> for vectors given in the simple-root basis.
  double pairing(const std::vector<double>& x, const std::vector<double>& y) const;

 private:
  std::size_t rank_;
  std::vector<double> values_;
};

// Accepts products of type atoms ("A3", "B4", "I2(5)", "A1xA2"), an inline
// JSON matrix ("{\"m\": [[1,3],[3,1]]}"), or "@path" naming a JSON matrix file.
CoxeterMatrix parse_spec(std::string_view text);

BilinearForm bilinear_form(const CoxeterMatrix& cm);

// True iff the bilinear form is positive definite. Matrices with an infinite
// bond are never finite. Throws DegenerateTypeError if the smallest eigenvalue
// lies within 1e-9 of zero.
bool is_finite_type(const CoxeterMatrix& cm);

nlohmann::json to_json(const CoxeterMatrix& cm);
CoxeterMatrix matrix_from_json(const nlohmann::json& j);
// Compact JSON text; parse_spec(serialize(cm)) == cm.
std::string serialize(const CoxeterMatrix& cm);

}  // namespace coxric
