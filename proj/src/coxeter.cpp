#include "coxric/coxeter.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "coxric/errors.hpp"
#include "coxric/linalg.hpp"

namespace coxric {

CoxeterMatrix::CoxeterMatrix(std::size_t rank, std::vector<BondOrder> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank_ < 1) throw InputError("Coxeter matrix must have rank >= 1");
  if (entries_.size() != rank_ * rank_) throw InputError("Coxeter matrix is not square");
  for (std::size_t i = 0; i < rank_; ++i) {
    if ((*this)(i, i) != 1) throw InputError("Coxeter matrix diagonal must be 1");
    for (std::size_t j = i + 1; j < rank_; ++j) {
      const BondOrder m = (*this)(i, j);
      if (m != (*this)(j, i)) throw InputError("Coxeter matrix must be symmetric");
      if (m < 2) {
        throw InputError("bond order m[" + std::to_string(i) + "][" + std::to_string(j) +
                         "] must be >= 2 or infinite");
      }
    }
  }
}

bool CoxeterMatrix::has_infinite_bond() const {
  for (BondOrder m : entries_)
    if (m == kInfiniteBond) return true;
  return false;
}

BilinearForm::BilinearForm(const CoxeterMatrix& cm) : rank_(cm.rank()), values_(rank_ * rank_) {
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) {
      const BondOrder m = cm(i, j);
      double v;
      if (i == j) {
        v = 1.0;
      } else if (m == kInfiniteBond) {
        v = -1.0;
      } else if (m == 2) {
        v = 0.0;  // cos(pi/2) is not exactly zero in floating point
      } else {
        v = -std::cos(std::numbers::pi / m);
      }
      values_[i * rank_ + j] = v;
    }
  }
}

double BilinearForm::pairing(const std::vector<double>& x, const std::vector<double>& y) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i] == 0.0) continue;
    double row = 0.0;
    for (std::size_t j = 0; j < rank_; ++j) row += values_[i * rank_ + j] * y[j];
    acc += x[i] * row;
  }
  return acc;
}

BilinearForm bilinear_form(const CoxeterMatrix& cm) { return BilinearForm(cm); }

bool is_finite_type(const CoxeterMatrix& cm) {
  if (cm.has_infinite_bond()) return false;
  const BilinearForm form(cm);
  const auto eig = sym_eigen(SymMatrix::from_dense(cm.rank(), form.values()));
  const double smallest = eig.values.front();
  if (std::abs(smallest) <= 1e-9) {
    throw DegenerateTypeError("degenerate (affine) type: bilinear form is singular");
  }
  return smallest > 1e-9;
}

namespace {

// Bonds along a path 0-1-...-(k-1); bonds[i] joins i and i+1.
std::vector<BondOrder> path_matrix(std::size_t k, const std::vector<BondOrder>& bonds) {
  std::vector<BondOrder> m(k * k, 2);
  for (std::size_t i = 0; i < k; ++i) m[i * k + i] = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    m[i * k + i + 1] = m[(i + 1) * k + i] = bonds[i];
  }
  return m;
}

CoxeterMatrix atom_matrix(char family, std::size_t k, BondOrder dihedral_m) {
  switch (family) {
    case 'A':
      return {k, path_matrix(k, std::vector<BondOrder>(k ? k - 1 : 0, 3))};
    case 'B': {
      std::vector<BondOrder> bonds(k ? k - 1 : 0, 3);
      if (!bonds.empty()) bonds.back() = 4;
      return {k, path_matrix(k, bonds)};
    }
    case 'D': {
      // Path 0..k-2 with node k-1 attached to node k-3. D2 = A1xA1, D3 = A3.
      std::vector<BondOrder> m = path_matrix(k - 1, std::vector<BondOrder>(k - 2, 3));
      std::vector<BondOrder> out(k * k, 2);
      for (std::size_t i = 0; i + 1 < k; ++i)
        for (std::size_t j = 0; j + 1 < k; ++j) out[i * k + j] = m[i * (k - 1) + j];
      out[(k - 1) * k + (k - 1)] = 1;
      if (k >= 3) out[(k - 1) * k + (k - 3)] = out[(k - 3) * k + (k - 1)] = 3;
      return {k, out};
    }
    case 'F':
      return {4, path_matrix(4, {3, 4, 3})};
    case 'H':
      if (k == 3) return {3, path_matrix(3, {5, 3})};
      return {4, path_matrix(4, {5, 3, 3})};
    case 'I':
      return {2, path_matrix(2, {dihedral_m})};
    default:
      break;
  }
  throw InputError(std::string("unknown type family '") + family + "'");
}

CoxeterMatrix parse_atom(std::string_view atom) {
  if (atom.empty()) throw InputError("malformed product: empty factor");
  const char family = atom.front();
  std::string_view rest = atom.substr(1);

  auto parse_int = [&](std::string_view digits) -> long {
    if (digits.empty() || digits.size() > 6) {
      throw InputError("malformed type atom '" + std::string(atom) + "'");
    }
    long v = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InputError("malformed type atom '" + std::string(atom) + "'");
      }
      v = v * 10 + (c - '0');
    }
    return v;
  };

  switch (family) {
    case 'A':
    case 'B':
    case 'D': {
      const long k = parse_int(rest);
      if (k < 1) throw InputError("rank must be >= 1 in '" + std::string(atom) + "'");
      if (family == 'D' && k < 2) throw InputError("type D needs rank >= 2");
      return atom_matrix(family, static_cast<std::size_t>(k), 0);
    }
    case 'F':
      if (rest != "4") throw InputError("unknown type atom '" + std::string(atom) + "'");
      return atom_matrix('F', 4, 0);
    case 'H':
      if (rest != "3" && rest != "4") {
        throw InputError("unknown type atom '" + std::string(atom) + "'");
      }
      return atom_matrix('H', static_cast<std::size_t>(rest[0] - '0'), 0);
    case 'I': {
      if (rest.size() < 4 || rest.substr(0, 2) != "2(" || rest.back() != ')') {
        throw InputError("malformed dihedral atom '" + std::string(atom) + "', expected I2(m)");
      }
      const long m = parse_int(rest.substr(2, rest.size() - 3));
      if (m < 2) throw InputError("I2 parameter must be >= 2");
      return atom_matrix('I', 2, static_cast<BondOrder>(m));
    }
    default:
      throw InputError("unknown type atom '" + std::string(atom) + "'");
  }
}

CoxeterMatrix block_sum(const std::vector<CoxeterMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rank();
  std::vector<BondOrder> m(n * n, 2);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rank(); ++i)
      for (std::size_t j = 0; j < b.rank(); ++j) m[(offset + i) * n + offset + j] = b(i, j);
    offset += b.rank();
  }
  return {n, std::move(m)};
}

}  // namespace

nlohmann::json to_json(const CoxeterMatrix& cm) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < cm.rank(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < cm.rank(); ++j) {
      row.push_back(cm(i, j) == kInfiniteBond ? 0 : cm(i, j));
    }
    rows.push_back(std::move(row));
  }
  return {{"m", std::move(rows)}};
}

CoxeterMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m") || !j["m"].is_array()) {
    throw InputError("matrix JSON must be an object with an array field \"m\"");
  }
  const auto& rows = j["m"];
  const std::size_t n = rows.size();
  std::vector<BondOrder> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw InputError("matrix JSON must be square");
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw InputError("matrix entries must be integers");
      const auto x = v.get<long long>();
      if (x < 0 || x > 1'000'000) throw InputError("matrix entry out of range");
      entries.push_back(x == 0 ? kInfiniteBond : static_cast<BondOrder>(x));
    }
  }
  return {n, std::move(entries)};
}

std::string serialize(const CoxeterMatrix& cm) { return to_json(cm).dump(); }

CoxeterMatrix parse_spec(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty type specification");

  if (text.front() == '{') {
    try {
      return matrix_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("invalid matrix JSON: ") + e.what());
    }
  }
  if (text.front() == '@') {
    const std::string path(text.substr(1));
    std::ifstream in(path);
    if (!in) throw InputError("cannot open matrix file '" + path + "'");
    try {
      return matrix_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw InputError("invalid matrix file '" + path + "': " + e.what());
    }
  }

  std::vector<CoxeterMatrix> blocks;
  std::size_t start = 0;
  for (;;) {
    const std::size_t x = text.find('x', start);
    blocks.push_back(parse_atom(text.substr(start, x == std::string_view::npos ? x : x - start)));
    if (x == std::string_view::npos) break;
    start = x + 1;
  }
  return block_sum(blocks);
}

}  // namespace coxric
