#include "coxric/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "coxric/errors.hpp"

namespace coxric {

SymMatrix SymMatrix::from_dense(std::size_t order, std::vector<double> data) {
  if (data.size() != order * order) {
    throw NumericError("SymMatrix: expected " + std::to_string(order * order) + " entries, got " +
                       std::to_string(data.size()));
  }
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = i + 1; j < order; ++j) {
      double& a = data[i * order + j];
      double& b = data[j * order + i];
      if (std::abs(a - b) >= 1e-12) {
        throw NumericError("SymMatrix: asymmetric input at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
      }
      a = b = 0.5 * (a + b);
    }
  }
  SymMatrix m;
  m.order_ = order;
  m.data_ = std::move(data);
  return m;
}

void SymMatrix::add(std::size_t i, std::size_t j, double v) {
  data_[i * order_ + j] += v;
  if (i != j) data_[j * order_ + i] += v;
}

void SymMatrix::set(std::size_t i, std::size_t j, double v) {
  data_[i * order_ + j] = v;
  data_[j * order_ + i] = v;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < order_; ++i) t += data_[i * order_ + i];
  return t;
}

double quadratic_form(const SymMatrix& m, std::span<const double> y) {
  const std::size_t n = m.order();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += m(i, j) * y[j];
    acc += y[i] * row;
  }
  return acc;
}

namespace {

// Sorts eigenpairs ascending; vectors are stored column-major (column k at k*n).
void sort_pairs(EigenResult& r) {
  const std::size_t n = r.order;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return r.values[a] < r.values[b]; });
  std::vector<double> values(n);
  std::vector<double> vectors(r.vectors.empty() ? 0 : n * n);
  for (std::size_t k = 0; k < n; ++k) {
    values[k] = r.values[idx[k]];
    if (!vectors.empty()) {
      std::copy_n(r.vectors.begin() + idx[k] * n, n, vectors.begin() + k * n);
    }
  }
  r.values = std::move(values);
  r.vectors = std::move(vectors);
}

EigenResult jacobi(const SymMatrix& m, const EigenOptions& opts) {
  const std::size_t n = m.order();
  std::vector<double> a = m.data();
  // v is row-major with v[k*n + j] = component k of vector j; transposed at the end.
  std::vector<double> v;
  if (opts.vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }

  auto converged = [&] {
    double off = 0.0;
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      max_diag = std::max(max_diag, std::abs(a[i * n + i]));
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * a[i * n + j] * a[i * n + j];
    }
    return std::sqrt(off) < opts.tol * (1.0 + max_diag);
  };

  int sweep = 0;
  for (; !converged(); ++sweep) {
    if (sweep >= opts.max_sweeps) {
      throw NumericError("sym_eigen: jacobi did not converge after " +
                         std::to_string(opts.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J with J the rotation in the (p, q) plane.
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          const double np = c * akp - s * akq;
          const double nq = s * akp + c * akq;
          a[k * n + p] = a[p * n + k] = np;
          a[k * n + q] = a[q * n + k] = nq;
        }
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        if (!v.empty()) {
          for (std::size_t k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  EigenResult r;
  r.order = n;
  r.iterations = sweep;
  r.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.values[i] = a[i * n + i];
  if (!v.empty()) {
    r.vectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r.vectors[j * n + k] = v[k * n + j];
  }
  sort_pairs(r);
  return r;
}

// Householder tridiagonalization followed by implicit QL, after the classic
// EISPACK tred2/tql2 pair. z ends up holding eigenvectors in its columns
// (row-major, z[i*n + j] = component i of vector j).
EigenResult tridiagonal_ql(const SymMatrix& m, const EigenOptions& opts) {
  const std::size_t n = m.order();
  std::vector<double> z = m.data();
  std::vector<double> d(n), e(n);
  const bool want = opts.vectors;
  auto Z = [&](std::size_t i, std::size_t j) -> double& { return z[i * n + j]; };

  for (std::size_t j = 0; j < n; ++j) d[j] = Z(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = Z(i - 1, j);
        Z(i, j) = 0.0;
        Z(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        Z(j, i) = f;
        g = e[j] + Z(j, j) * f;
        for (std::size_t k = j + 1; k < i; ++k) {
          g += Z(k, j) * d[k];
          e[k] += Z(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k < i; ++k) Z(k, j) -= (f * e[k] + g * d[k]);
        d[j] = Z(i - 1, j);
        Z(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  // Accumulate the transformations.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Z(n - 1, i) = Z(i, i);
    Z(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = Z(k, i + 1) / h;
      if (want) {
        for (std::size_t j = 0; j <= i; ++j) {
          double g = 0.0;
          for (std::size_t k = 0; k <= i; ++k) g += Z(k, i + 1) * Z(k, j);
          for (std::size_t k = 0; k <= i; ++k) Z(k, j) -= g * d[k];
        }
      }
    }
    for (std::size_t k = 0; k <= i; ++k) Z(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = Z(n - 1, j);
    Z(n - 1, j) = 0.0;
  }
  Z(n - 1, n - 1) = 1.0;
  e[0] = 0.0;

  // Implicit QL on the tridiagonal (d, e).
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::ldexp(1.0, -52);
  const int cap = 30 * static_cast<int>(n) + 30;
  int steps = 0;
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t mm = l;
    while (mm < n) {
      if (std::abs(e[mm]) <= eps * tst1) break;
      ++mm;
    }
    if (mm > l) {
      do {
        if (++steps > cap) {
          throw NumericError("sym_eigen: QL iteration did not converge");
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[mm];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t ii = mm; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          h = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = h + s * (c * g + s * d[ii]);
          if (want) {
            for (std::size_t k = 0; k < n; ++k) {
              h = Z(k, ii + 1);
              Z(k, ii + 1) = s * Z(k, ii) + c * h;
              Z(k, ii) = c * Z(k, ii) - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }

  EigenResult r;
  r.order = n;
  r.iterations = steps;
  r.values = std::move(d);
  if (want) {
    r.vectors.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r.vectors[j * n + i] = Z(i, j);
  }
  sort_pairs(r);
  return r;
}

}  // namespace

EigenResult sym_eigen(const SymMatrix& m, const EigenOptions& opts) {
  if (m.order() == 0) return {};
  if (!(opts.tol > 0.0)) throw NumericError("sym_eigen: tolerance must be positive");
  EigenMethod method = opts.method;
  if (method == EigenMethod::automatic) {
    method = m.order() <= kJacobiMaxOrder ? EigenMethod::jacobi : EigenMethod::tridiagonal_ql;
  }
  if (m.order() == 1) {
    EigenResult r;
    r.order = 1;
    r.values = {m(0, 0)};
    if (opts.vectors) r.vectors = {1.0};
    return r;
  }
  return method == EigenMethod::jacobi ? jacobi(m, opts) : tridiagonal_ql(m, opts);
}

}  // namespace coxric
