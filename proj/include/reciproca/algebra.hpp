#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "reciproca/constants.hpp"
#include "reciproca/mat.hpp"

namespace reciproca {

namespace detail {

// Dense Gaussian elimination with partial pivoting for the small normal
// systems built below (n <= 9). Throws RankDeficient on a vanishing pivot.
inline std::vector<double> solve_dense(std::vector<double> m, std::vector<double> rhs, int n,
                                       double tol) {
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(m[static_cast<std::size_t>(r) * n + col]) >
          std::fabs(m[static_cast<std::size_t>(pivot) * n + col]))
        pivot = r;
    const double p = m[static_cast<std::size_t>(pivot) * n + col];
    if (std::fabs(p) < tol)
      fail(errc::rank_deficient, "generator set is linearly dependent");
    if (pivot != col) {
      for (int j = 0; j < n; ++j)
        std::swap(m[static_cast<std::size_t>(pivot) * n + j],
                  m[static_cast<std::size_t>(col) * n + j]);
      std::swap(rhs[static_cast<std::size_t>(pivot)], rhs[static_cast<std::size_t>(col)]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = m[static_cast<std::size_t>(r) * n + col] / p;
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j)
        m[static_cast<std::size_t>(r) * n + j] -= f * m[static_cast<std::size_t>(col) * n + j];
      rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(col)];
    }
  }
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = rhs[static_cast<std::size_t>(r)];
    for (int j = r + 1; j < n; ++j)
      s -= m[static_cast<std::size_t>(r) * n + j] * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(r)] = s / m[static_cast<std::size_t>(r) * n + r];
  }
  return x;
}

inline bool is_integer(double v) {
  return std::isfinite(v) && v == std::nearbyint(v) && std::fabs(v) < 9.0e15;
}

inline std::string format_coeff_term(double c, const std::string& name, bool first) {
  char buf[64];
  std::string out;
  const double mag = std::fabs(c);
  const bool neg = c < 0.0;
  if (!first)
    out += neg ? " - " : " + ";
  else if (neg)
    out += "-";
  if (mag == 1.0) {
    out += name;
  } else {
    if (is_integer(mag))
      std::snprintf(buf, sizeof buf, "%.0f", mag);
    else
      std::snprintf(buf, sizeof buf, "%.6g", mag);
    out += buf;
    out += " ";
    out += name;
  }
  return out;
}

}  // namespace detail

// Structure constants of a bracket-closed generator set: [X_i, X_j] expanded
// in the generator basis. When every generator has integer entries the
// coefficients are certified by exact reconstruction; otherwise they come
// from a least squares projection and carry a residual.
struct StructureTable {
  std::vector<std::string> names;
  int n = 0;
  std::vector<double> coeff;         // n*n*n, coefficient of X_k in [X_i, X_j]
  std::vector<double> residual_ij;   // n*n, reconstruction residual per pair
  bool exact_integer = false;
  bool closed = false;
  double max_residual = 0.0;

  double c(int i, int j, int k) const {
    return coeff[(static_cast<std::size_t>(i) * n + j) * n + k];
  }
  double& c(int i, int j, int k) {
    return coeff[(static_cast<std::size_t>(i) * n + j) * n + k];
  }
  double residual(int i, int j) const { return residual_ij[static_cast<std::size_t>(i) * n + j]; }

  std::string entry_text(int i, int j) const {
    std::string out;
    bool first = true;
    for (int k = 0; k < n; ++k) {
      const double v = c(i, j, k);
      if (v == 0.0) continue;
      out += detail::format_coeff_term(v, names[static_cast<std::size_t>(k)], first);
      first = false;
    }
    return first ? "0" : out;
  }

  std::string to_text() const {
    std::string out;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        out += "[" + names[static_cast<std::size_t>(i)] + "," + names[static_cast<std::size_t>(j)] +
               "] = " + entry_text(i, j) + "\n";
      }
    return out;
  }
};

template <int N>
StructureTable structure_table(const std::vector<std::string>& names,
                               const std::vector<Mat<N>>& gens, const Tolerance& tol = {}) {
  const int n = static_cast<int>(gens.size());
  if (n == 0 || names.size() != gens.size())
    fail(errc::invalid_argument, "generator names and matrices must align");
  StructureTable t;
  t.names = names;
  t.n = n;
  t.coeff.assign(static_cast<std::size_t>(n) * n * n, 0.0);
  t.residual_ij.assign(static_cast<std::size_t>(n) * n, 0.0);

  bool integer_inputs = true;
  for (const auto& g : gens) {
    if (!all_finite(g)) fail(errc::invalid_argument, "generator entries must be finite");
    for (double v : g.a) integer_inputs = integer_inputs && detail::is_integer(v);
  }

  // Gram matrix of the generators in the Frobenius inner product.
  std::vector<double> gram(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram[static_cast<std::size_t>(i) * n + j] =
          inner(gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(j)]);

  t.exact_integer = integer_inputs;
  t.closed = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Mat<N> br = bracket(gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(j)]);
      std::vector<double> rhs(static_cast<std::size_t>(n), 0.0);
      for (int k = 0; k < n; ++k) rhs[static_cast<std::size_t>(k)] = inner(gens[static_cast<std::size_t>(k)], br);
      std::vector<double> x = detail::solve_dense(gram, rhs, n, tol.abs_tol);

      if (integer_inputs) {
        // Round to the nearest integer combination and certify exactly.
        Mat<N> rec;
        for (int k = 0; k < n; ++k) {
          x[static_cast<std::size_t>(k)] = std::nearbyint(x[static_cast<std::size_t>(k)]);
          if (x[static_cast<std::size_t>(k)] != 0.0)
            rec = rec + x[static_cast<std::size_t>(k)] * gens[static_cast<std::size_t>(k)];
        }
        const double res = max_abs_diff(rec, br);
        t.residual_ij[static_cast<std::size_t>(i) * n + j] = res;
        if (res != 0.0) t.exact_integer = false;
      }
      if (!integer_inputs || t.residual_ij[static_cast<std::size_t>(i) * n + j] != 0.0) {
        Mat<N> rec;
        for (int k = 0; k < n; ++k)
          if (x[static_cast<std::size_t>(k)] != 0.0)
            rec = rec + x[static_cast<std::size_t>(k)] * gens[static_cast<std::size_t>(k)];
        t.residual_ij[static_cast<std::size_t>(i) * n + j] = max_abs_diff(rec, br);
      }
      const double res = t.residual_ij[static_cast<std::size_t>(i) * n + j];
      const double scale = std::max(1.0, max_abs(br));
      if (res > tol.abs_tol + tol.rel_tol * scale) t.closed = false;
      t.max_residual = std::max(t.max_residual, res);
      for (int k = 0; k < n; ++k) t.c(i, j, k) = x[static_cast<std::size_t>(k)];
    }
  }
  if (!t.closed) t.exact_integer = false;
  return t;
}

// Max over basis triples of |[[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj]|.
template <int N>
double jacobi_residual(const std::vector<Mat<N>>& gens) {
  double worst = 0.0;
  const int n = static_cast<int>(gens.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Mat<N>& x = gens[static_cast<std::size_t>(i)];
        const Mat<N>& y = gens[static_cast<std::size_t>(j)];
        const Mat<N>& z = gens[static_cast<std::size_t>(k)];
        const Mat<N> s = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
        worst = std::max(worst, max_abs(s));
      }
  return worst;
}

// A sparse expectation for one bracket: [names[i], names[j]] = sum coeff*X_k.
struct ReferenceBracket {
  int i = 0;
  int j = 0;
  std::vector<std::pair<int, double>> terms;
};

struct TableDiff {
  bool identical = true;
  std::vector<std::string> lines;
};

// Compare a computed table against tabulated reference values. Pairs not
// listed in the reference are expected to vanish.
TableDiff diff_against_reference(const StructureTable& t, const std::vector<ReferenceBracket>& ref);

}  // namespace reciproca
