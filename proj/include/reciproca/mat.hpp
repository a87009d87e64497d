#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "reciproca/errors.hpp"

namespace reciproca {

// Small fixed-size dense matrices, row major. The whole library lives in
// dimensions 2..6, so a flat std::array kernel keeps every floating-point
// operation auditable (several identities in the test suite are asserted
// bit-for-bit).
template <int N>
struct Mat {
  static_assert(N == 2 || N == 4 || N == 5 || N == 6, "unsupported dimension");
  std::array<double, static_cast<std::size_t>(N) * N> a{};

  static constexpr int dim = N;

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * N + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * N + j]; }

  static Mat identity() {
    Mat m;
    for (int i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  bool operator==(const Mat&) const = default;
};

template <int N>
using Vec = std::array<double, static_cast<std::size_t>(N)>;

template <int N>
Mat<N> operator*(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      double s = 0.0;
      for (int k = 0; k < N; ++k) s += x(i, k) * y(k, j);
      r(i, j) = s;
    }
  return r;
}

template <int N>
Mat<N> operator+(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r;
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

template <int N>
Mat<N> operator-(const Mat<N>& x, const Mat<N>& y) {
  Mat<N> r;
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

template <int N>
Mat<N> operator*(double s, const Mat<N>& x) {
  Mat<N> r;
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = s * x.a[i];
  return r;
}

template <int N>
Mat<N> transpose(const Mat<N>& x) {
  Mat<N> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r(i, j) = x(j, i);
  return r;
}

template <int N>
Vec<N> operator*(const Mat<N>& x, const Vec<N>& v) {
  Vec<N> r{};
  for (int i = 0; i < N; ++i) {
    double s = 0.0;
    for (int j = 0; j < N; ++j) s += x(i, j) * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

template <int N>
double max_abs(const Mat<N>& x) {
  double m = 0.0;
  for (double v : x.a) m = std::max(m, std::fabs(v));
  return m;
}

template <int N>
double max_abs_diff(const Mat<N>& x, const Mat<N>& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::fabs(x.a[i] - y.a[i]));
  return m;
}

// Frobenius inner product.
template <int N>
double inner(const Mat<N>& x, const Mat<N>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.a.size(); ++i) s += x.a[i] * y.a[i];
  return s;
}

template <int N>
bool all_finite(const Mat<N>& x) {
  for (double v : x.a)
    if (!std::isfinite(v)) return false;
  return true;
}

// Gauss-Jordan inverse with partial pivoting. Throws SingularMatrix when the
// running determinant falls below abs_tol.
template <int N>
Mat<N> inverse(const Mat<N>& x, double abs_tol = 1e-12) {
  Mat<N> m = x;
  Mat<N> inv = Mat<N>::identity();
  double det = 1.0;
  for (int col = 0; col < N; ++col) {
    int pivot = col;
    for (int r = col + 1; r < N; ++r)
      if (std::fabs(m(r, col)) > std::fabs(m(pivot, col))) pivot = r;
    if (std::fabs(m(pivot, col)) < 1e-300)
      fail(errc::singular_matrix, "matrix is singular to working precision");
    if (pivot != col) {
      for (int j = 0; j < N; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
      det = -det;
    }
    const double p = m(col, col);
    det *= p;
    const double ip = 1.0 / p;
    for (int j = 0; j < N; ++j) {
      m(col, j) *= ip;
      inv(col, j) *= ip;
    }
    for (int r = 0; r < N; ++r) {
      if (r == col) continue;
      const double f = m(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < N; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  if (std::fabs(det) < abs_tol)
    fail(errc::singular_matrix, "matrix determinant below tolerance");
  return inv;
}

template <int N>
double determinant(const Mat<N>& x) {
  Mat<N> m = x;
  double det = 1.0;
  for (int col = 0; col < N; ++col) {
    int pivot = col;
    for (int r = col + 1; r < N; ++r)
      if (std::fabs(m(r, col)) > std::fabs(m(pivot, col))) pivot = r;
    if (m(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < N; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (int r = col + 1; r < N; ++r) {
      const double f = m(r, col) / m(col, col);
      if (f == 0.0) continue;
      for (int j = col; j < N; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

// Commutator [x, y] = xy - yx.
template <int N>
Mat<N> bracket(const Mat<N>& x, const Mat<N>& y) {
  return x * y - y * x;
}

}  // namespace reciproca
