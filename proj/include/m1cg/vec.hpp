#pragma once

#include <array>
#include <cmath>

namespace m1cg {

/// Fixed-size spatial vector, Dim in {1, 2, 3}.
template <int Dim>
struct Vec {
  std::array<double, Dim> a{};

  double& operator[](int i) { return a[i]; }
  double operator[](int i) const { return a[i]; }

  Vec& operator+=(const Vec& o) {
    for (int i = 0; i < Dim; ++i) a[i] += o.a[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (int i = 0; i < Dim; ++i) a[i] -= o.a[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (int i = 0; i < Dim; ++i) a[i] *= s;
    return *this;
  }

  friend Vec operator+(Vec x, const Vec& y) { return x += y; }
  friend Vec operator-(Vec x, const Vec& y) { return x -= y; }
  friend Vec operator*(double s, Vec x) { return x *= s; }
  friend Vec operator*(Vec x, double s) { return x *= s; }
  friend Vec operator-(Vec x) {
    for (int i = 0; i < Dim; ++i) x.a[i] = -x.a[i];
    return x;
  }
};

template <int Dim>
inline double dot(const Vec<Dim>& x, const Vec<Dim>& y) {
  double s = 0.0;
  for (int i = 0; i < Dim; ++i) s += x[i] * y[i];
  return s;
}

template <int Dim>
inline double norm_sq(const Vec<Dim>& x) {
  return dot(x, x);
}

template <int Dim>
inline double norm(const Vec<Dim>& x) {
  return std::sqrt(norm_sq(x));
}

/// Dense symmetric Dim x Dim matrix (second moment, Eddington tensor).
template <int Dim>
struct SymMat {
  std::array<std::array<double, Dim>, Dim> m{};

  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }

  double trace() const {
    double s = 0.0;
    for (int i = 0; i < Dim; ++i) s += m[i][i];
    return s;
  }
};

template <int Dim>
inline Vec<Dim> mat_vec(const SymMat<Dim>& A, const Vec<Dim>& x) {
  Vec<Dim> y{};
  for (int i = 0; i < Dim; ++i) {
    double s = 0.0;
    for (int j = 0; j < Dim; ++j) s += A(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

}  // namespace m1cg
