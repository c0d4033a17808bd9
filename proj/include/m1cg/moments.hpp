#pragma once

#include "m1cg/vec.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace m1cg {

/// Global wave speed bound of the realizable M1 system.
inline constexpr double kMaxWaveSpeed = 1.0;

/// Conserved moments of the M1 model at one node: particle density psi0
/// and momentum density psi1. Doubles as a (Dim+1)-component algebraic
/// vector via comp(); component 0 is psi0, components 1..Dim are psi1.
template <int Dim>
struct MomentState {
  double psi0{0.0};
  Vec<Dim> psi1{};

  static constexpr int n_comp = Dim + 1;

  double& comp(int c) { return c == 0 ? psi0 : psi1[c - 1]; }
  double comp(int c) const { return c == 0 ? psi0 : psi1[c - 1]; }

  MomentState& operator+=(const MomentState& o) {
    psi0 += o.psi0;
    psi1 += o.psi1;
    return *this;
  }
  MomentState& operator-=(const MomentState& o) {
    psi0 -= o.psi0;
    psi1 -= o.psi1;
    return *this;
  }
  MomentState& operator*=(double s) {
    psi0 *= s;
    psi1 *= s;
    return *this;
  }

  friend MomentState operator+(MomentState x, const MomentState& y) { return x += y; }
  friend MomentState operator-(MomentState x, const MomentState& y) { return x -= y; }
  friend MomentState operator*(double s, MomentState x) { return x *= s; }
  friend MomentState operator*(MomentState x, double s) { return x *= s; }
  friend MomentState operator-(MomentState x) { return x *= -1.0; }
};

/// Columns of the M1 flux: row k transports all conserved components in
/// direction k, i.e. row k = (psi1_k, psi2 row k).
template <int Dim>
struct FluxMatrix {
  std::array<MomentState<Dim>, Dim> row{};

  /// Normal flux f(u) . n as a moment-space vector.
  MomentState<Dim> dot_normal(const Vec<Dim>& n) const {
    MomentState<Dim> r{};
    for (int k = 0; k < Dim; ++k) r += n[k] * row[k];
    return r;
  }
};

/// Realizability: psi0 > 0 and |psi1| < psi0 (strict), or the closure of
/// that cone (non-strict). Comparisons are done on squares to avoid sqrt.
template <int Dim>
inline bool is_realizable(const MomentState<Dim>& u, bool strict = true) {
  if (strict) return u.psi0 > 0.0 && norm_sq(u.psi1) < u.psi0 * u.psi0;
  return u.psi0 >= 0.0 && norm_sq(u.psi1) <= u.psi0 * u.psi0;
}

/// Admissibility required of particle sources q.
template <int Dim>
inline bool is_weakly_admissible(const MomentState<Dim>& u) {
  return is_realizable(u, /*strict=*/false);
}

/// Flux ratio f = |psi1| / psi0.
template <int Dim>
inline double flux_ratio(const MomentState<Dim>& u) {
  return norm(u.psi1) / u.psi0;
}

/// Eddington factor chi(f) = (3 + 4 f^2) / (5 + 2 sqrt(4 - 3 f^2)).
/// Requires f in [0, 1]; callers clamp round-off excess beforehand.
inline double eddington_factor(double f) {
  if (!(f >= 0.0 && f <= 1.0))
    throw std::domain_error("eddington_factor: flux ratio " + std::to_string(f) +
                            " outside [0, 1]");
  const double arg = std::max(4.0 - 3.0 * f * f, 0.0);
  return (3.0 + 4.0 * f * f) / (5.0 + 2.0 * std::sqrt(arg));
}

/// Eddington tensor D(v) = (1-chi)/2 I + (3 chi - 1)/2 (v x v)/|v|^2.
/// The anisotropic coefficient vanishes as |v| -> 0, so D(0) = I/3 by
/// continuous extension.
template <int Dim>
inline SymMat<Dim> eddington_tensor(const Vec<Dim>& v) {
  const double v2 = norm_sq(v);
  SymMat<Dim> D{};
  if (v2 < 1e-30) {
    for (int i = 0; i < Dim; ++i) D(i, i) = 1.0 / 3.0;
    return D;
  }
  const double f = std::min(std::sqrt(v2), 1.0);
  const double chi = eddington_factor(f);
  const double iso = 0.5 * (1.0 - chi);
  const double aniso = 0.5 * (3.0 * chi - 1.0) / v2;
  for (int i = 0; i < Dim; ++i) {
    D(i, i) = iso + aniso * v[i] * v[i];
    for (int j = 0; j < i; ++j) {
      D(i, j) = aniso * v[i] * v[j];
      D(j, i) = D(i, j);
    }
  }
  return D;
}

/// Closed second moment psi2 = D(psi1/psi0) psi0. The state must be
/// realizable; inside the IDP scheme this can only fail on an upstream bug.
template <int Dim>
inline SymMat<Dim> second_moment(const MomentState<Dim>& u) {
  if (!is_realizable(u))
    throw std::runtime_error("second_moment: non-realizable state (psi0 = " +
                             std::to_string(u.psi0) + ")");
  const Vec<Dim> v = (1.0 / u.psi0) * u.psi1;
  SymMat<Dim> psi2 = eddington_tensor(v);
  for (int i = 0; i < Dim; ++i)
    for (int j = 0; j < Dim; ++j) psi2(i, j) *= u.psi0;
  return psi2;
}

/// M1 flux: psi0 is transported by psi1, psi1 by the closed psi2.
template <int Dim>
inline FluxMatrix<Dim> flux(const MomentState<Dim>& u) {
  const SymMat<Dim> psi2 = second_moment(u);
  FluxMatrix<Dim> F{};
  for (int k = 0; k < Dim; ++k) {
    F.row[k].psi0 = u.psi1[k];
    for (int m = 0; m < Dim; ++m) F.row[k].psi1[m] = psi2(k, m);
  }
  return F;
}

/// Global Lax-Friedrichs flux with the unit wave-speed bound.
template <int Dim>
inline MomentState<Dim> lax_friedrichs_flux(const MomentState<Dim>& uL,
                                            const MomentState<Dim>& uR,
                                            const Vec<Dim>& n) {
  const MomentState<Dim> central =
      0.5 * (flux(uL).dot_normal(n) + flux(uR).dot_normal(n));
  return central - 0.5 * kMaxWaveSpeed * (uR - uL);
}

}  // namespace m1cg
