#pragma once

#include <complex>
#include <string>

namespace twobar {

using cplx = std::complex<double>;

// Unit conventions. "electron" works in eV / nm / ps, where
// hbar^2/(2 m_e) = 0.0380998 eV nm^2 and hbar = 6.582119569e-4 eV ps.
struct UnitPreset {
  std::string name;
  double m = 1.0;
  double hbar = 1.0;
  double mass_fraction = 0.0;  // of the electron mass; 0 for "natural"
};

UnitPreset natural_units();
UnitPreset electron_units();
UnitPreset effective_mass_units(double fraction);
UnitPreset preset_by_name(const std::string& name, double mass_fraction = 1.0);

// Two identical rectangular barriers of height V0 and width d on [a1,b1]
// and [a2,b2], separated by a gap of width L.
struct BarrierSystem {
  double V0 = 0;   // barrier height; may be negative (a well)
  double d = 0;    // barrier width
  double L = 0;    // gap width
  double a1 = 0;   // left edge of the left barrier
  double m = 1;
  double hbar = 1;

  // derived
  double b1 = 0, a2 = 0, b2 = 0;
  double D = 0;    // b2 - a1 = 2d + L
  double xc = 0;   // (b2 + a1)/2, midpoint of the structure
  double kappa0_sq = 0;  // 2 m V0 / hbar^2 (negative for V0 < 0)
  cplx kappa0;           // principal sqrt of kappa0_sq
};

// Validates inputs (d > 0, L >= 0, a1 > 0, m > 0, hbar > 0) and fills the
// derived fields. Throws std::invalid_argument on bad input.
BarrierSystem make_system(double V0, double d, double L, double a1,
                          double m = 1.0, double hbar = 1.0);

// Per-k kinematic quantities. kappa_sq = kappa0^2 - k^2 is exact and real;
// kappa is its principal square root (real below the barrier top, purely
// imaginary above), so sinh/cosh formulas cover E < V0, E = V0 and E > V0
// in one code path.
struct Kinematics {
  double k = 0;
  double E = 0;
  double kappa_sq = 0;
  cplx kappa;
  cplx kappa0;
  cplx theta_plus, theta_minus;  // (k/kappa +- kappa/k)/2; diverge at kappa = 0
  bool near_threshold = false;   // |E - V0| < 1e-10 |V0|: downstream uses series limits
};

Kinematics kinematics(const BarrierSystem& sys, double k);

// Time-scale conversion between two realizations of the same dimensionless
// system (anchored on the barrier width d): t_b = t_a * scale.
double time_scale_factor(const BarrierSystem& from, const BarrierSystem& to);

}  // namespace twobar
