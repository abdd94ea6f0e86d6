#include "twobar/model.hpp"

#include <cmath>
#include <stdexcept>

namespace twobar {

namespace {
constexpr double kHbarEvPs = 6.582119569e-4;   // eV ps
constexpr double kHbar2Over2Me = 0.0380998;    // eV nm^2
}  // namespace

UnitPreset natural_units() { return {"natural", 1.0, 1.0, 0.0}; }

UnitPreset electron_units() {
  UnitPreset u;
  u.name = "electron";
  u.hbar = kHbarEvPs;
  u.m = kHbarEvPs * kHbarEvPs / (2.0 * kHbar2Over2Me);  // eV ps^2 / nm^2
  u.mass_fraction = 1.0;
  return u;
}

UnitPreset effective_mass_units(double fraction) {
  if (!(fraction > 0)) throw std::invalid_argument("effective-mass fraction must be > 0");
  UnitPreset u = electron_units();
  u.name = "effective-mass";
  u.m *= fraction;
  u.mass_fraction = fraction;
  return u;
}

UnitPreset preset_by_name(const std::string& name, double mass_fraction) {
  if (name == "natural") return natural_units();
  if (name == "electron") return electron_units();
  if (name == "effective-mass") return effective_mass_units(mass_fraction);
  throw std::invalid_argument("unknown unit preset: " + name);
}

BarrierSystem make_system(double V0, double d, double L, double a1, double m, double hbar) {
  if (!(d > 0)) throw std::invalid_argument("barrier width d must be > 0");
  if (!(L >= 0)) throw std::invalid_argument("gap width L must be >= 0");
  if (!(a1 > 0)) throw std::invalid_argument("left edge a1 must be > 0");
  if (!(m > 0)) throw std::invalid_argument("mass must be > 0");
  if (!(hbar > 0)) throw std::invalid_argument("hbar must be > 0");
  BarrierSystem s;
  s.V0 = V0; s.d = d; s.L = L; s.a1 = a1; s.m = m; s.hbar = hbar;
  s.b1 = a1 + d;
  s.a2 = s.b1 + L;
  s.b2 = s.a2 + d;
  s.D = s.b2 - s.a1;
  s.xc = 0.5 * (s.b2 + s.a1);
  s.kappa0_sq = 2.0 * m * V0 / (hbar * hbar);
  s.kappa0 = std::sqrt(cplx(s.kappa0_sq, 0.0));
  return s;
}

Kinematics kinematics(const BarrierSystem& sys, double k) {
  if (!(k > 0)) throw std::invalid_argument("wavenumber k must be > 0");
  Kinematics kin;
  kin.k = k;
  kin.E = sys.hbar * sys.hbar * k * k / (2.0 * sys.m);
  kin.kappa_sq = sys.kappa0_sq - k * k;
  kin.kappa = std::sqrt(cplx(kin.kappa_sq, 0.0));
  kin.kappa0 = sys.kappa0;
  kin.theta_plus = 0.5 * (k / kin.kappa + kin.kappa / k);
  kin.theta_minus = 0.5 * (k / kin.kappa - kin.kappa / k);
  kin.near_threshold = std::abs(kin.E - sys.V0) < 1e-10 * std::abs(sys.V0);
  return kin;
}

double time_scale_factor(const BarrierSystem& from, const BarrierSystem& to) {
  const double wa = from.m * from.d * from.d / from.hbar;
  const double wb = to.m * to.d * to.d / to.hbar;
  return wb / wa;
}

}  // namespace twobar
