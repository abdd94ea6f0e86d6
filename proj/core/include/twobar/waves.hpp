#pragma once

#include <iosfwd>
#include <vector>

#include "twobar/scattering.hpp"

namespace twobar {

enum class Basis { plane, sinh_cosh, sin_cos, zero };
enum class Side { left, right };

// One region of a piecewise stationary wave:
//   plane:     c1 e^{ik(x-x0)} + c2 e^{-ik(x-x0)}
//   sinh_cosh: c1 sinh(kappa (x-x0)) + c2 cosh(kappa (x-x0))
//   sin_cos:   c1 sin(k (x-x0)) + c2 cos(k (x-x0))
struct WaveRegion {
  double x_lo = 0, x_hi = 0;  // +-infinity allowed at the ends
  Basis basis = Basis::zero;
  double x0 = 0;
  cplx c1, c2;
  cplx wavenumber;  // kappa for sinh_cosh, k otherwise
};

class PiecewiseWave {
 public:
  std::vector<WaveRegion> regions;  // ordered, adjacent regions share endpoints
  double m = 1, hbar = 1, k = 0, E = 0;

  cplx value(double x) const;
  cplx derivative(double x, Side side = Side::left) const;
  double density(double x) const;                   // |psi|^2
  double flux(double x, Side side = Side::left) const;  // (hbar/m) Im(psi* psi')

  const WaveRegion& region_at(double x, Side side = Side::left) const;
};

// Gap-region representation change between a sin/cos pair about xc and the
// plane-wave pair A e^{ikx} + B e^{-ikx}:
//   a = i (A e^{ikxc} - B e^{-ikxc}),  b = A e^{ikxc} + B e^{-ikxc}
struct PlanePair {
  cplx A, B;
};
PlanePair sincos_to_plane(cplx a, cplx b, double k, double xc);
void plane_to_sincos(const PlanePair& p, double k, double xc, cplx& a, cplx& b);

// Stationary total wave: incident + reflected outside, sinh/cosh inside the
// barriers, sin/cos about xc in the gap, transmitted beyond b2.
PiecewiseWave total_wave(const BarrierSystem& sys, const Kinematics& kin,
                         const OneBarrierParams& one, const TwoBarrierParams& two);

// Currentless reflected subprocess wave; identically zero for x >= xc.
PiecewiseWave reflected_wave(const BarrierSystem& sys, const Kinematics& kin,
                             const OneBarrierParams& one, const TwoBarrierParams& two);

struct SubprocessPair {
  PiecewiseWave total, transmitted, reflected;
  cplx A_tr_in, A_ref_in;
  double x_join = 0;
  bool near_resonance = false;
};

SubprocessPair decompose(const BarrierSystem& sys, const Kinematics& kin,
                         const OneBarrierParams& one, const TwoBarrierParams& two);

// CSV columns: x, Re psi, Im psi, |psi|^2, flux.
void write_wave_csv(std::ostream& os, const PiecewiseWave& w, double x_lo, double x_hi, int n);

}  // namespace twobar
