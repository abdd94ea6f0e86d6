#include "twobar/waves.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace twobar {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

const WaveRegion& PiecewiseWave::region_at(double x, Side side) const {
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const auto& r = regions[i];
    if (x < r.x_hi) return r;
    if (x == r.x_hi) {
      // boundary point: left region unless the caller wants the right limit
      if (side == Side::left || i + 1 == regions.size()) return r;
      return regions[i + 1];
    }
  }
  return regions.back();
}

cplx PiecewiseWave::value(double x) const {
  const WaveRegion& r = region_at(x);
  const double u = x - r.x0;
  switch (r.basis) {
    case Basis::plane:
      return r.c1 * std::exp(cplx(0, k * u)) + r.c2 * std::exp(cplx(0, -k * u));
    case Basis::sinh_cosh:
      return r.c1 * std::sinh(r.wavenumber * u) + r.c2 * std::cosh(r.wavenumber * u);
    case Basis::sin_cos:
      return r.c1 * std::sin(k * u) + r.c2 * std::cos(k * u);
    case Basis::zero:
      return {};
  }
  return {};
}

cplx PiecewiseWave::derivative(double x, Side side) const {
  const WaveRegion& r = region_at(x, side);
  const double u = x - r.x0;
  switch (r.basis) {
    case Basis::plane:
      return cplx(0, k) * (r.c1 * std::exp(cplx(0, k * u)) - r.c2 * std::exp(cplx(0, -k * u)));
    case Basis::sinh_cosh:
      return r.wavenumber * (r.c1 * std::cosh(r.wavenumber * u) + r.c2 * std::sinh(r.wavenumber * u));
    case Basis::sin_cos:
      return k * (r.c1 * std::cos(k * u) - r.c2 * std::sin(k * u));
    case Basis::zero:
      return {};
  }
  return {};
}

double PiecewiseWave::density(double x) const { return std::norm(value(x)); }

double PiecewiseWave::flux(double x, Side side) const {
  const cplx v = value(x);
  const cplx dv = derivative(x, side);
  return hbar / m * std::imag(std::conj(v) * dv);
}

PlanePair sincos_to_plane(cplx a, cplx b, double k, double xc) {
  // A e^{ikxc} = (b - i a)/2, B e^{-ikxc} = (b + i a)/2
  PlanePair p;
  p.A = 0.5 * (b - cplx(0, 1) * a) * std::exp(cplx(0, -k * xc));
  p.B = 0.5 * (b + cplx(0, 1) * a) * std::exp(cplx(0, k * xc));
  return p;
}

void plane_to_sincos(const PlanePair& p, double k, double xc, cplx& a, cplx& b) {
  const cplx alpha = p.A * std::exp(cplx(0, k * xc));
  const cplx beta = p.B * std::exp(cplx(0, -k * xc));
  a = cplx(0, 1) * (alpha - beta);
  b = alpha + beta;
}

namespace {

struct TotalCoeffs {
  cplx a1, b1;      // sinh/cosh about a1 in [a1, b1]
  cplx ag, bg;      // sin/cos about xc in the gap
  cplx a2, b2;      // sinh/cosh about b2 in [a2, b2]
  cplx in_refl;     // coefficient of e^{-ikx} for x <= a1
  cplx out;         // coefficient of e^{ik(x-D)} for x >= b2
};

TotalCoeffs total_coeffs(const BarrierSystem& sys, const Kinematics& kin,
                         const TwoBarrierParams& two) {
  TotalCoeffs c;
  const cplx eika1 = std::exp(cplx(0, kin.k * sys.a1));
  const cplx kap = kin.kappa;
  c.ag = -two.a_out * std::conj(two.P) * eika1;
  c.bg = two.a_out * std::conj(two.Q) * eika1;
  c.a1 = cplx(0, 1) * (1.0 - two.b_out) * (kin.k / kap) * eika1;
  c.b1 = (1.0 + two.b_out) * eika1;
  c.a2 = cplx(0, 1) * two.a_out * (kin.k / kap) * eika1;
  c.b2 = two.a_out * eika1;
  c.in_refl = two.b_out * std::exp(cplx(0, 2.0 * kin.k * sys.a1));
  c.out = two.a_out;
  return c;
}

void stamp(PiecewiseWave& w, const BarrierSystem& sys, const Kinematics& kin) {
  w.m = sys.m;
  w.hbar = sys.hbar;
  w.k = kin.k;
  w.E = kin.E;
}

}  // namespace

PiecewiseWave total_wave(const BarrierSystem& sys, const Kinematics& kin,
                         const OneBarrierParams&, const TwoBarrierParams& two) {
  const TotalCoeffs c = total_coeffs(sys, kin, two);
  PiecewiseWave w;
  stamp(w, sys, kin);
  w.regions = {
      {-kInf, sys.a1, Basis::plane, 0.0, cplx(1, 0), c.in_refl, kin.k},
      {sys.a1, sys.b1, Basis::sinh_cosh, sys.a1, c.a1, c.b1, kin.kappa},
      {sys.b1, sys.a2, Basis::sin_cos, sys.xc, c.ag, c.bg, kin.k},
      {sys.a2, sys.b2, Basis::sinh_cosh, sys.b2, c.a2, c.b2, kin.kappa},
      {sys.b2, kInf, Basis::plane, sys.D, c.out, cplx(0, 0), kin.k},
  };
  return w;
}

PiecewiseWave reflected_wave(const BarrierSystem& sys, const Kinematics& kin,
                             const OneBarrierParams&, const TwoBarrierParams& two) {
  PiecewiseWave w;
  stamp(w, sys, kin);
  if (two.R_two <= 0) {
    // exact resonance: the reflected subprocess vanishes identically
    w.regions = {{-kInf, kInf, Basis::zero, 0.0, {}, {}, kin.k}};
    return w;
  }
  const cplx eika1 = std::exp(cplx(0, kin.k * sys.a1));
  const cplx A_ref_in = std::sqrt(two.R_two) * std::exp(cplx(0, two.lambda));
  const cplx a_gap = -2.0 * two.P * two.b_out * std::conj(two.a_out) * eika1;
  const cplx a1c = (kin.k / kin.kappa) * a_gap * std::cos(kin.k * sys.L / 2.0);
  const cplx b1c = -a_gap * std::sin(kin.k * sys.L / 2.0);
  w.regions = {
      {-kInf, sys.a1, Basis::plane, 0.0, A_ref_in,
       two.b_out * std::exp(cplx(0, 2.0 * kin.k * sys.a1)), kin.k},
      {sys.a1, sys.b1, Basis::sinh_cosh, sys.b1, a1c, b1c, kin.kappa},
      {sys.b1, sys.xc, Basis::sin_cos, sys.xc, a_gap, cplx(0, 0), kin.k},
      {sys.xc, kInf, Basis::zero, 0.0, {}, {}, kin.k},
  };
  return w;
}

SubprocessPair decompose(const BarrierSystem& sys, const Kinematics& kin,
                         const OneBarrierParams& one, const TwoBarrierParams& two) {
  SubprocessPair pair;
  pair.total = total_wave(sys, kin, one, two);
  pair.reflected = reflected_wave(sys, kin, one, two);
  pair.x_join = sys.xc;
  pair.near_resonance = two.near_resonance;
  pair.A_ref_in = cplx(two.R_two, 0) +
                  cplx(0, two.eta_two) * std::sqrt(two.R_two * two.T_two);
  pair.A_tr_in = 1.0 - pair.A_ref_in;

  // transmitted = total - reflected, region by region; equals total for x >= xc
  PiecewiseWave& tr = pair.transmitted;
  stamp(tr, sys, kin);
  const auto& tot = pair.total.regions;

  if (two.R_two <= 0) {
    tr.regions = tot;
    tr.regions[0].c1 = pair.A_tr_in;
    tr.regions[0].c2 = 0;  // b_out = 0 at resonance
    return pair;
  }
  const auto& ref = pair.reflected.regions;

  // rebase the reflected barrier-1 coefficients (about b1) onto a1
  const cplx ch = std::cosh(kin.kappa * sys.d);
  const cplx sh = std::sinh(kin.kappa * sys.d);
  const cplx ar_a1 = ref[1].c1 * ch - ref[1].c2 * sh;
  const cplx br_a1 = ref[1].c2 * ch - ref[1].c1 * sh;

  tr.regions = {
      {-kInf, sys.a1, Basis::plane, 0.0, pair.A_tr_in, cplx(0, 0), kin.k},
      {sys.a1, sys.b1, Basis::sinh_cosh, sys.a1, tot[1].c1 - ar_a1, tot[1].c2 - br_a1,
       kin.kappa},
      {sys.b1, sys.xc, Basis::sin_cos, sys.xc, tot[2].c1 - ref[2].c1, tot[2].c2, kin.k},
      {sys.xc, sys.a2, Basis::sin_cos, sys.xc, tot[2].c1, tot[2].c2, kin.k},
      {sys.a2, sys.b2, Basis::sinh_cosh, sys.b2, tot[3].c1, tot[3].c2, kin.kappa},
      {sys.b2, kInf, Basis::plane, sys.D, tot[4].c1, cplx(0, 0), kin.k},
  };
  return pair;
}

void write_wave_csv(std::ostream& os, const PiecewiseWave& w, double x_lo, double x_hi, int n) {
  if (n < 2) throw std::invalid_argument("need at least 2 sample points");
  os << "x,re_psi,im_psi,density,flux\n";
  char buf[192];
  for (int i = 0; i < n; ++i) {
    const double x = x_lo + (x_hi - x_lo) * i / (n - 1);
    const cplx v = w.value(x);
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", x, v.real(), v.imag(),
                  std::norm(v), w.flux(x));
    os << buf;
  }
}

}  // namespace twobar
