#include "twobar/times.hpp"

#include <cmath>

#include "twobar/numeric.hpp"

namespace twobar {

using num::cms;
using num::coshw2;
using num::sinhc;
using num::sinhc3;

DwellTimes dwell_times(const BarrierSystem& sys, const Kinematics& kin,
                       const OneBarrierParams& one, const TwoBarrierParams& two) {
  DwellTimes dw;
  const double k = kin.k, d = sys.d, L = sys.L;
  const double k0sq = sys.kappa0_sq;
  const double zeta = one.zeta;          // kappa^2 d^2
  const double pref = sys.m / (sys.hbar * k);

  // tau_tr^(1) = (m/4 hbar k kappa^3)[2 kappa d (kappa^2-k^2) + kappa0^2 sinh(2 kappa d)]
  //            = (m/ hbar k)[d + 2 kappa0^2 d^3 sinhc3(4 zeta)]
  dw.tr_1 = pref * (d + 2.0 * k0sq * d * d * d * sinhc3(4.0 * zeta));
  dw.tr_2 = dw.tr_1;

  dw.tr_gap = pref / (k * one.T) *
              (k * L * (1.0 + one.R) +
               4.0 * one.eta * std::sqrt(one.R) * std::sin(k * L / 2.0) *
                   std::sin(one.J + k * L / 2.0));
  dw.tr_dwell = dw.tr_1 + dw.tr_gap + dw.tr_2;

  const double P2 = std::norm(two.P);
  const double ckL = std::cos(k * L);
  // tau_ref^(1): the kappa^3 division regularized,
  //   B/kappa^3 = 2d[2(1-cos kL) + 4 d^2 (kappa0^2 - (kappa^2-k^2) cos kL) sinhc3(4 zeta)]
  //             + 4 k sin(kL) d^2 sinhc(zeta)^2
  const double asq = kin.kappa_sq - k * k;  // kappa^2 - k^2
  const double bracket =
      2.0 * d * (2.0 * (1.0 - ckL) + 4.0 * d * d * (k0sq - asq * ckL) * sinhc3(4.0 * zeta)) +
      4.0 * k * std::sin(k * L) * d * d * one.sinhc_d * one.sinhc_d;
  dw.ref_1 = pref * two.T_two / 2.0 * bracket * P2;
  dw.ref_gap = pref * two.T_two / k * (k * L - std::sin(k * L)) * P2;
  dw.ref_dwell = dw.ref_1 + dw.ref_gap;
  dw.near_resonance = two.near_resonance;
  return dw;
}

ButtikerDwell buttiker_dwell(const BarrierSystem& sys, const Kinematics& kin,
                             const OneBarrierParams& one, const TwoBarrierParams& two) {
  ButtikerDwell bd;
  const double k = kin.k, d = sys.d, L = sys.L;
  const double k0sq = sys.kappa0_sq;
  const double zeta = one.zeta;
  const double pref = sys.m / (sys.hbar * k);
  const double sR2 = std::sqrt(two.R_two);
  const double phi = two.J_two - two.F_two;
  const double sphi = std::sin(phi), cphi = std::cos(phi);
  const double asq = kin.kappa_sq - k * k;

  // B/kappa^3 = 2d{2[(1+R2) + 2 sqrt(R2) sin(phi)] + 4 d^2 (gamma+delta) sinhc3(4 zeta)}
  //           - 8 k sqrt(R2) cos(phi) d^2 sinhc(zeta)^2
  const double gamma_delta = k0sq * (1.0 + two.R_two) + 2.0 * sR2 * asq * sphi;
  const double bracket =
      2.0 * d * (2.0 * ((1.0 + two.R_two) + 2.0 * sR2 * sphi) +
                 4.0 * d * d * gamma_delta * sinhc3(4.0 * zeta)) -
      8.0 * k * sR2 * cphi * d * d * one.sinhc_d * one.sinhc_d;
  bd.tot_1 = pref / 4.0 * bracket;

  bd.tot_gap = pref * two.T_two / (k * one.T) *
               (k * L * (1.0 + one.R) +
                2.0 * one.eta * std::sqrt(one.R) * std::sin(one.J + k * L) * std::sin(k * L));

  const double tr_1 = pref * (d + 2.0 * k0sq * d * d * d * sinhc3(4.0 * zeta));
  bd.tot_2 = tr_1 * two.T_two;
  bd.dwell = bd.tot_1 + bd.tot_gap + bd.tot_2;
  return bd;
}

GroupTimes group_times(const BarrierSystem& sys, const Kinematics& kin,
                       const OneBarrierParams&, const TwoBarrierParams& two) {
  GroupTimes g;
  const double pref = sys.m / (sys.hbar * kin.k);
  g.tau_ph = pref * two.Jtwo_prime;
  g.tau_dep = pref * two.lambda_prime;
  g.tau_as = g.tau_ph - g.tau_dep;
  g.x_start = -two.lambda_prime;
  g.near_resonance = two.near_resonance;
  return g;
}

SingleBarrierTimes single_barrier_times(const BarrierSystem& sys, const Kinematics& kin) {
  SingleBarrierTimes st;
  const double k = kin.k, D = sys.D;
  const double k0sq = sys.kappa0_sq;
  const double zD = kin.kappa_sq * D * D;
  const double sc = sinhc(zD);
  const double den = 4.0 * k * k + k0sq * k0sq * D * D * sc * sc;
  // tau_as = (4m/hbar k) [k^2 + kappa0^2 sinh^2(kappa D/2)] D [1 + kappa0^2 D^2 sinhc3(zD)] / den
  const double sinh_half_sq = coshw2(zD) / 2.0 * zD;  // sinh^2(kappa D / 2) = (cosh - 1)/2
  st.tau_as = 4.0 * sys.m / (sys.hbar * k) * (k * k + k0sq * sinh_half_sq) * D *
              (1.0 + k0sq * D * D * sinhc3(zD)) / den;
  // x_start = -2 kappa0^2 D [sinhc(zD) + k^2 D^2 cms(zD)] / den
  st.x_start = -2.0 * k0sq * D * (sc + k * k * D * D * cms(zD)) / den;
  return st;
}

const char* to_string(RowFlag f) {
  switch (f) {
    case RowFlag::ok: return "ok";
    case RowFlag::near_resonance: return "near-resonance";
    case RowFlag::quadrature_warn: return "quadrature-warn";
    case RowFlag::ocs_invalid: return "ocs-invalid";
  }
  return "ok";
}

TimeScales time_scales(const BarrierSystem& sys, double k) {
  const Kinematics kin = kinematics(sys, k);
  const OneBarrierParams one = one_barrier(sys, kin);
  const TwoBarrierParams two = two_barrier(sys, kin, one);
  const DwellTimes dw = dwell_times(sys, kin, one, two);
  const ButtikerDwell bd = buttiker_dwell(sys, kin, one, two);
  const GroupTimes g = group_times(sys, kin, one, two);

  TimeScales row;
  row.k = k;
  row.T_two = two.T_two;
  row.R_two = two.R_two;
  row.tau_tr_1 = dw.tr_1; row.tau_tr_gap = dw.tr_gap; row.tau_tr_2 = dw.tr_2;
  row.tau_tr_dwell = dw.tr_dwell;
  row.tau_ref_1 = dw.ref_1; row.tau_ref_gap = dw.ref_gap; row.tau_ref_dwell = dw.ref_dwell;
  row.tau_tot_1 = bd.tot_1; row.tau_tot_gap = bd.tot_gap; row.tau_tot_2 = bd.tot_2;
  row.tau_dwell = bd.dwell;
  row.tau_ph = g.tau_ph; row.tau_as = g.tau_as; row.tau_dep = g.tau_dep;
  row.x_start = g.x_start;
  row.tau_free = sys.m * sys.D / (sys.hbar * k);
  row.tau_0 = 2.0 * sys.m * sys.d / (sys.hbar * std::abs(sys.kappa0));
  row.flag = two.near_resonance ? RowFlag::near_resonance : RowFlag::ok;
  return row;
}

std::vector<TimeScales> times_profile(const BarrierSystem& sys,
                                      std::span<const double> k_grid, int threads) {
  std::vector<TimeScales> rows(k_grid.size());
  num::parallel_for(k_grid.size(), threads, [&](std::size_t i) {
    rows[i] = time_scales(sys, k_grid[i]);
  });
  return rows;
}

}  // namespace twobar
