#pragma once

#include <span>
#include <vector>

#include "twobar/scattering.hpp"

namespace twobar {

struct DwellTimes {
  double tr_1 = 0, tr_gap = 0, tr_2 = 0, tr_dwell = 0;
  double ref_1 = 0, ref_gap = 0, ref_dwell = 0;
  bool near_resonance = false;  // reflection parts are limit values inside the band
};

// Transmission/reflection dwell times and their per-region parts,
// (m / hbar k N) Integral |psi|^2 dx with N = T_two (or R_two).
DwellTimes dwell_times(const BarrierSystem& sys, const Kinematics& kin,
                       const OneBarrierParams& one, const TwoBarrierParams& two);

struct ButtikerDwell {
  double tot_1 = 0, tot_gap = 0, tot_2 = 0, dwell = 0;
};

// Buttiker dwell time (m / hbar k) Integral |Psi_tot|^2 over [a1, b2], split
// into the same three regions.
ButtikerDwell buttiker_dwell(const BarrierSystem& sys, const Kinematics& kin,
                             const OneBarrierParams& one, const TwoBarrierParams& two);

struct GroupTimes {
  double tau_ph = 0;    // m J'_two / hbar k
  double tau_as = 0;    // tau_ph - tau_dep
  double tau_dep = 0;   // m lambda' / hbar k
  double x_start = 0;   // -lambda'
  bool near_resonance = false;
};

GroupTimes group_times(const BarrierSystem& sys, const Kinematics& kin,
                       const OneBarrierParams& one, const TwoBarrierParams& two);

struct SingleBarrierTimes {
  double tau_as = 0;
  double x_start = 0;
};

// Closed forms for a single rectangular barrier of width D = sys.D (the L = 0
// reduction of the general expressions); valid on both sides of E = V0.
SingleBarrierTimes single_barrier_times(const BarrierSystem& sys, const Kinematics& kin);

enum class RowFlag { ok, near_resonance, quadrature_warn, ocs_invalid };
const char* to_string(RowFlag f);

struct TimeScales {
  double k = 0;
  double T_two = 0, R_two = 0;
  double tau_tr_dwell = 0, tau_tr_1 = 0, tau_tr_gap = 0, tau_tr_2 = 0;
  double tau_ref_dwell = 0, tau_ref_1 = 0, tau_ref_gap = 0;
  double tau_dwell = 0, tau_tot_1 = 0, tau_tot_gap = 0, tau_tot_2 = 0;
  double tau_ph = 0, tau_as = 0, tau_dep = 0;
  double x_start = 0;
  double tau_free = 0;  // m D / hbar k
  double tau_0 = 0;     // 2 m d / hbar |kappa0|
  RowFlag flag = RowFlag::ok;
};

TimeScales time_scales(const BarrierSystem& sys, double k);

// One row per grid point; per-row flags, never throws on a flagged point.
std::vector<TimeScales> times_profile(const BarrierSystem& sys,
                                      std::span<const double> k_grid, int threads = 1);

}  // namespace twobar
