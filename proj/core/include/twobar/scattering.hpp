#pragma once

#include <vector>

#include "twobar/model.hpp"

namespace twobar {

// Scattering parameters of one rectangular barrier of width d:
//   T = [1 + theta_+^2 sinh^2(kappa d)]^-1,   R = 1 - T
//   J = arctan(theta_- tanh(kappa d)) (+ pi when cosh(kappa d) < 0, unwrapped
//       to a k-continuous branch for E > V0)
//   F in {0, pi}; eta = +1 iff F = 0 iff theta_+ sinh(kappa d) > 0
// Tprime/Jprime are the analytic k-derivatives.
struct OneBarrierParams {
  double T = 0, R = 0;
  double J = 0;
  double F = 0;
  int eta = 1;
  double Tprime = 0, Jprime = 0;
  // cached scalars shared by downstream formulas
  double zeta = 0;       // kappa^2 d^2
  double sinhc_d = 0;    // sinh(kappa d)/(kappa d)
  double cosh_d = 0;     // cosh(kappa d)
};

OneBarrierParams one_barrier(const BarrierSystem& sys, const Kinematics& kin);

// 2x2 transfer matrix [[q, p], [p*, q*]] linking plane-wave coefficients on
// the two sides of a barrier; det = |q|^2 - |p|^2 = 1.
struct TransferMatrix {
  cplx q, p;
};

// Y_n for barrier n in {1, 2}: q_n = q exp[ik(b_n - a_n)], p_n = i p exp[-ik(b_n + a_n)].
TransferMatrix transfer_matrix_single(const BarrierSystem& sys, const Kinematics& kin,
                                      const OneBarrierParams& one, int n);
TransferMatrix compose(const TransferMatrix& y1, const TransferMatrix& y2);
double transfer_det(const TransferMatrix& y);

struct TwoBarrierParams {
  double T_two = 0, R_two = 0;
  double J_two = 0;      // continuous in k (differs from the per-point form by 2 pi n)
  double F_two = 0;      // 0 or pi
  int eta_two = 1;
  double chi = 0;        // J + kL
  cplx Q, P;             // Q = q* e^{ikL/2} + i p e^{-ikL/2}, P = i q* e^{ikL/2} + p e^{-ikL/2}
  cplx a_out, b_out;     // sqrt(T_two) e^{iJ_two}, -i sqrt(R_two) e^{i(J_two - F_two)}
  double lambda = 0;     // eta_two arctan sqrt(T_two/R_two)
  double Jtwo_prime = 0;
  double lambda_prime = 0;
  bool near_resonance = false;   // R_two <= guard band
  bool lambda_prime_fd = false;  // fallback one-sided finite difference was used
};

inline constexpr double kResonanceGuard = 1e-12;  // R_two band for flagged evaluation

TwoBarrierParams two_barrier(const BarrierSystem& sys, const Kinematics& kin,
                             const OneBarrierParams& one);

// Eq.-(7)-style amplitudes straight from Q and P; used to cross-check the
// parameter forms stored in TwoBarrierParams.
void amplitudes_from_qp(const cplx& Q, const cplx& P, cplx& a_out, cplx& b_out);

// Stateless per-point J_two (principal arctan + F_two^(0) jump); equals the
// continuous branch modulo 2 pi.
double jtwo_pointwise(const OneBarrierParams& one, double kL);

struct Resonance {
  double k = 0;
  int index = 0;  // 1-based branch number of chi = pi/2 + (index-1) pi
};

// All roots of cos(J(k) + kL) = 0 in (k_min, k_max], refined to 1e-12
// relative in k, ascending.
std::vector<Resonance> find_resonances(const BarrierSystem& sys, double k_min, double k_max);

}  // namespace twobar
