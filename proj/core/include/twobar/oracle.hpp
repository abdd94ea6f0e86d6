#pragma once

#include <functional>
#include <vector>

#include "twobar/waves.hpp"

namespace twobar::oracle {

// Brute-force stationary solution: adaptive RK integration of
// psi'' = (2m/hbar^2)(V(x) - E) psi from x = b2 leftward with the outgoing
// boundary condition, amplitudes projected onto e^{+-ikx} at x = a1.
struct OdeSolution {
  std::vector<double> x;
  std::vector<cplx> psi, dpsi;
  cplx a_out, b_out;
  double log_scale = 0;      // accumulated rescaling of the raw solution
  double max_flux_dev = 0;   // relative drift of Im(psi* psi') along x
  std::size_t steps = 0;
};

OdeSolution solve_stationary(const BarrierSystem& sys, const Kinematics& kin,
                             double tol = 1e-10);

// Adaptive Gauss-Kronrod quadrature of |psi|^2 over [a, b]; absolute
// tolerance 1e-12 * (b-a) * max sampled density unless overridden.
double integrate_density(const PiecewiseWave& wave, double a, double b,
                         double abs_tol = -1.0);

struct Derivative {
  double value = 0;
  double error = 0;  // Richardson error estimate
  bool converged = false;
};

// 5-point central difference with Richardson step-halving; stops when the
// extrapolation residual stops decreasing.
Derivative numeric_derivative(const std::function<double(double)>& f, double x,
                              double h0 = 0.0);

}  // namespace twobar::oracle
