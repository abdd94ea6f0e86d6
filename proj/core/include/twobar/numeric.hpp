#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace twobar::num {

using cplx = std::complex<double>;

// Entire functions of z = w^2, evaluated for real z of either sign
// (z < 0 means w is imaginary and sinh/cosh turn into sin/cos).
// Series branches keep them smooth through z = 0.
double sinhc(double z);    // sinh(w)/w
double coshw(double z);    // cosh(w)
double sinhc3(double z);   // (sinh(w) - w)/w^3
double coshw2(double z);   // (cosh(w) - 1)/z
double cms(double z);      // (cosh(w) - sinh(w)/w)/z

// (sinhc(4z) - sinhc(z)^2)/z; appears in dT/dk where the direct difference cancels.
double sinhc_diff(double z);

// Real part of z, checked: throws std::logic_error when |Im z| exceeds
// 1e-9 * max(|Re z|, scale). A violation signals a formula bug upstream.
double real_checked(cplx z, double scale, const char* what);

struct RootResult {
  double x = 0;
  bool converged = false;
};
// Brent root bracketing refinement on [a, b]; requires f(a)*f(b) <= 0.
RootResult brent(const std::function<double(double)>& f, double a, double b,
                 double xtol, int max_iter = 200);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
};
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Runs body(i) for i in [0, n). threads <= 1 runs inline. Each index is
// independent; results must not depend on the schedule.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

int hardware_threads();

}  // namespace twobar::num
