#include "twobar/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace twobar::oracle {

namespace {

// Cash-Karp RK45 step for the 2-component complex system y = (psi, psi').
struct State {
  cplx psi, dpsi;
};

State axpy(const State& y, double h, const State& k) {
  return {y.psi + h * k.psi, y.dpsi + h * k.dpsi};
}

State deriv(const State& y, double w) {  // w = (2m/hbar^2)(V - E)
  return {y.dpsi, w * y.psi};
}

// One adaptive RK45 integration across [x0, x1] (x1 < x0: leftward) with
// constant potential factor w; steps never cross the interval edge.
void integrate_region(State& y, double x0, double x1, double w, double tol,
                      std::vector<double>* xs, std::vector<State>* ys,
                      std::size_t& steps) {
  static constexpr double b21 = 1.0 / 5;
  static constexpr double b31 = 3.0 / 40, b32 = 9.0 / 40;
  static constexpr double b41 = 3.0 / 10, b42 = -9.0 / 10, b43 = 6.0 / 5;
  static constexpr double b51 = -11.0 / 54, b52 = 5.0 / 2, b53 = -70.0 / 27, b54 = 35.0 / 27;
  static constexpr double b61 = 1631.0 / 55296, b62 = 175.0 / 512, b63 = 575.0 / 13824,
                          b64 = 44275.0 / 110592, b65 = 253.0 / 4096;
  static constexpr double c1 = 37.0 / 378, c3 = 250.0 / 621, c4 = 125.0 / 594,
                          c6 = 512.0 / 1771;
  static constexpr double d1 = c1 - 2825.0 / 27648, d3 = c3 - 18575.0 / 48384,
                          d4 = c4 - 13525.0 / 55296, d5 = -277.0 / 14336,
                          d6 = c6 - 1.0 / 4;

  const double dir = x1 >= x0 ? 1.0 : -1.0;
  double x = x0;
  // initial step: a fraction of the local wavelength/decay scale
  const double scale = std::sqrt(std::abs(w)) + 1e-30;
  double h = dir * std::min(std::abs(x1 - x0), 0.1 / scale);

  while (dir * (x1 - x) > 0) {
    if (dir * (x + h - x1) > 0) h = x1 - x;
    const State k1 = deriv(y, w);
    const State k2 = deriv(axpy(y, h * b21, k1), w);
    State t{y.psi + h * (b31 * k1.psi + b32 * k2.psi), y.dpsi + h * (b31 * k1.dpsi + b32 * k2.dpsi)};
    const State k3 = deriv(t, w);
    t = {y.psi + h * (b41 * k1.psi + b42 * k2.psi + b43 * k3.psi),
         y.dpsi + h * (b41 * k1.dpsi + b42 * k2.dpsi + b43 * k3.dpsi)};
    const State k4 = deriv(t, w);
    t = {y.psi + h * (b51 * k1.psi + b52 * k2.psi + b53 * k3.psi + b54 * k4.psi),
         y.dpsi + h * (b51 * k1.dpsi + b52 * k2.dpsi + b53 * k3.dpsi + b54 * k4.dpsi)};
    const State k5 = deriv(t, w);
    t = {y.psi + h * (b61 * k1.psi + b62 * k2.psi + b63 * k3.psi + b64 * k4.psi + b65 * k5.psi),
         y.dpsi +
             h * (b61 * k1.dpsi + b62 * k2.dpsi + b63 * k3.dpsi + b64 * k4.dpsi + b65 * k5.dpsi)};
    const State k6 = deriv(t, w);

    const State y5{y.psi + h * (c1 * k1.psi + c3 * k3.psi + c4 * k4.psi + c6 * k6.psi),
                   y.dpsi + h * (c1 * k1.dpsi + c3 * k3.dpsi + c4 * k4.dpsi + c6 * k6.dpsi)};
    const cplx err_psi = h * (d1 * k1.psi + d3 * k3.psi + d4 * k4.psi + d5 * k5.psi + d6 * k6.psi);
    const cplx err_dpsi =
        h * (d1 * k1.dpsi + d3 * k3.dpsi + d4 * k4.dpsi + d5 * k5.dpsi + d6 * k6.dpsi);

    const double ynorm = std::abs(y5.psi) + std::abs(y5.dpsi) / scale + 1e-300;
    const double err = (std::abs(err_psi) + std::abs(err_dpsi) / scale) / ynorm;

    if (err <= tol) {
      y = y5;
      x += h;
      ++steps;
      if (xs) { xs->push_back(x); ys->push_back(y); }
      h *= std::min(5.0, 0.9 * std::pow(tol / (err + 1e-300), 0.2));
    } else {
      h *= std::max(0.1, 0.9 * std::pow(tol / err, 0.25));
    }
    if (std::abs(h) < 1e-15 * std::abs(x1 - x0))
      throw std::runtime_error("stationary ODE: step size underflow");
    if (steps > 20'000'000) throw std::runtime_error("stationary ODE: step budget exceeded");
  }
}

}  // namespace

OdeSolution solve_stationary(const BarrierSystem& sys, const Kinematics& kin, double tol) {
  OdeSolution sol;
  const double k = kin.k;
  const double wbar = kin.kappa_sq;  // (2m/hbar^2)(V0 - E) inside the barriers
  const double wfree = -k * k;

  // outgoing wave at b2: psi = e^{ik(x-b2)} -> (1, ik); integrate leftward.
  State y{cplx(1, 0), cplx(0, k)};
  sol.log_scale = 0;
  std::vector<State> states;
  states.push_back(y);
  sol.x.push_back(sys.b2);

  const std::array<std::pair<double, double>, 3> legs{{
      {sys.a2, wbar},   // right barrier (b2 -> a2)
      {sys.b1, wfree},  // gap
      {sys.a1, wbar},   // left barrier
  }};
  double x = sys.b2;
  for (const auto& [x_end, w] : legs) {
    if (x_end < x) {
      integrate_region(y, x, x_end, w, tol, &sol.x, &states, sol.steps);
      x = x_end;
    }
    // rescale at region boundaries; tunneling solutions grow like e^{kappa d}
    const double mag = std::max(std::abs(y.psi), std::abs(y.dpsi) / k);
    if (mag > 1e100 || mag < 1e-100) {
      y.psi /= mag;
      y.dpsi /= mag;
      sol.log_scale += std::log(mag);
      for (auto& s : states) { s.psi /= mag; s.dpsi /= mag; }
    }
  }

  sol.psi.reserve(states.size());
  sol.dpsi.reserve(states.size());
  for (const auto& s : states) {
    sol.psi.push_back(s.psi);
    sol.dpsi.push_back(s.dpsi);
  }

  // project onto alpha e^{ikx} + beta e^{-ikx} at a1
  const cplx eika1 = std::exp(cplx(0, k * sys.a1));
  const cplx alpha = 0.5 * (y.psi + y.dpsi / cplx(0, k)) / eika1;
  const cplx beta = 0.5 * (y.psi - y.dpsi / cplx(0, k)) * eika1;

  // a_out needs the accumulated scale back (alpha was computed on the scaled
  // solution with unit outgoing amplitude); b_out is a scale-free ratio.
  sol.a_out = std::exp(cplx(0, -k * sys.a1)) / alpha * std::exp(-sol.log_scale);
  sol.b_out = beta / alpha * std::exp(cplx(0, -2.0 * k * sys.a1));

  // flux constancy of the raw solution (exact solution has Im(psi* psi') const)
  double f0 = std::imag(std::conj(states.front().psi) * states.front().dpsi);
  double dev = 0;
  for (const auto& s : states) {
    const double f = std::imag(std::conj(s.psi) * s.dpsi);
    dev = std::max(dev, std::abs(f - f0));
  }
  sol.max_flux_dev = dev / std::max(std::abs(f0), 1e-300);
  return sol;
}

namespace {

// 7-15 Gauss-Kronrod pair on [-1, 1].
constexpr double kKronrodX[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
constexpr double kKronrodW[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
constexpr double kGaussW[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
    0.381830050505119, 0.279705391489277, 0.129484966168870};

struct GkResult {
  double integral, error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double gk = 0, g = 0;
  for (int i = 0; i < 15; ++i) {
    const double v = f(mid + half * kKronrodX[i]);
    gk += kKronrodW[i] * v;
    if (i % 2 == 1) g += kGaussW[i / 2] * v;
  }
  gk *= half;
  g *= half;
  return {gk, std::abs(gk - g)};
}

}  // namespace

double integrate_density(const PiecewiseWave& wave, double a, double b, double abs_tol) {
  if (!(b >= a)) throw std::invalid_argument("integrate_density: b < a");
  if (a == b) return 0.0;
  auto f = [&wave](double x) { return wave.density(x); };
  if (abs_tol <= 0) {
    double peak = 0;
    for (int i = 0; i <= 64; ++i) peak = std::max(peak, f(a + (b - a) * i / 64.0));
    abs_tol = 1e-12 * (b - a) * std::max(peak, 1e-300);
  }
  struct Seg { double a, b, integral, error; };
  std::vector<Seg> segs;
  auto push = [&](double lo, double hi) {
    const auto r = gk15(f, lo, hi);
    segs.push_back({lo, hi, r.integral, r.error});
  };
  push(a, b);
  double total_err = segs[0].error;
  int iter = 0;
  while (total_err > abs_tol && ++iter < 20000) {
    // split the worst segment
    std::size_t worst = 0;
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].error > segs[worst].error) worst = i;
    const Seg s = segs[worst];
    if (s.b - s.a < 1e-14 * (b - a)) break;  // cannot refine further
    segs.erase(segs.begin() + static_cast<long>(worst));
    push(s.a, 0.5 * (s.a + s.b));
    push(0.5 * (s.a + s.b), s.b);
    total_err = 0;
    for (const auto& seg : segs) total_err += seg.error;
  }
  if (total_err > 100.0 * abs_tol)
    throw std::runtime_error("integrate_density: quadrature did not converge");
  double sum = 0;
  for (const auto& seg : segs) sum += seg.integral;
  return sum;
}

Derivative numeric_derivative(const std::function<double(double)>& f, double x, double h0) {
  Derivative out;
  if (h0 <= 0) h0 = std::max(std::abs(x), 1.0) * 1e-2;
  constexpr int kMax = 12;
  double tab[kMax][kMax];
  double h = h0;
  auto five_point = [&](double hh) {
    return (-f(x + 2 * hh) + 8 * f(x + hh) - 8 * f(x - hh) + f(x - 2 * hh)) / (12 * hh);
  };
  tab[0][0] = five_point(h);
  out.error = 1e300;
  out.value = tab[0][0];
  const double shrink = 2.0, gain = std::pow(shrink, 4);  // 4th-order base rule
  for (int i = 1; i < kMax; ++i) {
    h /= shrink;
    tab[0][i] = five_point(h);
    double fac = gain;
    for (int j = 1; j <= i; ++j) {
      tab[j][i] = (tab[j - 1][i] * fac - tab[j - 1][i - 1]) / (fac - 1.0);
      fac *= gain;
      const double err = std::max(std::abs(tab[j][i] - tab[j - 1][i]),
                                  std::abs(tab[j][i] - tab[j - 1][i - 1]));
      if (err <= out.error) {
        out.error = err;
        out.value = tab[j][i];
        out.converged = true;
      }
    }
    // noisy-function detection: the best residual should not rebound hard
    if (std::abs(tab[i][i] - tab[i - 1][i - 1]) >= 4.0 * out.error && i > 2) break;
  }
  return out;
}

}  // namespace twobar::oracle
