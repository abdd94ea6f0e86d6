#include "twobar/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace twobar::num {

double sinhc(double z) {
  if (std::abs(z) < 1e-4)
    return 1.0 + z / 6.0 + z * z / 120.0 + z * z * z / 5040.0;
  const double w = std::sqrt(std::abs(z));
  return z > 0 ? std::sinh(w) / w : std::sin(w) / w;
}

double coshw(double z) {
  if (std::abs(z) < 1e-4) return 1.0 + z / 2.0 + z * z / 24.0 + z * z * z / 720.0;
  const double w = std::sqrt(std::abs(z));
  return z > 0 ? std::cosh(w) : std::cos(w);
}

double sinhc3(double z) {
  if (std::abs(z) < 1e-3)
    return 1.0 / 6.0 + z / 120.0 + z * z / 5040.0 + z * z * z / 362880.0;
  return (sinhc(z) - 1.0) / z;
}

double coshw2(double z) {
  if (std::abs(z) < 1e-3) return 0.5 + z / 24.0 + z * z / 720.0 + z * z * z / 40320.0;
  return (coshw(z) - 1.0) / z;
}

double cms(double z) {
  if (std::abs(z) < 1e-3) return 1.0 / 3.0 + z / 30.0 + z * z / 840.0 + z * z * z / 45360.0;
  return (coshw(z) - sinhc(z)) / z;
}

double sinhc_diff(double z) {
  if (std::abs(z) < 1e-3) return 1.0 / 3.0 + 4.0 * z / 45.0 + z * z / 105.0;
  const double s = sinhc(z);
  return (sinhc(4.0 * z) - s * s) / z;
}

double real_checked(cplx z, double scale, const char* what) {
  const double lim = 1e-9 * std::max(std::abs(z.real()), std::abs(scale));
  if (std::abs(z.imag()) > lim) {
    std::ostringstream os;
    os << what << ": imaginary residue " << z.imag() << " exceeds 1e-9 of scale "
       << std::max(std::abs(z.real()), std::abs(scale));
    throw std::logic_error(os.str());
  }
  return z.real();
}

RootResult brent(const std::function<double(double)>& f, double a, double b,
                 double xtol, int max_iter) {
  double fa = f(a), fb = f(b);
  if (fa == 0) return {a, true};
  if (fb == 0) return {b, true};
  if (fa * fb > 0) return {0.5 * (a + b), false};
  if (std::abs(fa) < std::abs(fb)) { std::swap(a, b); std::swap(fa, fb); }
  double c = a, fc = fa, s = b, fs = fb, d = 0;
  bool mflag = true;
  for (int it = 0; it < max_iter; ++it) {
    if (fa != fc && fb != fc) {
      s = a * fb * fc / ((fa - fb) * (fa - fc)) + b * fa * fc / ((fb - fa) * (fb - fc)) +
          c * fa * fb / ((fc - fa) * (fc - fb));
    } else {
      s = b - fb * (b - a) / (fb - fa);
    }
    const double lo = (3 * a + b) / 4, hi = b;
    const bool cond = !((s > std::min(lo, hi) && s < std::max(lo, hi))) ||
                      (mflag && std::abs(s - b) >= std::abs(b - c) / 2) ||
                      (!mflag && std::abs(s - b) >= std::abs(c - d) / 2) ||
                      (mflag && std::abs(b - c) < xtol) ||
                      (!mflag && std::abs(c - d) < xtol);
    if (cond) { s = 0.5 * (a + b); mflag = true; } else { mflag = false; }
    fs = f(s);
    d = c; c = b; fc = fb;
    if (fa * fs < 0) { b = s; fb = fs; } else { a = s; fa = fs; }
    if (std::abs(fa) < std::abs(fb)) { std::swap(a, b); std::swap(fa, fb); }
    if (fb == 0 || std::abs(b - a) < xtol) return {b, true};
  }
  return {b, false};
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i]; sy += y[i]; sxx += x[i] * x[i]; sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  LinearFit fit;
  fit.slope = (n * sxy - sx * sy) / den;
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  // Newton iteration on P_n, symmetric pairs.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1; p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const int nt = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  std::exception_ptr err;
  std::mutex err_mu;
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += nt) body(i);
      } catch (...) {
        std::lock_guard lk(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

int hardware_threads() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace twobar::num
