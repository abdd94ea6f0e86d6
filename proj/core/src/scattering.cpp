#include "twobar/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "twobar/numeric.hpp"

namespace twobar {

using num::cms;
using num::coshw;
using num::coshw2;
using num::sinhc;
using num::sinhc3;
using num::sinhc_diff;

namespace {
constexpr double kPi = std::numbers::pi;
}

OneBarrierParams one_barrier(const BarrierSystem& sys, const Kinematics& kin) {
  OneBarrierParams p;
  const double d = sys.d, k = kin.k;
  const double k0sq = sys.kappa0_sq;
  const double zeta = kin.kappa_sq * d * d;
  p.zeta = zeta;
  p.sinhc_d = sinhc(zeta);
  p.cosh_d = coshw(zeta);

  // theta_+^2 sinh^2(kappa d) = kappa0^4 (d sinhc)^2 / (4 k^2): real in all regimes.
  const double sd = d * p.sinhc_d;  // sinh(kappa d)/kappa
  const double S = k0sq * k0sq * sd * sd / (4.0 * k * k);
  p.T = 1.0 / (1.0 + S);
  p.R = S / (1.0 + S);

  // theta_- tanh(kappa d) = (k^2 - kappa^2) sd / (2 k cosh)
  const double tanJ = (k * k - kin.kappa_sq) * sd / (2.0 * k * p.cosh_d);
  p.J = std::atan(tanJ);
  if (kin.kappa_sq < 0) {
    // E > V0: unwrap across the cos(|kappa| d) zeros so J stays continuous in k.
    const double u = std::sqrt(-zeta);
    p.J += kPi * std::round(u / kPi);
  }

  // eta from the sign of theta_+ sinh(kappa d) = kappa0^2 sd / (2k).
  p.eta = (k0sq * sd >= 0) ? 1 : -1;
  p.F = p.eta > 0 ? 0.0 : kPi;

  // J' = (T d / 2k^2) [4 kappa0^4 d^2 sinhc3(4 zeta) + kappa0^2 + 2 k^2]
  p.Jprime = p.T * d / (2.0 * k * k) *
             (4.0 * k0sq * k0sq * d * d * sinhc3(4.0 * zeta) + k0sq + 2.0 * k * k);

  // T' = (kappa0^4 T^2 d^2 / 2k^3) [k^2 d^2 sinhc_diff(zeta) + sinhc(zeta)^2]
  p.Tprime = k0sq * k0sq * p.T * p.T * d * d / (2.0 * k * k * k) *
             (k * k * d * d * sinhc_diff(zeta) + p.sinhc_d * p.sinhc_d);
  return p;
}

TransferMatrix transfer_matrix_single(const BarrierSystem& sys, const Kinematics& kin,
                                      const OneBarrierParams& one, int n) {
  if (n != 1 && n != 2) throw std::invalid_argument("barrier index must be 1 or 2");
  const double a = n == 1 ? sys.a1 : sys.a2;
  const double b = n == 1 ? sys.b1 : sys.b2;
  const cplx q = std::exp(cplx(0, -one.J)) / std::sqrt(one.T);
  const double p = one.eta * std::sqrt(one.R / one.T);
  TransferMatrix y;
  y.q = q * std::exp(cplx(0, kin.k * (b - a)));
  y.p = cplx(0, p) * std::exp(cplx(0, -kin.k * (b + a)));
  return y;
}

TransferMatrix compose(const TransferMatrix& y1, const TransferMatrix& y2) {
  TransferMatrix y;
  y.q = y1.q * y2.q + y1.p * std::conj(y2.p);
  y.p = y1.q * y2.p + y1.p * std::conj(y2.q);
  return y;
}

double transfer_det(const TransferMatrix& y) { return std::norm(y.q) - std::norm(y.p); }

void amplitudes_from_qp(const cplx& Q, const cplx& P, cplx& a_out, cplx& b_out) {
  const cplx uq = Q / std::conj(Q);
  const cplx up = P / std::conj(P);
  a_out = 0.5 * (uq - up);
  b_out = -0.5 * (uq + up);
}

double jtwo_pointwise(const OneBarrierParams& one, double kL) {
  const double chi = one.J + kL;
  double j = one.J + std::atan((1.0 - one.R) / (1.0 + one.R) * std::tan(chi));
  if (std::cos(chi) < 0) j += kPi;
  return j;
}

namespace {

double lambda_of(const BarrierSystem& sys, double k) {
  const Kinematics kin = kinematics(sys, k);
  const OneBarrierParams one = one_barrier(sys, kin);
  const double chi = one.J + k * sys.L;
  const double c = std::cos(chi);
  const double den = one.T * one.T + 4.0 * one.R * c * c;
  const double T2 = one.T * one.T / den;
  const double R2 = 4.0 * one.R * c * c / den;
  const int eta2 = one.eta * (c >= 0 ? 1 : -1);
  return std::atan2(eta2 * std::sqrt(T2), std::sqrt(R2));
}

// One-sided 2nd-order difference of lambda(k), stepping to the side where
// lambda has no branch jump.
double lambda_prime_fd(const BarrierSystem& sys, double k, double lambda0) {
  const double h = std::max(k, std::sqrt(std::abs(sys.kappa0_sq))) * 1e-7;
  for (const double s : {+1.0, -1.0}) {
    const double l1 = lambda_of(sys, k + s * h);
    const double l2 = lambda_of(sys, k + 2.0 * s * h);
    if (std::abs(l1 - lambda0) < 1.0 && std::abs(l2 - l1) < 1.0)
      return s * (-3.0 * lambda0 + 4.0 * l1 - l2) / (2.0 * h);
  }
  return 0.0;  // isolated point (e.g. exact resonance of a transparent barrier)
}

}  // namespace

TwoBarrierParams two_barrier(const BarrierSystem& sys, const Kinematics& kin,
                             const OneBarrierParams& one) {
  TwoBarrierParams t;
  const double k = kin.k, L = sys.L;
  const double T = one.T, R = one.R;
  t.chi = one.J + k * L;
  const double c = std::cos(t.chi), s = std::sin(t.chi);

  const double den = T * T + 4.0 * R * c * c;
  t.T_two = T * T / den;
  t.R_two = 4.0 * R * c * c / den;

  // continuous branch: arctan term unwrapped by round(chi/pi)
  t.J_two = one.J + std::atan((1.0 - R) / (1.0 + R) * std::tan(t.chi)) +
            kPi * std::round(t.chi / kPi);
  t.eta_two = one.eta * (c >= 0 ? 1 : -1);
  t.F_two = t.eta_two > 0 ? 0.0 : kPi;

  const cplx q = std::exp(cplx(0, -one.J)) / std::sqrt(T);
  const double p = one.eta * std::sqrt(R / T);
  const cplx eL = std::exp(cplx(0, k * L / 2.0));
  t.Q = std::conj(q) * eL + cplx(0, p) / eL;
  t.P = cplx(0, 1) * std::conj(q) * eL + p / eL;

  t.a_out = std::sqrt(t.T_two) * std::exp(cplx(0, t.J_two));
  t.b_out = cplx(0, -1) * std::sqrt(t.R_two) * std::exp(cplx(0, t.J_two - t.F_two));

  t.lambda = std::atan2(t.eta_two * std::sqrt(t.T_two), std::sqrt(t.R_two));

  t.Jtwo_prime = one.Jprime + t.T_two / (T * T) *
                 (T * (1.0 + R) * (one.Jprime + L) + one.Tprime * std::sin(2.0 * t.chi));

  t.near_resonance = t.R_two <= kResonanceGuard;
  if (!t.near_resonance && R > kResonanceGuard) {
    t.lambda_prime = one.eta * t.T_two / (std::sqrt(R) * T * T) *
                     (one.Tprime * (1.0 + R) * c + 2.0 * R * T * (one.Jprime + L) * s);
  } else {
    t.lambda_prime = lambda_prime_fd(sys, k, t.lambda);
    t.lambda_prime_fd = true;
  }
  return t;
}

namespace {

struct ChiEval {
  double chi;
  double chi_prime;
};

ChiEval chi_at(const BarrierSystem& sys, double k) {
  const Kinematics kin = kinematics(sys, k);
  const OneBarrierParams one = one_barrier(sys, kin);
  return {one.J + k * sys.L, one.Jprime + sys.L};
}

}  // namespace

std::vector<Resonance> find_resonances(const BarrierSystem& sys, double k_min, double k_max) {
  std::vector<Resonance> out;
  if (!(k_min > 0) || !(k_max > k_min)) throw std::invalid_argument("bad resonance k-range");

  auto branch = [](double chi) { return std::floor((chi - kPi / 2.0) / kPi); };

  // Walk with steps small enough that chi moves by < pi/4 per step.
  double k = k_min;
  ChiEval cur = chi_at(sys, k);
  const double min_step = (k_max - k_min) / 20000.0;
  while (k < k_max) {
    double step = std::min((k_max - k_min) / 512.0,
                           kPi / (4.0 * std::max(std::abs(cur.chi_prime), 1e-12)));
    step = std::max(step, min_step);
    double k_next = std::min(k + step, k_max);
    ChiEval nxt = chi_at(sys, k_next);
    // bisect every branch crossing inside (k, k_next]
    long b0 = static_cast<long>(branch(cur.chi));
    long b1 = static_cast<long>(branch(nxt.chi));
    for (long b = std::min(b0, b1); b < std::max(b0, b1); ++b) {
      const double target = kPi / 2.0 + (b + 1) * kPi;
      auto f = [&](double kk) { return chi_at(sys, kk).chi - target; };
      const auto root = num::brent(f, k, k_next, 1e-13 * k_next);
      if (root.converged) {
        const double chi_root = chi_at(sys, root.x).chi;
        Resonance r;
        r.k = root.x;
        r.index = static_cast<int>(std::lround((chi_root - kPi / 2.0) / kPi)) + 1;
        out.push_back(r);
      }
    }
    k = k_next;
    cur = nxt;
  }
  std::sort(out.begin(), out.end(), [](const Resonance& a, const Resonance& b) { return a.k < b.k; });
  return out;
}

}  // namespace twobar
