#include "qcrit/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcrit {

TfimFreeFermion tfim_free_fermion(double lambda, long n) {
  if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
  if (n < 3 || n % 2 != 0)
    throw std::invalid_argument("momentum sum requires even n >= 4");
  // antiperiodic momenta k = (2m - 1) pi / n, m = 1..n/2
  double e = 0.0, de = 0.0;
  for (long m = 1; m <= n / 2; ++m) {
    const double k = (2.0 * m - 1.0) * std::numbers::pi / n;
    const double lam_k =
        2.0 * std::sqrt(1.0 + lambda * lambda - 2.0 * lambda * std::cos(k));
    e -= lam_k;
    if (lam_k > 0.0)
      de -= 4.0 * (lambda - std::cos(k)) / lam_k;
  }
  TfimFreeFermion out;
  out.epsilon = e / n;
  out.rho_z = -de / n;  // <sigma_z> = -d eps / d lambda
  return out;
}

double tfim_magnetization_x(double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
  if (lambda >= 1.0) return 0.0;
  return std::pow(1.0 - lambda * lambda, 0.125);
}

double tfim_l2_limit(double lambda, long n) {
  const TfimFreeFermion ff = tfim_free_fermion(lambda, n);
  const double mx = tfim_magnetization_x(lambda);
  return 1.0 - ff.rho_z * ff.rho_z - mx * mx;
}

XxzReference xxz_reference() {
  XxzReference r;
  r.eps_delta_1 = -0.5;
  r.d1_above_1 = -0.5;
  r.d1_below_1 = 0.0;
  // The stated magnitude is 2(ln 2 - 1/4); small-N diagonalization resolves
  // the sign as negative for the Hamiltonian as written.
  r.eps_delta_m1 = 2.0 * (0.25 - std::numbers::ln2);
  r.d1_delta_m1 = 0.2954;
  r.l4_above_1 = 2.0 / 3.0;
  r.l4_below_1 = 5.0 / 6.0;
  return r;
}

double xxz_l4(double epsilon, double d1, double delta) {
  return 1.0 - (4.0 / 3.0) * ((1.0 + 0.5 * delta * delta) * d1 * d1 +
                              0.5 * epsilon * epsilon - epsilon * delta * d1);
}

double xxz_dl4_da(double epsilon, double d1, double delta) {
  return (4.0 / 3.0) *
         (epsilon * delta - 2.0 * (1.0 + 0.5 * delta * delta) * d1);
}

HubbardReference hubbard_reference() { return {0.25, 1.0, 0.0}; }

double hubbard_l4_of_a(double a) {
  return (2.0 / 3.0) * (1.0 + 4.0 * a - 8.0 * a * a);
}

double hubbard_dl4_da(double a) { return (2.0 / 3.0) * (4.0 - 16.0 * a); }

LipkinHF lipkin_hf(double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
  LipkinHF hf;
  hf.lambda = lambda;
  if (lambda < 1.0) {
    hf.alpha = 0.5 * std::acos(lambda);
    hf.a = -0.5 * lambda;
    // eps = -(lambda/2) cos 2a - (1/4) sin^2 2a minimized at cos 2a = lambda;
    // the constant offset vanishes (matches the exact N -> infinity value
    // at lambda = 0).
    hf.epsilon = -(1.0 + lambda * lambda) / 4.0;
  } else {
    hf.alpha = 0.0;
    hf.a = -0.5;
    hf.epsilon = -0.5 * lambda;
  }
  const double s = std::max(0.0, 1.0 - 4.0 * hf.a * hf.a);
  hf.l2 = s;
  hf.l4_offdiag = (2.0 / 3.0) * s;
  hf.negativity_diag = std::sqrt(s);
  return hf;
}

}  // namespace qcrit
