#pragma once

namespace qcrit {

/// Free-fermion solution of the cyclic transverse-field Ising chain in the
/// even-parity (antiperiodic) sector. rho_z = <sigma_z> = -d eps/d lambda.
struct TfimFreeFermion {
  double epsilon = 0.0;
  double rho_z = 0.0;
};
TfimFreeFermion tfim_free_fermion(double lambda, long n);

/// Spontaneous x magnetization in the thermodynamic limit:
/// (1 - lambda^2)^(1/8) for lambda < 1, zero otherwise.
double tfim_magnetization_x(double lambda);

/// Thermodynamic-limit L2 of one site, 1 - rho_z^2 - m_x^2.
double tfim_l2_limit(double lambda, long n = 1'000'000);

/// Stored reference constants for the XXZ chain (vanishing-magnetization
/// ground state, energies per site with our sign conventions: the energy
/// at Delta = -1 is negative, 2(1/4 - ln 2)).
struct XxzReference {
  double eps_delta_1;        // -1/2
  double d1_above_1;         // -1/2 (Delta -> 1+)
  double d1_below_1;         // 0    (Delta -> 1-)
  double eps_delta_m1;       // 2(1/4 - ln 2) ~= -0.8863
  double d1_delta_m1;        // ~= +0.2954
  double l4_above_1;         // 2/3
  double l4_below_1;         // 5/6
};
XxzReference xxz_reference();

/// Pair-block linear entropy from the energy density and its derivative.
double xxz_l4(double epsilon, double d1, double delta);
/// d L4 / d a with a = d eps / d Delta: (4/3)[eps*Delta - 2(1+Delta^2/2) d1].
double xxz_dl4_da(double epsilon, double d1, double delta);

/// Half-filled Hubbard constants at U = 0.
struct HubbardReference {
  double a0;      // 1/4
  double l4_0;    // 1
  double slope0;  // 0
};
HubbardReference hubbard_reference();
double hubbard_l4_of_a(double a);   // (2/3)(1 + 4a - 8a^2)
double hubbard_dl4_da(double a);    // (2/3)(4 - 16a)

/// Hartree-Fock solution of the Lipkin model (exact as N -> infinity).
struct LipkinHF {
  double lambda = 0.0;
  double alpha = 0.0;            // variational angle, cos 2a = lambda (l<1)
  double a = 0.0;                // <S_z>/N = d eps/d lambda
  double epsilon = 0.0;          // energy per particle
  double l2 = 0.0;               // 1 - 4a^2
  double l4_offdiag = 0.0;       // (2/3)(1 - 4a^2), block (+m,-n), m != n
  double negativity_diag = 0.0;  // sqrt(1 - 4a^2), pair (+m,-m)
};
LipkinHF lipkin_hf(double lambda);

}  // namespace qcrit
