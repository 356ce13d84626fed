#pragma once

#include <string>

#include "qcrit/hamiltonian.hpp"

namespace qcrit {

enum class ModelId { Tfim, Xxz, Hubbard, Lipkin };

struct ModelParams {
  ModelId model = ModelId::Tfim;
  int n_sites = 0;       // chain sites, Hubbard sites L, or Lipkin particles
  double coupling = 0.0;  // lambda / Delta / U / lambda
  double hopping = 1.0;   // Hubbard t
};

/// H = -sum_i (sx_i sx_{i+1} + lambda sz_i), cyclic, N >= 3.
HamiltonianSpec build_tfim(int n, double lambda);

/// H = -(1/2) sum_i (sx sx + sy sy + Delta sz sz), cyclic, N even >= 4;
/// default sector total Sz = 0.
HamiltonianSpec build_xxz(int n, double delta);

/// Nearest-neighbor hopping (t = 1) plus U sum_i n_up n_down at half
/// filling, JW mode layout 2*site + spin. The hopping boundary bond is
/// antiperiodic when L/2 is even and periodic when L/2 is odd, making the
/// U = 0 ground state a closed shell.
HamiltonianSpec build_hubbard(int l, double u, double t = 1.0);

/// H = lambda S_z - (1/N)(S_x^2 - S_y^2) in the maximal collective block.
HamiltonianSpec build_lipkin(int n, double lambda);

HamiltonianSpec build_model(const ModelParams& params);
HamiltonianSpec build_model(const ModelParams& params, double coupling);

std::string model_name(ModelId id);
std::string control_name(ModelId id);
ModelId parse_model(const std::string& name);

}  // namespace qcrit
