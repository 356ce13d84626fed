#pragma once

#include <span>
#include <vector>

#include "qcrit/observables.hpp"

namespace qcrit {

/// L^(d) = [d/(d-1)] (1 - Tr rho^2), in [0, 1].
double linear_entropy(const ReducedDensityMatrix& rdm);

/// Single-site block entanglement, equal to 1 - |Bloch vector|^2.
double block_entropy_l2(const QuantumState& state, int site);

/// Negativity of a 4x4 two-qubit RDM under the 2|2 bipartition:
/// trace norm of the partial transpose minus one (Bell pair -> 1).
double negativity(const ReducedDensityMatrix& rdm);

/// Parametric difference quotient dM/da over sweep samples. Windows where
/// |delta a| < eps_a are flagged undefined instead of divided.
struct DensityDerivative {
  std::vector<double> value;
  std::vector<bool> defined;
};
DensityDerivative measure_derivative_wrt_density(std::span<const double> m,
                                                 std::span<const double> a,
                                                 double eps_a = 1e-8);

}  // namespace qcrit
