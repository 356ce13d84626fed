#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qcrit/hamiltonian.hpp"
#include "qcrit/state.hpp"

namespace qcrit {

struct SolverOptions {
  int max_iterations = 2000;
  double tolerance = 1e-10;
  std::size_t dense_cutoff = 4096;
  std::uint64_t seed = 42;
  double degeneracy_rel_tol = 1e-10;
};

struct GroundSolution {
  double energy = 0.0;
  double energy_per_site = 0.0;
  QuantumState state;
  double gap = 0.0;
  bool degenerate = false;
  int iterations = 0;  // 0 on the dense path
  double residual = 0.0;
};

/// Deterministic matvec closure for an operator restricted to a sector.
struct SectorMatvec {
  std::size_t dim = 0;
  std::function<void(const Eigen::VectorXcd&, Eigen::VectorXcd&)> mv;
};

SectorMatvec make_matvec(const OperatorRep& op, SectorPtr sector);

/// Lowest eigenpair of the spec's total operator within a sector. Dense
/// diagonalization below dense_cutoff, Lanczos with full
/// reorthogonalization above. The state's global phase is fixed by making
/// its largest-magnitude amplitude real positive.
GroundSolution ground_state(const HamiltonianSpec& spec, SectorPtr sector,
                            const SolverOptions& opts = {});
GroundSolution ground_state(const HamiltonianSpec& spec,
                            const SolverOptions& opts = {});

/// Full ascending spectrum (dense oracle path, dim <= 4096).
std::vector<double> dense_spectrum(const HamiltonianSpec& spec,
                                   SectorPtr sector);
std::vector<double> dense_spectrum(const HamiltonianSpec& spec);

bool detect_degeneracy(const GroundSolution& solution,
                       double rel_tol = 1e-10);

/// <psi|op|psi> for either operator representation.
double rep_expectation(const OperatorRep& op, const QuantumState& state);

}  // namespace qcrit
