#pragma once

#include <vector>

#include "qcrit/state.hpp"

namespace qcrit {

struct BlochVector {
  double x = 0.0, y = 0.0, z = 0.0;
  double norm() const;
};

/// d x d reduced density matrix of a retained site/mode block (d = 2 or 4).
/// For two retained indices s0 < s1 the block basis is |b0 b1> with b0 the
/// most significant bit, so index = 2*bit(s0) + bit(s1).
struct ReducedDensityMatrix {
  Eigen::MatrixXcd rho;
  std::vector<int> block;

  Eigen::Index dim() const { return rho.rows(); }
  double purity() const;
  /// Real ascending eigenvalues.
  std::vector<double> spectrum() const;
};

/// Embed a sector-restricted state into the full 2^N amplitude vector.
Eigen::VectorXcd embed_full(const QuantumState& state);

BlochVector bloch_vector(const QuantumState& state, int site);

/// Partial trace over the complement of 1 or 2 retained sites/modes,
/// accumulated directly from bit-indexed amplitudes.
ReducedDensityMatrix reduced_density_matrix(const QuantumState& state,
                                            std::vector<int> retained);

/// Nearest-neighbor pair RDM of the XXZ chain reconstructed from the
/// energy density and its Delta derivative alone.
ReducedDensityMatrix xxz_pair_rdm_from_energy(double epsilon,
                                              double deps_ddelta,
                                              double delta);

/// Single-site occupation spectrum of the half-filled Hubbard chain:
/// w = <n_up n_down>, u+/- = <n_up/down> - w, z = 1 - u+ - u- - w.
struct HubbardSiteSpectrum {
  double w = 0.0, u_plus = 0.0, u_minus = 0.0, z = 0.0;
};
HubbardSiteSpectrum hubbard_site_spectrum(const QuantumState& state,
                                          int site = 0);

}  // namespace qcrit
