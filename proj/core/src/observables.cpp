#include "qcrit/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcrit {

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double ReducedDensityMatrix::purity() const {
  return (rho * rho).trace().real();
}

std::vector<double> ReducedDensityMatrix::spectrum() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho,
                                                     Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(),
          es.eigenvalues().data() + es.eigenvalues().size()};
}

Eigen::VectorXcd embed_full(const QuantumState& state) {
  const BasisSector& sector = *state.sector;
  if (sector.kind() == BasisSector::Kind::CollectiveBlock)
    throw std::invalid_argument("collective-block states have no full-space embedding");
  const int n = sector.n_sites();
  if (n > 26) throw std::invalid_argument("embedding limited to 26 sites");
  if (sector.kind() == BasisSector::Kind::Full) return state.amplitudes;
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(std::int64_t{1} << n);
  for (std::size_t i = 0; i < sector.size(); ++i)
    full[static_cast<Eigen::Index>(sector.state_at(i))] =
        state.amplitudes[static_cast<Eigen::Index>(i)];
  return full;
}

BlochVector bloch_vector(const QuantumState& state, int site) {
  const int n = state.sector->n_sites();
  if (site < 0 || site >= n) throw std::out_of_range("site out of range");
  ReducedDensityMatrix rdm = reduced_density_matrix(state, {site});
  BlochVector b;
  b.x = 2.0 * rdm.rho(0, 1).real();
  b.y = -2.0 * rdm.rho(0, 1).imag();
  b.z = (rdm.rho(0, 0) - rdm.rho(1, 1)).real();
  return b;
}

ReducedDensityMatrix reduced_density_matrix(const QuantumState& state,
                                            std::vector<int> retained) {
  if (retained.empty() || retained.size() > 2)
    throw std::invalid_argument("retain 1 or 2 sites");
  const int n = state.sector->n_sites();
  std::sort(retained.begin(), retained.end());
  for (int s : retained)
    if (s < 0 || s >= n) throw std::out_of_range("retained index out of range");
  if (retained.size() == 2 && retained[0] == retained[1])
    throw std::invalid_argument("retained indices must differ");

  const Eigen::VectorXcd full = embed_full(state);
  const int k = static_cast<int>(retained.size());
  const int d = 1 << k;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);

  // masks of retained bits, most significant block bit first
  std::vector<std::uint64_t> masks(k);
  for (int i = 0; i < k; ++i)
    masks[i] = std::uint64_t{1} << retained[i];

  const std::uint64_t dim = std::uint64_t{1} << n;
  std::uint64_t block_mask = 0;
  for (auto m : masks) block_mask |= m;

  auto block_value = [&](std::uint64_t bits) {
    int v = 0;
    for (int i = 0; i < k; ++i)
      if (bits & masks[i]) v |= 1 << (k - 1 - i);
    return v;
  };
  auto with_block = [&](std::uint64_t rest, int v) {
    std::uint64_t bits = rest;
    for (int i = 0; i < k; ++i)
      if (v & (1 << (k - 1 - i))) bits |= masks[i];
    return bits;
  };
  (void)block_value;

  for (std::uint64_t rest = 0; rest < dim; ++rest) {
    if (rest & block_mask) continue;
    cplx amps[4];
    for (int a = 0; a < d; ++a)
      amps[a] = full[static_cast<Eigen::Index>(with_block(rest, a))];
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        rho(a, b) += amps[a] * std::conj(amps[b]);
  }
  return {std::move(rho), std::move(retained)};
}

ReducedDensityMatrix xxz_pair_rdm_from_energy(double epsilon,
                                              double deps_ddelta,
                                              double delta) {
  const double a = 0.25 * (1.0 - 2.0 * deps_ddelta);
  const double b = 0.25 * (1.0 + 2.0 * deps_ddelta);
  const double c = -0.5 * (epsilon - delta * deps_ddelta);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(4, 4);
  rho(0, 0) = a;
  rho(1, 1) = b;
  rho(2, 2) = b;
  rho(3, 3) = a;
  rho(1, 2) = c;
  rho(2, 1) = c;
  ReducedDensityMatrix rdm{std::move(rho), {0, 1}};
  for (double ev : rdm.spectrum())
    if (ev < -1e-8)
      throw std::domain_error(
          "inconsistent energy inputs: reconstructed RDM is not PSD");
  return rdm;
}

HubbardSiteSpectrum hubbard_site_spectrum(const QuantumState& state,
                                          int site) {
  const int n_modes = state.sector->n_sites();
  const int up = 2 * site, down = 2 * site + 1;
  if (down >= n_modes) throw std::out_of_range("site out of range");
  // occupation probabilities from the (up, down) mode block
  ReducedDensityMatrix rdm = reduced_density_matrix(state, {up, down});
  // block index = 2*bit(up) + bit(down); bit set = occupied
  const double w = rdm.rho(3, 3).real();
  const double n_up = rdm.rho(2, 2).real() + w;
  const double n_down = rdm.rho(1, 1).real() + w;
  HubbardSiteSpectrum s;
  s.w = w;
  s.u_plus = n_up - w;
  s.u_minus = n_down - w;
  s.z = 1.0 - s.u_plus - s.u_minus - s.w;
  return s;
}

}  // namespace qcrit
