#include "qcrit/entanglement.hpp"

#include <cmath>
#include <stdexcept>

namespace qcrit {

double linear_entropy(const ReducedDensityMatrix& rdm) {
  const double d = static_cast<double>(rdm.dim());
  if (rdm.dim() != 2 && rdm.dim() != 4)
    throw std::invalid_argument("linear entropy defined for d in {2, 4}");
  const double value = d / (d - 1.0) * (1.0 - rdm.purity());
  return std::clamp(value, 0.0, 1.0);
}

double block_entropy_l2(const QuantumState& state, int site) {
  return linear_entropy(reduced_density_matrix(state, {site}));
}

double negativity(const ReducedDensityMatrix& rdm) {
  if (rdm.dim() != 4)
    throw std::invalid_argument("negativity requires a two-qubit RDM");
  // partial transpose on the second qubit: (ab|cd) -> (ad|cb)
  Eigen::MatrixXcd pt(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          pt(2 * a + d, 2 * c + b) = rdm.rho(2 * a + b, 2 * c + d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt,
                                                     Eigen::EigenvaluesOnly);
  double trace_norm = 0.0;
  for (Eigen::Index i = 0; i < 4; ++i)
    trace_norm += std::abs(es.eigenvalues()[i]);
  return std::max(0.0, trace_norm - 1.0);
}

DensityDerivative measure_derivative_wrt_density(std::span<const double> m,
                                                 std::span<const double> a,
                                                 double eps_a) {
  if (m.size() != a.size())
    throw std::invalid_argument("sample arrays differ in length");
  const std::size_t n = m.size();
  DensityDerivative out;
  out.value.assign(n, 0.0);
  out.defined.assign(n, false);
  if (n < 2) return out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i == n - 1 ? n - 1 : i + 1;
    const double da = a[hi] - a[lo];
    if (std::abs(da) < eps_a) continue;
    out.value[i] = (m[hi] - m[lo]) / da;
    out.defined[i] = true;
  }
  return out;
}

}  // namespace qcrit
