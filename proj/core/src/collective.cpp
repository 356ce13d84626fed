#include "qcrit/collective.hpp"

#include <cmath>
#include <stdexcept>

namespace qcrit {

void CollectiveOperator::apply(const Eigen::VectorXcd& in,
                               Eigen::VectorXcd& out) const {
  const Eigen::Index n = dim();
  if (in.size() != n) throw std::invalid_argument("dimension mismatch");
  out.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    std::complex<double> v = diag[k] * in[k];
    if (k + 2 < n) v += off2[k] * in[k + 2];
    if (k >= 2) v += off2[k - 2] * in[k - 2];
    out[k] = v;
  }
}

Eigen::MatrixXd CollectiveOperator::to_dense() const {
  const Eigen::Index n = dim();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m.diagonal() = diag;
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    m(k, k + 2) = off2[k];
    m(k + 2, k) = off2[k];
  }
  return m;
}

CollectiveOperator& CollectiveOperator::operator+=(
    const CollectiveOperator& other) {
  if (other.dim() != dim()) throw std::invalid_argument("dimension mismatch");
  diag += other.diag;
  off2 += other.off2;
  return *this;
}

CollectiveOperator& CollectiveOperator::operator*=(double s) {
  diag *= s;
  off2 *= s;
  return *this;
}

CollectiveOperator CollectiveOperator::zero(int n_particles) {
  CollectiveOperator op;
  op.diag = Eigen::VectorXd::Zero(n_particles + 1);
  op.off2 = Eigen::VectorXd::Zero(std::max(0, n_particles - 1));
  return op;
}

CollectiveOperator CollectiveOperator::s_z(int n_particles) {
  CollectiveOperator op = zero(n_particles);
  const double s = n_particles / 2.0;
  for (Eigen::Index k = 0; k <= n_particles; ++k) op.diag[k] = k - s;
  return op;
}

CollectiveOperator CollectiveOperator::squeeze(int n_particles) {
  CollectiveOperator op = zero(n_particles);
  const double s = n_particles / 2.0;
  const double c = s * (s + 1.0);
  // <m+2| S_+^2 |m> = sqrt(c - m(m+1)) * sqrt(c - (m+1)(m+2))
  for (Eigen::Index k = 0; k + 2 <= n_particles; ++k) {
    const double m = k - s;
    const double elem =
        std::sqrt(c - m * (m + 1.0)) * std::sqrt(c - (m + 1.0) * (m + 2.0));
    op.off2[k] = -elem / (2.0 * n_particles);
  }
  return op;
}

double collective_expectation(const CollectiveOperator& op,
                              const Eigen::VectorXcd& state) {
  Eigen::VectorXcd image;
  op.apply(state, image);
  return state.dot(image).real();
}

}  // namespace qcrit
