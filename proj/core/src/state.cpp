#include "qcrit/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qcrit {

QuantumState::QuantumState(SectorPtr sec, Eigen::VectorXcd amps)
    : sector(std::move(sec)), amplitudes(std::move(amps)) {
  if (!sector) throw std::invalid_argument("null sector");
  if (static_cast<std::size_t>(amplitudes.size()) != sector->size())
    throw std::invalid_argument("amplitude vector does not match sector size");
  if (std::abs(amplitudes.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("state is not normalized");
}

namespace {

void check_spin_sector(const BasisSector& sector) {
  if (sector.kind() == BasisSector::Kind::CollectiveBlock)
    throw std::invalid_argument(
        "Pauli expressions do not act on collective blocks");
}

}  // namespace

Eigen::VectorXcd apply(const OperatorExpression& expr,
                       const QuantumState& state) {
  const BasisSector& sector = *state.sector;
  check_spin_sector(sector);
  if (expr.n_sites() != sector.n_sites())
    throw std::invalid_argument("expression/state site count mismatch");
  const std::size_t dim = sector.size();
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const cplx amp = state.amplitudes[static_cast<Eigen::Index>(i)];
    if (amp == cplx(0.0)) continue;
    apply_on_sector(expr, sector, sector.state_at(i), amp,
                    [&](std::size_t j, cplx v) {
                      out[static_cast<Eigen::Index>(j)] += v;
                    });
  }
  return out;
}

double expectation(const OperatorExpression& expr, const QuantumState& state) {
  if (!expr.is_hermitian(1e-10))
    throw std::invalid_argument("expectation of a non-Hermitian expression");
  const Eigen::VectorXcd image = apply(expr, state);
  const cplx value = state.amplitudes.dot(image);
  if (std::abs(value.imag()) > 1e-10)
    throw std::runtime_error("expectation value has a large imaginary part");
  return value.real();
}

Eigen::MatrixXcd to_dense(const OperatorExpression& expr,
                          const BasisSector& sector) {
  check_spin_sector(sector);
  if (expr.n_sites() != sector.n_sites())
    throw std::invalid_argument("expression/sector site count mismatch");
  const std::size_t dim = sector.size();
  if (dim > 4096) throw std::invalid_argument("dense build limited to 4096");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t s = 0; s < dim; ++s) {
    apply_on_sector(expr, sector, sector.state_at(s), cplx(1.0, 0.0),
                    [&](std::size_t t, cplx v) {
                      m(static_cast<Eigen::Index>(t),
                        static_cast<Eigen::Index>(s)) += v;
                    });
  }
  return m;
}

}  // namespace qcrit
