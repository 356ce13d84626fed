#pragma once

#include <Eigen/Dense>

namespace qcrit {

/// Real symmetric operator on the maximal collective-spin block S = N/2,
/// stored as a main diagonal plus the +-2 off-diagonal (the only couplings
/// generated by S_z and S_+^2 + S_-^2). Basis index k = 0..N encodes
/// m = k - N/2.
struct CollectiveOperator {
  Eigen::VectorXd diag;  // dim = N + 1
  Eigen::VectorXd off2;  // dim - 2 entries; off2[k] couples k and k+2

  Eigen::Index dim() const { return diag.size(); }

  void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
  Eigen::MatrixXd to_dense() const;

  CollectiveOperator& operator+=(const CollectiveOperator& other);
  CollectiveOperator& operator*=(double s);
  friend CollectiveOperator operator+(CollectiveOperator a,
                                      const CollectiveOperator& b) {
    a += b;
    return a;
  }
  friend CollectiveOperator operator*(CollectiveOperator a, double s) {
    a *= s;
    return a;
  }

  static CollectiveOperator zero(int n_particles);
  /// S_z: diagonal m.
  static CollectiveOperator s_z(int n_particles);
  /// -(1/N)(S_x^2 - S_y^2) = -(1/2N)(S_+^2 + S_-^2).
  static CollectiveOperator squeeze(int n_particles);
};

double collective_expectation(const CollectiveOperator& op,
                              const Eigen::VectorXcd& state);

}  // namespace qcrit
