#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qcrit {

using cplx = std::complex<double>;

/// Single-site operator in the Pauli basis.
enum class SiteOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

struct PauliFactor {
  int site = 0;
  SiteOp op = SiteOp::I;

  friend bool operator==(const PauliFactor&, const PauliFactor&) = default;
};

/// One weighted Pauli string. Factors are kept sorted by site with no
/// repeated site; identity factors are never stored.
struct OperatorTerm {
  cplx coefficient{};
  std::vector<PauliFactor> factors;
};

/// Result of acting with a Pauli string on a computational basis state:
/// the image is again a single basis state up to a phase.
struct BasisAction {
  std::uint64_t bits = 0;
  cplx amplitude{};
};

BasisAction apply_term_to_basis(const OperatorTerm& term, std::uint64_t bits);

/// Canonicalized weighted sum of Pauli strings over n_sites qubits.
///
/// Terms are sorted by their factor list, like terms merged, zero terms
/// dropped, so equal operators have identical representations.
class OperatorExpression {
 public:
  OperatorExpression() = default;
  OperatorExpression(int n_sites, std::vector<OperatorTerm> terms);

  int n_sites() const { return n_sites_; }
  const std::vector<OperatorTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  OperatorExpression adjoint() const;
  bool is_hermitian(double tol = 1e-12) const;

  OperatorExpression& operator+=(const OperatorExpression& other);
  OperatorExpression& operator*=(cplx scale);

  friend OperatorExpression operator+(OperatorExpression a,
                                      const OperatorExpression& b) {
    a += b;
    return a;
  }
  friend OperatorExpression operator*(OperatorExpression a, cplx s) {
    a *= s;
    return a;
  }
  friend OperatorExpression operator*(cplx s, OperatorExpression a) {
    a *= s;
    return a;
  }
  /// Operator product with full Pauli phase bookkeeping.
  friend OperatorExpression operator*(const OperatorExpression& a,
                                      const OperatorExpression& b);

 private:
  void canonicalize();

  int n_sites_ = 0;
  std::vector<OperatorTerm> terms_;
};

/// Product of two single-site Paulis: a * b = phase * op.
struct PauliProduct {
  SiteOp op;
  cplx phase;
};
PauliProduct multiply_site_ops(SiteOp a, SiteOp b);

OperatorExpression canonicalize(std::vector<OperatorTerm> terms, int n_sites);

}  // namespace qcrit
