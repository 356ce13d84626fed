#include "qcrit/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcrit {

namespace {

bool term_key_less(const OperatorTerm& a, const OperatorTerm& b) {
  return std::lexicographical_compare(
      a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
      [](const PauliFactor& x, const PauliFactor& y) {
        if (x.site != y.site) return x.site < y.site;
        return static_cast<int>(x.op) < static_cast<int>(y.op);
      });
}

bool same_key(const OperatorTerm& a, const OperatorTerm& b) {
  return a.factors == b.factors;
}

constexpr double kDropTol = 1e-15;

}  // namespace

PauliProduct multiply_site_ops(SiteOp a, SiteOp b) {
  using enum SiteOp;
  if (a == I) return {b, 1.0};
  if (b == I) return {a, 1.0};
  if (a == b) return {I, 1.0};
  const cplx i(0.0, 1.0);
  // Cyclic: XY = iZ, YZ = iX, ZX = iY; reversed order flips the sign.
  int ia = static_cast<int>(a), ib = static_cast<int>(b);
  // ops 1,2,3 -> the remaining one is 6 - ia - ib
  SiteOp c = static_cast<SiteOp>(6 - ia - ib);
  bool cyclic = (ib - ia == 1) || (ib - ia == -2);
  return {c, cyclic ? i : -i};
}

BasisAction apply_term_to_basis(const OperatorTerm& term, std::uint64_t bits) {
  BasisAction out{bits, term.coefficient};
  for (const auto& f : term.factors) {
    const std::uint64_t mask = std::uint64_t{1} << f.site;
    switch (f.op) {
      case SiteOp::I:
        break;
      case SiteOp::X:
        out.bits ^= mask;
        break;
      case SiteOp::Y:
        // Y|0> = i|1>, Y|1> = -i|0>
        out.amplitude *= (bits & mask) ? cplx(0.0, -1.0) : cplx(0.0, 1.0);
        out.bits ^= mask;
        break;
      case SiteOp::Z:
        if (bits & mask) out.amplitude = -out.amplitude;
        break;
    }
  }
  return out;
}

OperatorExpression::OperatorExpression(int n_sites,
                                       std::vector<OperatorTerm> terms)
    : n_sites_(n_sites), terms_(std::move(terms)) {
  if (n_sites < 0) throw std::invalid_argument("negative site count");
  canonicalize();
}

void OperatorExpression::canonicalize() {
  for (auto& t : terms_) {
    if (!std::isfinite(t.coefficient.real()) ||
        !std::isfinite(t.coefficient.imag()))
      throw std::invalid_argument("non-finite term coefficient");
    std::sort(t.factors.begin(), t.factors.end(),
              [](const PauliFactor& a, const PauliFactor& b) {
                return a.site < b.site;
              });
    std::erase_if(t.factors,
                  [](const PauliFactor& f) { return f.op == SiteOp::I; });
    for (std::size_t k = 0; k < t.factors.size(); ++k) {
      const auto& f = t.factors[k];
      if (f.site < 0 || f.site >= n_sites_)
        throw std::out_of_range("site index out of range");
      if (k > 0 && t.factors[k - 1].site == f.site)
        throw std::invalid_argument("repeated site within one term");
    }
  }
  std::sort(terms_.begin(), terms_.end(), term_key_less);
  std::vector<OperatorTerm> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && same_key(merged.back(), t)) {
      merged.back().coefficient += t.coefficient;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const OperatorTerm& t) {
    return std::abs(t.coefficient) <= kDropTol;
  });
  terms_ = std::move(merged);
}

OperatorExpression OperatorExpression::adjoint() const {
  std::vector<OperatorTerm> out = terms_;
  for (auto& t : out) t.coefficient = std::conj(t.coefficient);
  return OperatorExpression(n_sites_, std::move(out));
}

bool OperatorExpression::is_hermitian(double tol) const {
  // Pauli strings are self-adjoint, so Hermiticity means real coefficients.
  for (const auto& t : terms_)
    if (std::abs(t.coefficient.imag()) > tol) return false;
  return true;
}

OperatorExpression& OperatorExpression::operator+=(
    const OperatorExpression& other) {
  if (terms_.empty() && n_sites_ == 0) {
    *this = other;
    return *this;
  }
  if (other.n_sites_ != n_sites_)
    throw std::invalid_argument("adding expressions with mismatched n_sites");
  std::vector<OperatorTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  *this = OperatorExpression(n_sites_, std::move(all));
  return *this;
}

OperatorExpression& OperatorExpression::operator*=(cplx scale) {
  std::vector<OperatorTerm> out = terms_;
  for (auto& t : out) t.coefficient *= scale;
  *this = OperatorExpression(n_sites_, std::move(out));
  return *this;
}

OperatorExpression operator*(const OperatorExpression& a,
                             const OperatorExpression& b) {
  if (a.n_sites_ != b.n_sites_)
    throw std::invalid_argument(
        "multiplying expressions with mismatched n_sites");
  std::vector<OperatorTerm> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      OperatorTerm t;
      t.coefficient = ta.coefficient * tb.coefficient;
      auto ia = ta.factors.begin();
      auto ib = tb.factors.begin();
      while (ia != ta.factors.end() || ib != tb.factors.end()) {
        if (ib == tb.factors.end() ||
            (ia != ta.factors.end() && ia->site < ib->site)) {
          t.factors.push_back(*ia++);
        } else if (ia == ta.factors.end() || ib->site < ia->site) {
          t.factors.push_back(*ib++);
        } else {
          PauliProduct p = multiply_site_ops(ia->op, ib->op);
          t.coefficient *= p.phase;
          if (p.op != SiteOp::I) t.factors.push_back({ia->site, p.op});
          ++ia;
          ++ib;
        }
      }
      out.push_back(std::move(t));
    }
  }
  return OperatorExpression(a.n_sites_, std::move(out));
}

OperatorExpression canonicalize(std::vector<OperatorTerm> terms, int n_sites) {
  return OperatorExpression(n_sites, std::move(terms));
}

}  // namespace qcrit
