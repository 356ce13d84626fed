#include "qcrit/jordan_wigner.hpp"

#include <stdexcept>

namespace qcrit {

namespace {

// (prod_{j<m} Z_j) (X_m -+ i Y_m)/2 : minus for create, plus for annihilate.
OperatorExpression ladder_image(int mode, bool create, int n_modes) {
  std::vector<PauliFactor> string;
  string.reserve(mode + 1);
  for (int j = 0; j < mode; ++j) string.push_back({j, SiteOp::Z});

  OperatorTerm tx{cplx(0.5, 0.0), string};
  tx.factors.push_back({mode, SiteOp::X});
  OperatorTerm ty{create ? cplx(0.0, -0.5) : cplx(0.0, 0.5), string};
  ty.factors.push_back({mode, SiteOp::Y});
  return OperatorExpression(n_modes, {tx, ty});
}

OperatorExpression number_image(int mode, int n_modes) {
  OperatorTerm ti{cplx(0.5, 0.0), {}};
  OperatorTerm tz{cplx(-0.5, 0.0), {{mode, SiteOp::Z}}};
  return OperatorExpression(n_modes, {ti, tz});
}

void validate_normal_order(const FermionTerm& term, int n_modes) {
  bool seen_annihilate = false;
  std::vector<bool> used_create(n_modes, false), used_ann(n_modes, false);
  for (const auto& f : term.factors) {
    if (f.mode < 0 || f.mode >= n_modes)
      throw std::out_of_range("fermion mode index out of range");
    switch (f.op) {
      case FermiOp::Create:
        if (seen_annihilate)
          throw std::invalid_argument(
              "fermion term is not normal ordered (c-dagger after c)");
        if (used_create[f.mode])
          throw std::invalid_argument("duplicate creation operator in term");
        used_create[f.mode] = true;
        break;
      case FermiOp::Annihilate:
        seen_annihilate = true;
        if (used_ann[f.mode])
          throw std::invalid_argument(
              "duplicate annihilation operator in term");
        used_ann[f.mode] = true;
        break;
      case FermiOp::Number:
        break;
    }
  }
}

}  // namespace

OperatorExpression jordan_wigner(const FermionTerm& term, int n_modes) {
  validate_normal_order(term, n_modes);
  OperatorExpression out(
      n_modes, {OperatorTerm{cplx(term.coefficient, 0.0), {}}});
  for (const auto& f : term.factors) {
    switch (f.op) {
      case FermiOp::Create:
        out = out * ladder_image(f.mode, true, n_modes);
        break;
      case FermiOp::Annihilate:
        out = out * ladder_image(f.mode, false, n_modes);
        break;
      case FermiOp::Number:
        out = out * number_image(f.mode, n_modes);
        break;
    }
  }
  return out;
}

OperatorExpression jordan_wigner(const std::vector<FermionTerm>& terms,
                                 int n_modes) {
  OperatorExpression out(n_modes, {});
  for (const auto& t : terms) out += jordan_wigner(t, n_modes);
  return out;
}

}  // namespace qcrit
