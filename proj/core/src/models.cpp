#include "qcrit/models.hpp"

#include <stdexcept>

#include "qcrit/jordan_wigner.hpp"

namespace qcrit {

namespace {

OperatorExpression pauli(int n, int site, SiteOp op, double coeff = 1.0) {
  return OperatorExpression(n, {{cplx(coeff, 0.0), {{site, op}}}});
}

OperatorExpression pauli_pair(int n, int i, int j, SiteOp op, double coeff) {
  return OperatorExpression(n, {{cplx(coeff, 0.0), {{i, op}, {j, op}}}});
}

}  // namespace

HamiltonianSpec build_tfim(int n, double lambda) {
  if (n < 3) throw std::invalid_argument("TFIM requires N >= 3");
  std::vector<OperatorTerm> bonds;
  for (int i = 0; i < n; ++i)
    bonds.push_back(
        {cplx(-1.0, 0.0), {{std::min(i, (i + 1) % n), SiteOp::X},
                           {std::max(i, (i + 1) % n), SiteOp::X}}});
  HamiltonianSpec spec;
  spec.n_sites = n;
  spec.h0 = OperatorExpression(n, std::move(bonds));

  ControlTerm field;
  field.name = "lambda";
  field.value = lambda;
  OperatorExpression a(n, {});
  for (int i = 0; i < n; ++i) {
    OperatorExpression ai = pauli(n, i, SiteOp::Z, -1.0);
    field.per_site.push_back(ai);
    a += ai;
  }
  field.op = std::move(a);
  spec.controls.push_back(std::move(field));
  spec.sector = std::make_shared<BasisSector>(BasisSector::full(n));
  return spec;
}

HamiltonianSpec build_xxz(int n, double delta) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("XXZ requires even N >= 4");
  OperatorExpression h0(n, {});
  OperatorExpression a(n, {});
  std::vector<OperatorExpression> per_site;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const int lo = std::min(i, j), hi = std::max(i, j);
    h0 += pauli_pair(n, lo, hi, SiteOp::X, -0.5);
    h0 += pauli_pair(n, lo, hi, SiteOp::Y, -0.5);
    OperatorExpression ai = pauli_pair(n, lo, hi, SiteOp::Z, -0.5);
    per_site.push_back(ai);
    a += ai;
  }
  HamiltonianSpec spec;
  spec.n_sites = n;
  spec.h0 = std::move(h0);
  spec.controls.push_back(
      {"Delta", delta, std::move(a), std::move(per_site)});
  spec.sector =
      std::make_shared<BasisSector>(BasisSector::total_sz(n, n / 2));
  return spec;
}

HamiltonianSpec build_hubbard(int l, double u, double t) {
  if (l < 2 || l % 2 != 0)
    throw std::invalid_argument("Hubbard requires even L >= 2");
  const int n_modes = 2 * l;
  // Antiperiodic boundary hopping for even L/2 keeps the U = 0 ground
  // state a non-degenerate closed shell.
  const double boundary_sign = ((l / 2) % 2 == 0) ? -1.0 : 1.0;

  std::vector<FermionTerm> hop;
  for (int i = 0; i < l; ++i) {
    const int ip = (i + 1) % l;
    const double amp = (ip == 0 ? boundary_sign : 1.0) * -t;
    for (int s = 0; s < 2; ++s) {
      const int m = 2 * i + s, mp = 2 * ip + s;
      hop.push_back({amp, {{m, FermiOp::Create}, {mp, FermiOp::Annihilate}}});
      hop.push_back({amp, {{mp, FermiOp::Create}, {m, FermiOp::Annihilate}}});
    }
  }
  HamiltonianSpec spec;
  spec.n_sites = l;
  spec.h0 = jordan_wigner(hop, n_modes);

  ControlTerm interaction;
  interaction.name = "U";
  interaction.value = u;
  OperatorExpression a(n_modes, {});
  for (int i = 0; i < l; ++i) {
    FermionTerm nn{1.0, {{2 * i, FermiOp::Number}, {2 * i + 1, FermiOp::Number}}};
    OperatorExpression ai = jordan_wigner(nn, n_modes);
    interaction.per_site.push_back(ai);
    a += ai;
  }
  interaction.op = std::move(a);
  spec.controls.push_back(std::move(interaction));
  spec.sector = std::make_shared<BasisSector>(
      BasisSector::particle_numbers(n_modes, l / 2, l / 2));
  return spec;
}

HamiltonianSpec build_lipkin(int n, double lambda) {
  if (n < 2) throw std::invalid_argument("Lipkin requires N >= 2");
  HamiltonianSpec spec;
  spec.n_sites = n;
  spec.h0 = CollectiveOperator::squeeze(n);
  spec.controls.push_back(
      {"lambda", lambda, CollectiveOperator::s_z(n), {}});
  spec.sector =
      std::make_shared<BasisSector>(BasisSector::collective_block(n));
  return spec;
}

HamiltonianSpec build_model(const ModelParams& p) {
  return build_model(p, p.coupling);
}

HamiltonianSpec build_model(const ModelParams& p, double coupling) {
  switch (p.model) {
    case ModelId::Tfim:
      return build_tfim(p.n_sites, coupling);
    case ModelId::Xxz:
      return build_xxz(p.n_sites, coupling);
    case ModelId::Hubbard:
      return build_hubbard(p.n_sites, coupling, p.hopping);
    case ModelId::Lipkin:
      return build_lipkin(p.n_sites, coupling);
  }
  throw std::invalid_argument("unknown model");
}

std::string model_name(ModelId id) {
  switch (id) {
    case ModelId::Tfim: return "tfim";
    case ModelId::Xxz: return "xxz";
    case ModelId::Hubbard: return "hubbard";
    case ModelId::Lipkin: return "lipkin";
  }
  return "?";
}

std::string control_name(ModelId id) {
  switch (id) {
    case ModelId::Tfim: return "lambda";
    case ModelId::Xxz: return "Delta";
    case ModelId::Hubbard: return "U";
    case ModelId::Lipkin: return "lambda";
  }
  return "?";
}

ModelId parse_model(const std::string& name) {
  if (name == "tfim") return ModelId::Tfim;
  if (name == "xxz") return ModelId::Xxz;
  if (name == "hubbard") return ModelId::Hubbard;
  if (name == "lipkin") return ModelId::Lipkin;
  throw std::invalid_argument("unknown model id: " + name);
}

}  // namespace qcrit
