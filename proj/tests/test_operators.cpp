#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qcrit/eigensolver.hpp>
#include <qcrit/jordan_wigner.hpp>
#include <qcrit/models.hpp>
#include <qcrit/state.hpp>
#include <random>

using namespace qcrit;

namespace {

OperatorTerm term(cplx c, std::vector<PauliFactor> f) {
  return OperatorTerm{c, std::move(f)};
}

QuantumState basis_state(SectorPtr sector, std::uint64_t bits) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(sector->size());
  v[sector->index_of(bits)] = 1.0;
  return QuantumState(sector, v);
}

double max_abs_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("canonicalize merges like terms") {
  auto e = canonicalize({term(1.0, {{0, SiteOp::X}}), term(2.0, {{0, SiteOp::X}})}, 2);
  REQUIRE(e.terms().size() == 1);
  CHECK(e.terms()[0].coefficient == cplx(3.0));
  CHECK(e.terms()[0].factors == std::vector<PauliFactor>{{0, SiteOp::X}});
}

TEST_CASE("canonicalize cancels opposite terms") {
  auto e = canonicalize({term(1.0, {{0, SiteOp::X}, {1, SiteOp::Z}}),
                         term(-1.0, {{0, SiteOp::X}, {1, SiteOp::Z}})},
                        2);
  CHECK(e.empty());
}

TEST_CASE("XXZ-style term list for 3 sites canonicalizes to 9 terms") {
  // 3 cyclic bonds x 3 couplings, written with unsorted factor order
  std::vector<OperatorTerm> terms;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    for (SiteOp op : {SiteOp::X, SiteOp::Y, SiteOp::Z})
      terms.push_back(term(-0.5, {{j, op}, {i, op}}));
  }
  auto e = canonicalize(std::move(terms), 3);
  CHECK(e.terms().size() == 9);
  for (const auto& t : e.terms()) {
    REQUIRE(t.factors.size() == 2);
    CHECK(t.factors[0].site < t.factors[1].site);
  }
}

TEST_CASE("canonicalize rejects out-of-range sites and non-finite weights") {
  CHECK_THROWS(canonicalize({term(1.0, {{3, SiteOp::X}})}, 3));
  CHECK_THROWS(canonicalize(
      {term(std::numeric_limits<double>::infinity(), {{0, SiteOp::X}})}, 1));
}

TEST_CASE("canonicalize is idempotent") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_int_distribution<int> site(0, 4), opd(0, 3);
  std::vector<OperatorTerm> terms;
  for (int t = 0; t < 40; ++t) {
    std::vector<PauliFactor> f;
    int s = site(rng);
    for (int k = 0; k < 3 && s < 5; ++k, s += 1 + site(rng) % 2)
      f.push_back({s, static_cast<SiteOp>(opd(rng))});
    terms.push_back(term(coeff(rng), f));
  }
  auto once = canonicalize(terms, 5);
  auto twice = canonicalize(
      std::vector<OperatorTerm>(once.terms().begin(), once.terms().end()), 5);
  REQUIRE(once.terms().size() == twice.terms().size());
  for (std::size_t i = 0; i < once.terms().size(); ++i) {
    CHECK(once.terms()[i].factors == twice.terms()[i].factors);
    CHECK(std::abs(once.terms()[i].coefficient - twice.terms()[i].coefficient) <
          1e-15);
  }
}

TEST_CASE("Pauli action on basis states") {
  auto full1 = std::make_shared<BasisSector>(BasisSector::full(1));
  auto full2 = std::make_shared<BasisSector>(BasisSector::full(2));

  // X0 |0> = |1>
  auto x0 = canonicalize({term(1.0, {{0, SiteOp::X}})}, 1);
  Eigen::VectorXcd img = apply(x0, basis_state(full1, 0));
  CHECK(std::abs(img[0]) < 1e-15);
  CHECK(std::abs(img[1] - cplx(1.0)) < 1e-15);

  // Z0 Z1 |01> = -|01>  (bit 0 set = site 0 down; encoding 0b01)
  auto zz = canonicalize({term(1.0, {{0, SiteOp::Z}, {1, SiteOp::Z}})}, 2);
  img = apply(zz, basis_state(full2, 1));
  CHECK(std::abs(img[1] + cplx(1.0)) < 1e-15);

  // Y convention: Y|0> = i|1>, Y|1> = -i|0>
  auto y0 = canonicalize({term(1.0, {{0, SiteOp::Y}})}, 1);
  img = apply(y0, basis_state(full1, 0));
  CHECK(std::abs(img[1] - cplx(0.0, 1.0)) < 1e-15);
  img = apply(y0, basis_state(full1, 1));
  CHECK(std::abs(img[0] - cplx(0.0, -1.0)) < 1e-15);
}

TEST_CASE("apply is linear and matches the dense matrix for TFIM N=6") {
  const auto spec = build_tfim(6, 1.0);
  const OperatorExpression h = std::get<OperatorExpression>(total_operator(spec));
  auto sector = spec.sector;
  Eigen::MatrixXcd dense = to_dense(h, *sector);

  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(64);
  for (int i = 0; i < 64; ++i) v[i] = cplx(g(rng), g(rng));
  v.normalize();
  QuantumState psi(sector, v);
  Eigen::VectorXcd lhs = apply(h, psi);
  Eigen::VectorXcd rhs = dense * v;
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("apply matches dense construction for all models at small size") {
  auto check = [](const HamiltonianSpec& spec) {
    const OperatorExpression h = std::get<OperatorExpression>(total_operator(spec));
    auto sector = spec.sector;
    const std::size_t dim = sector->size();
    Eigen::MatrixXcd dense = to_dense(h, *sector);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = cplx(g(rng), g(rng));
    v.normalize();
    Eigen::VectorXcd lhs = apply(h, QuantumState(sector, v));
    CHECK((lhs - dense * v).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(max_abs_diff(dense, dense.adjoint()) < 1e-12);
  };
  check(build_tfim(7, 0.8));
  check(build_xxz(8, 0.5));
  check(build_hubbard(4, 2.0));
}

TEST_CASE("expectation basics") {
  auto full1 = std::make_shared<BasisSector>(BasisSector::full(1));
  auto z0 = canonicalize({term(1.0, {{0, SiteOp::Z}})}, 1);
  CHECK(expectation(z0, basis_state(full1, 0)) == doctest::Approx(1.0));

  auto full2 = std::make_shared<BasisSector>(BasisSector::full(2));
  Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  auto xx = canonicalize({term(1.0, {{0, SiteOp::X}, {1, SiteOp::X}})}, 2);
  CHECK(expectation(xx, QuantumState(full2, bell)) == doctest::Approx(1.0));

  auto skew = canonicalize({term(cplx(0.0, 1.0), {{0, SiteOp::X}})}, 1);
  CHECK_THROWS(expectation(skew, basis_state(full1, 0)));
}

TEST_CASE("XXZ bond correlator obeys the Hellmann-Feynman relation") {
  // <sz_0 sz_1> = -2 d eps / d Delta for the cyclic chain (N equal bonds,
  // A = -(1/2) sum sz sz)
  const int n = 8;
  const double delta = 0.5, h = 1e-4;
  auto solve = [&](double d) { return ground_state(build_xxz(n, d)); };
  const auto lo = solve(delta - h), mid = solve(delta), hi = solve(delta + h);
  const double deps = (hi.energy_per_site - lo.energy_per_site) / (2 * h);
  auto zz = canonicalize({term(1.0, {{0, SiteOp::Z}, {1, SiteOp::Z}})}, n);
  CHECK(expectation(zz, mid.state) == doctest::Approx(-2.0 * deps).epsilon(1e-5));
}

TEST_CASE("adjoint commutes with canonicalization") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> re(-1.0, 1.0);
  std::uniform_int_distribution<int> opd(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<OperatorTerm> terms;
    for (int t = 0; t < 12; ++t) {
      std::vector<PauliFactor> f;
      for (int s = 0; s < 4; ++s)
        if (re(rng) > 0.0) f.push_back({s, static_cast<SiteOp>(opd(rng))});
      terms.push_back(term(cplx(re(rng), re(rng)), f));
    }
    auto a = canonicalize(terms, 4).adjoint();
    std::vector<OperatorTerm> conj;
    for (auto t : terms) {
      // adjoint of a Pauli string is the string itself with conjugate weight
      t.coefficient = std::conj(t.coefficient);
      conj.push_back(std::move(t));
    }
    auto b = canonicalize(std::move(conj), 4);
    REQUIRE(a.terms().size() == b.terms().size());
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
      CHECK(a.terms()[i].factors == b.terms()[i].factors);
      CHECK(std::abs(a.terms()[i].coefficient - b.terms()[i].coefficient) <
            1e-14);
    }
  }
}

TEST_CASE("expr + adjoint(expr) is Hermitian") {
  auto e = canonicalize({term(cplx(0.3, 0.7), {{0, SiteOp::X}, {2, SiteOp::Y}}),
                         term(cplx(-1.2, 0.1), {{1, SiteOp::Z}})},
                        3);
  CHECK_FALSE(e.is_hermitian(1e-12));
  auto h = e + e.adjoint();
  CHECK(h.is_hermitian(1e-12));
  auto sector = BasisSector::full(3);
  Eigen::MatrixXcd m = to_dense(h, sector);
  CHECK(max_abs_diff(m, m.adjoint()) < 1e-13);
}

TEST_CASE("Jordan-Wigner images of number operators") {
  FermionTerm n0{1.0, {{0, FermiOp::Number}}};
  auto e = jordan_wigner(n0, 2);
  // (I - Z0)/2
  REQUIRE(e.terms().size() == 2);
  auto expect = canonicalize(
      {term(0.5, {}), term(-0.5, {{0, SiteOp::Z}})}, 2);
  CHECK(max_abs_diff(to_dense(e, BasisSector::full(2)),
                     to_dense(expect, BasisSector::full(2))) < 1e-15);

  FermionTerm n0n1{1.0, {{0, FermiOp::Number}, {1, FermiOp::Number}}};
  auto e2 = jordan_wigner(n0n1, 2);
  auto expect2 = canonicalize({term(0.25, {}),
                               term(-0.25, {{0, SiteOp::Z}}),
                               term(-0.25, {{1, SiteOp::Z}}),
                               term(0.25, {{0, SiteOp::Z}, {1, SiteOp::Z}})},
                              2);
  CHECK(max_abs_diff(to_dense(e2, BasisSector::full(2)),
                     to_dense(expect2, BasisSector::full(2))) < 1e-15);
}

TEST_CASE("Jordan-Wigner hopping carries the Z string") {
  std::vector<FermionTerm> hop{
      {1.0, {{0, FermiOp::Create}, {2, FermiOp::Annihilate}}},
      {1.0, {{2, FermiOp::Create}, {0, FermiOp::Annihilate}}}};
  auto e = jordan_wigner(hop, 3);
  auto expect = canonicalize(
      {term(0.5, {{0, SiteOp::X}, {1, SiteOp::Z}, {2, SiteOp::X}}),
       term(0.5, {{0, SiteOp::Y}, {1, SiteOp::Z}, {2, SiteOp::Y}})},
      3);
  CHECK(max_abs_diff(to_dense(e, BasisSector::full(3)),
                     to_dense(expect, BasisSector::full(3))) < 1e-14);
  CHECK(e.is_hermitian(1e-12));
}

TEST_CASE("Jordan-Wigner rejects non-normal-ordered products") {
  CHECK_THROWS(jordan_wigner(
      FermionTerm{1.0, {{0, FermiOp::Annihilate}, {1, FermiOp::Create}}}, 2));
  CHECK_THROWS(jordan_wigner(
      FermionTerm{1.0, {{0, FermiOp::Create}, {0, FermiOp::Create}}}, 2));
}

TEST_CASE("Jordan-Wigner preserves canonical anticommutation") {
  const int modes = 4;
  auto sector = BasisSector::full(modes);
  std::vector<Eigen::MatrixXcd> cs, cds;
  for (int m = 0; m < modes; ++m) {
    FermionTerm create{1.0, {{m, FermiOp::Create}}};
    FermionTerm annihilate{1.0, {{m, FermiOp::Annihilate}}};
    cds.push_back(to_dense(jordan_wigner(create, modes), sector));
    cs.push_back(to_dense(jordan_wigner(annihilate, modes), sector));
  }
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(16, 16);
  for (int i = 0; i < modes; ++i)
    for (int j = 0; j < modes; ++j) {
      Eigen::MatrixXcd anti = cs[i] * cds[j] + cds[j] * cs[i];
      CHECK(max_abs_diff(anti, i == j ? id : (0.0 * id)) < 1e-13);
      Eigen::MatrixXcd anti2 = cs[i] * cs[j] + cs[j] * cs[i];
      CHECK(anti2.cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("sector-violating expressions are rejected") {
  auto sector =
      std::make_shared<BasisSector>(BasisSector::total_sz(4, 2));
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(sector->size());
  v[0] = 1.0;
  QuantumState psi(sector, v);
  auto x0 = canonicalize({term(1.0, {{0, SiteOp::X}})}, 4);
  CHECK_THROWS_AS((void)apply(x0, psi), std::domain_error);
  // XX + YY preserves the sector even though each string alone leaves it
  auto flip = canonicalize({term(1.0, {{0, SiteOp::X}, {1, SiteOp::X}}),
                            term(1.0, {{0, SiteOp::Y}, {1, SiteOp::Y}})},
                           4);
  CHECK_NOTHROW((void)apply(flip, psi));
}
