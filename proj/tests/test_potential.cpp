#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "eql/fixtures.hpp"
#include "eql/moduli.hpp"
#include "eql/potential.hpp"

using namespace eql;

namespace {

// splitting data and cyclic pairing for the exterior algebra on three
// degree-1 generators (top-wedge pairing, d = 0 so H = A)
struct Cy3 {
  DgAlgebra<Rat> A = exterior_algebra<Rat>(3);
  HodgeData<Rat> hodge;
  AInfinityStructure<Rat> ainf;
  TransferData<Rat> I;
  CyclicPairing<Rat> pairing;
  ExtQuiverPresentation<Rat>* pres;

  Cy3() {
    hodge = compute_hodge(A);
    transfer_both(hodge, 6, ainf, I);
    pairing.total_degree = 3;
    pairing.gram = Matrix<Rat>(ainf.dim(), ainf.dim());
    std::size_t top = 0;
    for (std::size_t i = 0; i < ainf.dim(); ++i)
      if (ainf.h_basis[i].degree == 3) top = i;
    for (std::size_t i = 0; i < ainf.dim(); ++i)
      for (std::size_t j = 0; j < ainf.dim(); ++j)
        pairing.gram(i, j) = A.product_of_basis(i, j)[top];
    pres = new ExtQuiverPresentation<Rat>(ainf);
  }
};

Cy3& cy3() {
  static Cy3 c;
  return c;
}

Rat rand_rat(std::mt19937_64& rng) {
  return Rat(static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 3));
}

Representation<Rat> random_rep(const Quiver* q, int m, std::mt19937_64& rng) {
  DimVector dv(*q, {{1, m}});
  std::map<int, Matrix<Rat>> mats;
  for (const auto& e : q->edges()) {
    Matrix<Rat> u(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) u(a, b) = rand_rat(rng);
    mats.emplace(e.id, std::move(u));
  }
  return Representation<Rat>(q, dv, std::move(mats));
}

}  // namespace

TEST_CASE("top-wedge pairing is cyclic") {
  auto& c = cy3();
  REQUIRE(check_cyclic(c.ainf, c.pairing, 5).pass);
}

TEST_CASE("a perturbed pairing fails cyclicity") {
  auto& c = cy3();
  CyclicPairing<Rat> bad = c.pairing;
  for (std::size_t i = 0; i < c.ainf.dim(); ++i)
    for (std::size_t j = 0; j < c.ainf.dim(); ++j)
      if (c.ainf.h_basis[i].degree == 2 && bad.gram(i, j) != Rat(0)) {
        bad.gram(i, j) *= Rat(5);
        REQUIRE(!check_cyclic(c.ainf, bad, 5).pass);
        return;
      }
  FAIL("no degree-2 pairing entry found");
}

TEST_CASE("the potential of the exterior fixture is purely cubic") {
  auto& c = cy3();
  auto W = build_potential(c.ainf, c.pairing, *c.pres, 6);
  REQUIRE(!W.series().is_zero());
  for (const auto& [w, coeff] : W.series().coefficients()) REQUIRE(w.length() == 3);
}

TEST_CASE("cyclic derivatives of the cubic potential are the commutators") {
  auto& c = cy3();
  auto W = build_potential(c.ainf, c.pairing, *c.pres, 6);
  const Quiver& q = c.pres->quiver();
  REQUIRE(q.edges().size() == 3);
  for (const auto& e : q.edges()) {
    auto dW = cyclic_derivative(W, e.id);
    // each derivative is c.(ab - ba) for the two other loops
    REQUIRE(dW.coefficients().size() == 2);
    std::vector<std::pair<PathWord, Rat>> terms(dW.coefficients().begin(),
                                                dW.coefficients().end());
    REQUIRE(terms[0].first.length() == 2);
    REQUIRE(terms[1].first.length() == 2);
    REQUIRE(terms[0].second == -terms[1].second);
    REQUIRE(terms[0].first.edges[0] == terms[1].first.edges[1]);
    REQUIRE(terms[0].first.edges[1] == terms[1].first.edges[0]);
  }
}

TEST_CASE("transferred relations match the cyclic derivatives word by word") {
  auto& c = cy3();
  REQUIRE(verify_jacobian_identity(c.ainf, c.pairing, *c.pres, 5).pass);
}

TEST_CASE("critical locus of tr W equals the Maurer-Cartan locus on 100 random reps") {
  auto& c = cy3();
  auto W = build_potential(c.ainf, c.pairing, *c.pres, 6);
  auto reln = relations_from_products(c.ainf, *c.pres, &c.pairing, 5);
  const Quiver* q = c.pres->quiver_ptr();
  std::mt19937_64 rng(11);
  int zero_count = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto rep = random_rep(q, 1 + static_cast<int>(rng() % 3), rng);
    auto cr = crit_equals_mc(W, reln, rep);
    INFO(cr.detail);
    REQUIRE(cr.pass);
    auto kappa = mc_defect(c.ainf, *c.pres, rep, 5);
    bool kz = mc_defect_is_zero(kappa);
    bool gz = true;
    for (const auto& e : q->edges())
      if (!trace_gradient_entrywise(W, rep, e.id, 5).is_zero()) gz = false;
    REQUIRE(kz == gz);
    if (kz) ++zero_count;
  }
  // commuting tuples: gradient and kappa both vanish
  DimVector dv(*q, {{1, 2}});
  std::map<int, Matrix<Rat>> mats;
  for (const auto& e : q->edges()) {
    Matrix<Rat> u(2, 2);
    u(0, 0) = Rat(e.id + 1);
    u(1, 1) = Rat(e.id - 5, 2);
    mats.emplace(e.id, std::move(u));
  }
  Representation<Rat> diag(q, dv, std::move(mats));
  REQUIRE(mc_defect_is_zero(mc_defect(c.ainf, *c.pres, diag, 5)));
  for (const auto& e : q->edges())
    REQUIRE(trace_gradient_entrywise(W, diag, e.id, 5).is_zero());
}

TEST_CASE("finite differences of tr W confirm the symbolic gradient") {
  auto& c = cy3();
  auto W = build_potential(c.ainf, c.pairing, *c.pres, 6);
  const Quiver* q = c.pres->quiver_ptr();
  std::mt19937_64 rng(23);
  Rat h1(1, 1 << 10), h2(1, 1 << 11);
  for (int pt = 0; pt < 20; ++pt) {
    auto rep = random_rep(q, 2, rng);
    int eid = q->edges()[rng() % q->edges().size()].id;
    int i = static_cast<int>(rng() % 2), j = static_cast<int>(rng() % 2);
    auto grad = trace_gradient_entrywise(W, rep, eid, 5);
    auto shifted = [&](const Rat& h) {
      auto mats = rep.matrices();
      mats.at(eid)(i, j) += h;
      return Representation<Rat>(q, rep.dim(), std::move(mats));
    };
    auto central = [&](const Rat& h) {
      return (trace_potential(W, shifted(h)) - trace_potential(W, shifted(-h))) / (2 * h);
    };
    // W is cubic, so central difference = gradient + h^2 . c with one
    // constant c; two step sizes pin both exactly
    Rat c1 = (central(h1) - grad(i, j)) / (h1 * h1);
    Rat c2 = (central(h2) - grad(i, j)) / (h2 * h2);
    REQUIRE(c1 == c2);
  }
}

TEST_CASE("tr W and the moduli predicates are gauge invariant") {
  auto& c = cy3();
  auto W = build_potential(c.ainf, c.pairing, *c.pres, 6);
  auto reln = relations_from_products(c.ainf, *c.pres, &c.pairing, 5);
  const Quiver* q = c.pres->quiver_ptr();
  StabilityParameter Z({{1, GaussRat(Rat(0), Rat(1))}});
  std::mt19937_64 rng(31);
  auto rep = random_rep(q, 3, rng);
  Rat trw = trace_potential(W, rep);
  bool sat = satisfies_relations(rep, reln);
  bool nil = is_nilpotent(rep);
  bool ss = is_semistable(Z, rep).semistable;
  for (int t = 0; t < 50; ++t) {
    Matrix<Rat> g(3, 3);
    do {
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) g(a, b) = rand_rat(rng);
    } while (!g.inverse());
    auto moved = gauge_act<Rat>({{1, g}}, rep);
    REQUIRE(trace_potential(W, moved) == trw);
    REQUIRE(satisfies_relations(moved, reln) == sat);
    REQUIRE(is_nilpotent(moved) == nil);
    REQUIRE(is_semistable(Z, moved).semistable == ss);
  }
}
