// Acceptance harness: runs the ten acceptance criteria and prints one
// PASS/FAIL line per criterion.  Usage:
//   acceptance <eql-binary> <fixture-dir> <golden-dir> [work-dir]
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "eql/ainfinity.hpp"
#include "eql/fixtures.hpp"
#include "eql/moduli.hpp"
#include "eql/ncdef.hpp"
#include "eql/potential.hpp"
#include "eql/trees.hpp"

using namespace eql;
using boost::multiprecision::cpp_int;
using F2 = Fp<2>;

namespace {

std::string g_eql, g_fixtures, g_golden, g_work;
int g_failures = 0;

void report(int k, const std::string& name, bool pass) {
  std::cout << "[" << (k < 10 ? " " : "") << k << "] " << (pass ? "PASS" : "FAIL") << "  " << name
            << std::endl;
  if (!pass) ++g_failures;
}

template <class F>
bool guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    std::cout << "      error: " << e.what() << "\n";
    return false;
  }
}

bool run_cli(const std::string& args) {
  std::string cmd = g_eql + " " + args + " 2>/dev/null";
  return std::system(cmd.c_str()) == 0;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

bool same_bytes(const std::string& a, const std::string& b) {
  std::string x = slurp(a), y = slurp(b);
  return !x.empty() && x == y;
}

// ---- criterion bodies -------------------------------------------------

bool catalan_counts() {
  auto fact = [](int n) {
    cpp_int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  cpp_int bound = 1;
  for (int n = 1; n <= 10; ++n) {
    cpp_int count = enumerate_trees(n).size();
    if (count != fact(2 * n - 2) / (fact(n - 1) * fact(n))) return false;
    if (n >= 2 && count >= bound) return false;
    bound *= 4;
  }
  return true;
}

bool transfer_soundness() {
  auto one = [](const DgAlgebra<Rat>& A) {
    auto hodge = compute_hodge(A);
    AInfinityStructure<Rat> ainf;
    TransferData<Rat> I;
    transfer_both(hodge, 6, ainf, I);
    return check_stasheff(ainf).pass && check_morphism(hodge, ainf, I, 5).pass;
  };
  auto e3 = exterior_algebra<Rat>(3);
  auto mz = massey_algebra<Rat>();
  auto rd = random_dga<Rat>(41);
  return one(e3) && one(mz) && one(rd);
}

bool formality() {
  auto A = exterior_algebra<Rat>(3);
  auto hodge = compute_hodge(A);
  AInfinityStructure<Rat> ainf;
  TransferData<Rat> I;
  transfer_both(hodge, 6, ainf, I);
  if (ainf.dim() != A.dim()) return false;
  for (int n = 3; n <= ainf.max_arity; ++n)
    if (!ainf.bar(n).is_zero()) return false;
  for (int n = 2; n <= I.max_arity; ++n)
    if (!I.I(n).is_zero()) return false;
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      auto m2 = ainf.m_column(2, {static_cast<int>(i), static_cast<int>(j)});
      auto prod = A.product_of_basis(i, j);
      for (std::size_t k = 0; k < A.dim(); ++k)
        if ((m2[k] == Rat(0)) != (prod[k] == Rat(0))) return false;
    }
  return true;
}

// shared CY3 data for criteria 4-6
struct Cy3 {
  DgAlgebra<Rat> A = exterior_algebra<Rat>(3);
  HodgeData<Rat> hodge;
  AInfinityStructure<Rat> ainf;
  TransferData<Rat> I;
  CyclicPairing<Rat> pairing;
  ExtQuiverPresentation<Rat>* pres = nullptr;

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

bool cy3_chain() {
  auto& c = cy3();
  if (!check_cyclic(c.ainf, c.pairing, 5).pass) return false;
  auto W = build_potential(c.ainf, c.pairing, *c.pres, 6);
  if (W.series().is_zero()) return false;
  for (const auto& [w, coeff] : W.series().coefficients())
    if (w.length() != 3) return false;
  for (const auto& e : c.pres->quiver().edges()) {
    auto dW = cyclic_derivative(W, e.id);  // commutator of the other two loops
    if (dW.coefficients().size() != 2) return false;
    std::vector<std::pair<PathWord, Rat>> t(dW.coefficients().begin(), dW.coefficients().end());
    if (t[0].second != -t[1].second) return false;
    if (t[0].first.edges[0] != t[1].first.edges[1]) return false;
  }
  return verify_jacobian_identity(c.ainf, c.pairing, *c.pres, 5).pass;
}

bool crit_equals_mc_sampled() {
  auto& c = cy3();
  auto W = build_potential(c.ainf, c.pairing, *c.pres, 6);
  auto reln = relations_from_products(c.ainf, *c.pres, &c.pairing, 5);
  const Quiver* q = c.pres->quiver_ptr();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto rep = random_rep(q, 1 + static_cast<int>(rng() % 3), rng);
    if (!crit_equals_mc(W, reln, rep).pass) return false;
    bool kz = mc_defect_is_zero(mc_defect(c.ainf, *c.pres, rep, 5));
    bool gz = true;
    for (const auto& e : q->edges())
      if (!trace_gradient_entrywise(W, rep, e.id, 5).is_zero()) gz = false;
    if (kz != gz) return false;
  }
  // finite differences at step 1/2^10 (cubic W: two steps pin the
  // gradient and the constant second-order error term exactly)
  Rat h1(1, 1 << 10), h2(1, 1 << 11);
  for (int pt = 0; pt < 20; ++pt) {
    auto rep = random_rep(q, 2, rng);
    int eid = q->edges()[rng() % q->edges().size()].id;
    int i = static_cast<int>(rng() % 2), j = static_cast<int>(rng() % 2);
    auto grad = trace_gradient_entrywise(W, rep, eid, 5);
    auto central = [&](const Rat& h) {
      auto mp = rep.matrices();
      mp.at(eid)(i, j) += h;
      Representation<Rat> up(q, rep.dim(), std::move(mp));
      auto mm = rep.matrices();
      mm.at(eid)(i, j) -= h;
      Representation<Rat> dn(q, rep.dim(), std::move(mm));
      return (trace_potential(W, up) - trace_potential(W, dn)) / (2 * h);
    };
    if ((central(h1) - grad(i, j)) / (h1 * h1) != (central(h2) - grad(i, j)) / (h2 * h2))
      return false;
  }
  return true;
}

bool gauge_invariance() {
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
    if (trace_potential(W, moved) != trw) return false;
    if (satisfies_relations(moved, reln) != sat) return false;
    if (is_nilpotent(moved) != nil) return false;
    if (is_semistable(Z, moved).semistable != ss) return false;
  }
  return true;
}

bool nilpotent_structure() {
  auto run = [](const Quiver& q, const std::vector<std::map<int, int>>& dims) {
    for (const auto& dm : dims) {
      DimVector dv(q, dm);
      for (const auto& rep : enumerate_representations<F2>(&q, dv)) {
        bool nil = is_nilpotent(rep);
        auto jh = semisimplify(rep);
        bool vertex_only = true;
        std::map<int, int> mult;
        for (const auto& [f, m] : jh) {
          if (f.dim().total() != 1) {
            vertex_only = false;
            break;
          }
          int v = -1;
          for (int w : q.vertices())
            if (f.dim().at(w) == 1) v = w;
          for (int e : q.edges_between(v, v))
            if (f.matrix(e)(0, 0) != F2(0)) vertex_only = false;
          mult[v] += m;
        }
        if (nil != vertex_only) return false;
        if (nil)
          for (int v : q.vertices())
            if (mult[v] != dv.at(v)) return false;
      }
    }
    return true;
  };
  Quiver loop({1}, {{0, 1, 1}});
  Quiver a2({1, 2}, {{0, 1, 2}});
  return run(loop, {{{1, 1}}, {{1, 2}}, {{1, 3}}, {{1, 4}}}) &&
         run(a2, {{{1, 1}, {2, 1}}, {{1, 2}, {2, 2}}, {{1, 3}, {2, 1}}, {{1, 1}, {2, 3}}});
}

bool wallcross_golden() {
  bool ok = true;
  for (const std::string fx : {"a2_wallcross", "a2_wall_refine"})
    for (const std::string fld : {"F2", "F3"}) {
      std::string out = g_work + "/" + fx + "." + fld + ".json";
      run_cli("moduli --input " + g_fixtures + "/" + fx + ".json --order 3 --field " + fld +
              " --out " + out);
      if (!same_bytes(out, g_golden + "/" + fx + "." + fld + ".json")) {
        std::cout << "      golden mismatch: " << fx << " over " << fld << "\n";
        ok = false;
      }
    }
  return ok;
}

bool nc_tower() {
  auto t0 = std::chrono::steady_clock::now();
  struct Fx {
    Quiver q;
    RelationSet<F2> reln;
  };
  std::vector<Fx> fixtures;
  fixtures.push_back({Quiver({1, 2}, {{0, 1, 2}}), {}});
  {
    Fx f{Quiver({1}, {{0, 1, 1}}), {}};
    PathSeries<F2> r(&f.q, 5, std::make_pair(1, 1));
    r.add(PathWord::of({0, 0, 0}), F2(1));
    f.reln.relations.push_back(r);
    f.reln.labels.push_back("e3");
    fixtures.push_back(std::move(f));
  }
  {
    Fx f{Quiver({1}, {{0, 1, 1}, {1, 1, 1}, {2, 1, 1}}), {}};
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        PathSeries<F2> r(&f.q, 5, std::make_pair(1, 1));
        r.add(PathWord::of({a, b}), F2(1));
        r.add(PathWord::of({b, a}), F2(-1));
        f.reln.relations.push_back(r);
        f.reln.labels.push_back("c" + std::to_string(a) + std::to_string(b));
      }
    fixtures.push_back(std::move(f));
  }
  for (const auto& f : fixtures) {
    QuotientAlgebra<F2> A(&f.q, f.reln, 4);
    auto tower = build_tower(A, 4);
    if (!hull_compare(&f.q, f.reln, tower, 3).pass) return false;
    // Hom(E_i, S_j) stays delta_ij along the tower
    for (int n = 0; n <= 3; ++n)
      for (std::size_t i = 0; i < tower.levels[n].Ei.size(); ++i)
        for (std::size_t j = 0; j < tower.levels[n].Ei.size(); ++j) {
          auto Sj = vertex_simple_module(A.algebra(), static_cast<int>(j));
          if (module_hom_space(tower.levels[n].Ei[i], Sj).size() != (i == j ? 1u : 0u))
            return false;
        }
    QuotientAlgebra<F2> A3(&f.q, f.reln, 3);
    auto tower3 = build_tower(A3, 3);
    if (!check_equivalence(A3, tower3, 2, 3).pass) return false;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 120) {
    std::cout << "      over budget: " << secs << "s\n";
    return false;
  }
  return true;
}

bool determinism() {
  struct Run {
    std::string name, args;
  };
  std::vector<Run> runs = {
      {"transfer", "transfer --input " + g_fixtures + "/massey.json --order 4 --field rationals"},
      {"potential",
       "potential --input " + g_fixtures + "/exterior3.json --order 3 --field rationals"},
      {"moduli",
       "moduli --input " + g_fixtures + "/moduli_crit.json --order 3 --field F3 --seed 99"},
      {"ncdef", "ncdef --input " + g_fixtures + "/ncdef_loop.json --order 2 --field F2"},
  };
  for (const auto& r : runs) {
    std::string o1 = g_work + "/det_" + r.name + "_1.json";
    std::string o2 = g_work + "/det_" + r.name + "_2.json";
    if (!run_cli(r.args + " --out " + o1)) return false;
    if (!run_cli(r.args + " --out " + o2)) return false;
    if (!same_bytes(o1, o2)) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: acceptance <eql-binary> <fixture-dir> <golden-dir> [work-dir]\n";
    return 64;
  }
  g_eql = argv[1];
  g_fixtures = argv[2];
  g_golden = argv[3];
  g_work = argc > 4 ? argv[4] : ".";

  report(1, "tree combinatorics: |O(n)| = (2n-2)!/((n-1)! n!) and < 4^(n-1)",
         guarded(catalan_counts));
  report(2, "transfer soundness: Stasheff to arity 6, morphism to arity 5, 3 fixtures",
         guarded(transfer_soundness));
  report(3, "formality: d = 0 gives m2 = product, m_n = 0 (n >= 3), I_n = 0 (n >= 2)",
         guarded(formality));
  report(4, "CY3 chain: cyclic pairing, cubic W, commutator derivatives, I = dW",
         guarded(cy3_chain));
  report(5, "Crit(tr W) = MC on 100 random reps, finite differences at 1/2^10",
         guarded(crit_equals_mc_sampled));
  report(6, "gauge invariance of tr W, relations, nilpotency, semistability (50 gauges)",
         guarded(gauge_invariance));
  report(7, "over F2, total dim <= 4: nilpotent iff JH factors are the vertex simples",
         guarded(nilpotent_structure));
  report(8, "A2 wall-crossing matches golden files over F2 and F3", guarded(wallcross_golden));
  report(9, "NC tower: hull for n <= 3, Hom/Ext table, equivalence at dim_bound 3, < 2 min",
         guarded(nc_tower));
  report(10, "determinism: every CLI command byte-reproducible with a fixed seed",
         guarded(determinism));
  return g_failures;
}
