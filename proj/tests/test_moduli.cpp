#include <catch2/catch_amalgamated.hpp>

#include "eql/moduli.hpp"

using namespace eql;
using F2 = Fp<2>;
using F3 = Fp<3>;

namespace {

GaussRat z(int re, int im = 1) { return GaussRat(Rat(re), Rat(im)); }

const Quiver& a2() {
  static Quiver q({1, 2}, {{0, 1, 2}});
  return q;
}

const Quiver& loop() {
  static Quiver q({1}, {{0, 1, 1}});
  return q;
}

}  // namespace

TEST_CASE("stability parameters demand positive imaginary parts") {
  REQUIRE_THROWS_AS(StabilityParameter({{1, GaussRat(Rat(1), Rat(0))}}), std::invalid_argument);
  REQUIRE_NOTHROW(StabilityParameter({{1, z(-7)}}));
}

TEST_CASE("slope is -Re Z / Im Z on dimension vectors") {
  StabilityParameter Z({{1, z(0)}, {2, z(5, 2)}});
  REQUIRE(slope(Z, DimVector(a2(), {{1, 1}, {2, 0}})) == Rat(0));
  REQUIRE(slope(Z, DimVector(a2(), {{1, 0}, {2, 1}})) == Rat(-5, 2));
  REQUIRE(slope(Z, DimVector(a2(), {{1, 1}, {2, 1}})) == Rat(-5, 3));
}

TEST_CASE("nilpotency detects long path vanishing, not coefficient cancellation") {
  Matrix<Rat> u(1, 1);
  Representation<Rat> r0(&loop(), DimVector(loop(), {{1, 1}}), {{0, u}});
  REQUIRE(is_nilpotent(r0));
  u(0, 0) = 1;
  Representation<Rat> r1(&loop(), DimVector(loop(), {{1, 1}}), {{0, u}});
  REQUIRE(!is_nilpotent(r1));

  // two loops acting by 1 and -1: sums cancel but paths do not vanish
  Quiver loops2({1}, {{0, 1, 1}, {1, 1, 1}});
  Matrix<Rat> a(1, 1), b(1, 1);
  a(0, 0) = 1;
  b(0, 0) = -1;
  Representation<Rat> r2(&loops2, DimVector(loops2, {{1, 1}}), {{0, a}, {1, b}});
  REQUIRE(!is_nilpotent(r2));
}

TEST_CASE("A2 semistability flips across the wall and reports the destabilizer") {
  Matrix<F2> u(1, 1);
  u(0, 0) = F2(1);
  Representation<F2> rep(&a2(), DimVector(a2(), {{1, 1}, {2, 1}}), {{0, u}});
  StabilityParameter Zp({{1, z(0)}, {2, z(1)}});
  StabilityParameter Zm({{1, z(0)}, {2, z(-1)}});
  REQUIRE(is_semistable(Zp, rep).semistable);
  auto v = is_semistable(Zm, rep);
  REQUIRE(!v.semistable);
  REQUIRE(v.destabilizer);
  auto sd = sub_dim(a2(), *v.destabilizer);
  REQUIRE(sd.at(1) == 0);
  REQUIRE(sd.at(2) == 1);
}

TEST_CASE("semisimplification returns Jordan-Hoelder factors with multiplicity") {
  Matrix<F2> u = Matrix<F2>::identity(2);
  Representation<F2> rep(&loop(), DimVector(loop(), {{1, 2}}), {{0, u}});
  auto ss = semisimplify(rep);
  REQUIRE(ss.size() == 1);
  REQUIRE(ss[0].second == 2);
  REQUIRE(ss[0].first.dim().total() == 1);
  REQUIRE(ss[0].first.matrix(0)(0, 0) == F2(1));

  Matrix<F2> v(1, 1);
  v(0, 0) = F2(1);
  Representation<F2> ind(&a2(), DimVector(a2(), {{1, 1}, {2, 1}}), {{0, v}});
  auto jh = semisimplify(ind);
  REQUIRE(jh.size() == 2);
  REQUIRE(jh[0].second == 1);
  REQUIRE(jh[1].second == 1);
}

TEST_CASE("over F2, total dim <= 4: nilpotent iff all JH factors are vertex simples") {
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
        REQUIRE(nil == vertex_only);
        if (nil)  // semisimplification is the sum of vertex simples S_v^(m_v)
          for (int v : q.vertices()) REQUIRE(mult[v] == dv.at(v));
      }
    }
  };
  run(loop(), {{{1, 1}}, {{1, 2}}, {{1, 3}}, {{1, 4}}});
  run(a2(), {{{1, 1}, {2, 1}}, {{1, 2}, {2, 2}}, {{1, 3}, {2, 1}}, {{1, 1}, {2, 3}}});
}

TEST_CASE("Jordan-Hoelder multiset is independent of the filtration route") {
  // upper-triangular 3-dim loop rep: three JH routes, one multiset
  Matrix<F3> u(3, 3);
  u(0, 1) = F3(1);
  u(1, 2) = F3(2);
  Representation<F3> rep(&loop(), DimVector(loop(), {{1, 3}}), {{0, u}});
  auto jh = semisimplify(rep);
  int total = 0;
  for (const auto& [f, m] : jh) {
    REQUIRE(f.dim().total() == 1);
    REQUIRE(f.matrix(0)(0, 0) == F3(0));
    total += m;
  }
  REQUIRE(total == 3);

  // a gauge moves the filtration but not the factors
  Matrix<F3> g(3, 3);
  g(0, 0) = F3(1); g(0, 2) = F3(2); g(1, 1) = F3(2); g(2, 2) = F3(1); g(1, 0) = F3(1);
  auto moved = gauge_act<F3>({{1, g}}, rep);
  auto jh2 = semisimplify(moved);
  int total2 = 0;
  for (const auto& [f, m] : jh2) {
    REQUIRE(f.dim().total() == 1);
    REQUIRE(f.matrix(0)(0, 0) == F3(0));
    total2 += m;
  }
  REQUIRE(total2 == 3);
}

TEST_CASE("s-equivalence classes of the A2 quiver at dimension (1,1)") {
  RelationSet<F2> none;
  DimVector d11(a2(), {{1, 1}, {2, 1}});
  StabilityParameter Zeq({{1, z(0)}, {2, z(0)}});
  auto on_wall = s_equivalence_classes<F2>(&a2(), none, d11, Zeq);
  REQUIRE(on_wall.semistable.size() == 2);  // u = 0 and u = 1
  REQUIRE(on_wall.classes.size() == 1);     // same JH multiset {S1, S2}

  StabilityParameter Zp({{1, z(0)}, {2, z(1)}});
  auto off_wall = s_equivalence_classes<F2>(&a2(), none, d11, Zp);
  REQUIRE(off_wall.semistable.size() == 1);  // only the indecomposable
  REQUIRE(off_wall.classes.size() == 1);
}

TEST_CASE("relations cut the semistable locus") {
  // loop with u^2 = 0 at dimension 1 forces u = 0
  RelationSet<F2> sq;
  PathSeries<F2> r(&loop(), 3, std::make_pair(1, 1));
  r.add(PathWord::of({0, 0}), F2(1));
  sq.relations.push_back(r);
  sq.labels.push_back("u2");
  StabilityParameter Z({{1, z(0)}});
  auto with = s_equivalence_classes<F2>(&loop(), sq, DimVector(loop(), {{1, 1}}), Z);
  RelationSet<F2> none;
  auto without = s_equivalence_classes<F2>(&loop(), none, DimVector(loop(), {{1, 1}}), Z);
  REQUIRE(with.semistable.size() == 1);
  REQUIRE(without.semistable.size() == 2);
}

TEMPLATE_TEST_CASE("A2 wall-crossing fibering matches on both sides", "", F2, F3) {
  using F = TestType;
  RelationSet<F> none;
  DimVector d11(a2(), {{1, 1}, {2, 1}});
  StabilityParameter Zeq({{1, z(0)}, {2, z(0)}});
  StabilityParameter Zp({{1, z(0)}, {2, z(1)}});
  StabilityParameter Zm({{1, z(0)}, {2, z(-1)}});

  // refinements from the wall: sigma-plus-semistables fiber over the
  // single on-wall class
  auto plus = wallcross_compare<F>(&a2(), none, d11, Zeq, Zp);
  REQUIRE(!plus.wall_detected);
  REQUIRE(plus.sigma_classes == 1);
  REQUIRE(plus.sigma_plus_classes == 1);
  REQUIRE(plus.fibers.size() == 1);
  REQUIRE(plus.fibers[0].size() == 1);

  auto minus = wallcross_compare<F>(&a2(), none, d11, Zeq, Zm);
  REQUIRE(!minus.wall_detected);
  REQUIRE(minus.sigma_classes == 1);
  REQUIRE(minus.sigma_plus_classes == 0);

  // a straight crossing is flagged with the wall equation
  auto across = wallcross_compare<F>(&a2(), none, d11, Zm, Zp);
  REQUIRE(across.wall_detected);
  REQUIRE(across.offending_subdim.at(2) == 1);
  REQUIRE(across.offending_subdim.at(1) == 0);
}

TEST_CASE("representation enumeration refuses oversized requests") {
  Quiver q({1}, {{0, 1, 1}, {1, 1, 1}, {2, 1, 1}});
  REQUIRE_THROWS_WITH(enumerate_representations<F3>(&q, DimVector(q, {{1, 5}}), 1u << 10),
                      Catch::Matchers::ContainsSubstring("infeasible"));
}
