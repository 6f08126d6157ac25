#include <catch2/catch_amalgamated.hpp>

#include "eql/field.hpp"
#include "eql/matrix.hpp"

using namespace eql;

TEST_CASE("rational parsing round-trips") {
  REQUIRE(parse_rat("3/4") == Rat(3, 4));
  REQUIRE(parse_rat("-7") == Rat(-7));
  REQUIRE(parse_rat("6/4") == Rat(3, 2));
}

TEST_CASE("Gaussian rationals multiply like complex numbers") {
  GaussRat i(Rat(0), Rat(1));
  REQUIRE(i * i == GaussRat(Rat(-1)));
  GaussRat z(Rat(1), Rat(2)), w(Rat(3), Rat(-1));
  REQUIRE(z * w == GaussRat(Rat(5), Rat(5)));
  REQUIRE(z * (GaussRat(Rat(1)) / z) == GaussRat(Rat(1)));
}

TEMPLATE_TEST_CASE("prime field arithmetic", "", Fp<2>, Fp<5>, Fp<13>) {
  using F = TestType;
  int p = field_traits<F>::characteristic;
  for (int a = 1; a < p; ++a) {
    F x(a);
    REQUIRE((x * (F(1) / x)).v == 1);
    REQUIRE((x + F(p - a)).v == 0);
  }
  REQUIRE(static_cast<int>(field_traits<F>::elements().size()) == p);
}

TEST_CASE("rref exposes rank and pivots") {
  Matrix<Rat> a(3, 4);
  a(0, 0) = 1; a(0, 1) = 2; a(0, 3) = 1;
  a(1, 0) = 2; a(1, 1) = 4; a(1, 3) = 2;   // 2x row 0
  a(2, 2) = 1;
  Matrix<Rat> r = a;
  auto pivots = r.rref();
  REQUIRE(pivots == std::vector<std::size_t>{0, 2});
  REQUIRE(a.rank() == 2);
}

TEMPLATE_TEST_CASE("kernel and image dimensions add up", "", Rat, GaussRat, Fp<3>) {
  using K = TestType;
  Matrix<K> a(3, 5);
  int v = 1;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 5; ++j) a(i, j) = K(((v = (v * 7 + 3) % 11)) - 5);
  auto ker = a.kernel_basis();
  auto img = a.image_basis();
  REQUIRE(ker.size() + img.size() == 5);
  for (const auto& x : ker) {
    auto y = a.apply(x);
    for (const auto& c : y) REQUIRE(c == K(0));
  }
}

TEST_CASE("solve finds exact preimages and detects inconsistency") {
  Matrix<Rat> a(2, 2);
  a(0, 0) = 1; a(0, 1) = 2;
  a(1, 0) = 3; a(1, 1) = 4;
  auto x = a.solve({Rat(5), Rat(11)});
  REQUIRE(x);
  REQUIRE(a.apply(*x) == std::vector<Rat>{Rat(5), Rat(11)});

  Matrix<Rat> s(2, 1);
  s(0, 0) = 1;
  s(1, 0) = 2;
  REQUIRE(!s.solve({Rat(1), Rat(3)}));
}

TEST_CASE("solve_many matches column-by-column solve") {
  Matrix<Rat> a(3, 2);
  a(0, 0) = 1; a(1, 1) = 2; a(2, 0) = 1; a(2, 1) = 1;
  Matrix<Rat> b(3, 2);
  b(0, 0) = 2; b(1, 0) = 4; b(2, 0) = 4;
  b(0, 1) = 1; b(1, 1) = 0; b(2, 1) = 1;
  auto x = a.solve_many(b);
  REQUIRE(x);
  REQUIRE((a * *x) == b);

  b(2, 1) = 5;  // pushes the second column out of the image
  REQUIRE(!a.solve_many(b));
}

TEST_CASE("inverse round-trips") {
  Matrix<Rat> g(3, 3);
  g(0, 0) = 2; g(0, 1) = 1; g(1, 1) = 1; g(1, 2) = 3; g(2, 0) = 1; g(2, 2) = 1;
  auto gi = g.inverse();
  REQUIRE(gi);
  REQUIRE((g * *gi) == Matrix<Rat>::identity(3));
  Matrix<Rat> s(2, 2);
  s(0, 0) = 1; s(0, 1) = 2; s(1, 0) = 2; s(1, 1) = 4;
  REQUIRE(!s.inverse());
}
