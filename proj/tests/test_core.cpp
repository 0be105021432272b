#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gcgeo/form.hpp"
#include "gcgeo/linalg.hpp"
#include "gcgeo/parse.hpp"
#include "gcgeo/poly.hpp"

#include <random>

using namespace gcg;

namespace {

GaussQ randScalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  return GaussQ(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
}

Form randForm(std::mt19937& rng, int n, int maxTerms) {
  std::uniform_int_distribution<Mask> mask(0, (Mask(1) << n) - 1);
  Form f(n);
  for (int t = 0; t < maxTerms; ++t) f.add(mask(rng), randScalar(rng));
  return f;
}

GenVector randGenVector(std::mt19937& rng, int n) {
  GenVector v(n);
  for (int i = 0; i < n; ++i) {
    v.X[i] = randScalar(rng);
    v.xi[i] = randScalar(rng);
  }
  return v;
}

MatQ randMat(std::mt19937& rng, int r, int c) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  MatQ m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = GaussQ(Rat(num(rng), den(rng)));
  return m;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
  GaussQ a(Rat(1, 2), Rat(3));
  GaussQ b(Rat(-2), Rat(1, 3));
  CHECK(a + b == GaussQ(Rat(-3, 2), Rat(10, 3)));
  CHECK(a * b == GaussQ(Rat(-2), Rat(-35, 6)));
  CHECK((a / b) * b == a);
  CHECK(GaussQ::I() * GaussQ::I() == GaussQ(-1));
  CHECK(str(GaussQ(Rat(2))) == "2");
  CHECK(str(GaussQ::I()) == "i");
  CHECK(str(GaussQ(Rat(0), Rat(2))) == "2i");
  CHECK(str(GaussQ(Rat(1), Rat(-1, 2))) == "(1-1/2i)");
}

TEST_CASE("polynomials and rational functions") {
  VarsPtr vars = makeVars({"x1", "x2"});
  Poly x1 = Poly::variable(vars, 0);
  Poly x2 = Poly::variable(vars, 1);
  Poly p = x1 * x1 - x2 * x2;
  Poly q = x1 - x2;
  CHECK(exactDiv(p, q) == x1 + x2);
  CHECK(polyGcd(p, q) == detail::makeMonic(q));
  CHECK(p.derivative(0) == x1 * GaussQ(2));

  RatFunc f(p, q);  // reduces to x1 + x2
  CHECK(f == RatFunc(x1 + x2));
  RatFunc g = RatFunc(Poly(vars, GaussQ(1)), x1) + RatFunc(Poly(vars, GaussQ(1)), x2);
  CHECK(g == RatFunc(x1 + x2, x1 * x2));
  CHECK(g * RatFunc(x1 * x2) == RatFunc(x1 + x2));
  CHECK(g.evaluate({GaussQ(1), GaussQ(2)}) == GaussQ(Rat(3, 2)));
  // mixing int-constructed constants with polynomial values
  CHECK(RatFunc(1) + RatFunc(x1) == RatFunc(x1 + Poly(vars, GaussQ(1))));
}

TEST_CASE("rank, kernel and solve") {
  SUBCASE("identity and zero") {
    MatQ id = MatQ::Identity(3, 3);
    auto rk = rankKernel(id);
    CHECK(rk.rank == 3);
    CHECK(rk.kernel.cols() == 0);
    MatQ z = MatQ::Zero(2, 4);
    auto rz = rankKernel(z);
    CHECK(rz.rank == 0);
    CHECK(rz.kernel.cols() == 4);
  }
  SUBCASE("complex rank-1 matrix") {
    // [[1, i], [i, -1]]: row2 = i*row1
    MatQ m(2, 2);
    m(0, 0) = GaussQ(1);
    m(0, 1) = GaussQ::I();
    m(1, 0) = GaussQ::I();
    m(1, 1) = GaussQ(-1);
    auto rk = rankKernel(m);
    CHECK(rk.rank == 1);
    REQUIRE(rk.kernel.cols() == 1);
    // kernel spanned by (i, 1): kernel vector k satisfies m k = 0
    VecQ k = rk.kernel.col(0);
    VecQ mk = m * k;
    CHECK(mk(0).isZero());
    CHECK(mk(1).isZero());
    // Row reduction gives x0 + i x1 = 0, i.e. the kernel line through (1, i).
    SubspaceQ ker = SubspaceQ::fromColumns(rk.kernel);
    VecQ expect(2);
    expect(0) = GaussQ(1);
    expect(1) = GaussQ::I();
    CHECK(ker.contains(expect));
  }
  SUBCASE("solve") {
    MatQ m = MatQ::Zero(2, 2);
    m(0, 0) = GaussQ(2);
    m(1, 1) = GaussQ(Rat(1, 3));
    VecQ b(2);
    b(0) = GaussQ(1);
    b(1) = GaussQ(1);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK((*x)(0) == GaussQ(Rat(1, 2)));
    CHECK((*x)(1) == GaussQ(3));
    MatQ z = MatQ::Zero(2, 2);
    CHECK(!solve(z, b).has_value());
    // m x = b reproduces b exactly whenever a solution is returned
    VecQ back = m * (*x);
    CHECK(back(0) == b(0));
    CHECK(back(1) == b(1));
  }
  SUBCASE("random: rank equals naive recomputation and solve round-trips") {
    std::mt19937 rng(7);
    for (int it = 0; it < 40; ++it) {
      MatQ m = randMat(rng, 4, 5);
      auto rk = rankKernel(m);
      CHECK(rk.rank + rk.kernel.cols() == m.cols());
      for (Eigen::Index c = 0; c < rk.kernel.cols(); ++c) {
        VecQ y = m * rk.kernel.col(c);
        for (Eigen::Index i = 0; i < y.size(); ++i) CHECK(y(i).isZero());
      }
      // rank over scalars equals rank after clearing denominators
      MatQ cleared = m;
      for (Eigen::Index r = 0; r < cleared.rows(); ++r)
        RowClear<GaussQ>::clear(cleared, r);
      CHECK(rank(cleared) == rk.rank);
    }
  }
}

TEST_CASE("subspace operations") {
  SUBCASE("grassmann identity on random subspaces") {
    std::mt19937 rng(11);
    for (int it = 0; it < 30; ++it) {
      SubspaceQ a = SubspaceQ::fromRows(randMat(rng, 2, 5));
      SubspaceQ b = SubspaceQ::fromRows(randMat(rng, 3, 5));
      CHECK((a + b).dim() + intersect(a, b).dim() == a.dim() + b.dim());
      CHECK(intersect(a, a) == a);
    }
  }
  SUBCASE("coordinate planes") {
    MatQ a = MatQ::Zero(2, 4), b = MatQ::Zero(2, 4);
    a(0, 0) = GaussQ(1);
    a(1, 1) = GaussQ(1);
    b(0, 2) = GaussQ(1);
    b(1, 3) = GaussQ(1);
    SubspaceQ sa = SubspaceQ::fromRows(a), sb = SubspaceQ::fromRows(b);
    CHECK(intersect(sa, sb).dim() == 0);
    CHECK((sa + sb).dim() == 4);
  }
  SUBCASE("echelon intersection example") {
    MatQ a(1, 3), b(2, 3);
    a << GaussQ(1), GaussQ(1), GaussQ(0);
    b << GaussQ(1), GaussQ(0), GaussQ(0), GaussQ(0), GaussQ(1), GaussQ(0);
    SubspaceQ sa = SubspaceQ::fromRows(a), sb = SubspaceQ::fromRows(b);
    SubspaceQ inter = intersect(sa, sb);
    CHECK(inter == sa);
  }
}

TEST_CASE("wedge and contraction") {
  int n = 4;
  Form e1 = Form::gen(n, 1), e2 = Form::gen(n, 2);
  CHECK(wedge(e1, e1).isZero());
  CHECK(wedge(e1, e2) == Form::basis(n, 0b11));
  CHECK(wedge(e2, e1) == Form::basis(n, 0b11, GaussQ(-1)));
  // (1 + i e12)(1 - i e12) = 1
  Form a = Form::unit(n) + Form::basis(n, 0b11, GaussQ::I());
  Form b = Form::unit(n) - Form::basis(n, 0b11, GaussQ::I());
  CHECK(wedge(a, b) == Form::unit(n));

  CHECK(iota(1, Form::basis(n, 0b11)) == Form::gen(n, 2));
  CHECK(iota(2, Form::gen(n, 1)).isZero());
  // multivector contraction: first factor acts innermost
  Form dd = Form::basis(n, 0b11);  // ∂1∧∂2 as a multivector
  CHECK(contract(dd, Form::basis(n, 0b11)) == Form::unit(n));
}

TEST_CASE("clifford action and property") {
  int n = 3;
  GenVector v(n);
  v.X[0] = GaussQ(1);
  v.xi[0] = GaussQ(1);  // ∂1 + e1
  Form one = Form::unit(n);
  CHECK(clifford(v, one) == Form::gen(n, 1));
  CHECK(clifford(v, clifford(v, one)) == one);  // ⟨v,v⟩ = 1

  GenVector w(n);
  w.X[0] = GaussQ(1);
  w.xi[1] = GaussQ(1);  // ∂1 + e2
  Form r = clifford(w, Form::gen(n, 1));
  CHECK(r == Form::unit(n) - Form::basis(n, 0b11));

  GenVector u(n);
  u.xi[0] = GaussQ(1);  // e1
  std::mt19937 rng(3);
  for (int it = 0; it < 20; ++it) {
    Form f = randForm(rng, n, 4);
    CHECK(clifford(u, clifford(u, f)).isZero());
  }
  // v (v a) = <v,v> a on random samples
  for (int it = 0; it < 200; ++it) {
    GenVector x = randGenVector(rng, n);
    Form f = randForm(rng, n, 4);
    CHECK(clifford(x, clifford(x, f)) == f * pairing(x, x));
  }
}

TEST_CASE("mukai pairing") {
  SUBCASE("symplectic exponentials in two generators") {
    int n = 2;
    Form w = Form::basis(n, 0b11);
    Form ep = expWedge(w * GaussQ::I(), Form::unit(n));
    Form em = expWedge(w * (-GaussQ::I()), Form::unit(n));
    Form m = mukai(ep, em);
    CHECK(m == Form::basis(n, 0b11, GaussQ(Rat(0), Rat(-2))));
  }
  SUBCASE("no top component") {
    CHECK(mukai(Form::unit(3), Form::unit(3)).isZero());
  }
  SUBCASE("degree-1 factors") {
    int n = 2;
    Form a = Form::gen(n, 1) + Form::gen(n, 2) * GaussQ::I();
    Form b = Form::gen(n, 1) - Form::gen(n, 2) * GaussQ::I();
    CHECK(mukai(a, b) == Form::basis(n, 0b11, GaussQ(Rat(0), Rat(-2))));
  }
  SUBCASE("alpha is an involution and antihomomorphism") {
    std::mt19937 rng(5);
    for (int it = 0; it < 30; ++it) {
      Form f = randForm(rng, 4, 5);
      CHECK(alphaRev(alphaRev(f)) == f);
      for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 4; ++l) {
          Form a = randForm(rng, 4, 3).component(k);
          Form b = randForm(rng, 4, 3).component(l);
          CHECK(alphaRev(wedge(a, b)) == wedge(alphaRev(b), alphaRev(a)));
        }
    }
  }
}

TEST_CASE("exponential actions") {
  int n = 4;
  Form a = randForm(*(new std::mt19937(9)), n, 3);
  CHECK(expWedge(Form::zero(n), a) == a);
  Form e12 = Form::basis(n, 0b0011);
  Form e34 = Form::basis(n, 0b1100);
  CHECK(expWedge(e12, e34) == e34 + Form::basis(n, 0b1111));
}

TEST_CASE("form parsing and printing") {
  SUBCASE("table-style strings") {
    Form f = parseForm("14+23", 6);
    CHECK(f == Form::basis(6, 0b001001) + Form::basis(6, 0b000110));
    Form g = parseForm("2*34", 6);
    CHECK(g == Form::basis(6, 0b001100, GaussQ(2)));
    Form h = parseForm("i*56", 6);
    CHECK(h == Form::basis(6, 0b110000, GaussQ::I()));
    Form p = parseForm("(1+i2)(4+i5)", 6);
    Form expect = wedge(Form::gen(6, 1) + Form::gen(6, 2) * GaussQ::I(),
                        Form::gen(6, 4) + Form::gen(6, 5) * GaussQ::I());
    CHECK(p == expect);
    Form q = parseForm("exp(i*(12+34+56))", 6);
    Form w = (Form::basis(6, 0b000011) + Form::basis(6, 0b001100) +
              Form::basis(6, 0b110000)) * GaussQ::I();
    CHECK(q == expWedge(w, Form::unit(6)));
    // wedge sign from out-of-order digit pairs
    CHECK(parseForm("52", 6) == Form::basis(6, 0b010010, GaussQ(-1)));
    // exp eats the rest of the term
    Form r = parseForm("(1+2+i3)(5+i4)exp(3+i1)6", 6);
    Form arg = wedge(Form::gen(6, 3) + Form::gen(6, 1) * GaussQ::I(), Form::gen(6, 6));
    Form head = wedge(Form::gen(6, 1) + Form::gen(6, 2) + Form::gen(6, 3) * GaussQ::I(),
                      Form::gen(6, 5) + Form::gen(6, 4) * GaussQ::I());
    CHECK(r == wedge(head, expWedge(arg, Form::unit(6))));
    CHECK(parseForm("0", 6).isZero());
  }
  SUBCASE("round trip") {
    std::mt19937 rng(13);
    for (int it = 0; it < 60; ++it) {
      Form f = randForm(rng, 5, 5);
      CHECK(parseForm(str(f), 5) == f);
    }
    CHECK(parseForm("one", 3) == Form::unit(3));
    CHECK(str(Form::unit(3)) == "one");
    CHECK(parseForm(str(Form::zero(3)), 3).isZero());
  }
  SUBCASE("extended coefficients") {
    VarsPtr vars = makeVars({"x1", "x2"});
    FormX f = parseFormX("(x1+i*x2)*34", 6, vars);
    RatFunc c = RatFunc::variable(vars, 0) + RatFunc(GaussQ::I()) * RatFunc::variable(vars, 1);
    CHECK(f == FormX::basis(6, 0b001100, c));
    CHECK(parseFormX(str(f), 6, vars) == f);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parseForm("17", 6), ParseError);
    CHECK_THROWS_AS(parseForm("1++2", 6), ParseError);
    CHECK_THROWS_AS(parseForm("(12", 6), ParseError);
  }
}
