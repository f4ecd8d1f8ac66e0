#include <doctest.h>

#include <initializer_list>
#include <tuple>

#include "support/homcheck.hpp"
#include "support/oracles.hpp"

using namespace parweyl;

namespace {

// scalar operator sum of coeff * x^A d^B terms in n variables
WeylMatOp scalar_op(int n, std::initializer_list<std::tuple<long, IntVec, IntVec>> terms) {
  WeylOp w(n);
  for (auto& [c, A, B] : terms) w = w + WeylOp::monomial(A, B, Rational(c));
  return WeylMatOp(w, RatMatrix::identity(1));
}

}  // namespace

TEST_SUITE("embedding") {

TEST_CASE("sl2 Borel: the classical first-order realization") {
  ChevalleyAlgebra alg(SimpleType::parse("A1"));
  ParabolicDatum par(alg, {1});

  SUBCASE("trivial weight") {
    EmbeddingResult res = embed(par, trivial_module(par), {Rational(0)});
    CHECK(res.n == 1);
    CHECK(res.dimV == 1);
    CHECK(res.image(+1) == scalar_op(1, {{-1, {1}, {2}}}));
    CHECK(res.image(-1) == scalar_op(1, {{1, {1}, {0}}}));
    CHECK(res.image(alg.cartan_gen(1)) == scalar_op(1, {{-2, {1}, {1}}}));
    CHECK(testing::hom_defects(alg, res) == 0);
  }

  SUBCASE("rational weight 5/2") {
    std::vector<Rational> lam{Rational(5, 2)};
    EmbeddingResult res = embed(par, build_irreducible(par, lam), lam);
    WeylOp e_w =
        WeylOp::monomial({1}, {2}, Rational(-1)) + WeylOp::monomial({0}, {1}, Rational(5, 2));
    WeylOp h_w =
        WeylOp::monomial({1}, {1}, Rational(-2)) + WeylOp::monomial({0}, {0}, Rational(5, 2));
    CHECK(res.image(+1) == WeylMatOp(e_w, RatMatrix::identity(1)));
    CHECK(res.image(-1) == scalar_op(1, {{1, {1}, {0}}}));
    CHECK(res.image(alg.cartan_gen(1)) == WeylMatOp(h_w, RatMatrix::identity(1)));
    CHECK(testing::hom_defects(alg, res) == 0);
  }
}

TEST_CASE("G2 with node 1 crossed, trivial weight: frozen operators") {
  ChevalleyAlgebra alg(SimpleType::parse("G2"));
  ParabolicDatum par(alg, {1, 0});
  EmbeddingResult res = embed(par, trivial_module(par), {Rational(0), Rational(0)});
  REQUIRE(res.n == 5);
  REQUIRE(res.dimV == 1);
  CHECK(res.word_gens == std::vector<GenIndex>{-6, -5, -4, -3, -1});

  // Phi0(g1) = -3x2 d4 d5^3 + 9x1 d4^2 d5^2 + 3x3 d4 d5^2 - x5 d5^2
  //            - 3x4 d4 d5 - 3x1 d3^2 - 2x4 d3 - x3 d2
  CHECK(res.image(+1) == scalar_op(5, {{-3, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 3}},
                                       {9, {1, 0, 0, 0, 0}, {0, 0, 0, 2, 2}},
                                       {3, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 2}},
                                       {-1, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 2}},
                                       {-3, {0, 0, 0, 1, 0}, {0, 0, 0, 1, 1}},
                                       {-3, {1, 0, 0, 0, 0}, {0, 0, 2, 0, 0}},
                                       {-2, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}},
                                       {-1, {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}}}));
  // Phi0(g-1) = -3x1 d4^2 - 2x3 d4 - 3x2 d3 + x5
  CHECK(res.image(-1) == scalar_op(5, {{-3, {1, 0, 0, 0, 0}, {0, 0, 0, 2, 0}},
                                       {-2, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}},
                                       {-3, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}},
                                       {1, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}}}));
  // Phi0(g2) = -2x1 d4^3 - x3 d4^2 + x5 d4 - x2 d1
  CHECK(res.image(+2) == scalar_op(5, {{-2, {1, 0, 0, 0, 0}, {0, 0, 0, 3, 0}},
                                       {-1, {0, 0, 1, 0, 0}, {0, 0, 0, 2, 0}},
                                       {1, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}},
                                       {-1, {0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}}}));
  // Phi0(g-2) = x2 d5^3 - 3x1 d4 d5^2 - x3 d5^2 + x4 d5 - x1 d2
  CHECK(res.image(-2) == scalar_op(5, {{1, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 3}},
                                       {-3, {1, 0, 0, 0, 0}, {0, 0, 0, 1, 2}},
                                       {-1, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 2}},
                                       {1, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
                                       {-1, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}}));
  // Phi0(h1) = -2x5 d5 + x4 d4 - x3 d3 - 3x2 d2 (Euler-type weight operator)
  CHECK(res.image(alg.cartan_gen(1)) == scalar_op(5, {{-2, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}},
                                                      {1, {0, 0, 0, 1, 0}, {0, 0, 0, 1, 0}},
                                                      {-1, {0, 0, 1, 0, 0}, {0, 0, 1, 0, 0}},
                                                      {-3, {0, 1, 0, 0, 0}, {0, 1, 0, 0, 0}}}));
  CHECK(testing::hom_defects(alg, res) == 0);
}

TEST_CASE("homomorphism on generators across parabolic and weight shapes") {
  struct Case {
    const char* type;
    std::vector<int> crossed;
    std::vector<Rational> lambda;
    int dim_v;
  };
  std::vector<Case> cases = {
      {"A2", {1, 0}, {Rational(0), Rational(2)}, 3},
      {"B2", {0, 1}, {Rational(2), Rational(1, 3)}, 3},
      {"G2", {0, 1}, {Rational(1), Rational(0)}, 2},
      {"G2", {0, 1}, {Rational(1), Rational(1, 2)}, 2},
      {"A3", {0, 1, 0}, {Rational(1), Rational(-2, 5), Rational(0)}, 2},
  };
  for (const auto& cs : cases) {
    CAPTURE(cs.type);
    ChevalleyAlgebra alg(SimpleType::parse(cs.type));
    ParabolicDatum par(alg, cs.crossed);
    LeviModule mod = build_irreducible(par, cs.lambda);
    REQUIRE(mod.dimV == cs.dim_v);
    REQUIRE(module_defects(par, mod) == 0);
    EmbeddingResult res = embed(par, mod, cs.lambda);
    CHECK(res.dimV == cs.dim_v);
    CHECK(testing::hom_defects(alg, res) == 0);
  }
}

TEST_CASE("convenience entry point mirrors the explicit pipeline") {
  EmbeddingResult a = embed(SimpleType::parse("G2"), {1, 0}, {Rational(0), Rational(0)});
  ChevalleyAlgebra alg(SimpleType::parse("G2"));
  ParabolicDatum par(alg, {1, 0});
  EmbeddingResult b = embed(par, trivial_module(par), {Rational(0), Rational(0)});
  REQUIRE(a.images.size() == b.images.size());
  for (size_t i = 0; i < a.images.size(); ++i) {
    CHECK(a.images[i].gen == b.images[i].gen);
    CHECK(a.images[i].op == b.images[i].op);
  }
  CHECK(a.type == "G2");
  CHECK(a.crossed == std::vector<int>{1});
  CHECK(a.op_count > 0);
}

TEST_CASE("images come in e/f/h generator order") {
  EmbeddingResult res = embed(SimpleType::parse("A2"), {1, 1}, {Rational(0), Rational(0)});
  std::vector<GenIndex> got;
  for (const auto& im : res.images) got.push_back(im.gen);
  ChevalleyAlgebra alg(SimpleType::parse("A2"));
  CHECK(got == std::vector<GenIndex>{+1, -1, +2, -2, alg.cartan_gen(1), alg.cartan_gen(2)});
}

}  // TEST_SUITE
