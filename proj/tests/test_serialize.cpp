#include <doctest.h>

#include "parweyl/serialize.hpp"

using namespace parweyl;

namespace {

bool same_images(const EmbeddingResult& a, const EmbeddingResult& b) {
  if (a.images.size() != b.images.size()) return false;
  for (size_t i = 0; i < a.images.size(); ++i)
    if (a.images[i].gen != b.images[i].gen || !(a.images[i].op == b.images[i].op)) return false;
  return true;
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("scalar realization round-trips through JSON") {
  ChevalleyAlgebra alg(SimpleType::parse("G2"));
  ParabolicDatum par(alg, {1, 0});
  EmbeddingResult res = embed(par, trivial_module(par), {Rational(0), Rational(0)});
  nlohmann::ordered_json j = to_json(res, alg);
  CHECK(j.at("schema") == kSchemaVersion);
  CHECK(j.at("type") == "G2");
  CHECK(j.at("crossed") == std::vector<int>{1});
  CHECK(j.at("n") == 5);
  CHECK(j.at("dim_v") == 1);
  CHECK(j.at("word").size() == 5);
  CHECK(j.at("images").size() == 6);

  EmbeddingResult back = embedding_from_json(j);
  CHECK(back.type == res.type);
  CHECK(back.crossed == res.crossed);
  CHECK(back.n == res.n);
  CHECK(back.dimV == res.dimV);
  CHECK(back.word_gens == res.word_gens);
  CHECK(same_images(res, back));
}

TEST_CASE("matrix-valued realization with rational weights round-trips") {
  ChevalleyAlgebra alg(SimpleType::parse("B2"));
  ParabolicDatum par(alg, {0, 1});
  std::vector<Rational> lam{Rational(2), Rational(1, 3)};
  EmbeddingResult res = embed(par, build_irreducible(par, lam), lam);
  REQUIRE(res.dimV == 3);
  nlohmann::ordered_json j = to_json(res, alg);
  CHECK(j.at("lambda") == std::vector<std::string>{"2", "1/3"});

  EmbeddingResult back = embedding_from_json(j);
  CHECK(back.dimV == 3);
  CHECK(back.lambda == res.lambda);
  CHECK(same_images(res, back));
}

TEST_CASE("rationals serialize as exact p/q strings") {
  CHECK(detail::rat_json(Rational(-7, 3)) == "-7/3");
  CHECK(detail::rat_json(Rational(4)) == "4");
  CHECK(detail::rat_from(nlohmann::json("-7/3")) == Rational(-7, 3));
  CHECK(detail::rat_from(nlohmann::json("0")) == Rational(0));
}

TEST_CASE("unknown schema versions are rejected") {
  ChevalleyAlgebra alg(SimpleType::parse("A1"));
  ParabolicDatum par(alg, {1});
  EmbeddingResult res = embed(par, trivial_module(par), {Rational(0)});
  nlohmann::ordered_json j = to_json(res, alg);
  j["schema"] = "parweyl/999";
  CHECK_THROWS_AS(embedding_from_json(j), std::invalid_argument);
}

}  // TEST_SUITE
