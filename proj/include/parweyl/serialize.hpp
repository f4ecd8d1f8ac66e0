#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "parweyl/embedding.hpp"
#include "parweyl/printing.hpp"

namespace parweyl {

inline constexpr const char* kSchemaVersion = "parweyl/1";

namespace detail {

inline nlohmann::ordered_json rat_json(const Rational& r) { return r.str(); }

inline Rational rat_from(const nlohmann::json& j) {
  return Rational::from_string(j.get<std::string>());
}

inline nlohmann::ordered_json matrix_json(const RatMatrix& M) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int r = 0; r < M.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int s = 0; s < M.cols(); ++s) row.push_back(rat_json(M.at(r, s)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RatMatrix matrix_from(const nlohmann::json& j) {
  int rows = static_cast<int>(j.size());
  int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  RatMatrix M(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int s = 0; s < cols; ++s) M.at(r, s) = rat_from(j.at(r).at(s));
  return M;
}

}  // namespace detail

/// JSON form of a realization: exact rationals as "p/q" strings, operator
/// terms as {A, B, matrix} triples in map order.
inline nlohmann::ordered_json to_json(const EmbeddingResult& res, const ChevalleyAlgebra& alg) {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaVersion;
  j["type"] = res.type;
  j["crossed"] = res.crossed;
  nlohmann::ordered_json lam = nlohmann::ordered_json::array();
  for (const Rational& c : res.lambda) lam.push_back(detail::rat_json(c));
  j["lambda"] = std::move(lam);
  j["n"] = res.n;
  j["dim_v"] = res.dimV;
  nlohmann::ordered_json word = nlohmann::ordered_json::array();
  for (GenIndex g : res.word_gens) {
    nlohmann::ordered_json w;
    w["id"] = g;
    w["name"] = gen_str(alg, g);
    word.push_back(std::move(w));
  }
  j["word"] = std::move(word);
  nlohmann::ordered_json images = nlohmann::ordered_json::array();
  for (const GenImage& im : res.images) {
    nlohmann::ordered_json ij;
    ij["gen"] = im.gen;
    ij["name"] = gen_str(alg, im.gen);
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [key, M] : im.op.terms()) {
      nlohmann::ordered_json t;
      t["A"] = key.first;
      t["B"] = key.second;
      t["matrix"] = detail::matrix_json(M);
      terms.push_back(std::move(t));
    }
    ij["terms"] = std::move(terms);
    images.push_back(std::move(ij));
  }
  j["images"] = std::move(images);
  j["op_count"] = res.op_count;
  j["seconds"] = res.seconds;
  return j;
}

/// Rebuild a realization from its JSON form.  Metadata and operators are
/// restored exactly; runtime fields come back as recorded.
inline EmbeddingResult embedding_from_json(const nlohmann::json& j) {
  if (j.at("schema").get<std::string>() != kSchemaVersion)
    throw std::invalid_argument("embedding_from_json: unknown schema '" +
                                j.at("schema").get<std::string>() + "'");
  EmbeddingResult res;
  res.type = j.at("type").get<std::string>();
  res.crossed = j.at("crossed").get<std::vector<int>>();
  for (const auto& c : j.at("lambda")) res.lambda.push_back(detail::rat_from(c));
  res.n = j.at("n").get<int>();
  res.dimV = j.at("dim_v").get<int>();
  for (const auto& w : j.at("word")) res.word_gens.push_back(w.at("id").get<GenIndex>());
  for (const auto& ij : j.at("images")) {
    WeylMatOp op(res.n, res.dimV);
    for (const auto& t : ij.at("terms"))
      op.add_term(t.at("A").get<IntVec>(), t.at("B").get<IntVec>(),
                  detail::matrix_from(t.at("matrix")));
    res.images.push_back(GenImage{ij.at("gen").get<GenIndex>(), std::move(op)});
  }
  res.op_count = j.at("op_count").get<std::uint64_t>();
  res.seconds = j.at("seconds").get<double>();
  return res;
}

}  // namespace parweyl
