#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parweyl/levimodule.hpp"
#include "parweyl/uea.hpp"
#include "parweyl/weyl.hpp"

namespace parweyl {

/// Element of W_n (tensor) End V: a Weyl-algebra operator with matrix
/// coefficients, stored normal-ordered as x^A d^B -> matrix.
class WeylMatOp {
 public:
  using Key = WeylOp::Key;

  WeylMatOp(int nvars, int dim) : nvars_(nvars), dim_(dim) {}

  /// scalar operator w (tensor) M
  WeylMatOp(const WeylOp& w, const RatMatrix& M) : nvars_(w.nvars()), dim_(M.rows()) {
    for (const auto& [key, c] : w.terms()) add_term(key.first, key.second, M.scaled(c));
  }

  int nvars() const { return nvars_; }
  int dim() const { return dim_; }
  const std::map<Key, RatMatrix>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const IntVec& A, const IntVec& B, const RatMatrix& M) {
    if (M.is_zero()) return;
    Key key{A, B};
    auto [it, fresh] = terms_.try_emplace(std::move(key), M);
    if (!fresh) {
      it->second += M;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  WeylMatOp& operator+=(const WeylMatOp& o) {
    for (const auto& [key, M] : o.terms_) add_term(key.first, key.second, M);
    return *this;
  }
  WeylMatOp operator+(const WeylMatOp& o) const {
    WeylMatOp r = *this;
    r += o;
    return r;
  }
  WeylMatOp scaled(const Rational& c) const {
    WeylMatOp r(nvars_, dim_);
    if (c.is_zero()) return r;
    for (const auto& [key, M] : terms_) r.terms_.emplace(key, M.scaled(c));
    return r;
  }
  WeylMatOp operator-(const WeylMatOp& o) const { return *this + o.scaled(Rational(-1)); }

  /// (a * b)(f) = a(b(f)); Weyl keys multiply by the normal-ordering rule,
  /// matrices by matrix product.
  WeylMatOp operator*(const WeylMatOp& o) const {
    WeylMatOp r(nvars_, dim_);
    for (const auto& [ka, Ma] : terms_)
      for (const auto& [kb, Mb] : o.terms_) {
        RatMatrix M = Ma * Mb;
        if (M.is_zero()) continue;
        WeylOp prod = WeylOp::monomial(ka.first, ka.second, Rational(1)) *
                      WeylOp::monomial(kb.first, kb.second, Rational(1));
        for (const auto& [key, c] : prod.terms()) r.add_term(key.first, key.second, M.scaled(c));
      }
    return r;
  }

  bool operator==(const WeylMatOp& o) const {
    return nvars_ == o.nvars_ && dim_ == o.dim_ && terms_ == o.terms_;
  }

  /// apply to the vector x^c (tensor) e_m; result maps (exponent, basis
  /// index) -> coefficient
  std::map<std::pair<IntVec, int>, Rational> apply(const IntVec& c, int m) const {
    std::map<std::pair<IntVec, int>, Rational> out;
    for (const auto& [key, M] : terms_) {
      const auto& [A, B] = key;
      // d^B x^c = prod c_i (c_i-1) ... (c_i - B_i + 1) x^{c-B}, zero if any B_i > c_i
      Rational f(1);
      IntVec e(nvars_);
      bool kill = false;
      for (int i = 0; i < nvars_; ++i) {
        if (B[i] > c[i]) {
          kill = true;
          break;
        }
        for (int t = 0; t < B[i]; ++t) f *= Rational(c[i] - t);
        e[i] = c[i] - B[i] + A[i];
      }
      if (kill) continue;
      for (int r = 0; r < dim_; ++r) {
        Rational v = f * M.at(r, m);
        if (v.is_zero()) continue;
        auto key2 = std::make_pair(e, r);
        auto [it, fresh] = out.try_emplace(key2, v);
        if (!fresh) {
          it->second += v;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
    return out;
  }

 private:
  int nvars_;
  int dim_;
  std::map<Key, RatMatrix> terms_;
};

inline WeylMatOp commutator(const WeylMatOp& a, const WeylMatOp& b) { return a * b - b * a; }

/// Turn a reduced element g . u of the universal enveloping algebra into the
/// operator Phi(g).  Every monomial must consist of the word factors
/// u_1 ... u_n in order, with exponents a_t + integer, followed by at most
/// one non-word factor with exponent 1; the word part becomes a Weyl
/// operator through the omega map and the trailing factor acts on V.
inline WeylMatOp extract_operator(const UeaElement& e, const Uea& U, const LeviModule& mod) {
  const ParabolicDatum& par = U.parabolic();
  const int n = par.n();
  // group the omega input by trailing generator (0 = pure word)
  std::map<GenIndex, std::vector<OmegaEntry>> grouped;
  for (const auto& [mono, coeff] : e.terms) {
    IntVec b(n, 0);
    GenIndex trailing = 0;
    int t = 0;  // next expected word position (0-based)
    for (const UeaFactor& f : mono.factors) {
      if (t < n && par.word_gen(t + 1) == f.gen) {
        ExponentPoly diff = f.exp - ExponentPoly::variable(n, t + 1);
        if (!diff.is_constant())
          throw std::logic_error("extract_operator: word exponent not a_t + const");
        Rational c = diff.constant_value();
        if (!c.is_integer())
          throw std::logic_error("extract_operator: non-integer word exponent shift");
        b[t] = -static_cast<int>(c.as_long());
        ++t;
        continue;
      }
      if (trailing != 0 || par.in_nminus(f.gen) || t != n)
        throw std::logic_error("extract_operator: malformed reduced monomial");
      if (!f.exp.is_constant() || !(f.exp.constant_value() == Rational(1)))
        throw std::logic_error("extract_operator: trailing factor exponent != 1");
      trailing = f.gen;
    }
    if (t != n) throw std::logic_error("extract_operator: missing word factor");
    grouped[trailing].push_back(OmegaEntry{coeff, b});
  }

  WeylMatOp out(n, mod.dimV);
  for (const auto& [g, data] : grouped) {
    const RatMatrix M = (g == 0) ? RatMatrix::identity(mod.dimV) : mod.act(g);
    if (M.is_zero()) continue;
    out += WeylMatOp(omega(n, data), M);
  }
  return out;
}

/// One generator image inside an embedding result.
struct GenImage {
  GenIndex gen;
  WeylMatOp op;
};

/// Full realization Phi of g by differential operators with coefficients in
/// End V, together with run metadata.
struct EmbeddingResult {
  std::string type;
  std::vector<int> crossed;              // crossed node numbers, ascending
  std::vector<Rational> lambda;          // fundamental-weight coordinates
  int n = 0;                             // number of Weyl variables
  int dimV = 1;                          // dimension of the Levi module
  std::vector<GenIndex> word_gens;       // u_1 ... u_n as generator ids
  std::vector<GenImage> images;          // e_i, f_i alternating, then h_j
  std::uint64_t op_count = 0;            // rational operations spent
  double seconds = 0.0;

  const WeylMatOp& image(GenIndex g) const {
    for (const auto& im : images)
      if (im.gen == g) return im.op;
    throw std::invalid_argument("EmbeddingResult::image: not a Chevalley generator");
  }
};

/// Compute the realization of the whole algebra from the images of the
/// Chevalley generators e_i = g_i, f_i = g_{-i}, h_i.
inline EmbeddingResult embed(const ParabolicDatum& par, const LeviModule& mod,
                             const std::vector<Rational>& lambda, long reduce_budget = 1000000) {
  const ChevalleyAlgebra& alg = par.algebra();
  const RootSystem& rs = alg.roots();
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t ops0 = rational_op_count();

  Uea U(par);
  EmbeddingResult res;
  res.type = rs.type().str();
  for (int i = 1; i <= rs.rank(); ++i)
    if (!par.is_uncrossed(i)) res.crossed.push_back(i);
  res.lambda = lambda;
  res.n = par.n();
  res.dimV = mod.dimV;
  res.word_gens = par.word_gens();

  std::vector<GenIndex> gens;
  for (int i = 1; i <= rs.rank(); ++i) {
    gens.push_back(+i);
    gens.push_back(-i);
  }
  for (int j = 1; j <= rs.rank(); ++j) gens.push_back(alg.cartan_gen(j));
  for (GenIndex g : gens) {
    UeaElement red = U.generic_product(g, reduce_budget);
    res.images.push_back(GenImage{g, extract_operator(red, U, mod)});
  }

  res.op_count = rational_op_count() - ops0;
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

/// Convenience entry point: build the module for lambda, then embed.
inline EmbeddingResult embed(const SimpleType& type, const std::vector<int>& crossed,
                             const std::vector<Rational>& lambda,
                             std::size_t reduce_budget = 1000000, int dim_cap = 4096) {
  static std::map<std::string, ChevalleyAlgebra> cache;
  auto it = cache.find(type.str());
  if (it == cache.end()) it = cache.emplace(type.str(), ChevalleyAlgebra(type)).first;
  ParabolicDatum par(it->second, crossed);
  bool trivial = true;
  for (const Rational& c : lambda)
    if (!c.is_zero()) trivial = false;
  LeviModule mod = trivial ? trivial_module(par) : build_irreducible(par, lambda, dim_cap);
  return embed(par, mod, lambda, reduce_budget);
}

}  // namespace parweyl
