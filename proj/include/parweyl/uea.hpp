#pragma once

#include <deque>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "parweyl/liealgebra.hpp"
#include "parweyl/parabolic.hpp"
#include "parweyl/polynomial.hpp"

namespace parweyl {

/// Thrown when neither commutation identity applies at the requested spot.
struct NotCommutable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when reduction exceeds its step budget or reaches a stuck
/// non-reduced monomial (malformed input).
struct ReductionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One factor g^e of a PBW-style word; e is a polynomial in the formal
/// exponents a_1..a_n.
struct UeaFactor {
  GenIndex gen;
  ExponentPoly exp;

  friend bool operator==(const UeaFactor& a, const UeaFactor& b) {
    return a.gen == b.gen && a.exp == b.exp;
  }
  friend bool operator<(const UeaFactor& a, const UeaFactor& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.exp < b.exp;
  }
};

/// Product of factors, left to right.
struct UeaMonomial {
  std::vector<UeaFactor> factors;

  friend bool operator==(const UeaMonomial& a, const UeaMonomial& b) {
    return a.factors == b.factors;
  }
  friend bool operator<(const UeaMonomial& a, const UeaMonomial& b) {
    return a.factors < b.factors;
  }
};

/// Linear combination of monomials; coefficients are polynomials in the
/// formal exponents (they arise from the symbolic binomials C(a, k)).
struct UeaElement {
  std::map<UeaMonomial, ExponentPoly> terms;

  bool is_zero() const { return terms.empty(); }
  size_t num_terms() const { return terms.size(); }

  void add(const UeaMonomial& m, const ExponentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  void add(const UeaElement& o) {
    for (const auto& [m, c] : o.terms) add(m, c);
  }

  friend bool operator==(const UeaElement& a, const UeaElement& b) { return a.terms == b.terms; }
};

/// Reduction engine for U(g)-words over the PBW order induced by a
/// parabolic: word generators u_1 < ... < u_n (ordered by their actual
/// roots, graded-lex) sit below every other basis element; the remaining
/// root vectors are ordered by their roots graded-lex, Cartans last.
class Uea {
 public:
  explicit Uea(const ParabolicDatum& par) : alg_(&par.algebra()), par_(&par), n_(par.n()) {
    const auto ids = alg_->basis();
    std::vector<GenIndex> rest;
    for (GenIndex g : ids)
      if (!par.in_nminus(g)) rest.push_back(g);
    std::sort(rest.begin(), rest.end(), [&](GenIndex a, GenIndex b) {
      bool ca = alg_->is_cartan(a), cb = alg_->is_cartan(b);
      if (ca != cb) return cb;  // root vectors first, Cartans last
      if (ca) return alg_->cartan_sub(a) < alg_->cartan_sub(b);
      return graded_lex_cmp(alg_->weight(a), alg_->weight(b)) < 0;
    });
    int r = n_ + 1;
    for (GenIndex g : rest) rank_[g] = r++;
  }

  const ChevalleyAlgebra& algebra() const { return *alg_; }
  const ParabolicDatum& parabolic() const { return *par_; }
  int nvars() const { return n_; }

  /// Total-order rank of a generator (u_t has rank t; everything else is
  /// larger).
  int gen_rank(GenIndex g) const {
    int t = par_->word_pos(g);
    if (t != 0) return t;
    return rank_.at(g);
  }

  /// Canonical generic word u_1^{a_1} ... u_n^{a_n}.
  UeaMonomial generic_word() const {
    UeaMonomial m;
    m.factors.reserve(n_);
    for (int t = 1; t <= n_; ++t)
      m.factors.push_back({par_->word_gen(t), ExponentPoly::variable(n_, t)});
    return m;
  }

  /// g * (generic word), the input of the reduction pipeline.
  UeaElement generic_product_input(GenIndex g) const {
    UeaMonomial m = generic_word();
    m.factors.insert(m.factors.begin(), {g, ExponentPoly::constant(n_, Rational(1))});
    UeaElement e;
    e.add(normalized(m), ExponentPoly::constant(n_, Rational(1)));
    return e;
  }

  /// Merges adjacent equal generators and drops zero exponents.
  UeaMonomial normalized(const UeaMonomial& m) const {
    UeaMonomial out;
    for (const UeaFactor& f : m.factors) {
      if (f.exp.is_zero()) continue;
      if (!out.factors.empty() && out.factors.back().gen == f.gen) {
        out.factors.back().exp += f.exp;
        if (out.factors.back().exp.is_zero()) out.factors.pop_back();
      } else {
        out.factors.push_back(f);
      }
    }
    return out;
  }

  /// A monomial is reduced when every out-of-order factor pair (not
  /// necessarily adjacent) has both exponents non-(nonnegative-integer).
  bool is_reduced(const UeaMonomial& m) const {
    for (size_t s = 0; s < m.factors.size(); ++s)
      for (size_t t = s + 1; t < m.factors.size(); ++t) {
        if (gen_rank(m.factors[s].gen) <= gen_rank(m.factors[t].gen)) continue;
        if (m.factors[s].exp.is_nonneg_int_constant() || m.factors[t].exp.is_nonneg_int_constant())
          return false;
      }
    return true;
  }

  bool is_reduced(const UeaElement& e) const {
    for (const auto& [m, c] : e.terms)
      if (!is_reduced(m)) return false;
    return true;
  }

  /// Applies one commutation identity to the adjacent factor pair (j, j+1)
  /// of m (0-based j).  The pair must be out of order and satisfy one of:
  ///   - first identity:  exp_j a positive integer, gen_{j+1} a root
  ///     vector.  Peel one copy a of gen_j and move it right past the block
  ///     b^m:  a b^m = sum_k C(m,k) (-1)^k b^{m-k} ((ad b)^k a).
  ///   - second identity: exp_{j+1} a positive integer, gen_j a root
  ///     vector.  Peel one copy a of gen_{j+1} and move it left:
  ///     b^m a = sum_k C(m,k) ((ad b)^k a) b^{m-k}.
  /// Ties resolve to the first identity.  Results are normalized.
  UeaElement commute_once(const UeaMonomial& m, size_t j) const {
    if (j + 1 >= m.factors.size()) throw NotCommutable("commute_once: no factor pair at j");
    const UeaFactor& L = m.factors[j];
    const UeaFactor& R = m.factors[j + 1];
    if (gen_rank(L.gen) <= gen_rank(R.gen))
      throw NotCommutable("commute_once: pair already in order");
    bool first_ok = L.exp.is_pos_int_constant() && alg_->is_root_vector(R.gen);
    bool second_ok = R.exp.is_pos_int_constant() && alg_->is_root_vector(L.gen);
    if (!first_ok && !second_ok)
      throw NotCommutable("commute_once: neither identity applies");

    const int nv = n_;
    const ExponentPoly one = ExponentPoly::constant(nv, Rational(1));
    UeaElement out;
    if (first_ok) {
      GenIndex b = R.gen;
      const ExponentPoly& mexp = R.exp;
      AlgebraElement ad = AlgebraElement::basis(L.gen);
      for (long k = 0;; ++k) {
        if (k > 0) ad = alg_->bracket(AlgebraElement::basis(b), ad);
        if (ad.is_zero()) break;
        if (k > kMaxAd) throw ReductionError("commute_once: runaway ad-series");
        ExponentPoly binom = ExponentPoly::binomial(mexp, k);
        Rational sign((k % 2 == 0) ? 1 : -1);
        for (const auto& [h, c] : ad.terms) {
          UeaMonomial t;
          t.factors.reserve(m.factors.size() + 2);
          for (size_t s = 0; s < j; ++s) t.factors.push_back(m.factors[s]);
          t.factors.push_back({L.gen, L.exp.shifted(Rational(-1))});
          t.factors.push_back({b, mexp.shifted(Rational(-static_cast<long>(k)))});
          t.factors.push_back({h, one});
          for (size_t s = j + 2; s < m.factors.size(); ++s) t.factors.push_back(m.factors[s]);
          out.add(normalized(t), binom.scaled(c * sign));
        }
      }
    } else {
      GenIndex b = L.gen;
      const ExponentPoly& mexp = L.exp;
      AlgebraElement ad = AlgebraElement::basis(R.gen);
      for (long k = 0;; ++k) {
        if (k > 0) ad = alg_->bracket(AlgebraElement::basis(b), ad);
        if (ad.is_zero()) break;
        if (k > kMaxAd) throw ReductionError("commute_once: runaway ad-series");
        ExponentPoly binom = ExponentPoly::binomial(mexp, k);
        for (const auto& [h, c] : ad.terms) {
          UeaMonomial t;
          t.factors.reserve(m.factors.size() + 2);
          for (size_t s = 0; s < j; ++s) t.factors.push_back(m.factors[s]);
          t.factors.push_back({h, one});
          t.factors.push_back({b, mexp.shifted(Rational(-static_cast<long>(k)))});
          t.factors.push_back({R.gen, R.exp.shifted(Rational(-1))});
          for (size_t s = j + 2; s < m.factors.size(); ++s) t.factors.push_back(m.factors[s]);
          out.add(normalized(t), binom.scaled(c));
        }
      }
    }
    return out;
  }

  /// Full reduction: repeatedly normalizes each monomial and rewrites its
  /// first applicable adjacent pair until every monomial is reduced.
  /// Throws ReductionError on stuck monomials or budget exhaustion.
  UeaElement reduce(const UeaElement& e, long step_budget = 1000000) const {
    UeaElement out;
    std::deque<std::pair<UeaMonomial, ExponentPoly>> work;
    for (const auto& [m, c] : e.terms) work.emplace_back(normalized(m), c);
    long steps = 0;
    while (!work.empty()) {
      auto [m, c] = std::move(work.front());
      work.pop_front();
      if (c.is_zero()) continue;
      bool fired = false;
      for (size_t j = 0; j + 1 < m.factors.size(); ++j) {
        const UeaFactor& L = m.factors[j];
        const UeaFactor& R = m.factors[j + 1];
        if (gen_rank(L.gen) <= gen_rank(R.gen)) continue;
        bool first_ok = L.exp.is_pos_int_constant() && alg_->is_root_vector(R.gen);
        bool second_ok = R.exp.is_pos_int_constant() && alg_->is_root_vector(L.gen);
        if (!first_ok && !second_ok) continue;
        if (++steps > step_budget) throw ReductionError("reduce: step budget exhausted");
        UeaElement expanded = commute_once(m, j);
        for (const auto& [mm, cc] : expanded.terms) work.emplace_back(mm, cc * c);
        fired = true;
        break;
      }
      if (!fired) {
        if (!is_reduced(m))
          throw ReductionError("reduce: stuck non-reduced monomial (malformed input)");
        out.add(m, c);
      }
    }
    return out;
  }

  /// Reduction of g times the generic word: the raw material of the
  /// operator realization.
  UeaElement generic_product(GenIndex g, long step_budget = 1000000) const {
    return reduce(generic_product_input(g), step_budget);
  }

 private:
  static constexpr long kMaxAd = 64;

  const ChevalleyAlgebra* alg_;
  const ParabolicDatum* par_;
  int n_;
  std::map<GenIndex, int> rank_;
};

}  // namespace parweyl
