#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "parweyl/polynomial.hpp"
#include "parweyl/rational.hpp"
#include "parweyl/rootsystem.hpp"

namespace parweyl {

/// Element of the Weyl algebra W_n = C<x_1..x_n, d_1..d_n> with
/// [d_j, x_i] = delta_ij, stored in normal order (all x left of all d):
/// a finite sum of c * x^A d^B keyed by (A, B).
class WeylOp {
 public:
  using Key = std::pair<IntVec, IntVec>;  // (A, B)

  explicit WeylOp(int nvars = 0) : nvars_(nvars) {}

  static WeylOp zero(int nvars) { return WeylOp(nvars); }

  static WeylOp monomial(IntVec A, IntVec B, Rational c) {
    if (A.size() != B.size()) throw std::invalid_argument("WeylOp: A/B arity mismatch");
    WeylOp w(static_cast<int>(A.size()));
    w.add_term(std::move(A), std::move(B), std::move(c));
    return w;
  }

  static WeylOp one(int nvars) {
    return monomial(IntVec(nvars, 0), IntVec(nvars, 0), Rational(1));
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rational>& terms() const { return terms_; }
  size_t num_terms() const { return terms_.size(); }

  void add_term(IntVec A, IntVec B, const Rational& c) {
    if (c.is_zero()) return;
    for (int e : A)
      if (e < 0) throw std::invalid_argument("WeylOp: negative x exponent");
    for (int e : B)
      if (e < 0) throw std::invalid_argument("WeylOp: negative d exponent");
    Key k{std::move(A), std::move(B)};
    auto [it, fresh] = terms_.try_emplace(std::move(k), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  WeylOp& operator+=(const WeylOp& o) {
    check_vars(o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  WeylOp& operator-=(const WeylOp& o) {
    check_vars(o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { a += b; return a; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { a -= b; return a; }

  WeylOp scaled(const Rational& s) const {
    WeylOp r(nvars_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
  }

  /// Operator composition: (a * b)(f) = a(b(f)); the right factor acts
  /// first.
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b) {
    a.check_vars(b);
    WeylOp r(a.nvars_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) mul_monomials(r, ka, ca, kb, cb);
    return r;
  }

  friend WeylOp commutator(const WeylOp& a, const WeylOp& b) { return a * b - b * a; }

  /// Applies the operator to a polynomial in x (same arity).
  ExponentPoly apply(const ExponentPoly& f) const {
    if (f.nvars() != nvars_) throw std::invalid_argument("WeylOp::apply: arity mismatch");
    ExponentPoly out(nvars_);
    for (const auto& [k, c] : terms_) {
      const IntVec& A = k.first;
      const IntVec& B = k.second;
      for (const auto& [m, cm] : f.terms()) {
        Rational coeff = c * cm;
        IntVec res = m;
        bool dead = false;
        for (int i = 0; i < nvars_ && !dead; ++i) {
          if (B[i] > m[i]) {
            dead = true;
            break;
          }
          for (int t = 0; t < B[i]; ++t) coeff *= Rational(m[i] - t);
          res[i] = m[i] - B[i] + A[i];
        }
        if (!dead) out.add_term(std::move(res), coeff);
      }
    }
    return out;
  }

  friend bool operator==(const WeylOp& a, const WeylOp& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const WeylOp& a, const WeylOp& b) { return !(a == b); }

 private:
  // r += ca*cb * (x^Aa d^Ba) (x^Ab d^Bb) in normal order:
  // sum over K <= min(Ba, Ab) of prod_i C(Ba_i,K_i) C(Ab_i,K_i) K_i! *
  // x^{Aa+Ab-K} d^{Ba+Bb-K}.
  static void mul_monomials(WeylOp& r, const Key& ka, const Rational& ca, const Key& kb,
                            const Rational& cb) {
    int n = r.nvars_;
    const IntVec &Aa = ka.first, &Ba = ka.second, &Ab = kb.first, &Bb = kb.second;
    std::vector<int> active;
    for (int i = 0; i < n; ++i)
      if (Ba[i] > 0 && Ab[i] > 0) active.push_back(i);
    IntVec K(n, 0);
    Rational base = ca * cb;
    // odometer over K restricted to active coordinates
    for (;;) {
      Rational coeff = base;
      IntVec A(n), B(n);
      for (int i = 0; i < n; ++i) {
        A[i] = Aa[i] + Ab[i] - K[i];
        B[i] = Ba[i] + Bb[i] - K[i];
      }
      for (int i : active)
        if (K[i] > 0) coeff *= binomial_ll(Ba[i], K[i]) * binomial_ll(Ab[i], K[i]) * factorial(K[i]);
      r.add_term(std::move(A), std::move(B), coeff);
      size_t pos = 0;
      for (; pos < active.size(); ++pos) {
        int i = active[pos];
        if (K[i] < std::min(Ba[i], Ab[i])) {
          ++K[i];
          break;
        }
        K[i] = 0;
      }
      if (pos == active.size()) break;
    }
  }

  void check_vars(const WeylOp& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("WeylOp: arity mismatch");
  }

  int nvars_;
  std::map<Key, Rational> terms_;
};

/// One (p, b) entry of the data defining a raw operator: the exponent
/// polynomial p(a_1..a_n) and the shift b in Z^n, meaning a summand
/// p(a) x^{a-b} of the action on x^a.
struct OmegaEntry {
  ExponentPoly p;
  IntVec b;
};

/// Normal-form differential operator with the prescribed action
///   x^a |-> sum_i p_i(a) x^{a - b_i},
/// built entrywise: p' = p / prod_{b_k>0} falling(a_k, b_k) (throws
/// NotDivisible when the compatibility condition fails), bbar = min(b, 0),
/// the monomial map a^m |-> prod x_k^{-bbar_k} (x_1 d_1)^{m_1} ... and the
/// derivative part prod d_k^{b_k^+} composed as the leftmost factor.
inline WeylOp omega(int nvars, const std::vector<OmegaEntry>& data) {
  WeylOp result(nvars);
  // cache of (x_i d_i)^m
  std::map<std::pair<int, int>, WeylOp> powers;
  auto xd_power = [&](int i, int m) -> const WeylOp& {
    auto it = powers.find({i, m});
    if (it != powers.end()) return it->second;
    IntVec e(nvars, 0);
    e[i] = 1;
    WeylOp xd = WeylOp::monomial(e, e, Rational(1));
    WeylOp w = WeylOp::one(nvars);
    for (int k = 1; k <= m; ++k) {
      w = w * xd;
      powers.emplace(std::make_pair(i, k), w);
    }
    return powers.emplace(std::make_pair(i, m), std::move(w)).first->second;
  };

  for (const auto& entry : data) {
    if (static_cast<int>(entry.b.size()) != nvars)
      throw std::invalid_argument("omega: shift arity mismatch");
    IntVec bplus(nvars, 0), bbar(nvars, 0);
    for (int i = 0; i < nvars; ++i) {
      bplus[i] = std::max(entry.b[i], 0);
      bbar[i] = std::min(entry.b[i], 0);
    }
    ExponentPoly pp = entry.p.divide_falling(bplus);
    IntVec xneg(nvars);
    for (int i = 0; i < nvars; ++i) xneg[i] = -bbar[i];
    WeylOp body(nvars);
    for (const auto& [m, c] : pp.terms()) {
      WeylOp t = WeylOp::monomial(xneg, IntVec(nvars, 0), c);
      for (int i = 0; i < nvars; ++i)
        if (m[i] > 0) t = t * xd_power(i, m[i]);
      body += t;
    }
    WeylOp deriv = WeylOp::monomial(IntVec(nvars, 0), bplus, Rational(1));
    result += deriv * body;
  }
  return result;
}

}  // namespace parweyl
