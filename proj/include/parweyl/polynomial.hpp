#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "parweyl/rational.hpp"
#include "parweyl/rootsystem.hpp"  // IntVec

namespace parweyl {

/// Thrown when a falling-factorial division leaves a remainder (Lemma-level
/// compatibility failure) or a linear division is inexact.
struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables; used both for exponent polynomials p(a_1..a_n) and for
/// elements of the polynomial module S_n = C[x_1..x_n].
class ExponentPoly {
 public:
  explicit ExponentPoly(int nvars = 0) : nvars_(nvars) {}

  static ExponentPoly zero(int nvars) { return ExponentPoly(nvars); }

  static ExponentPoly constant(int nvars, Rational c) {
    ExponentPoly p(nvars);
    p.add_term(IntVec(nvars, 0), std::move(c));
    return p;
  }

  /// The monomial c * prod a_j^{deg_j}.
  static ExponentPoly monomial(IntVec deg, Rational c) {
    ExponentPoly p(static_cast<int>(deg.size()));
    p.add_term(std::move(deg), std::move(c));
    return p;
  }

  /// Variable a_j, 1-based.
  static ExponentPoly variable(int nvars, int j) {
    IntVec d(nvars, 0);
    d.at(j - 1) = 1;
    return monomial(std::move(d), Rational(1));
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IntVec, Rational>& terms() const { return terms_; }
  size_t num_terms() const { return terms_.size(); }

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, vec_sum(m));
    return d;
  }

  void add_term(IntVec deg, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(deg), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ExponentPoly& operator+=(const ExponentPoly& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  ExponentPoly& operator-=(const ExponentPoly& o) {
    check_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend ExponentPoly operator+(ExponentPoly a, const ExponentPoly& b) { a += b; return a; }
  friend ExponentPoly operator-(ExponentPoly a, const ExponentPoly& b) { a -= b; return a; }

  ExponentPoly operator-() const {
    ExponentPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend ExponentPoly operator*(const ExponentPoly& a, const ExponentPoly& b) {
    a.check_vars(b);
    ExponentPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        IntVec m(a.nvars_);
        for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(std::move(m), ca * cb);
      }
    return r;
  }

  ExponentPoly& operator*=(const ExponentPoly& o) { return *this = *this * o; }

  ExponentPoly scaled(const Rational& s) const {
    ExponentPoly r(nvars_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
  }

  /// Adds the constant c (in place, convenience).
  ExponentPoly shifted(const Rational& c) const {
    ExponentPoly r = *this;
    r.add_term(IntVec(nvars_, 0), c);
    return r;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && vec_sum(terms_.begin()->first) == 0);
  }

  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("ExponentPoly: not a constant");
    return terms_.begin()->second;
  }

  /// The constant value if the polynomial is a nonnegative-integer constant.
  bool is_nonneg_int_constant() const {
    return is_constant() && constant_value_or_zero().is_nonneg_integer();
  }
  bool is_pos_int_constant() const {
    return is_constant() && constant_value_or_zero().is_pos_integer();
  }

  Rational eval(const std::vector<Rational>& a) const {
    if (static_cast<int>(a.size()) != nvars_)
      throw std::invalid_argument("ExponentPoly::eval: wrong arity");
    Rational s(0);
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < m[i]; ++k) t *= a[i];
      s += t;
    }
    return s;
  }

  Rational eval_int(const IntVec& a) const {
    std::vector<Rational> v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = Rational(a[i]);
    return eval(v);
  }

  /// Exact division by (a_j - t), 1-based j; throws NotDivisible if the
  /// remainder is nonzero.
  ExponentPoly divide_linear(int j, long t) const {
    // Horner in a_j with polynomial coefficients in the other variables.
    int D = 0;
    for (const auto& [m, c] : terms_) D = std::max(D, m[j - 1]);
    if (D == 0) {
      if (is_zero()) return *this;
      throw NotDivisible("divide_linear: no a_" + std::to_string(j) + " present");
    }
    std::vector<ExponentPoly> coeff(D + 1, ExponentPoly(nvars_));
    for (const auto& [m, c] : terms_) {
      IntVec stripped = m;
      int d = stripped[j - 1];
      stripped[j - 1] = 0;
      coeff[d].add_term(std::move(stripped), c);
    }
    std::vector<ExponentPoly> q(D, ExponentPoly(nvars_));
    ExponentPoly carry = coeff[D];
    for (int d = D; d-- > 0;) {
      q[d] = carry;
      carry = coeff[d] + carry.scaled(Rational(t));
    }
    if (!carry.is_zero()) throw NotDivisible("divide_linear: nonzero remainder");
    ExponentPoly r(nvars_);
    for (int d = 0; d < D; ++d)
      for (const auto& [m, c] : q[d].terms_) {
        IntVec mm = m;
        mm[j - 1] = d;
        r.add_term(std::move(mm), c);
      }
    return r;
  }

  /// Exact division by prod_{k: b_k > 0} a_k (a_k - 1) ... (a_k - b_k + 1);
  /// throws NotDivisible if any factor fails.
  ExponentPoly divide_falling(const IntVec& b) const {
    if (static_cast<int>(b.size()) != nvars_)
      throw std::invalid_argument("divide_falling: wrong arity");
    ExponentPoly p = *this;
    for (int k = 1; k <= nvars_; ++k)
      for (long t = 0; t < b[k - 1]; ++t) p = p.divide_linear(k, t);
    return p;
  }

  bool divisible_falling(const IntVec& b) const {
    try {
      divide_falling(b);
      return true;
    } catch (const NotDivisible&) {
      return false;
    }
  }

  /// Binomial coefficient C(p, k) = p (p-1) ... (p-k+1) / k! as a polynomial.
  static ExponentPoly binomial(const ExponentPoly& p, long k) {
    if (k < 0) return ExponentPoly::zero(p.nvars());
    ExponentPoly r = ExponentPoly::constant(p.nvars(), Rational(1));
    for (long t = 0; t < k; ++t) r *= p.shifted(Rational(-t));
    return r.scaled(Rational(1) / factorial(k));
  }

  friend bool operator==(const ExponentPoly& a, const ExponentPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const ExponentPoly& a, const ExponentPoly& b) { return !(a == b); }

  /// Total order (arity, then term maps); used as a map key.
  friend bool operator<(const ExponentPoly& a, const ExponentPoly& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    return a.terms_ < b.terms_;
  }

 private:
  Rational constant_value_or_zero() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  void check_vars(const ExponentPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("ExponentPoly: arity mismatch");
  }

  int nvars_;
  std::map<IntVec, Rational> terms_;
};

}  // namespace parweyl
