#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace parweyl {

/// Number of Rational arithmetic operations (+, -, *, /) performed on the
/// calling thread since the last reset.  Compound assignments count once;
/// negation and comparisons are not counted.  Informational (bench output).
inline std::uint64_t& rational_op_count() {
  thread_local std::uint64_t count = 0;
  return count;
}

inline void reset_rational_op_count() { rational_op_count() = 0; }

/// Exact rational number: thin wrapper over GMP's mpq_class adding the
/// thread-local operation counter.  Always kept canonical (gcd 1, den > 0).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}    // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) {}
  explicit Rational(mpq_class&& v) : v_(std::move(v)) {}

  /// Parses "p", "-p", "p/q" (optional sign on p).
  static Rational from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
  }

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_nonneg_integer() const { return is_integer() && sign() >= 0; }
  bool is_pos_integer() const { return is_integer() && sign() > 0; }

  /// Value as long; requires an integer that fits.
  long as_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
      throw std::domain_error("Rational: not a machine integer: " + str());
    return v_.get_num().get_si();
  }

  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { ++rational_op_count(); v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { ++rational_op_count(); v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { ++rational_op_count(); v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    ++rational_op_count();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  mpq_class v_;
};

/// n! as a Rational (small n).
inline Rational factorial(long n) {
  Rational r(1);
  for (long k = 2; k <= n; ++k) r *= Rational(k);
  return r;
}

/// Binomial coefficient C(n, k) for machine integers (small).
inline Rational binomial_ll(long n, long k) {
  if (k < 0) return Rational(0);
  Rational r(1);
  for (long t = 0; t < k; ++t) r *= Rational(n - t);
  return r / factorial(k);
}

}  // namespace parweyl
