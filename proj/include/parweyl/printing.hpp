#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "parweyl/embedding.hpp"

namespace parweyl {

enum class PrintStyle { text, latex };

namespace detail {

inline int ht(const IntVec& v) { return vec_sum(v); }

/// print order for exponent vectors: total degree descending, then
/// right-to-left lexicographic descending
inline bool print_before(const IntVec& a, const IntVec& b) {
  if (ht(a) != ht(b)) return ht(a) > ht(b);
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

inline std::string coeff_str(const Rational& c, bool leading, bool with_one, PrintStyle st) {
  std::string body;
  if (st == PrintStyle::latex && !c.is_integer()) {
    Rational a = c.sign() < 0 ? -c : c;
    std::string s = a.str();
    auto slash = s.find('/');
    body = "\\tfrac{" + s.substr(0, slash) + "}{" + s.substr(slash + 1) + "}";
    if (c.sign() < 0) body = "-" + body;
  } else {
    body = c.str();
  }
  bool is_one = (c == Rational(1));
  bool is_mone = (c == Rational(-1));
  if (!with_one && is_one) body = "";
  if (!with_one && is_mone) body = "-";
  if (leading) return body;
  if (!body.empty() && body[0] == '-') return (st == PrintStyle::text ? " - " : "-") + body.substr(1);
  return (st == PrintStyle::text ? " + " : "+") + body;
}

inline void append_power(std::string& out, const std::string& base, int idx, int exp,
                         PrintStyle st) {
  if (exp == 0) return;
  if (st == PrintStyle::text) {
    if (!out.empty()) out += " ";
    out += base + std::to_string(idx);
    if (exp > 1) out += "^" + std::to_string(exp);
  } else {
    out += base + "_{" + std::to_string(idx) + "}";
    if (exp > 1) out += "^{" + std::to_string(exp) + "}";
  }
}

}  // namespace detail

/// Scalar Weyl operator, e.g. "-3 x2 d4 d5^3 + 9 x1 d4^2 d5^2" or its
/// LaTeX form "-3x_{2}\partial_{4}\partial_{5}^{3}+...".
inline std::string to_string(const WeylOp& op, PrintStyle st = PrintStyle::text) {
  if (op.is_zero()) return "0";
  std::vector<const std::pair<const WeylOp::Key, Rational>*> terms;
  for (const auto& t : op.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [](auto* a, auto* b) {
    const auto& [Aa, Ba] = a->first;
    const auto& [Ab, Bb] = b->first;
    if (Ba != Bb) return detail::print_before(Ba, Bb);
    return detail::print_before(Aa, Ab);
  });
  std::string out;
  bool leading = true;
  for (auto* t : terms) {
    const auto& [A, B] = t->first;
    std::string vars;
    for (size_t i = 0; i < A.size(); ++i)
      detail::append_power(vars, st == PrintStyle::text ? "x" : "x", static_cast<int>(i) + 1, A[i],
                           st);
    for (size_t i = 0; i < B.size(); ++i)
      detail::append_power(vars, st == PrintStyle::text ? "d" : "\\partial", static_cast<int>(i) + 1,
                           B[i], st);
    std::string c = detail::coeff_str(t->second, leading, vars.empty(), st);
    out += c;
    if (!vars.empty()) {
      if (st == PrintStyle::text && !c.empty() && c != "-" && c.back() != ' ') out += " ";
      out += vars;
    }
    leading = false;
  }
  return out;
}

/// Chevalley generator name: g_{k} for root vectors, h_{i} for Cartans.
inline std::string gen_str(const ChevalleyAlgebra& alg, GenIndex g, PrintStyle st = PrintStyle::text) {
  std::string base, idx;
  if (alg.is_cartan(g)) {
    base = "h";
    idx = std::to_string(alg.cartan_sub(g));
  } else {
    base = "g";
    idx = std::to_string(g);
  }
  if (st == PrintStyle::latex) return base + "_{" + idx + "}";
  return base + "_{" + idx + "}";
}

/// Lie algebra element in the basis, compact table-cell style:
/// "3g_{-6}", "-h_{1}-2/3h_{2}".
inline std::string to_string(const ChevalleyAlgebra& alg, const AlgebraElement& e,
                             PrintStyle st = PrintStyle::text) {
  if (e.is_zero()) return "0";
  // iterate in basis order: g_{-N}..g_{-1}, h_1..h_r, g_1..g_N
  std::string out;
  for (GenIndex g : alg.basis()) {
    auto it = e.terms.find(g);
    if (it == e.terms.end()) continue;
    const Rational& c = it->second;
    std::string body;
    if (c == Rational(1))
      body = "";
    else if (c == Rational(-1))
      body = "-";
    else if (st == PrintStyle::latex && !c.is_integer())
      body = detail::coeff_str(c, true, true, st);
    else
      body = c.str();
    if (!out.empty() && (body.empty() || body[0] != '-')) out += "+";
    out += body + gen_str(alg, g, st);
  }
  return out;
}

/// Polynomial in the exponent variables a_1..a_n, e.g. "3a4 a5 - a4 + 2".
inline std::string to_string(const ExponentPoly& p, PrintStyle st = PrintStyle::text) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const IntVec, Rational>*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [](auto* a, auto* b) { return detail::print_before(a->first, b->first); });
  std::string out;
  bool leading = true;
  for (auto* t : terms) {
    std::string vars;
    for (size_t i = 0; i < t->first.size(); ++i)
      detail::append_power(vars, "a", static_cast<int>(i) + 1, t->first[i], st);
    std::string c = detail::coeff_str(t->second, leading, vars.empty(), st);
    out += c;
    if (!vars.empty()) {
      if (st == PrintStyle::text && !c.empty() && c != "-" && c.back() != ' ') out += " ";
      out += vars;
    }
    leading = false;
  }
  return out;
}

/// One monomial of the enveloping algebra with symbolic exponents, word
/// letters shown as u_t, e.g. "u1^{a1} u2^{a2+1} g_{2}".
inline std::string to_string(const UeaMonomial& m, const Uea& U, PrintStyle st = PrintStyle::text) {
  const ParabolicDatum& par = U.parabolic();
  const ChevalleyAlgebra& alg = par.algebra();
  std::string out;
  for (const UeaFactor& f : m.factors) {
    std::string head;
    int pos = par.word_pos(f.gen);
    if (pos > 0)
      head = (st == PrintStyle::text ? "u" + std::to_string(pos) : "u_{" + std::to_string(pos) + "}");
    else
      head = gen_str(alg, f.gen, st);
    std::string e = to_string(f.exp, st);
    if (!(f.exp.is_constant() && f.exp.constant_value() == Rational(1))) head += "^{" + e + "}";
    if (!out.empty() && st == PrintStyle::text) out += " ";
    out += head;
  }
  return out.empty() ? "1" : out;
}

/// Element of the enveloping algebra: polynomial coefficients times
/// symbolic-exponent monomials.
inline std::string to_string(const UeaElement& e, const Uea& U, PrintStyle st = PrintStyle::text) {
  if (e.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& [m, c] : e.terms) {
    std::string cs;
    bool paren = c.terms().size() > 1;
    if (paren) {
      cs = (leading ? "" : (st == PrintStyle::text ? " + " : "+"));
      cs += "(" + to_string(c, st) + ")";
    } else {
      cs = detail::coeff_str(c.terms().begin()->second, leading, false, st);
      std::string vars;
      for (size_t i = 0; i < c.terms().begin()->first.size(); ++i)
        detail::append_power(vars, "a", static_cast<int>(i) + 1, c.terms().begin()->first[i], st);
      cs += vars;
    }
    out += cs;
    if (st == PrintStyle::text && !cs.empty() && cs.back() != ' ') out += " ";
    out += to_string(m, U, st);
    leading = false;
  }
  return out;
}

/// Matrix-valued operator.  Scalar part only when dim V = 1; otherwise one
/// line (or LaTeX matrix entry) per nonzero matrix position.
inline std::string to_string(const WeylMatOp& op, PrintStyle st = PrintStyle::text) {
  const int d = op.dim();
  if (d == 1) {
    WeylOp w(op.nvars());
    for (const auto& [key, M] : op.terms()) w = w + WeylOp::monomial(key.first, key.second, M.at(0, 0));
    return to_string(w, st);
  }
  std::string out;
  for (int r = 0; r < d; ++r)
    for (int s = 0; s < d; ++s) {
      WeylOp w(op.nvars());
      for (const auto& [key, M] : op.terms())
        if (!M.at(r, s).is_zero()) w = w + WeylOp::monomial(key.first, key.second, M.at(r, s));
      if (w.is_zero()) continue;
      if (st == PrintStyle::text) {
        out += "  [" + std::to_string(r + 1) + "," + std::to_string(s + 1) + "] " +
               to_string(w, st) + "\n";
      } else {
        if (!out.empty()) out += "+";
        out += "E_{" + std::to_string(r + 1) + std::to_string(s + 1) + "}\\otimes\\left(" +
               to_string(w, st) + "\\right)";
      }
    }
  if (out.empty()) return "0";
  return out;
}

/// Full bracket table in the Chevalley basis, one row per generator;
/// columns separated by " | " (text) or "&" (latex).
inline std::string bracket_table(const ChevalleyAlgebra& alg, PrintStyle st = PrintStyle::text) {
  std::vector<GenIndex> basis = alg.basis();
  std::ostringstream os;
  const char* sep = st == PrintStyle::text ? " | " : " & ";
  os << "[.,.]";
  for (GenIndex b : basis) os << sep << gen_str(alg, b, st);
  os << (st == PrintStyle::latex ? " \\\\" : "") << "\n";
  for (GenIndex a : basis) {
    os << gen_str(alg, a, st);
    for (GenIndex b : basis) os << sep << to_string(alg, alg.bracket(a, b), st);
    os << (st == PrintStyle::latex ? " \\\\" : "") << "\n";
  }
  return os.str();
}

}  // namespace parweyl
