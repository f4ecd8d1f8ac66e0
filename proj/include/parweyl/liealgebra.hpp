#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parweyl/rational.hpp"
#include "parweyl/rootsystem.hpp"

namespace parweyl {

/// Basis element id of a Chevalley-Weyl basis:
///   +k / -k  (1 <= k <= N): root vectors g_k, g_{-k} (N = number of
///            positive roots),
///   N + i    (1 <= i <= rank): Cartan generator h_i = t_{alpha_i}, the
///            element of the Cartan subalgebra representing alpha_i under
///            the invariant form with short roots of length^2 = 2.
/// With this normalization [h_i, g_alpha] = (alpha, alpha_i) g_alpha and
/// [g_alpha, g_{-alpha}] = alpha^vee expands over h_i with rational
/// coefficients 2 m_i / (alpha, alpha).
using GenIndex = int;

/// Finite linear combination of basis elements, exact coefficients.
struct AlgebraElement {
  std::map<GenIndex, Rational> terms;

  static AlgebraElement zero() { return {}; }
  static AlgebraElement basis(GenIndex g, Rational c = Rational(1)) {
    AlgebraElement e;
    if (!c.is_zero()) e.terms[g] = std::move(c);
    return e;
  }

  bool is_zero() const { return terms.empty(); }

  void add(GenIndex g, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(g, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  void add(const AlgebraElement& o, const Rational& scale = Rational(1)) {
    if (scale.is_zero()) return;
    for (const auto& [g, c] : o.terms) add(g, c * scale);
  }

  AlgebraElement scaled(const Rational& s) const {
    AlgebraElement r;
    r.add(*this, s);
    return r;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms == b.terms;
  }
};

/// Simple Lie algebra in a Chevalley-Weyl basis with integral root-vector
/// structure constants fixed by the extraspecial-pair convention:
/// N_{alpha,beta} = p+1 > 0 on extraspecial pairs, everything else derived
/// from antisymmetry, N_{-a,-b} = -N_{a,b}, and the zero-sum
/// proportionality N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b) for
/// a+b+c = 0.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(SimpleType t) : rs_(t), N_(rs_.num_positive()) {
    build_special_constants();
  }

  const RootSystem& roots() const { return rs_; }
  const SimpleType& type() const { return rs_.type(); }
  int rank() const { return rs_.rank(); }
  int num_positive() const { return N_; }
  int dim() const { return rs_.dim(); }

  bool is_cartan(GenIndex g) const { return g > N_; }
  bool is_root_vector(GenIndex g) const { return g != 0 && !is_cartan(g) && std::abs(g) <= N_; }
  GenIndex cartan_gen(int i) const { return N_ + i; }     // h_i, 1-based
  int cartan_sub(GenIndex g) const { return g - N_; }     // h index of a Cartan id

  /// Signed root coordinates of a root-vector id.
  IntVec weight(GenIndex g) const {
    if (!is_root_vector(g)) return IntVec(rank(), 0);
    return rs_.root(g);
  }

  /// All basis ids in a fixed order: g_{-N}..g_{-1}, h_1..h_r, g_1..g_N
  /// (the bracket-table row order).
  std::vector<GenIndex> basis() const {
    std::vector<GenIndex> b;
    b.reserve(dim());
    for (int k = N_; k >= 1; --k) b.push_back(-k);
    for (int i = 1; i <= rank(); ++i) b.push_back(cartan_gen(i));
    for (int k = 1; k <= N_; ++k) b.push_back(k);
    return b;
  }

  /// Structure constant N_{a,b} for signed root indices whose roots sum to a
  /// root.
  Rational structure_N(int sa, int sb) const {
    if (sa > 0 && sb > 0) {
      if (sa < sb) return special_.at({sa, sb});
      return -special_.at({sb, sa});
    }
    if (sa < 0 && sb < 0) return -structure_N(-sa, -sb);
    if (sa < 0) return structure_mixed_flip(sa, sb);  // N_{-e,d} = -N_{d,-e}
    return structure_mixed(sa, -sb);
  }

  /// [basis a, basis b] as an element.
  AlgebraElement bracket(GenIndex a, GenIndex b) const {
    if (is_cartan(a) && is_cartan(b)) return AlgebraElement::zero();
    if (is_cartan(a)) {
      IntVec beta = weight(b);
      long c = rs_.inner(beta, simple_coords(cartan_sub(a)));
      return AlgebraElement::basis(b, Rational(c));
    }
    if (is_cartan(b)) {
      IntVec alpha = weight(a);
      long c = rs_.inner(alpha, simple_coords(cartan_sub(b)));
      return AlgebraElement::basis(a, Rational(-c));
    }
    // two root vectors
    IntVec alpha = weight(a), beta = weight(b);
    IntVec sum(rank());
    bool zero_sum = true;
    for (int i = 0; i < rank(); ++i) {
      sum[i] = alpha[i] + beta[i];
      zero_sum = zero_sum && sum[i] == 0;
    }
    if (zero_sum) {
      // [g_alpha, g_{-alpha}] = alpha^vee = sum_i (2 alpha_i-coord / (alpha,alpha)) h_i
      AlgebraElement e;
      Rational n2(rs_.norm2(alpha));
      for (int i = 1; i <= rank(); ++i) {
        if (alpha[i - 1] == 0) continue;
        e.add(cartan_gen(i), Rational(2L * alpha[i - 1]) / n2);
      }
      return e;
    }
    int s = rs_.index_of(sum);
    if (s == 0) return AlgebraElement::zero();
    return AlgebraElement::basis(s, structure_N(a, b));
  }

  /// Bilinear extension.
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const {
    AlgebraElement r;
    for (const auto& [a, ca] : x.terms)
      for (const auto& [b, cb] : y.terms) r.add(bracket(a, b), ca * cb);
    return r;
  }

  /// Jacobi defect [[a,b],c] + [[b,c],a] + [[c,a],b]; zero iff the identity
  /// holds on the triple.
  AlgebraElement jacobi_defect(GenIndex a, GenIndex b, GenIndex c) const {
    AlgebraElement r;
    r.add(bracket(bracket(a, b), AlgebraElement::basis(c)));
    r.add(bracket(bracket(b, c), AlgebraElement::basis(a)));
    r.add(bracket(bracket(c, a), AlgebraElement::basis(b)));
    return r;
  }

  std::string gen_name(GenIndex g) const {
    std::ostringstream os;
    if (is_cartan(g))
      os << "h_" << cartan_sub(g);
    else
      os << "g_" << g;
    return os.str();
  }

 private:
  IntVec simple_coords(int i) const {
    IntVec v(rank(), 0);
    v[i - 1] = 1;
    return v;
  }

  // N_{d, -e} for positive root indices d != e with root(d)-root(e) a root.
  Rational structure_mixed(int d, int e) const {
    IntVec D = rs_.root(d), E = rs_.root(e);
    IntVec diff(rank());
    for (int i = 0; i < rank(); ++i) diff[i] = D[i] - E[i];
    int s = rs_.index_of(diff);
    if (s == 0) throw std::logic_error("structure_mixed: difference not a root");
    if (s > 0) {
      // triple (d, -e, -s), e + s = d:  N_{d,-e} = -(s,s)/(d,d) * N_{e,s}
      Rational r = Rational(rs_.norm2(rs_.root(s))) / Rational(rs_.norm2(D));
      return -(r * structure_N(e, s));
    }
    // diff = -g, g = -s > 0, g + d = e:  N_{d,-e} = (g,g)/(e,e) * N_{g,d}
    int g = -s;
    Rational r = Rational(rs_.norm2(rs_.root(g))) / Rational(rs_.norm2(E));
    return r * structure_N(g, d);
  }

  Rational structure_mixed_flip(int sa, int sb) const {
    // sa < 0 < sb: N_{sa, sb} = -N_{sb, sa} = -N_{sb, -(-sa)}
    return -structure_mixed(sb, -sa);
  }

  void build_special_constants() {
    // Process positive roots in graded-lex (index) order; all mixed lookups
    // recurse only into constants whose sum root has smaller height.
    for (int g = 1; g <= N_; ++g) {
      const IntVec& gamma = rs_.positive_root(g);
      if (rs_.height(gamma) < 2) continue;
      // extraspecial pair: minimal first component
      int a1 = 0, b1 = 0;
      std::vector<std::pair<int, int>> decomps;
      for (int a = 1; a < g; ++a) {
        IntVec rest(rank());
        for (int i = 0; i < rank(); ++i) rest[i] = gamma[i] - rs_.positive_root(a)[i];
        int b = rs_.index_of(rest);
        if (b <= 0) continue;
        if (a < b) decomps.emplace_back(a, b);
      }
      if (decomps.empty()) throw std::logic_error("no decomposition of a non-simple root");
      a1 = decomps.front().first;
      b1 = decomps.front().second;
      {
        int p = rs_.string_down(rs_.positive_root(b1), rs_.positive_root(a1));
        special_[{a1, b1}] = Rational(p + 1);
      }
      Rational n11 = special_.at({a1, b1});
      for (size_t t = 1; t < decomps.size(); ++t) {
        auto [ia, ib] = decomps[t];
        // Jacobi on [[e_{a1}, e_{b1}], e_{-alpha}] with alpha = root(ia):
        //   N_{a1,b1} N_{gamma,-alpha} =
        //       [b1-alpha root] N_{b1,-alpha} N_{a1, b1-alpha}
        //     - [a1-alpha root] N_{a1,-alpha} N_{b1, a1-alpha}
        // and N_{gamma,-alpha} = -(beta,beta)/(gamma,gamma) N_{alpha,beta}.
        const IntVec A = rs_.positive_root(ia);
        const IntVec B = rs_.positive_root(ib);
        Rational rhs(0);
        {
          IntVec v = rs_.positive_root(b1);
          for (int i = 0; i < rank(); ++i) v[i] -= A[i];
          int s = rs_.index_of(v);
          if (s != 0) rhs += structure_mixed(b1, ia) * structure_N(a1, s);
        }
        {
          IntVec v = rs_.positive_root(a1);
          for (int i = 0; i < rank(); ++i) v[i] -= A[i];
          int s = rs_.index_of(v);
          if (s != 0) rhs -= structure_mixed(a1, ia) * structure_N(b1, s);
        }
        Rational n = -(Rational(rs_.norm2(gamma)) / (Rational(rs_.norm2(B)) * n11)) * rhs;
        // integrality + root-string magnitude check
        int p = rs_.string_down(B, A);
        if (!n.is_integer() || (n != Rational(p + 1) && n != Rational(-(p + 1))))
          throw std::logic_error("structure constant fails |N| = p+1 check");
        special_[{ia, ib}] = n;
      }
    }
  }

  RootSystem rs_;
  int N_;
  std::map<std::pair<int, int>, Rational> special_;
};

}  // namespace parweyl
