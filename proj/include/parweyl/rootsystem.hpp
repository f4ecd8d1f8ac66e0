#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "parweyl/rational.hpp"

namespace parweyl {

/// Coordinate vector in the basis of simple roots (integer entries).
using IntVec = std::vector<int>;

inline int vec_sum(const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

/// Graded lexicographic comparison used throughout: total of the entries
/// (height) first; ties are broken comparing coordinates right to left,
/// smaller entry first.  With this rule (1,0) < (0,1), and simple root
/// alpha_i gets index i for every type.
inline int graded_lex_cmp(const IntVec& a, const IntVec& b) {
  int ha = vec_sum(a), hb = vec_sum(b);
  if (ha != hb) return ha < hb ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

struct GradedLexLess {
  bool operator()(const IntVec& a, const IntVec& b) const { return graded_lex_cmp(a, b) < 0; }
};

/// One of the nine families of simple complex Lie algebras.
struct SimpleType {
  char family = 'A';  // 'A'..'G'
  int rank = 1;

  SimpleType() = default;
  SimpleType(char f, int r) : family(f), rank(r) { validate(); }

  /// Parses strings like "A3", "G2", "E8".
  static SimpleType parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("SimpleType: cannot parse '" + s + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    int r = 0;
    try {
      r = std::stoi(s.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("SimpleType: cannot parse '" + s + "'");
    }
    return SimpleType(f, r);
  }

  std::string str() const { return std::string(1, family) + std::to_string(rank); }

  void validate() const {
    bool ok = false;
    switch (family) {
      case 'A': ok = rank >= 1; break;
      case 'B': ok = rank >= 2; break;
      case 'C': ok = rank >= 3; break;
      case 'D': ok = rank >= 4; break;
      case 'E': ok = rank >= 6 && rank <= 8; break;
      case 'F': ok = rank == 4; break;
      case 'G': ok = rank == 2; break;
      default: ok = false;
    }
    if (!ok)
      throw std::invalid_argument("SimpleType: invalid type " + std::string(1, family) +
                                  std::to_string(rank));
  }

  friend bool operator==(const SimpleType& a, const SimpleType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

/// Root system of a simple type: Cartan matrix, positive roots in graded-lex
/// order (1-based indices; the negative of root k has index -k), root
/// lengths with short roots normalized to length^2 = 2.
class RootSystem {
 public:
  explicit RootSystem(SimpleType t) : type_(t) {
    build_cartan();
    build_lengths();
    build_roots();
  }

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }

  /// Cartan matrix entry <alpha_i, alpha_j^vee>, 1-based.
  int cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
  const std::vector<IntVec>& cartan_matrix() const { return cartan_; }

  /// (alpha_i, alpha_i)/2 in {1,2,3}; short roots have d = 1.
  int d(int i) const { return d_[i - 1]; }

  int num_positive() const { return static_cast<int>(positive_.size()); }
  int dim() const { return 2 * num_positive() + rank(); }

  /// k-th positive root in graded-lex order, k = 1..num_positive().
  const IntVec& positive_root(int k) const { return positive_.at(k - 1); }

  /// Coordinates of the root with signed index k (negative index = negative root).
  IntVec root(int k) const {
    IntVec v = positive_.at(std::abs(k) - 1);
    if (k < 0)
      for (int& c : v) c = -c;
    return v;
  }

  /// Signed index of a root given by coordinates; 0 if not a root.
  int index_of(const IntVec& v) const {
    auto it = index_.find(v);
    if (it != index_.end()) return it->second;
    IntVec neg = v;
    for (int& c : neg) c = -c;
    it = index_.find(neg);
    if (it != index_.end()) return -it->second;
    return 0;
  }

  bool is_root(const IntVec& v) const { return index_of(v) != 0; }

  int height(const IntVec& v) const { return vec_sum(v); }

  const IntVec& highest_root() const { return positive_.back(); }

  /// Pairing <v, alpha_j^vee> = sum_i v_i * cartan(i,j); 1-based j.
  int pair_coroot(const IntVec& v, int j) const {
    int s = 0;
    for (int i = 0; i < rank(); ++i) s += v[i] * cartan_[i][j - 1];
    return s;
  }

  /// Invariant bilinear form (v, w); integer on the root lattice under the
  /// short = length^2 2 normalization: (alpha_i, alpha_j) = cartan(i,j)*d(j).
  long inner(const IntVec& v, const IntVec& w) const {
    long s = 0;
    for (int i = 1; i <= rank(); ++i)
      for (int j = 1; j <= rank(); ++j)
        s += static_cast<long>(v[i - 1]) * w[j - 1] * cartan(i, j) * d(j);
    return s;
  }

  long norm2(const IntVec& v) const { return inner(v, v); }

  /// Length of the down-string through beta along alpha: the largest p >= 0
  /// with beta - p*alpha still a root.
  int string_down(const IntVec& beta, const IntVec& alpha) const {
    int p = 0;
    IntVec v = beta;
    for (;;) {
      for (int i = 0; i < rank(); ++i) v[i] -= alpha[i];
      if (!is_root(v)) break;
      ++p;
      if (p > 8) throw std::logic_error("RootSystem: runaway root string");
    }
    return p;
  }

 private:
  void build_cartan() {
    int n = type_.rank;
    cartan_.assign(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    auto chain = [&](int a, int b) {  // single bond between nodes a, b (1-based)
      cartan_[a - 1][b - 1] = -1;
      cartan_[b - 1][a - 1] = -1;
    };
    switch (type_.family) {
      case 'A':
        for (int i = 1; i < n; ++i) chain(i, i + 1);
        break;
      case 'B':  // alpha_n short
        for (int i = 1; i < n - 1; ++i) chain(i, i + 1);
        cartan_[n - 2][n - 1] = -2;
        cartan_[n - 1][n - 2] = -1;
        break;
      case 'C':  // alpha_n long
        for (int i = 1; i < n - 1; ++i) chain(i, i + 1);
        cartan_[n - 2][n - 1] = -1;
        cartan_[n - 1][n - 2] = -2;
        break;
      case 'D':
        for (int i = 1; i < n - 1; ++i) chain(i, i + 1);
        chain(n - 2, n);
        break;
      case 'E':
        chain(1, 3);
        chain(3, 4);
        chain(4, 5);
        chain(5, 6);
        chain(2, 4);
        if (n >= 7) chain(6, 7);
        if (n >= 8) chain(7, 8);
        break;
      case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        chain(1, 2);
        chain(3, 4);
        cartan_[1][2] = -2;
        cartan_[2][1] = -1;
        break;
      case 'G':  // alpha_1 short
        cartan_[0][1] = -1;
        cartan_[1][0] = -3;
        break;
      default:
        throw std::logic_error("RootSystem: unreachable");
    }
  }

  // Solve d_i * cartan(j,i) = d_j * cartan(i,j) over the connected Dynkin
  // graph, scaled so the minimum is 1.
  void build_lengths() {
    int n = type_.rank;
    std::vector<Rational> r(n);
    std::vector<bool> seen(n, false);
    r[0] = Rational(1);
    seen[0] = true;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (seen[j] || cartan_[i][j] == 0 || i == j) continue;
        // (alpha_i,alpha_j) = cartan(i,j) d_j = cartan(j,i) d_i
        r[j] = r[i] * Rational(cartan_[j][i]) / Rational(cartan_[i][j]);
        seen[j] = true;
        stack.push_back(j);
      }
    }
    Rational mn = r[0];
    for (const auto& x : r) mn = std::min(mn, x);
    d_.resize(n);
    for (int i = 0; i < n; ++i) d_[i] = static_cast<int>((r[i] / mn).as_long());
  }

  void build_roots() {
    int n = type_.rank;
    std::set<IntVec, GradedLexLess> roots;
    for (int i = 0; i < n; ++i) {
      IntVec e(n, 0);
      e[i] = 1;
      roots.insert(e);
    }
    // Grow by height: beta + alpha_j is a root iff p - <beta, alpha_j^vee> > 0
    // where p is the length of the alpha_j-string below beta.
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<IntVec> snapshot(roots.begin(), roots.end());
      for (const IntVec& beta : snapshot) {
        for (int j = 1; j <= n; ++j) {
          IntVec up = beta;
          up[j - 1] += 1;
          if (roots.count(up)) continue;
          // string length below beta within the current set (complete for
          // lower heights, which is all the rule needs)
          int p = 0;
          IntVec v = beta;
          for (;;) {
            v[j - 1] -= 1;
            bool in = roots.count(v) > 0;
            if (!in) {
              // passing through zero or negative of a root never happens for
              // positive beta != alpha_j chains except beta == alpha_j itself
              break;
            }
            ++p;
          }
          int pairing = 0;
          for (int i = 0; i < n; ++i) pairing += beta[i] * cartan_[i][j - 1];
          if (p - pairing > 0) {
            roots.insert(up);
            grew = true;
          }
        }
      }
    }
    positive_.assign(roots.begin(), roots.end());
    for (int k = 0; k < static_cast<int>(positive_.size()); ++k)
      index_[positive_[k]] = k + 1;
  }

  SimpleType type_;
  std::vector<IntVec> cartan_;
  std::vector<int> d_;
  std::vector<IntVec> positive_;
  std::map<IntVec, int> index_;
};

}  // namespace parweyl
