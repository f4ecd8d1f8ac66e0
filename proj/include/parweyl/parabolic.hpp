#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "parweyl/liealgebra.hpp"

namespace parweyl {

/// Parabolic subalgebra p = l + n determined by a crossed subset of simple
/// roots: n is spanned by the positive root spaces whose root involves a
/// crossed simple root, l by the Cartan and the root spaces supported on
/// uncrossed nodes.  The opposite nilradical n_- carries the generator
/// order used for PBW words: u_1 < ... < u_n sorted by their actual
/// (negative) roots in graded-lex order, so u_1 is the root vector of the
/// lowest root of n_-.  Canonical words are ascending, u_1^{a_1}...u_n^{a_n},
/// and the polynomial variable a_t is attached to word position t.
class ParabolicDatum {
 public:
  ParabolicDatum(const ChevalleyAlgebra& alg, std::vector<int> crossed)
      : alg_(&alg), crossed_(std::move(crossed)) {
    const RootSystem& rs = alg.roots();
    if (static_cast<int>(crossed_.size()) != rs.rank())
      throw std::invalid_argument("ParabolicDatum: crossed size != rank");
    bool any = false;
    for (int c : crossed_) {
      if (c != 0 && c != 1) throw std::invalid_argument("ParabolicDatum: crossed entries must be 0/1");
      any = any || c == 1;
    }
    if (!any) throw std::invalid_argument("ParabolicDatum: at least one root must be crossed");
    for (int k = 1; k <= rs.num_positive(); ++k) {
      const IntVec& beta = rs.positive_root(k);
      bool in_n = false;
      for (int i = 0; i < rs.rank(); ++i) in_n = in_n || (crossed_[i] && beta[i] > 0);
      if (in_n)
        nilradical_.push_back(k);
      else
        levi_pos_.push_back(k);
    }
    // word order: actual negative roots ascending graded-lex = positive
    // counterparts descending
    word_ = nilradical_;
    std::sort(word_.begin(), word_.end(), [&](int a, int b) {
      return graded_lex_cmp(rs.positive_root(a), rs.positive_root(b)) > 0;
    });
    pos_of_.assign(rs.num_positive() + 1, 0);
    for (int t = 0; t < static_cast<int>(word_.size()); ++t) pos_of_[word_[t]] = t + 1;
  }

  const ChevalleyAlgebra& algebra() const { return *alg_; }
  const std::vector<int>& crossed() const { return crossed_; }

  /// dim n = dim n_-.
  int n() const { return static_cast<int>(nilradical_.size()); }

  /// Positive root indices of the nilradical, ascending graded-lex.
  const std::vector<int>& nilradical_roots() const { return nilradical_; }

  /// Positive root indices of the Levi part.
  const std::vector<int>& levi_positive_roots() const { return levi_pos_; }

  bool is_uncrossed(int i) const { return crossed_[i - 1] == 0; }  // 1-based node

  /// Generator u_t (1-based word position): a negative root vector.
  GenIndex word_gen(int t) const { return -word_.at(t - 1); }

  /// Positive counterpart beta of u_t.
  const IntVec& word_beta(int t) const { return alg_->roots().positive_root(word_.at(t - 1)); }

  /// All word generators u_1..u_n.
  std::vector<GenIndex> word_gens() const {
    std::vector<GenIndex> g;
    g.reserve(word_.size());
    for (int k : word_) g.push_back(-k);
    return g;
  }

  /// Word position (1..n) of generator g if g lies in n_-, else 0.
  int word_pos(GenIndex g) const {
    if (g >= 0 || -g > static_cast<int>(pos_of_.size()) - 1) return 0;
    return pos_of_[-g];
  }

  bool in_nminus(GenIndex g) const { return word_pos(g) != 0; }

  /// True for generators of n (positive crossed root vectors).
  bool in_n(GenIndex g) const { return g > 0 && !alg_->is_cartan(g) && pos_of_[g] != 0; }

  /// True for basis ids of the Levi (Cartans and uncrossed-support root
  /// vectors of either sign).
  bool in_levi(GenIndex g) const {
    if (alg_->is_cartan(g)) return true;
    return !in_n(g) && !in_nminus(g);
  }

 private:
  const ChevalleyAlgebra* alg_;
  std::vector<int> crossed_;
  std::vector<int> nilradical_;  // positive root indices, ascending
  std::vector<int> levi_pos_;
  std::vector<int> word_;        // positive root indices in word order
  std::vector<int> pos_of_;      // positive root index -> word position (1-based)
};

}  // namespace parweyl
