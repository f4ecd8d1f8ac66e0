#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "parweyl/embedding.hpp"

namespace parweyl {

/// Result of the Lie-closure independence check.
struct ClosureReport {
  int dim = 0;              // dimension of the Lie algebra generated by the images
  bool complete = false;    // true when the closure stabilized within budget
  long brackets = 0;        // commutators evaluated
  double seconds = 0.0;
};

/// Dimension of the Lie algebra generated by the given operators inside
/// W_n (tensor) End V, by bracketing against the generators until the span
/// stabilizes.  For a faithful realization of g this must equal dim g.
inline ClosureReport lie_closure(const std::vector<WeylMatOp>& generators, int max_dim = 1024,
                                 long max_brackets = 100000) {
  auto t0 = std::chrono::steady_clock::now();
  ClosureReport rep;

  // sparse exact echelon over keys (A, B, row, col), pivot = largest key
  using FlatKey = std::tuple<IntVec, IntVec, int, int>;
  using SparseVec = std::map<FlatKey, Rational>;
  auto flatten = [](const WeylMatOp& op) {
    SparseVec v;
    for (const auto& [key, M] : op.terms())
      for (int r = 0; r < M.rows(); ++r)
        for (int s = 0; s < M.cols(); ++s)
          if (!M.at(r, s).is_zero()) v.emplace(FlatKey{key.first, key.second, r, s}, M.at(r, s));
    return v;
  };

  std::map<FlatKey, SparseVec> pivots;
  auto insert_if_independent = [&](const WeylMatOp& op) -> bool {
    SparseVec v = flatten(op);
    while (!v.empty()) {
      auto top = v.rbegin();
      auto it = pivots.find(top->first);
      if (it == pivots.end()) break;
      Rational c = top->second;
      for (const auto& [k, pc] : it->second) {
        auto [vt, fresh] = v.try_emplace(k, Rational(0));
        vt->second -= c * pc;
        if (vt->second.is_zero()) v.erase(vt);
      }
    }
    if (v.empty()) return false;
    FlatKey lead = v.rbegin()->first;
    Rational inv = Rational(1) / v.rbegin()->second;
    for (auto& [k, c] : v) c *= inv;
    pivots.emplace(std::move(lead), std::move(v));
    return true;
  };

  std::deque<const WeylMatOp*> work;
  std::vector<WeylMatOp> store;  // sized so pointers in `work` stay valid
  store.reserve(static_cast<size_t>(max_dim) + generators.size() + 2);
  for (const WeylMatOp& g : generators) {
    store.push_back(g);
    if (insert_if_independent(store.back())) work.push_back(&store.back());
  }
  while (!work.empty()) {
    const WeylMatOp* e = work.front();
    work.pop_front();
    for (const WeylMatOp& g : generators) {
      if (rep.brackets >= max_brackets || static_cast<int>(pivots.size()) > max_dim) {
        rep.dim = static_cast<int>(pivots.size());
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
      }
      WeylMatOp c = commutator(*e, g);
      ++rep.brackets;
      if (insert_if_independent(c)) {
        store.push_back(std::move(c));
        work.push_back(&store.back());
      }
    }
  }
  rep.dim = static_cast<int>(pivots.size());
  rep.complete = true;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Convenience overload: closure of all generator images of an embedding.
inline ClosureReport lie_closure(const EmbeddingResult& res, int max_dim = 1024,
                                 long max_brackets = 100000) {
  std::vector<WeylMatOp> gens;
  gens.reserve(res.images.size());
  for (const auto& im : res.images) gens.push_back(im.op);
  return lie_closure(gens, max_dim, max_brackets);
}

/// Independent evaluator for the left action of g on the induced module
/// U(n_-) (tensor) V, realized on its monomial basis u^c (tensor) e_m with
/// nonnegative integer exponents.  Straightens products letter by letter
/// using only the structure constants and the module matrices; shares no
/// code with the symbolic reduction engine or the omega map.
class InducedActionOracle {
 public:
  InducedActionOracle(const ParabolicDatum& par, const LeviModule& mod)
      : par_(&par), mod_(&mod), n_(par.n()) {}

  using Basis = std::pair<IntVec, int>;  // (exponent vector, V basis index)
  using Vec = std::map<Basis, Rational>;

  /// g . (u^c (tensor) e_m) for any basis element g of the algebra
  Vec act(GenIndex g, const IntVec& c, int m) const {
    if (par_->in_nminus(g)) {
      Vec out;
      for (const auto& [cc, v] : lower(par_->word_pos(g), c)) add(out, {cc, m}, v);
      return out;
    }
    return act_p(g, c, m);
  }

 private:
  using WordVec = std::map<IntVec, Rational>;

  static void add(Vec& out, const Basis& b, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = out.try_emplace(b, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  static void addw(WordVec& out, const IntVec& c, const Rational& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = out.try_emplace(c, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  }

  /// u_j . u^c inside U(n_-), canonical result; letters with smaller
  /// position carry higher roots and stand further left.
  WordVec lower(int j, const IntVec& c) const {
    auto key = std::make_pair(j, c);
    auto it = lower_cache_.find(key);
    if (it != lower_cache_.end()) return it->second;
    WordVec out;
    int i = 0;
    for (int t = 1; t < j; ++t)
      if (c[t - 1] > 0) {
        i = t;
        break;
      }
    if (i == 0) {
      IntVec cc = c;
      cc[j - 1] += 1;
      out.emplace(std::move(cc), Rational(1));
    } else {
      IntVec ct = c;
      ct[i - 1] -= 1;
      // u_j u_i^{c_i} X = u_i (u_j u_i^{c_i - 1} X) + [u_j, u_i] u_i^{c_i - 1} X
      for (const auto& [cc, v] : lower(j, ct))
        for (const auto& [ccc, w] : lower(i, cc)) addw(out, ccc, v * w);
      const ChevalleyAlgebra& alg = par_->algebra();
      AlgebraElement br = alg.bracket(par_->word_gen(j), par_->word_gen(i));
      for (const auto& [g, N] : br.terms) {
        int k = par_->word_pos(g);
        if (k == 0) throw std::logic_error("lower: nilradical bracket left n_-");
        for (const auto& [cc, v] : lower(k, ct)) addw(out, cc, N * v);
      }
    }
    lower_cache_.emplace(std::move(key), out);
    return out;
  }

  /// g . (u^c (tensor) e_m) for g outside n_-
  Vec act_p(GenIndex g, const IntVec& c, int m) const {
    auto key = std::make_tuple(g, c, m);
    auto it = act_cache_.find(key);
    if (it != act_cache_.end()) return it->second;
    Vec out;
    int i = 0;
    for (int t = 1; t <= n_; ++t)
      if (c[t - 1] > 0) {
        i = t;
        break;
      }
    if (i == 0) {
      const RatMatrix& M = mod_->act(g);
      IntVec zero(n_, 0);
      for (int r = 0; r < M.rows(); ++r) add(out, {zero, r}, M.at(r, m));
    } else {
      IntVec ct = c;
      ct[i - 1] -= 1;
      // g u_i X = u_i (g X) + [g, u_i] X
      for (const auto& [b, v] : act_p(g, ct, m))
        for (const auto& [cc, w] : lower(i, b.first)) add(out, {cc, b.second}, v * w);
      const ChevalleyAlgebra& alg = par_->algebra();
      AlgebraElement br = alg.bracket(g, par_->word_gen(i));
      for (const auto& [s, N] : br.terms) {
        if (par_->in_nminus(s)) {
          for (const auto& [cc, v] : lower(par_->word_pos(s), ct)) add(out, {cc, m}, N * v);
        } else {
          for (const auto& [b, v] : act_p(s, ct, m)) add(out, b, N * v);
        }
      }
    }
    act_cache_.emplace(std::move(key), out);
    return out;
  }

  const ParabolicDatum* par_;
  const LeviModule* mod_;
  int n_;
  mutable std::map<std::pair<int, IntVec>, WordVec> lower_cache_;
  mutable std::map<std::tuple<GenIndex, IntVec, int>, Vec> act_cache_;
};

/// Result of the action-equivalence check.
struct OracleReport {
  long checked = 0;     // (generator, basis vector) pairs compared
  long mismatches = 0;  // pairs where the operator and the oracle disagree
  std::string first_mismatch;  // human-readable witness, empty when clean
  bool pass() const { return mismatches == 0; }
};

/// Compare every generator image against the independent induced-module
/// action on all basis vectors x^c (tensor) e_m with deg x^c <= degree.
inline OracleReport action_oracle(const EmbeddingResult& res, const ParabolicDatum& par,
                                  const LeviModule& mod, int degree = 4) {
  InducedActionOracle oracle(par, mod);
  OracleReport rep;
  const int n = par.n();
  // enumerate exponent vectors of total degree <= degree
  std::vector<IntVec> cs;
  IntVec cur(n, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n) {
      cs.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, degree);

  for (const auto& im : res.images)
    for (const IntVec& c : cs)
      for (int m = 0; m < mod.dimV; ++m) {
        auto expected = oracle.act(im.gen, c, m);
        auto got = im.op.apply(c, m);
        ++rep.checked;
        if (got != expected) {
          ++rep.mismatches;
          if (rep.first_mismatch.empty()) {
            std::string s = "gen " + std::to_string(im.gen) + " on x^(";
            for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(c[i]);
            s += ") e_" + std::to_string(m);
            rep.first_mismatch = s;
          }
        }
      }
  return rep;
}

}  // namespace parweyl
