#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "parweyl/matrix.hpp"
#include "parweyl/parabolic.hpp"

namespace parweyl {

/// Finite-dimensional irreducible module V of the Levi subalgebra l of a
/// parabolic, with the action of every basis element of p = l + n:
/// Levi root vectors and Cartans act by exact rational matrices, the
/// nilradical n acts by zero.  Basis vectors carry weights in
/// fundamental-weight coordinates.
struct LeviModule {
  int dimV = 0;
  /// weight of each basis vector, fundamental coordinates (rank entries)
  std::vector<std::vector<Rational>> weights;
  /// action matrices for every basis id of g outside n_-
  std::map<GenIndex, RatMatrix> action;

  const RatMatrix& act(GenIndex g) const {
    auto it = action.find(g);
    if (it == action.end())
      throw std::invalid_argument("LeviModule::act: generator outside p");
    return it->second;
  }
};

namespace detail {

/// Lowering word: f_{w[0]} f_{w[1]} ... applied to the highest vector.
using FWord = std::vector<int>;
using WordVec = std::map<FWord, Rational>;

/// Shapovalov-style contravariant form machinery on Verma words for the
/// semisimple part of the Levi.
class VermaForm {
 public:
  VermaForm(const RootSystem& rs, std::vector<Rational> lambda)
      : rs_(&rs), lambda_(std::move(lambda)) {}

  /// <mu, alpha_i^vee> for mu = lambda - sum over the word's letters.
  Rational coroot_pairing(const FWord& w, int i) const {
    Rational v = lambda_.at(i - 1);
    for (int t : w) v -= Rational(rs_->cartan(t, i));
    return v;
  }

  /// e_i applied to a word (as an element of the Verma module):
  /// e_i (f_j rest) = f_j (e_i rest) + [i == j] <wt(rest), alpha_i^vee> rest.
  WordVec e_apply(int i, const FWord& w) const {
    auto key = std::make_pair(i, w);
    auto it = e_cache_.find(key);
    if (it != e_cache_.end()) return it->second;
    WordVec out;
    if (!w.empty()) {
      int j = w.front();
      FWord rest(w.begin() + 1, w.end());
      for (const auto& [y, c] : e_apply(i, rest)) {
        FWord fy;
        fy.reserve(y.size() + 1);
        fy.push_back(j);
        fy.insert(fy.end(), y.begin(), y.end());
        add(out, fy, c);
      }
      if (i == j) add(out, rest, coroot_pairing(rest, i));
    }
    e_cache_.emplace(std::move(key), out);
    return out;
  }

  /// Contravariant form <w1, w2> with <v0, v0> = 1, f_i adjoint to e_i.
  Rational form(const FWord& w1, const FWord& w2) const {
    if (w1.empty() && w2.empty()) return Rational(1);
    if (w1.empty() || w2.empty()) return Rational(0);
    auto key = std::make_pair(w1, w2);
    auto it = form_cache_.find(key);
    if (it != form_cache_.end()) return it->second;
    int i = w1.front();
    FWord rest(w1.begin() + 1, w1.end());
    Rational r(0);
    for (const auto& [y, c] : e_apply(i, w2)) r += c * form(rest, y);
    form_cache_.emplace(std::move(key), r);
    return r;
  }

 private:
  static void add(WordVec& v, const FWord& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) v.erase(it);
    }
  }

  const RootSystem* rs_;
  std::vector<Rational> lambda_;
  mutable std::map<std::pair<int, FWord>, WordVec> e_cache_;
  mutable std::map<std::pair<FWord, FWord>, Rational> form_cache_;
};

}  // namespace detail

/// The one-dimensional module with zero weight: every generator of p acts
/// by zero.  This is V_0 for the trivial highest weight.
inline LeviModule trivial_module(const ParabolicDatum& par) {
  const ChevalleyAlgebra& alg = par.algebra();
  LeviModule mod;
  mod.dimV = 1;
  mod.weights = {std::vector<Rational>(alg.rank(), Rational(0))};
  for (GenIndex g : alg.basis())
    if (!par.in_nminus(g)) mod.action.emplace(g, RatMatrix::zero(1));
  return mod;
}

/// Irreducible Levi module of highest weight lambda (fundamental-weight
/// coordinates; entries on uncrossed nodes must be nonnegative integers,
/// crossed entries may be arbitrary rationals).  Built as the quotient of
/// the Levi Verma module by the radical of the contravariant form,
/// weight space by weight space; throws when the dimension exceeds
/// dim_cap.
inline LeviModule build_irreducible(const ParabolicDatum& par, const std::vector<Rational>& lambda,
                                    int dim_cap = 4096) {
  const ChevalleyAlgebra& alg = par.algebra();
  const RootSystem& rs = alg.roots();
  const int rank = rs.rank();
  if (static_cast<int>(lambda.size()) != rank)
    throw std::invalid_argument("build_irreducible: lambda arity != rank");
  std::vector<int> S;  // uncrossed nodes
  for (int i = 1; i <= rank; ++i)
    if (par.is_uncrossed(i)) S.push_back(i);
  for (int i : S)
    if (!lambda[i - 1].is_nonneg_integer())
      throw std::invalid_argument(
          "build_irreducible: lambda must be a nonnegative integer on uncrossed nodes");

  detail::VermaForm form(rs, lambda);

  // Per-weight data; weights keyed by the lowering multiplicity vector c
  // (rank entries, nonzero only on S).
  struct WeightSpace {
    std::vector<detail::FWord> basis;  // accepted words, Gram nonsingular
    RatMatrix gram;                    // Gram matrix of the accepted words
  };
  std::map<IntVec, WeightSpace> spaces;

  auto solve_in_basis = [&](const WeightSpace& ws,
                            const std::vector<Rational>& rhs) -> std::vector<Rational> {
    return solve_linear(ws.gram, rhs);
  };

  IntVec c0(rank, 0);
  spaces[c0] = {{detail::FWord{}}, RatMatrix::identity(1)};

  int total_dim = 1;
  std::vector<IntVec> level{c0};
  while (!level.empty()) {
    // gather candidate words per next-level weight
    std::map<IntVec, std::vector<detail::FWord>> cand;
    for (const IntVec& c : level) {
      const WeightSpace& ws = spaces.at(c);
      for (int i : S) {
        IntVec cc = c;
        cc[i - 1] += 1;
        auto& list = cand[cc];
        for (const detail::FWord& w : ws.basis) {
          detail::FWord fw;
          fw.reserve(w.size() + 1);
          fw.push_back(i);
          fw.insert(fw.end(), w.begin(), w.end());
          list.push_back(fw);
        }
      }
    }
    std::vector<IntVec> next;
    for (auto& [cc, words] : cand) {
      std::sort(words.begin(), words.end());
      words.erase(std::unique(words.begin(), words.end()), words.end());
      WeightSpace ws;
      for (const detail::FWord& w : words) {
        // bordered Gram of accepted + w
        int k = static_cast<int>(ws.basis.size());
        RatMatrix g(k + 1, k + 1);
        for (int r = 0; r < k; ++r)
          for (int s = 0; s < k; ++s) g.at(r, s) = ws.gram.at(r, s);
        for (int r = 0; r < k; ++r) {
          Rational v = form.form(ws.basis[r], w);
          g.at(r, k) = v;
          g.at(k, r) = v;
        }
        g.at(k, k) = form.form(w, w);
        if (matrix_rank(g) == k + 1) {
          ws.basis.push_back(w);
          ws.gram = std::move(g);
        }
      }
      if (!ws.basis.empty()) {
        total_dim += static_cast<int>(ws.basis.size());
        if (total_dim > dim_cap)
          throw std::runtime_error("build_irreducible: dimension cap exceeded");
        spaces.emplace(cc, std::move(ws));
        next.push_back(cc);
      }
    }
    level = std::move(next);
  }

  // global basis order: by weight key ascending (level is encoded in the
  // entry sum, and IntVec order within equal sums is deterministic)
  std::vector<std::pair<IntVec, int>> order;  // (weight key, local index)
  std::map<IntVec, int> offset;
  {
    std::vector<const IntVec*> keys;
    for (const auto& [c, ws] : spaces) keys.push_back(&c);
    std::sort(keys.begin(), keys.end(), [](const IntVec* a, const IntVec* b) {
      int ha = vec_sum(*a), hb = vec_sum(*b);
      if (ha != hb) return ha < hb;
      return *a < *b;
    });
    int off = 0;
    for (const IntVec* c : keys) {
      offset[*c] = off;
      for (size_t t = 0; t < spaces.at(*c).basis.size(); ++t) order.emplace_back(*c, t);
      off += static_cast<int>(spaces.at(*c).basis.size());
    }
  }

  LeviModule mod;
  mod.dimV = total_dim;
  mod.weights.resize(total_dim);
  for (int v = 0; v < total_dim; ++v) {
    const IntVec& c = order[v].first;
    std::vector<Rational> mu(rank);
    for (int j = 1; j <= rank; ++j) {
      Rational m = lambda[j - 1];
      for (int i : S) m -= Rational(static_cast<long>(c[i - 1]) * rs.cartan(i, j));
      mu[j - 1] = m;
    }
    mod.weights[v] = std::move(mu);
  }

  // expresses a word vector at weight key c in the accepted basis
  auto express = [&](const IntVec& c, const detail::WordVec& v) -> std::vector<Rational> {
    auto it = spaces.find(c);
    if (it == spaces.end()) return {};
    const WeightSpace& ws = it->second;
    std::vector<Rational> rhs(ws.basis.size(), Rational(0));
    for (size_t r = 0; r < ws.basis.size(); ++r)
      for (const auto& [y, cy] : v) rhs[r] += cy * form.form(ws.basis[r], y);
    return solve_in_basis(ws, rhs);
  };

  // simple Levi actions
  std::map<GenIndex, RatMatrix> action;
  for (int i : S) {
    RatMatrix F(total_dim, total_dim), E(total_dim, total_dim);
    for (int v = 0; v < total_dim; ++v) {
      const IntVec& c = order[v].first;
      const detail::FWord& w = spaces.at(c).basis[order[v].second];
      {  // f_i
        IntVec cc = c;
        cc[i - 1] += 1;
        detail::FWord fw;
        fw.reserve(w.size() + 1);
        fw.push_back(i);
        fw.insert(fw.end(), w.begin(), w.end());
        detail::WordVec wv{{fw, Rational(1)}};
        std::vector<Rational> z = express(cc, wv);
        for (size_t r = 0; r < z.size(); ++r) F.at(offset[cc] + static_cast<int>(r), v) = z[r];
      }
      if (c[i - 1] > 0) {  // e_i
        IntVec cc = c;
        cc[i - 1] -= 1;
        detail::WordVec ev = form.e_apply(i, w);
        std::vector<Rational> z = express(cc, ev);
        for (size_t r = 0; r < z.size(); ++r) E.at(offset[cc] + static_cast<int>(r), v) = z[r];
      }
    }
    action.emplace(-i, std::move(F));  // f_i = g_{-i}: simple root i has root index i
    action.emplace(+i, std::move(E));
  }

  // Cartans: diagonal <mu, h_j> = mu_j d_j
  for (int j = 1; j <= rank; ++j) {
    RatMatrix H(total_dim, total_dim);
    for (int v = 0; v < total_dim; ++v)
      H.at(v, v) = mod.weights[v][j - 1] * Rational(rs.d(j));
    action.emplace(alg.cartan_gen(j), std::move(H));
  }

  // non-simple Levi root vectors by bracketing down the height
  for (int k : par.levi_positive_roots()) {
    const IntVec& gamma = rs.positive_root(k);
    if (rs.height(gamma) < 2) continue;
    int found = 0;
    for (int i : S) {
      IntVec delta = gamma;
      delta[i - 1] -= 1;
      int di = rs.index_of(delta);
      if (di > 0 && action.count(di)) {
        found = i;
        Rational N = alg.structure_N(i, di);
        action.emplace(k, commutator(action.at(i), action.at(di)).scaled(Rational(1) / N));
        Rational Nm = alg.structure_N(-i, -di);
        action.emplace(-k, commutator(action.at(-i), action.at(-di)).scaled(Rational(1) / Nm));
        break;
      }
    }
    if (!found) throw std::logic_error("build_irreducible: Levi root not decomposable");
  }

  // nilradical acts by zero
  for (int k : par.nilradical_roots()) action.emplace(k, RatMatrix(total_dim, total_dim));

  mod.action = std::move(action);
  return mod;
}

/// Homomorphism defect check: [act a, act b] == act [a,b] over all pairs of
/// basis ids of p.  Returns the number of failing pairs (0 = pass).
inline int module_defects(const ParabolicDatum& par, const LeviModule& mod) {
  const ChevalleyAlgebra& alg = par.algebra();
  std::vector<GenIndex> p;
  for (GenIndex g : alg.basis())
    if (!par.in_nminus(g)) p.push_back(g);
  int bad = 0;
  for (GenIndex a : p)
    for (GenIndex b : p) {
      RatMatrix lhs = commutator(mod.act(a), mod.act(b));
      RatMatrix rhs(mod.dimV, mod.dimV);
      for (const auto& [g, c] : alg.bracket(a, b).terms) rhs += mod.act(g).scaled(c);
      if (lhs != rhs) ++bad;
    }
  return bad;
}

}  // namespace parweyl
