#pragma once

// Constructive algorithms: the ascent algebra A(z) realizing a projective
// characteristic sequence, d-closedness predicates, the d-cliff module and
// cliff extension, the partial d-closure C_d, and the standard algebras
// H_d(c_1,...,c_u) built as closures of ascent algebras.

#include <numeric>

#include "nakayama/charseq.hpp"

namespace nakayama {

// Recursion measure for the ascent construction: entry sum plus the 0-based
// position of the zero entry.
inline int epsilon(const CharSeq& z) {
  if (!is_projective_char_seq(z))
    throw domain_error("epsilon needs a projective characteristic sequence");
  int sum = std::accumulate(z.begin(), z.end(), 0);
  int v = even_position(z, 0, static_cast<int>(z.size()));
  return sum + v;
}

// The unique ascending algebra whose last projective has characteristic z.
// Peels z down to (0) with lambda, then rebuilds one simple at a time: the
// new projective gains a composition factor exactly when the target
// characteristic ends in 1.
inline KupischSeries ascent_algebra(const CharSeq& z) {
  if (!is_projective_char_seq(z))
    throw domain_error("ascent_algebra needs a projective characteristic sequence");
  std::vector<CharSeq> chain{z};
  while (chain.back().size() > 1) {
    int before = epsilon(chain.back());
    chain.push_back(lambda_rot(chain.back()));
    if (epsilon(chain.back()) >= before)
      throw domain_error("ascent recursion measure failed to decrease");
  }
  std::vector<int> c{1};
  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it)
    c.push_back(it->back() == 1 ? c.back() + 1 : c.back());
  return KupischSeries(std::move(c));
}

// S is d-closed when it is torsionless or some module with socle S has
// projective dimension >= d.
inline bool is_d_closed_simple(const KupischSeries& a, int s, int d) {
  if (d < 1) throw domain_error("d must be >= 1");
  if (is_torsionless(a, Module{s, 1})) return true;
  for (int l = 1; s + l - 1 <= a.n(); ++l) {
    if (a.c(s + l - 1) < l) continue;
    if (pd_value(a, Module{s + l - 1, l}) >= d) return true;
  }
  return false;
}

inline bool is_d_closed(const KupischSeries& a, int d) {
  for (int s = 1; s <= a.n(); ++s)
    if (!is_d_closed_simple(a, s, d)) return false;
  return true;
}

inline bool is_partially_d_closed(const KupischSeries& a, int d) {
  Module p{a.n(), a.c(a.n())};
  for (int f : composition_factors(p))
    if (!is_d_closed_simple(a, f, d)) return false;
  return true;
}

inline bool is_almost_d_closed(const KupischSeries& a, int d) {
  Module p{a.n(), a.c(a.n())};
  int soc = p.socle_index();
  for (int s = 1; s <= a.n(); ++s) {
    if (s >= soc) continue;  // composition factor of P(omega)
    if (!is_d_closed_simple(a, s, d)) return false;
  }
  return true;
}

// Y_A = P(omega)/U with U the maximal submodule of P(omega) all of whose
// composition factors are d-closed; Zero iff A is partially d-closed.
inline MaybeModule d_cliff_module(const KupischSeries& a, int d) {
  Module p{a.n(), a.c(a.n())};
  int soc = p.socle_index();
  int f = soc - 1;
  while (f + 1 <= p.top && is_d_closed_simple(a, f + 1, d)) ++f;
  if (f == p.top) return Zero;
  int u_len = f - soc + 1;
  return Module{p.top, p.len - u_len};
}

// E_d(A): the one-point extension by the d-cliff module, or A itself when
// the cliff module vanishes.
inline KupischSeries cliff_extension(const KupischSeries& a, int d) {
  MaybeModule y = d_cliff_module(a, d);
  if (!y) return a;
  return one_point_extension(a, *y);
}

struct ClosureResult {
  KupischSeries algebra;
  int iterations = 0;
  std::vector<Module> cliff_trace;  // cliff module appended at each step
  bool gldim_warning = false;       // input had gldim > d
};

// C_d(A): iterate the cliff extension to its first fixed point.
inline ClosureResult partial_d_closure(const KupischSeries& a, int d) {
  if (d < 1) throw domain_error("d must be >= 1");
  ClosureResult res{a};
  res.gldim_warning = global_dimension(a) > d;
  const int cap = a.n() * d * a.height() + 16;
  while (true) {
    MaybeModule y = d_cliff_module(res.algebra, d);
    if (!y) break;
    res.cliff_trace.push_back(*y);
    res.algebra = one_point_extension(res.algebra, *y);
    if (++res.iterations > cap)
      throw domain_error("closure iteration cap exceeded");
  }
  return res;
}

// B is a descending extension of its rank-n_A interval subalgebra when the
// projective lengths are weakly decreasing from position n_A on.
inline bool is_descending_extension(const KupischSeries& b, int n_a) {
  if (n_a < 1 || n_a > b.n()) throw domain_error("subalgebra rank out of range");
  for (int i = n_a; i < b.n(); ++i)
    if (b.c(i) < b.c(i + 1)) return false;
  return true;
}

// H_d(c_1,...,c_u): the partial d-closure of the ascent algebra of
// (0,c_1,...,c_u,1) for odd d and of (c_1,...,c_u,0,1) for even d.
inline KupischSeries h_algebra(int d, const std::vector<int>& cs) {
  if (d < 1) throw domain_error("d must be >= 1");
  for (int c : cs) {
    if (c % 2 == 0 || c < 1)
      throw domain_error("sequence entries must be positive odd numbers");
    if (c > d) throw domain_error("sequence entries must be bounded by d");
  }
  CharSeq z;
  if (d % 2 != 0) {
    for (std::size_t i = 1; i < cs.size(); ++i)
      if (cs[i] > cs[i - 1])
        throw domain_error("odd d needs a weakly decreasing sequence");
    z.push_back(0);
    z.insert(z.end(), cs.begin(), cs.end());
    z.push_back(1);
  } else {
    for (std::size_t i = 1; i < cs.size(); ++i)
      if (cs[i] <= cs[i - 1])
        throw domain_error("even d needs a strictly increasing sequence");
    z.insert(z.end(), cs.begin(), cs.end());
    z.push_back(0);
    z.push_back(1);
  }
  return partial_d_closure(ascent_algebra(z), d).algebra;
}

}  // namespace nakayama
