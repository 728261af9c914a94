#pragma once

// Characteristic sequences of modules, the Y/P bijections between projective
// and non-projective characteristics, memory piles with their effective
// mu-computation, subfactor projective dimensions read off a characteristic
// sequence alone, and the shape predicates used by the classification.

#include <map>
#include <optional>
#include <utility>

#include "nakayama/homology.hpp"
#include "nakayama/rotations.hpp"

namespace nakayama {

// char M: entry i is pd F_i when the i-th composition factor (socle first)
// has odd projective dimension, and pd M itself otherwise.
inline CharSeq char_of(const KupischSeries& a, const MaybeModule& m) {
  if (!m) return {};
  CharSeq out;
  int whole = pd_value(a, *m);
  for (int f : composition_factors(*m)) {
    int fp = pd_value(a, Module{f, 1});
    out.push_back(fp % 2 != 0 ? fp : whole);
  }
  return out;
}

// Y(z): characteristic of P/soc P from the characteristic of a projective P.
inline CharSeq y_map(const CharSeq& z) {
  if (z.size() < 2) throw domain_error("y_map needs length >= 2");
  if (!is_projective_char_seq(z))
    throw domain_error("y_map needs a projective characteristic sequence");
  CharSeq out(z.begin() + 1, z.end());
  if (z[0] == 0) return out;
  int v = even_position(out, 0, static_cast<int>(out.size()));
  out[v] = z[0] + 1;
  return out;
}

// P(z): inverse of y_map, landing in the projective characteristics.
inline CharSeq p_map(const CharSeq& z) {
  if (z.empty()) throw domain_error("p_map needs length >= 1");
  if (!is_char_seq(z) || is_projective_char_seq(z))
    throw domain_error("p_map needs a non-projective characteristic sequence");
  int v = even_position(z, 0, static_cast<int>(z.size()));
  CharSeq out;
  if (v < 0) {
    out.push_back(0);
    out.insert(out.end(), z.begin(), z.end());
  } else {
    out.push_back(z[v] - 1);
    out.insert(out.end(), z.begin(), z.begin() + v);
    out.push_back(0);
    out.insert(out.end(), z.begin() + v + 1, z.end());
  }
  return out;
}

// Pile of height h with s summits: the module lattice of the series
// (1,2,...,h-1,h,...,h) of rank s+h-1, equipped with a memory function mu
// satisfying mu(summit) = 0 and mu(syzygy x) = mu(x) - 1.
struct MemoryPile {
  int height = 2;
  int summit_count = 1;
  std::map<std::pair<int, int>, int> mu_map;

  int rank() const { return summit_count + height - 1; }
  int series_at(int t) const { return std::min(t, height); }

  int mu(int t, int l) const {
    auto it = mu_map.find({t, l});
    if (it == mu_map.end())
      throw domain_error("no pile vertex " + to_string(Module{t, l}));
    return it->second;
  }
  int mu(const Module& m) const { return mu(m.top, m.len); }

  Module radical() const { return Module{height - 1, height - 1}; }
  Module cliff() const { return Module{rank(), height - 1}; }

  // Characteristic of a vertex, read off mu: factor values where odd, the
  // vertex's own mu where even.
  CharSeq char_at(const Module& m) const {
    CharSeq out;
    int whole = mu(m);
    for (int f = m.socle_index(); f <= m.top; ++f) {
      int fv = mu(f, 1);
      out.push_back(fv % 2 != 0 ? fv : whole);
    }
    return out;
  }

  CharSeq radical_char() const { return char_at(radical()); }
  CharSeq cliff_char() const { return char_at(cliff()); }
};

namespace detail {

// mu of a non-summit vertex: maximum principle when every bottom value under
// it is odd, otherwise one less than the inverse-syzygy preimage.
inline int pile_vertex_mu(const std::vector<int>& bottom, int h, int n, int t,
                          int l, std::map<std::pair<int, int>, int>& memo) {
  if (l == h) return 0;
  if (l == 1) return bottom[static_cast<std::size_t>(t)];
  auto it = memo.find({t, l});
  if (it != memo.end()) return it->second;
  int best = 0;
  bool all_odd = true;
  for (int i = t - l + 1; i <= t; ++i) {
    int b = bottom[static_cast<std::size_t>(i)];
    if (b % 2 == 0) all_odd = false;
    best = std::max(best, b);
  }
  int result;
  if (all_odd) {
    result = best;
  } else {
    int pt = t + h - l, pl = h - l;
    if (pt > n)
      throw domain_error("pile memory underdetermined at " +
                         to_string(Module{t, l}));
    result = pile_vertex_mu(bottom, h, n, pt, pl, memo) - 1;
  }
  memo[{t, l}] = result;
  return result;
}

}  // namespace detail

// Effective construction of the memory pile with a given radical
// characteristic and summit count.  Throws when the data do not determine
// the memory function (the cliff characteristic then has an even entry).
inline MemoryPile memory_pile(const CharSeq& radical_char, int s) {
  if (!is_char_seq(radical_char) || radical_char.empty())
    throw domain_error("invalid radical characteristic " +
                       to_string(radical_char));
  if (s < 1) throw domain_error("summit count must be >= 1");
  const int m = static_cast<int>(radical_char.size());
  const int h = m + 1;
  const int n = s + m;
  const int v = even_position(radical_char, 0, m);  // 0-based, -1 if all odd

  // Bottom row: mu of the simple vertices, 1-based positions.
  std::vector<std::optional<int>> bs(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= m; ++i)
    if (i != v + 1) bs[static_cast<std::size_t>(i)] = radical_char[i - 1];
  if (m + 1 <= n) {
    bs[static_cast<std::size_t>(m + 1)] =
        v >= 0 ? radical_char[v] + 1
               : *std::max_element(radical_char.begin(), radical_char.end()) + 1;
  }
  for (int i = m + 2; i <= n; ++i) {
    auto prev = bs[static_cast<std::size_t>(i - m - 1)];
    if (prev) bs[static_cast<std::size_t>(i)] = *prev + 2;
  }
  for (int p = n; p >= 1; --p) {
    if (bs[static_cast<std::size_t>(p)]) continue;
    if (p + m > n)
      throw domain_error("pile memory underdetermined at bottom position " +
                         std::to_string(p));
    int best = 0;
    for (int i = p + 1; i <= p + m; ++i)
      best = std::max(best, *bs[static_cast<std::size_t>(i)]);
    bs[static_cast<std::size_t>(p)] = best - 1;
  }
  std::vector<int> bottom(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) bottom[static_cast<std::size_t>(i)] = *bs[i];

  MemoryPile pile;
  pile.height = h;
  pile.summit_count = s;
  std::map<std::pair<int, int>, int> memo;
  for (int t = 1; t <= n; ++t)
    for (int l = 1; l <= std::min(t, h); ++l)
      pile.mu_map[{t, l}] =
          detail::pile_vertex_mu(bottom, h, n, t, l, memo);
  return pile;
}

// d-pile: the cliff has memory value d and no cliff subfactor exceeds d.
inline bool is_d_pile(const MemoryPile& p, int d) {
  Module cliff = p.cliff();
  if (p.mu(cliff) != d) return false;
  for (const Module& z : subfactors(cliff))
    if (p.mu(z) > d) return false;
  return true;
}

// pd of the subfactor with composition-factor window [i,j] (1-based, socle
// first) of any module whose characteristic is z.
inline int subfactor_pd(const CharSeq& z, int i, int j) {
  const int m = static_cast<int>(z.size());
  if (i < 1 || j > m || i > j) throw domain_error("bad subfactor window");
  int v = even_position(z, i - 1, j);  // 0-based even inside the window
  if (v < 0) return *std::max_element(z.begin() + (i - 1), z.begin() + j);
  MemoryPile pile = memory_pile(z, v + 1);
  return pile.mu(j, j - i + 1);
}

// Decreasing: all entries odd and weakly decreasing.
inline bool is_decreasing_seq(const CharSeq& z) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (is_even(z[i])) return false;
    if (i > 0 && z[i] > z[i - 1]) return false;
  }
  return true;
}

inline bool is_plus_decreasing_seq(const CharSeq& z) {
  return !z.empty() && is_decreasing_seq(rho_rot(z));
}

inline bool is_strictly_increasing_seq(const CharSeq& z) {
  for (std::size_t i = 1; i < z.size(); ++i)
    if (z[i] <= z[i - 1]) return false;
  return true;
}

// (e, c_2, ..., c_m) with e even, the rest odd, c_2 < ... < c_m < e.
inline bool is_plus_strictly_increasing_seq(const CharSeq& z) {
  if (z.empty() || !is_even(z[0])) return false;
  for (std::size_t i = 1; i < z.size(); ++i) {
    if (is_even(z[i])) return false;
    if (i > 1 && z[i] <= z[i - 1]) return false;
    if (z[i] >= z[0]) return false;
  }
  return true;
}

// (c_1, ..., c_{m-1}, e) with e even, e-1 < c_1 < ... < c_{m-1}.
inline bool is_minus_strictly_increasing_seq(const CharSeq& z) {
  if (z.empty() || !is_even(z.back())) return false;
  int prev = z.back() - 1;
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    if (is_even(z[i])) return false;
    if (z[i] <= prev) return false;
    prev = z[i];
  }
  return true;
}

// Parses "(a,b,c)" or "a,b,c"; "()" is the empty sequence.
inline CharSeq parse_char_seq(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  CharSeq out;
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw domain_error("cannot parse sequence entry '" + item + "'");
    }
  }
  return out;
}

}  // namespace nakayama
