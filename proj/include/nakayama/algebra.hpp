#pragma once

// Connected linear Nakayama algebras given by their Kupisch series, together
// with the lattice of indecomposable (uniserial) modules M(t,l) and the usual
// structural operations: radical, socle, syzygy, cosyzygy, AR translate,
// injective envelopes and one-point extensions.
//
// Conventions: simples are indexed 1..n with tau S_i = S_{i-1}, so c[1] = 1
// (the simple projective) and the last simple S_n is injective.  A module
// M(t,l) is determined by its top index t and its length l; its composition
// factors, read from the socle upwards, are the simples t-l+1, ..., t.

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nakayama {

// Violation of a documented precondition (bad series, bad module
// coordinates, malformed sequence, ...).
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Uniserial module with top simple index `top` and length `len`.
struct Module {
  int top = 1;
  int len = 1;

  int socle_index() const { return top - len + 1; }

  friend bool operator==(const Module&, const Module&) = default;
  friend auto operator<=>(const Module&, const Module&) = default;
};

// The zero module is a legitimate value of syzygy/cosyzygy/tau, not an error.
using MaybeModule = std::optional<Module>;
inline constexpr std::nullopt_t Zero = std::nullopt;

inline std::string to_string(const Module& m) {
  return "M(" + std::to_string(m.top) + "," + std::to_string(m.len) + ")";
}

inline std::string to_string(const MaybeModule& m) {
  return m ? to_string(*m) : std::string("0");
}

// Kupisch series c[1..n] of projective lengths.  Valid series satisfy
// c[1] = 1, c[i] >= 2 for i >= 2 (connectedness) and c[i+1] <= c[i] + 1.
class KupischSeries {
 public:
  explicit KupischSeries(std::vector<int> entries) : c_(std::move(entries)) {
    if (c_.empty()) throw domain_error("empty Kupisch series");
    if (c_[0] != 1) throw domain_error("Kupisch series must start with 1");
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] < 2)
        throw domain_error("disconnected series: c[" + std::to_string(i + 1) +
                           "] = " + std::to_string(c_[i]) + " < 2");
      if (c_[i] > c_[i - 1] + 1)
        throw domain_error("growth violation at position " + std::to_string(i) +
                           ": c[" + std::to_string(i + 1) + "] > c[" +
                           std::to_string(i) + "] + 1");
    }
  }

  int n() const { return static_cast<int>(c_.size()); }

  // c(i), 1-based.
  int c(int i) const {
    if (i < 1 || i > n()) throw domain_error("Kupisch index out of range");
    return c_[static_cast<std::size_t>(i - 1)];
  }

  // Height: maximal length of an indecomposable module.
  int height() const { return *std::max_element(c_.begin(), c_.end()); }

  const std::vector<int>& entries() const { return c_; }

  friend bool operator==(const KupischSeries&, const KupischSeries&) = default;
  friend auto operator<=>(const KupischSeries&, const KupischSeries&) = default;

 private:
  std::vector<int> c_;
};

inline std::string to_string(const KupischSeries& a) {
  std::string out;
  for (int i = 1; i <= a.n(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(a.c(i));
  }
  return out;
}

// Parses "1,2,3,3" and validates.
inline KupischSeries parse_kupisch(const std::string& text) {
  std::vector<int> raw;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      raw.push_back(value);
    } catch (const std::exception&) {
      throw domain_error("cannot parse Kupisch entry '" + item + "'");
    }
  }
  return KupischSeries(raw);
}

inline KupischSeries validate_kupisch(std::vector<int> raw) {
  return KupischSeries(std::move(raw));
}

inline Module make_module(const KupischSeries& a, int t, int l) {
  if (t < 1 || t > a.n())
    throw domain_error("module top index out of range: " + std::to_string(t));
  if (l < 1 || l > a.c(t))
    throw domain_error("module length out of range: " + to_string(Module{t, l}));
  if (t - l + 1 < 1)
    throw domain_error("module socle index below 1: " + to_string(Module{t, l}));
  return Module{t, l};
}

inline bool is_projective(const KupischSeries& a, const Module& m) {
  return m.len == a.c(m.top);
}

inline bool is_simple(const Module& m) { return m.len == 1; }

inline MaybeModule radical(const Module& m) {
  if (m.len == 1) return Zero;
  return Module{m.top - 1, m.len - 1};
}

inline MaybeModule soc_quotient(const Module& m) {
  if (m.len == 1) return Zero;
  return Module{m.top, m.len - 1};
}

inline MaybeModule rad_power(const Module& m, int k) {
  if (k < 0) throw domain_error("radical power out of range");
  if (k >= m.len) return Zero;
  return Module{m.top - k, m.len - k};
}

inline Module socle(const Module& m) { return Module{m.socle_index(), 1}; }

inline Module top_of(const Module& m) { return Module{m.top, 1}; }

// Simple indices of the composition factors, socle first.
inline std::vector<int> composition_factors(const Module& m) {
  std::vector<int> out;
  for (int i = m.socle_index(); i <= m.top; ++i) out.push_back(i);
  return out;
}

// Kernel of the projective cover M(t,c[t]) ->> M(t,l).
inline MaybeModule syzygy(const KupischSeries& a, const Module& m) {
  if (is_projective(a, m)) return Zero;
  return Module{m.top - m.len, a.c(m.top) - m.len};
}

// Longest module with the same socle index.
inline Module injective_envelope(const KupischSeries& a, const Module& m) {
  int s = m.socle_index();
  int best = 1;
  for (int l = 1; s + l - 1 <= a.n(); ++l) {
    if (a.c(s + l - 1) >= l) best = l;
  }
  return Module{s + best - 1, best};
}

inline bool is_injective(const KupischSeries& a, const Module& m) {
  return injective_envelope(a, m) == m;
}

// Cokernel of the injective envelope M -> IM.
inline MaybeModule cosyzygy(const KupischSeries& a, const Module& m) {
  Module env = injective_envelope(a, m);
  if (env == m) return Zero;
  return Module{env.top, env.len - m.len};
}

inline MaybeModule tau(const KupischSeries& a, const Module& m) {
  if (is_projective(a, m)) return Zero;
  return Module{m.top - 1, m.len};
}

inline MaybeModule tau_minus(const KupischSeries& a, const Module& m) {
  if (is_injective(a, m)) return Zero;
  return Module{m.top + 1, m.len};
}

inline std::vector<Module> all_indecomposables(const KupischSeries& a) {
  std::vector<Module> out;
  for (int t = 1; t <= a.n(); ++t)
    for (int l = 1; l <= a.c(t); ++l) out.push_back(Module{t, l});
  return out;
}

inline std::vector<Module> submodules(const Module& m) {
  std::vector<Module> out;
  for (int k = 0; k < m.len; ++k) out.push_back(Module{m.top - k, m.len - k});
  return out;
}

inline std::vector<Module> factor_modules(const Module& m) {
  std::vector<Module> out;
  for (int k = 0; k < m.len; ++k) out.push_back(Module{m.top, m.len - k});
  return out;
}

// Non-zero subfactors: all intervals of the composition series.
inline std::vector<Module> subfactors(const Module& m) {
  std::vector<Module> out;
  int s = m.socle_index();
  for (int lo = s; lo <= m.top; ++lo)
    for (int hi = lo; hi <= m.top; ++hi) out.push_back(Module{hi, hi - lo + 1});
  return out;
}

// Index of the distinguished simple omega = S_n.
inline int omega(const KupischSeries& a) { return a.n(); }

inline bool is_ascending(const KupischSeries& a) {
  for (int i = 1; i < a.n(); ++i)
    if (a.c(i + 1) < a.c(i)) return false;
  return true;
}

inline bool is_concave(const KupischSeries& a) {
  int i = 1;
  while (i < a.n() && a.c(i + 1) >= a.c(i)) ++i;
  while (i < a.n() && a.c(i + 1) <= a.c(i)) ++i;
  return i == a.n();
}

// Top indices of the summits (modules of maximal length).
inline std::vector<int> summits(const KupischSeries& a) {
  std::vector<int> out;
  int h = a.height();
  for (int t = 1; t <= a.n(); ++t)
    if (a.c(t) == h) out.push_back(t);
  return out;
}

inline Module first_summit(const KupischSeries& a) {
  if (!is_concave(a)) throw domain_error("first_summit requires a concave series");
  return Module{summits(a).front(), a.height()};
}

inline Module last_summit(const KupischSeries& a) {
  if (!is_concave(a)) throw domain_error("last_summit requires a concave series");
  return Module{summits(a).back(), a.height()};
}

inline MaybeModule principal_cliff(const KupischSeries& a) {
  return soc_quotient(last_summit(a));
}

// Serre restriction to the simples i..j; modules over the restriction are the
// M(t,l) with socle and top inside [i,j].
inline KupischSeries serre_restrict(const KupischSeries& a, int i, int j) {
  if (i < 1 || j > a.n() || i > j) throw domain_error("bad Serre interval");
  std::vector<int> out;
  for (int k = 1; k <= j - i + 1; ++k) out.push_back(std::min(a.c(i + k - 1), k));
  return KupischSeries(out);
}

// One-point extension A[M] for M with top index n; the new projective has
// radical M, so the appended Kupisch entry is |M| + 1.
inline KupischSeries one_point_extension(const KupischSeries& a, const Module& m) {
  if (m.top != a.n())
    throw domain_error("one-point extension needs top M = omega, got " + to_string(m));
  std::vector<int> out = a.entries();
  out.push_back(m.len + 1);
  return KupischSeries(out);
}

}  // namespace nakayama
