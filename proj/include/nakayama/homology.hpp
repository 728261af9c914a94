#pragma once

// Homological invariants computed directly from resolutions: projective and
// injective dimensions by syzygy/cosyzygy iteration, global and dominant
// dimension, torsionless modules and the higher Auslander property.  The
// syzygy iteration here is the reference computation everything else in the
// library is checked against.

#include <string>
#include <utility>

#include "nakayama/algebra.hpp"

namespace nakayama {

// Extended dimension value: -infinity (zero module), a finite integer, or
// +infinity (dominant dimension of a self-injective algebra).
class ExtDim {
 public:
  static ExtDim neg_infinity() { return ExtDim(Kind::NegInf, 0); }
  static ExtDim finite(int v) { return ExtDim(Kind::Finite, v); }
  static ExtDim infinity() { return ExtDim(Kind::Inf, 0); }

  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_infinite() const { return kind_ == Kind::Inf; }
  bool is_neg_infinite() const { return kind_ == Kind::NegInf; }

  int value() const {
    if (kind_ != Kind::Finite) throw domain_error("ExtDim is not finite");
    return value_;
  }

  friend bool operator==(const ExtDim&, const ExtDim&) = default;
  friend auto operator<=>(const ExtDim& a, const ExtDim& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    return a.value_ <=> b.value_;
  }

 private:
  enum class Kind { NegInf, Finite, Inf };
  ExtDim(Kind k, int v) : kind_(k), value_(v) {}
  Kind kind_;
  int value_;
};

inline std::string to_string(const ExtDim& d) {
  if (d.is_neg_infinite()) return "-inf";
  if (d.is_infinite()) return "inf";
  return std::to_string(d.value());
}

// Projective dimension by iterating the syzygy; always finite for a linear
// Nakayama algebra.
inline ExtDim pd(const KupischSeries& a, const MaybeModule& m) {
  if (!m) return ExtDim::neg_infinity();
  Module cur = *m;
  int steps = 0;
  while (!is_projective(a, cur)) {
    cur = *syzygy(a, cur);
    ++steps;
    if (steps > 2 * a.n())
      throw domain_error("syzygy iteration did not terminate");
  }
  return ExtDim::finite(steps);
}

inline int pd_value(const KupischSeries& a, const Module& m) {
  return pd(a, MaybeModule(m)).value();
}

// Injective dimension by iterating the cosyzygy.
inline ExtDim id(const KupischSeries& a, const MaybeModule& m) {
  if (!m) return ExtDim::neg_infinity();
  Module cur = *m;
  int steps = 0;
  while (!is_injective(a, cur)) {
    cur = *cosyzygy(a, cur);
    ++steps;
    if (steps > 2 * a.n())
      throw domain_error("cosyzygy iteration did not terminate");
  }
  return ExtDim::finite(steps);
}

inline int id_value(const KupischSeries& a, const Module& m) {
  return id(a, MaybeModule(m)).value();
}

inline int global_dimension(const KupischSeries& a) {
  int best = 0;
  for (int i = 1; i <= a.n(); ++i)
    best = std::max(best, pd_value(a, Module{i, 1}));
  return best;
}

// Dominant dimension: the minimum over indecomposable projectives P of the
// number of leading projective terms in the minimal injective coresolution
// of P.  Infinite exactly when every projective is injective (n = 1).
inline ExtDim dominant_dimension(const KupischSeries& a) {
  bool any_finite = false;
  int best = -1;
  for (int t = 1; t <= a.n(); ++t) {
    Module p{t, a.c(t)};
    int count = 0;
    MaybeModule cur = p;
    bool infinite = false;
    while (true) {
      Module env = injective_envelope(a, *cur);
      if (!is_projective(a, env)) break;
      ++count;
      cur = cosyzygy(a, *cur);
      if (!cur) {
        infinite = true;
        break;
      }
    }
    if (infinite) continue;
    if (!any_finite || count < best) best = count;
    any_finite = true;
  }
  if (!any_finite) return ExtDim::infinity();
  return ExtDim::finite(best);
}

// M is torsionless iff it embeds into a projective, i.e. there is some
// t' >= t with c[t'] - (t' - t) = |M|.
inline bool is_torsionless(const KupischSeries& a, const Module& m) {
  for (int tp = m.top; tp <= a.n(); ++tp)
    if (a.c(tp) - (tp - m.top) == m.len) return true;
  return false;
}

// All subfactors have pd bounded by pd M.
inline bool is_pd_controlled(const KupischSeries& a, const Module& m) {
  int bound = pd_value(a, m);
  for (const Module& z : subfactors(m))
    if (pd_value(a, z) > bound) return false;
  return true;
}

inline bool is_odd_module(const KupischSeries& a, const Module& m) {
  return pd_value(a, m) % 2 != 0;
}

inline bool is_even_module(const KupischSeries& a, const Module& m) {
  return pd_value(a, m) % 2 == 0;
}

// d-higher Auslander: n >= 2 and gldim = domdim = d.
inline bool is_higher_auslander(const KupischSeries& a) {
  if (a.n() < 2) return false;
  ExtDim dom = dominant_dimension(a);
  return dom.is_finite() && dom.value() == global_dimension(a);
}

inline int auslander_degree(const KupischSeries& a) {
  if (!is_higher_auslander(a))
    throw domain_error("not a higher Auslander algebra");
  return global_dimension(a);
}

// Flag and degree in one pass, so callers never recompute d.
inline std::pair<bool, ExtDim> higher_auslander(const KupischSeries& a) {
  int g = global_dimension(a);
  ExtDim dom = dominant_dimension(a);
  bool ha = a.n() >= 2 && dom == ExtDim::finite(g);
  return {ha, ExtDim::finite(g)};
}

}  // namespace nakayama
