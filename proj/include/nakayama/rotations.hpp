#pragma once

// Rotation operators on integer sequences with at most one even entry: the
// descent rotation lambda, the cliff rotation rho with its inverse, and
// powers of rho.  rho^k is computed via the shift identity
// rho^{q(m+1)+r} z = rho^r z + (2q, ..., 2q), so large exponents are cheap.

#include <cstdlib>
#include <string>
#include <vector>

#include "nakayama/algebra.hpp"

namespace nakayama {

using CharSeq = std::vector<int>;

inline std::string to_string(const CharSeq& z) {
  std::string out = "(";
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(z[i]);
  }
  return out + ")";
}

inline bool is_even(int v) { return v % 2 == 0; }

// At most one even entry; the admissible domain of the rotations.
inline bool has_at_most_one_even(const CharSeq& z) {
  int evens = 0;
  for (int e : z)
    if (is_even(e)) ++evens;
  return evens <= 1;
}

// 0-based index of the first even entry in z[lo..hi), or -1.
inline int even_position(const CharSeq& z, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    if (is_even(z[i])) return i;
  return -1;
}

// Characteristic sequence: non-negative entries, at most one of them even.
inline bool is_char_seq(const CharSeq& z) {
  for (int e : z)
    if (e < 0) return false;
  return has_at_most_one_even(z);
}

// Projective characteristic sequence: the unique even entry exists and is 0.
inline bool is_projective_char_seq(const CharSeq& z) {
  if (!is_char_seq(z)) return false;
  int v = even_position(z, 0, static_cast<int>(z.size()));
  return v >= 0 && z[v] == 0;
}

inline CharSeq lambda_rot(const CharSeq& z) {
  if (z.size() < 2) throw domain_error("lambda needs length >= 2");
  if (!is_projective_char_seq(z))
    throw domain_error("lambda needs a projective characteristic sequence");
  int last = z.back();
  CharSeq head(z.begin(), z.end() - 1);
  if (last == 1) return head;
  CharSeq out;
  out.push_back(last == 0 ? 0 : last - 2);
  out.insert(out.end(), head.begin(), head.end());
  return out;
}

inline CharSeq rho_rot(const CharSeq& z) {
  if (z.empty()) throw domain_error("rho on empty sequence");
  const int m = static_cast<int>(z.size());
  if (m == 1) return {z[0] + 1};
  int v = even_position(z, 1, m);
  CharSeq out;
  if (v < 0) {
    out.assign(z.begin() + 1, z.end());
    out.push_back(z[0] + 1);
  } else {
    out.assign(z.begin() + 1, z.begin() + v);
    out.push_back(z[0] + 1);
    out.insert(out.end(), z.begin() + v + 1, z.end());
    out.push_back(z[v] + 1);
  }
  return out;
}

inline CharSeq rho_inv(const CharSeq& z) {
  if (z.empty()) throw domain_error("rho^-1 on empty sequence");
  const int m = static_cast<int>(z.size());
  if (m == 1) return {z[0] - 1};
  int v = even_position(z, 0, m - 1);
  CharSeq out;
  if (v < 0) {
    out.push_back(z[m - 1] - 1);
    out.insert(out.end(), z.begin(), z.end() - 1);
  } else {
    out.push_back(z[v] - 1);
    out.insert(out.end(), z.begin(), z.begin() + v);
    out.push_back(z[m - 1] - 1);
    out.insert(out.end(), z.begin() + v + 1, z.end() - 1);
  }
  return out;
}

inline CharSeq shift_seq(CharSeq z, int delta) {
  for (int& e : z) e += delta;
  return z;
}

inline CharSeq rho_pow(CharSeq z, long long k) {
  if (z.empty()) throw domain_error("rho power on empty sequence");
  const long long p = static_cast<long long>(z.size()) + 1;
  long long q = k >= 0 ? k / p : -((-k + p - 1) / p);
  long long r = k - q * p;
  CharSeq out = shift_seq(std::move(z), static_cast<int>(2 * q));
  for (long long i = 0; i < r; ++i) out = rho_rot(out);
  return out;
}

inline bool has_negative_entry(const CharSeq& z) {
  for (int e : z)
    if (e < 0) return true;
  return false;
}

}  // namespace nakayama
