#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgg {

// Exact rational scalar. All equilibrium geometry (tight systems, piece
// bases/directions, vertex enumeration, linear functionals) runs on these;
// floating point only enters when a benefit function is evaluated.
using Rat = mpq_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "3/2", "-7", "0". Rejects empty input, junk, and zero denominators.
inline Rat rat_from_string(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) throw std::invalid_argument("empty rational");
  size_t b = s.find_last_not_of(" \t\r\n");
  std::string t = s.substr(a, b - a + 1);
  // strict shape check: GMP itself skips interior whitespace, which would
  // quietly turn "1 2" into 12
  size_t pos = (t[0] == '-') ? 1 : 0;
  size_t digits = 0, slashes = 0;
  for (size_t i = pos; i < t.size(); ++i) {
    if (t[i] == '/') {
      if (++slashes > 1 || digits == 0 || i + 1 == t.size())
        throw std::invalid_argument("bad rational: '" + t + "'");
      digits = 0;
    } else if (t[i] >= '0' && t[i] <= '9') {
      ++digits;
    } else {
      throw std::invalid_argument("bad rational: '" + t + "'");
    }
  }
  if (digits == 0) throw std::invalid_argument("bad rational: '" + t + "'");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational: '" + t + "'");
  if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
    throw std::invalid_argument("zero denominator: '" + t + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline double rat_to_double(const Rat& q) { return q.get_d(); }

inline bool vec_eq(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Lexicographic coordinate order; used for all deterministic tie-breaks.
inline bool vec_lex_less(const RatVec& a, const RatVec& b) {
  size_t k = a.size() < b.size() ? a.size() : b.size();
  for (size_t i = 0; i < k; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat vec_sum(const RatVec& a) {
  Rat s = 0;
  for (const Rat& x : a) s += x;
  return s;
}

}  // namespace pgg
