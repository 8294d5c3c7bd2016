#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace quivrep {

/// Exact rational scalar. All arithmetic in the library is over the rationals;
/// there is no floating point anywhere.
using Rat = mpq_class;

/// Parse "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  try {
    q = Rat(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

/// Canonical "p/q" (or "p" when the denominator is 1).
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace quivrep
