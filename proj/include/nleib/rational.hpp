#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nleib {

/// Exact rational scalar. Kept in mpq canonical form (lowest terms,
/// positive denominator); no rounding anywhere in this library.
using Rat = mpq_class;

/// Canonicalized rational from an integer pair.
inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Accepts "p", "-p" or "p/q" with decimal digits. Throws on anything else.
Rat rat_from_string(std::string_view text);

/// Canonical "p" or "p/q".
std::string rat_to_string(const Rat& q);

namespace detail {

/// Precondition failure: the caller handed us invalid input.
inline void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

/// Internal consistency check. Stays on in release builds: rank and
/// dimension decisions must be exact, so a failed check is a real bug
/// (or a violated precondition that slipped past `require`).
inline void ensure(bool ok, const std::string& msg) {
  if (!ok) throw std::logic_error("internal check failed: " + msg);
}

}  // namespace detail

}  // namespace nleib
