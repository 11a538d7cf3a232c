#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace politrigon {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as construction goes through the helpers
// below; raw two-argument mpq_class construction does not canonicalize.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const mpz_class& num, const mpz_class& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rat& q) { return sgn(q); }

inline double to_double(const Rat& q) { return q.get_d(); }

// Parses "p/q", an integer, or a decimal like "-0.25" (read exactly).
std::optional<Rat> parse_rat(const std::string& text);

// Canonical "p" or "p/q" form; round-trips through parse_rat bit-exact.
std::string rat_to_string(const Rat& q);

// Dyadic approximation round(x * 2^bits) / 2^bits.
Rat dyadic_round(double x, int bits);

}  // namespace politrigon
