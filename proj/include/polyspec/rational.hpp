#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyspec {

/// Exact rational number. GMP keeps mpq_class canonical (positive
/// denominator, reduced) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;

/// Thrown for malformed textual input (rationals, JSON documents, flags).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p", "p/q", or a decimal literal such as "-1.25" or "3e-2".
/// Decimal literals are converted exactly (0.1 becomes 1/10).
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Exact conversion of a finite double (every finite double is a dyadic rational).
Rational rational_from_double(double x);

/// Shortest decimal text that round-trips to x, parsed exactly.
Rational rational_from_shortest_decimal(double x);

inline int sign(const Rational& q) { return sgn(q); }

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector scaled(const RationalVector& a, const Rational& s);
bool is_zero(const RationalVector& v);

/// Multiplies v by the lcm of its denominators and divides by the gcd of the
/// numerators. The result is an integer vector with gcd 1. Zero stays zero.
std::vector<Integer> primitive_integer(const RationalVector& v);

/// Flips the sign so that the first nonzero entry is positive.
void canonicalize_sign(std::vector<Integer>& v);

RationalVector to_rational(const std::vector<Integer>& v);

}  // namespace polyspec
