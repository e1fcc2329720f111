#pragma once

#include "polyspec/rational.hpp"

#include <boost/multiprecision/float128.hpp>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyspec {

using Quad = boost::multiprecision::float128;

/// Raised when a floating-point frequency sits too close to a degenerate
/// configuration and precision escalation is not allowed.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested working precision. Supported tiers are 53 (double), 64 (x87
/// long double) and 113 (binary128); other requests round up to the next tier.
struct Precision {
  int bits = 53;
  bool allow_escalation = true;

  static constexpr int kEscalatedBits = 113;
  /// Tier actually used for a request; throws std::invalid_argument above 113.
  static int resolve(int bits);
};

/// Result of a Fourier evaluation. Values are stored in binary128, which
/// holds every lower tier exactly; precision_bits records the tier used.
struct ComplexValue {
  Quad re = 0;
  Quad im = 0;
  int precision_bits = 53;

  std::complex<double> value() const { return {static_cast<double>(re), static_cast<double>(im)}; }
  double abs() const { return std::abs(value()); }

  /// Shortest round-trip text at the stored tier.
  std::string re_string() const;
  std::string im_string() const;
};

/// Formats a value carried at `bits` precision as shortest round-trip text.
std::string format_real(const Quad& x, int bits);
std::string format_double(double x);

/// Frequency vector xi. Exact frequencies have rational coordinates and
/// every degeneracy test on them is decided exactly.
class Frequency {
 public:
  enum class Mode { exact, floating };

  Frequency() = default;
  static Frequency exact(RationalVector coords);
  static Frequency floating(std::vector<double> coords);
  static Frequency zero(std::size_t d) { return exact(RationalVector(d, Rational(0))); }

  Mode mode() const { return mode_; }
  bool is_exact() const { return mode_ == Mode::exact; }
  std::size_t size() const { return mode_ == Mode::exact ? exact_.size() : approx_.size(); }

  const RationalVector& rational() const { return exact_; }
  const std::vector<double>& approx() const { return approx_; }

  /// Exact coordinates; floating coordinates convert without rounding.
  RationalVector to_rational() const;
  std::vector<double> to_doubles() const;
  double norm() const;

  Frequency operator-() const;
  friend Frequency operator-(const Frequency& a, const Frequency& b);
  friend Frequency operator+(const Frequency& a, const Frequency& b);
  Frequency scaled(const Rational& t) const;

 private:
  Mode mode_ = Mode::exact;
  RationalVector exact_;
  std::vector<double> approx_;
};

/// Parses "a,b,c" where each entry is an integer, p/q, or decimal; decimals
/// are read exactly, so the result is always an exact frequency.
Frequency parse_frequency(const std::string& text);

/// Correctly scaled conversion of an exact rational to a floating tier.
template <class Real>
Real to_real(const Rational& q);

extern template double to_real<double>(const Rational&);
extern template long double to_real<long double>(const Rational&);
extern template Quad to_real<Quad>(const Rational&);

}  // namespace polyspec
