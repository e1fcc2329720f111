#include "polyspec/numeric.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace polyspec {

int Precision::resolve(int bits) {
  if (bits <= 0) throw std::invalid_argument("precision must be positive");
  if (bits <= 53) return 53;
  if (bits <= 64) return 64;
  if (bits <= 113) return 113;
  throw std::invalid_argument("precision above 113 bits is not supported");
}

std::string format_double(double x) {
  if (x == 0) return "0";
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string format_real(const Quad& x, int bits) {
  if (bits <= 53) return format_double(static_cast<double>(x));
  if (x == 0) return "0";
  const int digits = bits <= 64 ? 21 : 36;
  // Trim to the shortest prefix that still round-trips at this tier.
  for (int p = 17; p <= digits; ++p) {
    std::ostringstream os;
    os.precision(p);
    os << x;
    std::string s = os.str();
    Quad back(s);
    bool same = bits <= 64 ? static_cast<long double>(back) == static_cast<long double>(x) : back == x;
    if (same) return s;
  }
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

std::string ComplexValue::re_string() const { return format_real(re, precision_bits); }
std::string ComplexValue::im_string() const { return format_real(im, precision_bits); }

Frequency Frequency::exact(RationalVector coords) {
  Frequency f;
  f.mode_ = Mode::exact;
  f.exact_ = std::move(coords);
  return f;
}

Frequency Frequency::floating(std::vector<double> coords) {
  for (double x : coords) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite frequency coordinate");
  }
  Frequency f;
  f.mode_ = Mode::floating;
  f.approx_ = std::move(coords);
  return f;
}

RationalVector Frequency::to_rational() const {
  if (is_exact()) return exact_;
  RationalVector out;
  out.reserve(approx_.size());
  for (double x : approx_) out.push_back(rational_from_double(x));
  return out;
}

std::vector<double> Frequency::to_doubles() const {
  if (!is_exact()) return approx_;
  std::vector<double> out;
  out.reserve(exact_.size());
  for (const auto& q : exact_) out.push_back(to_real<double>(q));
  return out;
}

double Frequency::norm() const {
  double s = 0;
  for (double x : to_doubles()) s += x * x;
  return std::sqrt(s);
}

Frequency Frequency::operator-() const {
  if (is_exact()) return exact(polyspec::scaled(exact_, Rational(-1)));
  std::vector<double> v = approx_;
  for (auto& x : v) x = -x;
  return floating(std::move(v));
}

Frequency operator-(const Frequency& a, const Frequency& b) {
  if (a.size() != b.size()) throw std::invalid_argument("frequency dimension mismatch");
  if (a.is_exact() && b.is_exact()) return Frequency::exact(a.exact_ - b.exact_);
  auto x = a.to_doubles();
  auto y = b.to_doubles();
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return Frequency::floating(std::move(x));
}

Frequency operator+(const Frequency& a, const Frequency& b) { return a - (-b); }

Frequency Frequency::scaled(const Rational& t) const {
  if (is_exact()) return exact(polyspec::scaled(exact_, t));
  std::vector<double> v = approx_;
  const double s = t.get_d();
  for (auto& x : v) x *= s;
  return floating(std::move(v));
}

Frequency parse_frequency(const std::string& text) {
  RationalVector coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(parse_rational(item));
  if (coords.empty()) throw ParseError("empty frequency");
  return Frequency::exact(std::move(coords));
}

namespace {

std::size_t bit_length(const Integer& z) { return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2); }

template <class Real>
Real from_u128(const Integer& m) {
  Integer hi = m >> 64;
  Integer lo = m - (hi << 64);
  auto to_u64 = [](const Integer& z) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, z.get_mpz_t());
    return v;
  };
  using std::ldexp;
  return ldexp(static_cast<Real>(to_u64(hi)), 64) + static_cast<Real>(to_u64(lo));
}

}  // namespace

template <class Real>
Real to_real(const Rational& q) {
  if (sgn(q) == 0) return Real(0);
  Integer num = abs(q.get_num());
  const Integer& den = q.get_den();
  const long e = static_cast<long>(bit_length(num)) - static_cast<long>(bit_length(den));
  const long shift = 120 - e;
  Integer m;
  if (shift >= 0) {
    m = (num << static_cast<mp_bitcnt_t>(shift)) / den;
  } else {
    m = num / (den << static_cast<mp_bitcnt_t>(-shift));
  }
  using std::ldexp;
  Real r = ldexp(from_u128<Real>(m), static_cast<int>(-shift));
  return sgn(q) < 0 ? Real(-r) : r;
}

template double to_real<double>(const Rational&);
template long double to_real<long double>(const Rational&);
template Quad to_real<Quad>(const Rational&);

}  // namespace polyspec
