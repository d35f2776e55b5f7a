#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace klie {

/// Exact rational number with 64-bit numerator/denominator.
///
/// Kept in canonical form: denominator > 0, gcd(num, den) = 1.
/// All arithmetic is overflow-checked through 128-bit intermediates;
/// an operation whose reduced result does not fit in 64 bits throws
/// std::overflow_error. The quantities handled here (root coordinates,
/// Cartan vectors, small Gram matrices) stay far below that bound.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    reduce_from(n, d);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

private:
  using i128 = __int128;

  static Rational from_i128(i128 n, i128 d) {
    Rational r;
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("Rational: 64-bit overflow");
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void reduce_from(std::int64_t n, std::int64_t d) {
    if (d < 0) {
      if (n == INT64_MIN || d == INT64_MIN)
        throw std::overflow_error("Rational: 64-bit overflow");
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = n;
    den_ = d;
  }

  std::int64_t num_;
  std::int64_t den_;
};

using RatVec = std::vector<Rational>;

inline Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: vector length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("RatVec +: length mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("RatVec -: length mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec operator*(const Rational& c, const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

inline RatVec operator-(const RatVec& v) { return Rational(-1) * v; }

inline bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

/// Strict lexicographic order on coordinate vectors; the fixed ordering
/// used everywhere deterministic output is required.
inline bool lex_less(const RatVec& a, const RatVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

struct RatVecHash {
  std::size_t operator()(const RatVec& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (const auto& r : v) {
      mix(static_cast<std::uint64_t>(r.num()));
      mix(static_cast<std::uint64_t>(r.den()));
    }
    return h;
  }
};

/// Parse an exact rational literal of the form "n" or "n/d".
/// Decimal points and exponents are rejected: inputs are exact by contract.
inline Rational parse_rational(const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : tok) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("invalid rational literal '" + tok +
                                  "' (floating point input is not accepted)");
  }
  const auto slash = tok.find('/');
  auto to_i64 = [](const std::string& s) {
    if (s.empty() || s == "-" || s == "+")
      throw std::invalid_argument("invalid integer literal");
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("invalid integer literal '" + s + "'");
    return static_cast<std::int64_t>(v);
  };
  if (slash == std::string::npos) return Rational(to_i64(tok));
  if (tok.find('/', slash + 1) != std::string::npos)
    throw std::invalid_argument("invalid rational literal '" + tok + "'");
  return Rational(to_i64(tok.substr(0, slash)), to_i64(tok.substr(slash + 1)));
}

/// Parse a comma-separated exact rational vector, e.g. "1/2,0,-3".
inline RatVec parse_rational_vector(const std::string& text) {
  RatVec out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

inline std::string vec_str(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace klie
