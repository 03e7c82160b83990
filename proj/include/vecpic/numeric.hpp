#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace vecpic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (g < 2, ω_C = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: unknown vertex ids, disconnected graphs, bad documents.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computed quantity violated an identity that holds by construction.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("integer overflow in product");
  return out;
}

inline std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("integer overflow in sum");
  return out;
}

/// Nonnegative gcd; gcd(0, x) = |x|, gcd(0, 0) = 0.
inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

inline std::int64_t gcdAll(std::initializer_list<std::int64_t> values) {
  std::int64_t g = 0;
  for (auto v : values) g = std::gcd(g, v);
  return g;
}

inline std::int64_t gcdAll(std::span<const std::int64_t> values) {
  std::int64_t g = 0;
  for (auto v : values) g = std::gcd(g, v);
  return g;
}

struct ExtendedGcd {
  std::int64_t g;  // >= 0
  std::int64_t x;
  std::int64_t y;  // a*x + b*y == g
};

inline ExtendedGcd extendedGcd(std::int64_t a, std::int64_t b) {
  std::int64_t oldR = a, r = b;
  std::int64_t oldS = 1, s = 0;
  std::int64_t oldT = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = oldR / r;
    oldR = std::exchange(r, oldR - q * r);
    oldS = std::exchange(s, oldS - q * s);
    oldT = std::exchange(t, oldT - q * t);
  }
  if (oldR < 0) return {-oldR, -oldS, -oldT};
  return {oldR, oldS, oldT};
}

inline std::int64_t floorDiv(std::int64_t a, std::int64_t b) {
  if (b == 0) throw DomainError("division by zero");
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceilDiv(std::int64_t a, std::int64_t b) { return -floorDiv(-a, b); }

inline bool isIntegral(const Rational& q) { return denominator(q) == 1; }

inline BigInt floor(const Rational& q) {
  BigInt num = numerator(q);
  const BigInt& den = denominator(q);  // always positive
  BigInt quot = num / den;
  if (num % den != 0 && num < 0) quot -= 1;
  return quot;
}

inline BigInt ceil(const Rational& q) { return -floor(-q); }

inline std::int64_t toInt64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw DomainError("value does not fit in 64 bits: " + v.str());
  return v.convert_to<std::int64_t>();
}

/// Integer value of an exact rational; throws InternalError when it is not integral.
inline BigInt requireInteger(const Rational& q, const std::string& what) {
  if (!isIntegral(q)) throw InternalError(what + " is not integral: " + q.str());
  return numerator(q);
}

inline std::string toString(const BigInt& v) { return v.str(); }
inline std::string toString(const Rational& q) { return q.str(); }

}  // namespace vecpic
