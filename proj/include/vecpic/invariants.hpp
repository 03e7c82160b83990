#pragma once

#include "vecpic/numeric.hpp"

#include <array>
#include <cstdlib>
#include <string>

namespace vecpic {

/// Tautological generators in the fixed order used throughout: Λ(1,0,0), Λ(0,1,0), Λ(1,1,0), Λ(0,0,1).
inline constexpr std::array<const char*, 4> kLambdaNames = {"Lambda(1,0,0)", "Lambda(0,1,0)", "Lambda(1,1,0)", "Lambda(0,0,1)"};

using Exponents4 = std::array<std::int64_t, 4>;

struct NumericalContext {
  std::int64_t r = 1;
  std::int64_t d = 0;
  std::int64_t g = 2;
  std::int64_t n_rd = 1;
  std::int64_t v_rdg = 1;
  std::int64_t k_rdg = 1;

  std::int64_t chi() const { return d + r * (1 - g); }  // χ of a bundle of type (r, d)
};

inline NumericalContext makeContext(std::int64_t r, std::int64_t d, std::int64_t g) {
  if (r < 1) throw DomainError("rank must be at least 1");
  if (g < 2) throw DomainError("genus must be at least 2");
  if (std::abs(r) > (1 << 20) || std::abs(d) > (std::int64_t{1} << 40) || g > (1 << 20))
    throw DomainError("parameters too large");
  NumericalContext c;
  c.r = r;
  c.d = d;
  c.g = g;
  c.n_rd = gcd(r, d);
  c.v_rdg = gcdAll({d / c.n_rd + (r / c.n_rd) * (1 - g), d + 1 - g, 2 * g - 2});
  c.k_rdg = (2 * g - 2) / gcd(2 * g - 2, c.chi());
  if (c.chi() % (c.n_rd * c.v_rdg) != 0) throw InternalError("n*v does not divide d + r(1-g)");
  return c;
}

/// Weight of the scalar automorphisms on each tautological generator.
inline Exponents4 resWeights(const NumericalContext& c) {
  return {0, c.r * (c.d + 1 - c.g), c.r * (c.d - 1 + c.g), c.chi()};
}

inline std::int64_t pairWithWeights(const NumericalContext& c, const Exponents4& e) {
  const auto w = resWeights(c);
  std::int64_t s = 0;
  for (int i = 0; i < 4; ++i) s = checkedAdd(s, checkedMul(w[i], e[i]));
  return s;
}

inline std::int64_t resImageGenerator(const NumericalContext& c) {
  const auto w = resWeights(c);
  return gcdAll(std::span<const std::int64_t>(w.data(), w.size()));
}

struct XiTheta {
  Exponents4 xi{};
  Exponents4 theta{};
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
};

/// The rank-1 invariant v_{1,d,g} = gcd(d+1−g, 2g−2).
inline std::int64_t v1(const NumericalContext& c) { return gcd(c.d + 1 - c.g, 2 * c.g - 2); }

inline XiTheta xiThetaBasis(const NumericalContext& c) {
  const std::int64_t w1 = v1(c);
  const std::int64_t a = c.d + 1 - c.g;
  const std::int64_t b = c.d + c.g - 1;
  if (w1 % c.v_rdg != 0) throw InternalError("v does not divide v1");
  const std::int64_t ratio = w1 / c.v_rdg;
  // −(1/n)(v1/v)(d + r(1−g)); n divides both r and d
  const std::int64_t rhs = -checkedMul(c.chi() / c.n_rd, ratio);
  XiTheta out;
  out.xi = {0, b / w1, -(a / w1), 0};
  if (b % w1 != 0 || a % w1 != 0) throw InternalError("Xi exponents are not integral");

  if (a == 0) {
    out.alpha = 0;
    if (rhs % b != 0) throw InternalError("Bezout equation for Theta has no solution");
    out.beta = rhs / b;
  } else if (b == 0) {
    if (rhs % a != 0) throw InternalError("Bezout equation for Theta has no solution");
    out.alpha = rhs / a;
    out.beta = 0;
  } else {
    const auto eg = extendedGcd(a, b);
    if (rhs % eg.g != 0) throw InternalError("Bezout equation for Theta has no solution");
    const std::int64_t scale = rhs / eg.g;
    const std::int64_t step = std::abs(b / eg.g);  // α is determined modulo this
    std::int64_t alpha = checkedMul(eg.x % step, scale % step) % step;
    if (alpha < 0) alpha += step;
    // representative of least absolute value, ties toward positive
    if (alpha > step - alpha) alpha -= step;
    out.alpha = alpha;
    const std::int64_t num = rhs - checkedMul(alpha, a);
    if (num % b != 0) throw InternalError("Bezout back-substitution failed");
    out.beta = num / b;
  }
  out.theta = {0, out.alpha, out.beta, (c.r / c.n_rd) * ratio};
  if (pairWithWeights(c, out.xi) != 0) throw InternalError("Xi has nonzero res weight");
  if (pairWithWeights(c, out.theta) != 0) throw InternalError("Theta has nonzero res weight");
  return out;
}

struct PoincareVerdict {
  bool exists = false;
  std::int64_t nv = 0;           // n_{r,d}·v_{r,d,g}
  std::int64_t coprimeGcd = 0;   // gcd(d+r(1−g), r(d+1−g), r(2g−2))
};

inline PoincareVerdict poincareCriterion(const NumericalContext& c) {
  PoincareVerdict p;
  p.nv = c.n_rd * c.v_rdg;
  p.coprimeGcd = gcdAll({c.chi(), c.r * (c.d + 1 - c.g), c.r * (2 * c.g - 2)});
  p.exists = p.nv == 1;
  if ((p.coprimeGcd == 1) != p.exists) throw InternalError("the two Poincare criteria disagree");
  return p;
}

inline bool poincareBundleExists(const NumericalContext& c) { return poincareCriterion(c).exists; }

}  // namespace vecpic
