#pragma once

#include "vecpic/numeric.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

namespace vecpic {

/// Sparse polynomial in N variables with exact rational coefficients.
/// Exponents may be negative, so N = 1 doubles as a Laurent polynomial.
template <std::size_t N>
class SparsePoly {
 public:
  using Monomial = std::array<int, N>;

  SparsePoly() = default;
  SparsePoly(const Rational& c) { add(Monomial{}, c); }  // NOLINT: constants convert implicitly
  SparsePoly(long long c) : SparsePoly(Rational(c)) {}    // NOLINT

  static SparsePoly variable(std::size_t k, int power = 1) {
    Monomial e{};
    e.at(k) = power;
    return monomial(e, 1);
  }

  static SparsePoly monomial(const Monomial& e, const Rational& c) {
    SparsePoly p;
    p.add(e, c);
    return p;
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Coefficient of x_k^power, as a polynomial in the remaining variables.
  SparsePoly coefficientOf(std::size_t k, int power) const {
    SparsePoly out;
    for (const auto& [e, c] : terms_)
      if (e[k] == power) {
        Monomial f = e;
        f[k] = 0;
        out.add(f, c);
      }
    return out;
  }

  int maxDegree(std::size_t k) const {
    int best = std::numeric_limits<int>::min();
    for (const auto& [e, c] : terms_) best = std::max(best, e[k]);
    return best;
  }

  int minDegree(std::size_t k) const {
    int best = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_) best = std::min(best, e[k]);
    return best;
  }

  Rational evaluate(const std::array<Rational, N>& x) const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t k = 0; k < N; ++k) {
        if (e[k] < 0 && x[k] == 0) throw DomainError("negative power of zero");
        t *= power(x[k], e[k]);
      }
      s += t;
    }
    return s;
  }

  /// Substitute x_k := value, leaving the other variables symbolic.
  SparsePoly substitute(std::size_t k, const Rational& value) const {
    SparsePoly out;
    for (const auto& [e, c] : terms_) {
      Monomial f = e;
      f[k] = 0;
      out.add(f, c * power(value, e[k]));
    }
    return out;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(const SparsePoly& a) { return SparsePoly() - a; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Monomial e;
        for (std::size_t k = 0; k < N; ++k) e[k] = ea[k] + eb[k];
        out.add(e, ca * cb);
      }
    return out;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  SparsePoly pow(unsigned k) const {
    SparsePoly out(Rational(1));
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
  }

  std::string str(const std::array<std::string, N>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    // highest monomials first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string coef = c.str();
      if (!s.empty()) {
        if (c < 0) {
          s += " - ";
          coef = Rational(-c).str();
        } else {
          s += " + ";
        }
      }
      std::string mono;
      for (std::size_t k = 0; k < N; ++k) {
        if (e[k] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[k];
        if (e[k] != 1) mono += "^" + std::to_string(e[k]);
      }
      if (mono.empty()) s += coef;
      else if (coef == "1") s += mono;
      else if (coef == "-1") s += "-" + mono;
      else s += coef + "*" + mono;
    }
    return s;
  }

 private:
  static Rational power(const Rational& x, int e) {
    Rational out = 1;
    const Rational base = e < 0 ? Rational(1) / x : x;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
    return out;
  }

  void add(const Monomial& e, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Monomial, Rational> terms_;
};

using LaurentPoly = SparsePoly<1>;

/// Polynomial in (n, m): variable 0 is the twist n, variable 1 is m.
using WeightPolynomial = SparsePoly<2>;

}  // namespace vecpic
