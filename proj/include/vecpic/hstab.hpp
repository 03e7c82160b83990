#pragma once

#include "vecpic/balance.hpp"
#include "vecpic/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vecpic {

/// Two smooth components C1, C2 meeting at N points, with E_{C1} a sum of k = r/q stable
/// bundles of rank q and E_{C2} stable.
struct TwoComponentConfig {
  int g1 = 1;
  int g2 = 1;
  int N = 1;
  int r = 1;
  int q = 1;
  std::int64_t d = 0;
  std::vector<Rational> alphas;  // α_0 … α_{k−1}; α_i weights the step with F_i ⊃ E_{C2}(−Σp)
  std::int64_t n = 0;            // twist used by chiValues
  std::int64_t d1Offset = 0;     // 0 gives the saturating multidegree

  int genus() const { return g1 + g2 + N - 1; }
  int omega1() const { return 2 * g1 - 2 + N; }
  int omega2() const { return 2 * g2 - 2 + N; }
  int omegaC() const { return 2 * genus() - 2; }
  int summands() const { return r / q; }

  /// d·ω1/ω_C − N·r/2 + offset, exact.
  Rational d1Exact() const { return Rational(d * omega1(), omegaC()) - Rational(N * r, 2) + d1Offset; }

  bool isValid(std::string* why = nullptr) const {
    auto no = [&](const char* msg) {
      if (why) *why = msg;
      return false;
    };
    if (g1 < 1 || g2 < g1) return no("need 1 <= g1 <= g2");
    if (N < 1) return no("need N >= 1");
    if (r < 1 || q < 1 || r % q != 0) return no("need q | r");
    const Rational d1 = d1Exact();
    if (!isIntegral(d1)) return no("multidegree is not integral");
    if (!isIntegral(d1 * q / r)) return no("summand degree e = d1*q/r is not integral");
    if (!alphas.empty() && alphas.size() != static_cast<std::size_t>(summands())) return no("need r/q weights");
    for (const auto& a : alphas)
      if (a < 0) return no("weights must be nonnegative");
    return true;
  }

  void require() const {
    std::string why;
    if (!isValid(&why)) throw ValidationError("invalid two-component configuration: " + why);
  }

  std::int64_t d1() const { return toInt64(numerator(d1Exact())); }
  std::int64_t d2() const { return d - d1(); }
  std::int64_t e() const { return d1() * q / r; }

  DualGraph graph() const {
    std::vector<std::pair<std::string, std::string>> edges(static_cast<std::size_t>(N), {"C1", "C2"});
    return DualGraph({{"C1", g1}, {"C2", g2}}, edges);
  }
  Multidegree multidegree() const { return Multidegree(r, {{"C1", d1()}, {"C2", d2()}}); }
};

/// Euler characteristics as polynomials in the twist n (variable 0 of a WeightPolynomial).
struct ChiPolys {
  WeightPolynomial E;               // χ(E(n))
  WeightPolynomial F0;              // χ(E_{C2}(−Σp)(n))
  WeightPolynomial G;               // χ(G_t(n)), one stable summand on C1
  std::vector<WeightPolynomial> F;  // χ(F_i(n)) = χ(F_0) + i·χ(G)
};

inline ChiPolys chiPolys(const TwoComponentConfig& cfg) {
  cfg.require();
  const WeightPolynomial n = WeightPolynomial::variable(0);
  auto lin = [&](std::int64_t constant, std::int64_t slope) { return WeightPolynomial(Rational(constant)) + WeightPolynomial(Rational(slope)) * n; };
  ChiPolys c;
  c.E = lin(cfg.d + static_cast<std::int64_t>(cfg.r) * (1 - cfg.genus()), static_cast<std::int64_t>(cfg.r) * cfg.omegaC());
  c.F0 = lin(cfg.d2() - static_cast<std::int64_t>(cfg.r) * cfg.N + static_cast<std::int64_t>(cfg.r) * (1 - cfg.g2),
             static_cast<std::int64_t>(cfg.r) * cfg.omega2());
  c.G = lin(cfg.e() + static_cast<std::int64_t>(cfg.q) * (1 - cfg.g1), static_cast<std::int64_t>(cfg.q) * cfg.omega1());
  for (int i = 0; i < cfg.summands(); ++i) c.F.push_back(c.F0 + WeightPolynomial(Rational(i)) * c.G);
  return c;
}

struct ChiValues {
  Rational E, F0, G, EC1, EC2;  // EC_i = χ(E restricted to C_i)(n)
  std::vector<Rational> F;
};

inline ChiValues chiValues(const TwoComponentConfig& cfg) {
  const auto p = chiPolys(cfg);
  const std::array<Rational, 2> at{Rational(cfg.n), Rational(0)};
  ChiValues v;
  v.E = p.E.evaluate(at);
  v.F0 = p.F0.evaluate(at);
  v.G = p.G.evaluate(at);
  for (const auto& f : p.F) v.F.push_back(f.evaluate(at));
  v.EC1 = Rational(cfg.d1() + cfg.n * cfg.r * cfg.omega1() + static_cast<std::int64_t>(cfg.r) * (1 - cfg.g1));
  v.EC2 = Rational(cfg.d2() + cfg.n * cfg.r * cfg.omega2() + static_cast<std::int64_t>(cfg.r) * (1 - cfg.g2));
  return v;
}

/// Minimal weight polynomial P(n, m) for the one-parameter subgroup with weights cfg.alphas.
inline WeightPolynomial weightPolynomial(const TwoComponentConfig& cfg) {
  const auto chi = chiPolys(cfg);
  const int k = cfg.summands();
  std::vector<Rational> alpha = cfg.alphas;
  if (alpha.empty()) alpha.assign(static_cast<std::size_t>(k), Rational(0));

  using WP = WeightPolynomial;
  const WP n = WP::variable(0);
  const WP m = WP::variable(1);
  const Rational r(cfg.r), q(cfg.q), N(cfg.N);

  WP w1, w2, sumD2;
  for (int i = 0; i < k; ++i) {
    const WP a(alpha[static_cast<std::size_t>(i)]);
    const Rational iq = Rational(i) * q;
    w1 += a * (chi.F[i] * WP(r) - chi.E * WP(iq));
    w2 += a * (chi.F[i] - chi.E) * WP(r);
    const Rational tri = (r - iq - 1) * (r - iq) / 2;
    sumD2 += a * (m * m * (chi.F[i] * WP(r * r) - chi.E * WP(r * r - tri)) +
                  WP(Rational(1, 2)) * m * (m + WP(1)) * WP(r - iq) * chi.E);
  }
  const WP K1 = m * (m * (WP(Rational(cfg.d1())) + WP(r * cfg.omega1()) * n) + WP(Rational(1 - cfg.g1))) * w1;
  const WP K2 = m * (m * (WP(Rational(cfg.d2()) - r * N) + WP(r * cfg.omega2()) * n) + WP(Rational(1 - cfg.g2))) * w2;
  const WP D2 = WP(N) * sumD2;
  return K1 + K2 + D2 - WP(N) * m * w1;
}

/// Smallest n ≥ 0 with χ(E(n)), χ(G(n)) and every χ(F_i(n)) positive.
inline std::int64_t positivityThreshold(const TwoComponentConfig& cfg) {
  const auto chi = chiPolys(cfg);
  auto positive = [&](std::int64_t n) {
    const std::array<Rational, 2> at{Rational(n), Rational(0)};
    if (chi.E.evaluate(at) <= 0 || chi.G.evaluate(at) <= 0) return false;
    for (const auto& f : chi.F)
      if (f.evaluate(at) <= 0) return false;
    return true;
  };
  // every χ is increasing in n, so a linear scan with a generous cap terminates
  for (std::int64_t n = 0; n < 1000000; ++n)
    if (positive(n)) return n;
  throw DomainError("no twist makes every Euler characteristic positive");
}

enum class HVerdict { strictlySemistable, inconclusive };

struct HStabReport {
  HVerdict verdict = HVerdict::inconclusive;
  std::int64_t n0 = 0;
  std::vector<int> vanishingVertices;     // α-vertices with P ≡ 0
  bool allNonpositive = true;             // every m-coefficient ≤ 0 on the n-grid, every vertex
  bool dominatedPositive = false;         // some lower coefficient > 0 while the leading one is < 0
  std::vector<WeightPolynomial> vertexPolynomials;
};

inline constexpr int kTwistGridWidth = 5;

/// Simplex-vertex check: P is linear in α, so unit weight vectors decide sign claims.
inline HStabReport isHSemistableWitness(const TwoComponentConfig& cfg) {
  cfg.require();
  HStabReport rep;
  rep.n0 = positivityThreshold(cfg);
  const int k = cfg.summands();
  for (int v = 0; v < k; ++v) {
    TwoComponentConfig c = cfg;
    c.alphas.assign(static_cast<std::size_t>(k), Rational(0));
    c.alphas[static_cast<std::size_t>(v)] = 1;
    const auto P = weightPolynomial(c);
    rep.vertexPolynomials.push_back(P);
    if (P.isZero()) {
      rep.vanishingVertices.push_back(v);
      continue;
    }
    for (std::int64_t n = rep.n0; n <= rep.n0 + kTwistGridWidth; ++n) {
      const auto Pn = P.substitute(0, Rational(n));
      const int top = Pn.isZero() ? 0 : Pn.maxDegree(1);
      bool anyPositive = false;
      for (int e = 0; e <= top; ++e) {
        const Rational coef = Pn.coefficient({0, e});
        if (coef > 0) anyPositive = true;
      }
      if (anyPositive) {
        rep.allNonpositive = false;
        if (Pn.coefficient({0, top}) < 0) rep.dominatedPositive = true;
      }
    }
  }
  if (rep.allNonpositive && !rep.vanishingVertices.empty()) rep.verdict = HVerdict::strictlySemistable;
  return rep;
}

struct SlopeEntry {
  int m1 = 0;
  int m2 = 0;
  Rational bound;   // largest χ allowed for a subsheaf of this multirank by the two restriction sequences
  Rational target;  // χ(E(n))·(m1ω1 + m2ω2)/(rω_C)
};

struct SlopeReport {
  std::vector<SlopeEntry> violations;   // bound > target
  std::vector<SlopeEntry> saturations;  // bound = target
};

/// Necessary-condition oracle for P-semistability on a two-component stable curve:
/// compares the χ bound given by E_{C2}(−Σp) ⊂ E → E_{C1} and its mirror with the slope target.
inline SlopeReport pSlopeCheck(const DualGraph& G, const Multidegree& M, std::int64_t n) {
  if (G.vertexCount() != 2) throw DomainError("slope check is implemented for two-component curves only");
  if (!G.isStable()) throw ValidationError("slope check needs a stable curve");
  if (G.loopCount(0) != 0 || G.loopCount(1) != 0) throw DomainError("slope check needs smooth components");
  const int N = static_cast<int>(G.edgeCount());
  const std::int64_t r = M.rank();
  const auto deg = M.aligned(G);
  const int g1 = G.vertex(0).genus, g2 = G.vertex(1).genus;
  const int w1 = 2 * g1 - 2 + N, w2 = 2 * g2 - 2 + N;
  const int wC = w1 + w2;
  const Rational chi1(deg[0] + n * r * w1 + r * (1 - g1));
  const Rational chi2(deg[1] + n * r * w2 + r * (1 - g2));
  const Rational chiE = chi1 + chi2 - Rational(r * N);

  SlopeReport rep;
  for (int m1 = 0; m1 <= r; ++m1)
    for (int m2 = 0; m2 <= r; ++m2) {
      if (m1 == m2) continue;  // uniform multirank: the bound always equals the target
      SlopeEntry e;
      e.m1 = m1;
      e.m2 = m2;
      e.bound = Rational(m1) / r * chi1 + Rational(m2) / r * chi2 - Rational(N) * std::max(m1, m2);
      e.target = chiE * (m1 * w1 + m2 * w2) / (r * wC);
      if (e.bound > e.target) rep.violations.push_back(e);
      else if (e.bound == e.target) rep.saturations.push_back(e);
    }
  return rep;
}

}  // namespace vecpic
