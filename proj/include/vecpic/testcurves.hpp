#pragma once

#include "vecpic/balance.hpp"
#include "vecpic/boundary.hpp"
#include "vecpic/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vecpic {

enum class FamilyKind { F, FPrime1, FPrime2, Fh, G, G1 };

struct TestFamily {
  FamilyKind kind = FamilyKind::F;
  int h = 0;  // only for Fh
  int k = 0;  // index in J of the level the family detects

  std::string name() const {
    switch (kind) {
      case FamilyKind::F: return "F";
      case FamilyKind::FPrime1: return "F'1^" + std::to_string(k);
      case FamilyKind::FPrime2: return "F'2^" + std::to_string(k);
      case FamilyKind::Fh: return "F_" + std::to_string(h) + "^" + std::to_string(k);
      case FamilyKind::G: return "G";
      case FamilyKind::G1: return "G_1^" + std::to_string(k);
    }
    return "?";
  }

  /// Boundary level i whose divisors this family separates.
  int level() const {
    switch (kind) {
      case FamilyKind::F:
      case FamilyKind::G: return 0;
      case FamilyKind::Fh: return h + 1;
      default: return 1;
    }
  }
};

/// d reduced into [0, r(2g−2)); none of the boundary data changes under this shift.
inline NumericalContext normalizedContext(const NumericalContext& c) {
  const std::int64_t period = c.r * (2 * c.g - 2);
  std::int64_t d = c.d % period;
  if (d < 0) d += period;
  return makeContext(c.r, d, c.g);
}

inline void requireApplicable(const NumericalContext& raw, const TestFamily& f) {
  const auto c = normalizedContext(raw);
  const bool genus2 = c.g == 2;
  const std::int64_t half = c.r * (c.g - 1);
  switch (f.kind) {
    case FamilyKind::F:
      if (genus2) throw DomainError("family F needs g >= 3");
      return;
    case FamilyKind::FPrime1:
    case FamilyKind::FPrime2:
      if (genus2) throw DomainError("families F' need g >= 3");
      if (f.kind == FamilyKind::FPrime1 && c.d > half) throw DomainError("F'1 needs 0 <= d <= r(g-1)");
      if (f.kind == FamilyKind::FPrime2 && c.d < half) throw DomainError("F'2 needs r(g-1) <= d < r(2g-2)");
      if (f.k < 0 || f.k > boundaryTopIndex(c, 1)) throw DomainError("F' index outside J_1");
      return;
    case FamilyKind::Fh:
      if (genus2 || f.h < 1 || 2 * f.h > c.g - 2) throw DomainError("F_h needs 1 <= h <= (g-2)/2");
      if (f.k < 0 || f.k > boundaryTopIndex(c, f.h + 1)) throw DomainError("F_h index outside J_{h+1}");
      return;
    case FamilyKind::G:
      if (!genus2) throw DomainError("family G is the genus 2 family");
      return;
    case FamilyKind::G1:
      if (!genus2) throw DomainError("families G_1 are genus 2 families");
      if (f.k < 0 || f.k > boundaryTopIndex(c, 1)) throw DomainError("G_1 index outside J_1");
      return;
  }
}

/// Degree of each boundary line bundle on the family; nullopt where the value is not determined.
using DegreeRow = std::vector<std::optional<std::int64_t>>;

inline DegreeRow familyDegrees(const NumericalContext& raw, const TestFamily& f) {
  requireApplicable(raw, f);
  const auto c = normalizedContext(raw);
  const auto cols = boundaryIndices(c);
  DegreeRow row(cols.size());
  const int L = f.level();
  for (std::size_t x = 0; x < cols.size(); ++x) {
    const auto& b = cols[x];
    if (f.kind == FamilyKind::F) {
      row[x] = b.i == 0 ? -1 : 0;
    } else if (f.kind == FamilyKind::G) {
      row[x] = b.i == 0 ? 30 : 0;
    } else if (b.i > L) {
      row[x] = 0;
    } else if (b.i == L) {
      row[x] = b.j == f.k ? -1 : 0;
    }  // lower levels stay unknown
  }
  return row;
}

struct Fiber {
  std::string label;
  DualGraph graph;
  Multidegree degrees;
};

/// Special and general fiber of F.
inline std::vector<Fiber> fibersF(const NumericalContext& c) {
  const int gC = static_cast<int>(c.g) - 3;
  const int r = static_cast<int>(c.r);
  DualGraph special({{"C", gC}, {"R1", 0}, {"R2", 0}}, {{"C", "R1"}, {"C", "R1"}, {"C", "R2"}, {"C", "R2"}, {"R1", "R2"}});
  DualGraph general({{"C", gC}, {"Q", 0}}, {{"C", "Q"}, {"C", "Q"}, {"C", "Q"}, {"C", "Q"}});
  return {{"special", special, Multidegree(r, {{"C", c.d}, {"R1", 0}, {"R2", 0}})},
          {"general", general, Multidegree(r, {{"C", c.d}, {"Q", 0}})}};
}

/// Fibers of F' carrying the bundle of the first (bundle = 1) or second kind with parameter j.
inline std::vector<Fiber> fibersFPrime(const NumericalContext& c, int bundle, std::int64_t j) {
  const int gC = static_cast<int>(c.g) - 3;
  const int r = static_cast<int>(c.r);
  DualGraph special({{"C", gC}, {"R1", 0}, {"R2", 0}, {"Gamma", 1}},
                    {{"C", "R1"}, {"C", "R1"}, {"C", "R2"}, {"R1", "R2"}, {"R2", "Gamma"}});
  DualGraph general({{"C", gC}, {"Q", 0}, {"Gamma", 1}}, {{"C", "Q"}, {"C", "Q"}, {"C", "Q"}, {"Q", "Gamma"}});
  if (bundle == 1)
    return {{"special", special, Multidegree(r, {{"C", c.d - j}, {"R1", 0}, {"R2", 0}, {"Gamma", j}})},
            {"general", general, Multidegree(r, {{"C", c.d - j}, {"Q", 0}, {"Gamma", j}})}};
  return {{"special", special, Multidegree(r, {{"C", c.d - 3 * j}, {"R1", j}, {"R2", j}, {"Gamma", j}})},
          {"general", general, Multidegree(r, {{"C", c.d - 3 * j}, {"Q", 2 * j}, {"Gamma", j}})}};
}

/// Fibers of F_h with degrees j on C1, k on C2, t on Gamma (the rest on the rational bridge E).
inline std::vector<Fiber> fibersFh(const NumericalContext& c, int h, std::int64_t j, std::int64_t k, std::int64_t t) {
  const int r = static_cast<int>(c.r);
  const int g2 = static_cast<int>(c.g) - h - 1;
  DualGraph special({{"C1", h}, {"C2", g2}, {"Gamma", 1}, {"E", 0}}, {{"E", "C1"}, {"E", "C2"}, {"E", "Gamma"}});
  DualGraph general({{"C1", h}, {"Gamma", 1}, {"C2", g2}}, {{"C1", "Gamma"}, {"Gamma", "C2"}});
  return {{"special", special, Multidegree(r, {{"C1", j}, {"C2", k}, {"Gamma", t}, {"E", c.d - j - k - t}})},
          {"general", general, Multidegree(r, {{"C1", j}, {"Gamma", c.d - j - k}, {"C2", k}})}};
}

inline std::vector<Fiber> fibersG(const NumericalContext& c) {
  const int r = static_cast<int>(c.r);
  DualGraph general({{"C", 2}}, {});
  DualGraph special({{"C", 1}}, {{"C", "C"}});
  return {{"special", special, Multidegree(r, {{"C", c.d}})}, {"general", general, Multidegree(r, {{"C", c.d}})}};
}

inline std::vector<Fiber> fibersG1(const NumericalContext& c, std::int64_t j) {
  const int r = static_cast<int>(c.r);
  const std::int64_t dC = floorDiv(c.d + c.r, 2) - j;
  const std::int64_t dG = ceilDiv(c.d - c.r, 2) + j;
  DualGraph general({{"C", 1}, {"Gamma", 1}}, {{"C", "Gamma"}});
  DualGraph special({{"C", 0}, {"Gamma", 1}}, {{"C", "C"}, {"C", "Gamma"}});
  return {{"special", special, Multidegree(r, {{"C", dC}, {"Gamma", dG}})},
          {"general", general, Multidegree(r, {{"C", dC}, {"Gamma", dG}})}};
}

/// Integers x with |x − num/den| ≤ r/2, i.e. |2·den·x − 2·num| ≤ r·den.
inline std::pair<std::int64_t, std::int64_t> halfWidthBox(std::int64_t num, std::int64_t den, std::int64_t r) {
  return {ceilDiv(2 * num - r * den, 2 * den), floorDiv(2 * num + r * den, 2 * den)};
}

struct FamilyBalanceReport {
  bool ok = true;
  std::size_t cases = 0;
  std::string firstFailure;
};

namespace testcurves_detail {

inline void checkFibers(FamilyBalanceReport& rep, const std::vector<Fiber>& fibers, const std::string& where) {
  for (const auto& fb : fibers) {
    ++rep.cases;
    const auto pb = properlyBalancedNecessary(fb.graph, fb.degrees);
    if (!pb.ok && rep.ok) {
      rep.ok = false;
      rep.firstFailure = where + " " + fb.label + " fiber: " + pb.diagnostic;
    }
  }
}

inline int fPrimeBundle(const NumericalContext& c) { return c.d <= c.r * (c.g - 1) ? 1 : 2; }

}  // namespace testcurves_detail

/// Checks every parameter value in the box where the bundles of f are balanced.
inline FamilyBalanceReport validateFamilyBalance(const NumericalContext& raw, const TestFamily& f) {
  using namespace testcurves_detail;
  requireApplicable(raw, f);
  const auto c = normalizedContext(raw);
  const std::int64_t wC = 2 * c.g - 2;
  FamilyBalanceReport rep;
  switch (f.kind) {
    case FamilyKind::F: checkFibers(rep, fibersF(c), "F"); break;
    case FamilyKind::FPrime1:
    case FamilyKind::FPrime2: {
      const int bundle = f.kind == FamilyKind::FPrime1 ? 1 : 2;
      const auto [lo, hi] = halfWidthBox(c.d, wC, c.r);
      for (std::int64_t j = lo; j <= hi; ++j) checkFibers(rep, fibersFPrime(c, bundle, j), "F' j=" + std::to_string(j));
      break;
    }
    case FamilyKind::Fh: {
      const auto [jl, jh] = halfWidthBox(c.d * (2 * f.h - 1), wC, c.r);
      const auto [kl, kh] = halfWidthBox(c.d * (2 * c.g - 2 * f.h - 3), wC, c.r);
      const auto [tl, th] = halfWidthBox(c.d, wC, c.r);
      for (std::int64_t j = jl; j <= jh; ++j)
        for (std::int64_t k = kl; k <= kh; ++k)
          for (std::int64_t t = tl; t <= th; ++t)
            checkFibers(rep, fibersFh(c, f.h, j, k, t),
                        "F_h (j,k,t)=(" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(t) + ")");
      break;
    }
    case FamilyKind::G: checkFibers(rep, fibersG(c), "G"); break;
    case FamilyKind::G1:
      for (int j = 0; j <= boundaryTopIndex(c, 1); ++j) checkFibers(rep, fibersG1(c, j), "G_1 j=" + std::to_string(j));
      break;
  }
  return rep;
}

/// The member of F' or F_h actually used as a test curve must sit inside its balance box.
inline FamilyBalanceReport validateFamilyMember(const NumericalContext& raw, const TestFamily& f) {
  using namespace testcurves_detail;
  requireApplicable(raw, f);
  const auto c = normalizedContext(raw);
  const std::int64_t wC = 2 * c.g - 2;
  FamilyBalanceReport rep;
  switch (f.kind) {
    case FamilyKind::FPrime1:
    case FamilyKind::FPrime2: {
      const std::int64_t j = halfWidthBox(c.d, wC, c.r).first + f.k;
      checkFibers(rep, fibersFPrime(c, f.kind == FamilyKind::FPrime1 ? 1 : 2, j), f.name());
      break;
    }
    case FamilyKind::Fh: {
      const std::int64_t j = halfWidthBox(c.d * (2 * f.h - 1), wC, c.r).first;
      const std::int64_t t = halfWidthBox(c.d, wC, c.r).first;
      const std::int64_t k = floorDiv(2 * c.d * (2 * c.g - 2 * f.h - 3) + c.r * wC, 2 * wC) - f.k;
      checkFibers(rep, fibersFh(c, f.h, j, k, t), f.name());
      break;
    }
    case FamilyKind::G1: checkFibers(rep, fibersG1(c, f.k), f.name()); break;
    default: return validateFamilyBalance(raw, f);
  }
  return rep;
}

struct OutsideBoxReport {
  bool belowFails = false;  // j = lower end − 1 violates balance somewhere
  bool aboveFails = false;  // j = upper end + 1 does
};

inline OutsideBoxReport scanOutsideFPrimeBox(const NumericalContext& raw) {
  const auto c = normalizedContext(raw);
  if (c.g < 3) throw DomainError("F' needs g >= 3");
  const int bundle = testcurves_detail::fPrimeBundle(c);
  const auto [lo, hi] = halfWidthBox(c.d, 2 * c.g - 2, c.r);
  auto fails = [&](std::int64_t j) {
    for (const auto& fb : fibersFPrime(c, bundle, j))
      if (!isBalanced(fb.graph, fb.degrees)) return true;
    return false;
  };
  return {fails(lo - 1), fails(hi + 1)};
}

/// Families used for the independence argument, in row order.
inline std::vector<TestFamily> independenceFamilies(const NumericalContext& raw) {
  const auto c = normalizedContext(raw);
  std::vector<TestFamily> rows;
  if (c.g == 2) {
    rows.push_back({FamilyKind::G, 0, 0});
    for (int j = 0; j <= boundaryTopIndex(c, 1); ++j) rows.push_back({FamilyKind::G1, 0, j});
    return rows;
  }
  rows.push_back({FamilyKind::F, 0, 0});
  const FamilyKind fp = testcurves_detail::fPrimeBundle(c) == 1 ? FamilyKind::FPrime1 : FamilyKind::FPrime2;
  for (int j = 0; j <= boundaryTopIndex(c, 1); ++j) rows.push_back({fp, 0, j});
  for (int h = 1; 2 * h <= c.g - 2; ++h)
    for (int j = 0; j <= boundaryTopIndex(c, h + 1); ++j) rows.push_back({FamilyKind::Fh, h, j});
  return rows;
}

struct IndependenceResult {
  std::vector<TestFamily> families;
  std::vector<BoundaryIndex> columns;
  std::vector<DegreeRow> entries;
  bool verdict = false;
  BigInt determinant;  // product of the diagonal, valid once the shape is triangular
  std::string failure;
};

inline IndependenceResult independenceMatrix(const NumericalContext& raw) {
  const auto c = normalizedContext(raw);
  IndependenceResult res;
  res.families = independenceFamilies(c);
  res.columns = boundaryIndices(c);
  for (const auto& f : res.families) res.entries.push_back(familyDegrees(c, f));

  auto fail = [&](std::string why) {
    res.verdict = false;
    res.failure = std::move(why);
    return res;
  };
  if (res.families.size() != res.columns.size()) return fail("family count differs from boundary count");
  std::vector<int> covered(res.columns.size(), 0);
  res.determinant = 1;
  for (std::size_t x = 0; x < res.families.size(); ++x) {
    const auto& f = res.families[x];
    const int L = f.level();
    std::size_t diag = res.columns.size();
    for (std::size_t y = 0; y < res.columns.size(); ++y)
      if (res.columns[y].i == L && res.columns[y].j == f.k) diag = y;
    if (diag == res.columns.size()) return fail("no boundary column for " + f.name());
    covered[diag] += 1;
    for (std::size_t y = 0; y < res.columns.size(); ++y) {
      const auto& e = res.entries[x][y];
      const int i = res.columns[y].i;
      if (y == diag) {
        if (!e || *e == 0) return fail("zero diagonal entry at " + f.name());
        const std::int64_t want = f.kind == FamilyKind::G ? 30 : -1;
        if (*e != want) return fail("unexpected diagonal entry at " + f.name());
        res.determinant *= *e;
      } else if (i >= L) {
        if (!e || *e != 0) return fail("nonzero entry above the block diagonal in row " + f.name());
      }
    }
  }
  for (std::size_t y = 0; y < covered.size(); ++y)
    if (covered[y] != 1) return fail("boundary divisor " + res.columns[y].symbol() + " is not detected exactly once");
  res.verdict = true;
  return res;
}

}  // namespace vecpic
