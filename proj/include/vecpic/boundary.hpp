#pragma once

#include "vecpic/invariants.hpp"
#include "vecpic/nodal_graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace vecpic {

struct BoundaryIndex {
  int i = 0;
  int j = 0;
  bool extremal = false;

  std::string symbol() const { return i == 0 ? std::string("delta_0") : "delta_" + std::to_string(i) + "^" + std::to_string(j); }
  friend bool operator==(const BoundaryIndex& a, const BoundaryIndex& b) { return a.i == b.i && a.j == b.j; }
  friend bool operator<(const BoundaryIndex& a, const BoundaryIndex& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); }
};

inline bool kDivides(const NumericalContext& c, int i) { return (2 * i - 1) % c.k_rdg == 0; }

/// Largest j in J_i.
inline int boundaryTopIndex(const NumericalContext& c, int i) {
  if (i < 0 || 2 * i > c.g) throw DomainError("boundary level out of range");
  if (i == 0) return 0;
  if (2 * i == c.g) return static_cast<int>(c.r / 2);
  return kDivides(c, i) ? static_cast<int>(c.r) : static_cast<int>(c.r) - 1;
}

inline bool isExtremal(const NumericalContext& c, int i, int j) {
  if (i == 0) return false;
  if (2 * i < c.g) return kDivides(c, i) && (j == 0 || j == c.r);
  return (c.d + c.r) % 2 == 0 && j == 0;
}

inline std::vector<BoundaryIndex> boundaryLevel(const NumericalContext& c, int i) {
  std::vector<BoundaryIndex> out;
  const int top = boundaryTopIndex(c, i);
  for (int j = 0; j <= top; ++j) out.push_back({i, j, isExtremal(c, i, j)});
  return out;
}

inline std::vector<BoundaryIndex> boundaryIndices(const NumericalContext& c) {
  std::vector<BoundaryIndex> out;
  for (int i = 0; 2 * i <= c.g; ++i)
    for (const auto& b : boundaryLevel(c, i)) out.push_back(b);
  return out;
}

/// (degree on the genus-i side, degree on the genus-(g−i) side) at the generic point.
inline std::pair<std::int64_t, std::int64_t> genericMultidegree(const NumericalContext& c, const BoundaryIndex& b) {
  if (b.i == 0) throw DomainError("delta_0 is irreducible with one node; no two-component multidegree");
  if (b.j < 0 || b.j > boundaryTopIndex(c, b.i)) throw DomainError("j outside J_i");
  const std::int64_t wC = 2 * c.g - 2;
  std::int64_t d1 = 0, d2 = 0;
  if (2 * b.i == c.g) {
    d1 = ceilDiv(c.d - c.r, 2) + b.j;
    d2 = floorDiv(c.d + c.r, 2) - b.j;
  } else {
    const std::int64_t lo = c.d * (2 * b.i - 1) - c.r * (c.g - 1);
    const std::int64_t hi = c.d * (2 * (c.g - b.i) - 1) + c.r * (c.g - 1);
    if (kDivides(c, b.i)) {
      if (lo % wC != 0 || hi % wC != 0) throw InternalError("generic multidegree is not integral although k | 2i-1");
      d1 = lo / wC + b.j;
      d2 = hi / wC - b.j;
    } else {
      d1 = ceilDiv(lo, wC) + b.j;
      d2 = floorDiv(hi, wC) - b.j;
    }
  }
  if (d1 + d2 != c.d) throw InternalError("generic multidegree does not sum to d");
  return {d1, d2};
}

/// Coefficients of the pullback of δ_i: every δ̃_i^j with j in J_i appears once.
inline std::vector<std::pair<BoundaryIndex, int>> pullbackDecomposition(const NumericalContext& c, int i) {
  std::vector<std::pair<BoundaryIndex, int>> out;
  for (const auto& b : boundaryLevel(c, i)) out.emplace_back(b, 1);
  return out;
}

/// Two components of genera i and g−i meeting at one node; ids "C1" (genus i) and "C2".
inline DualGraph twoComponentGraph(int i, int g) {
  return DualGraph({{"C1", i}, {"C2", g - i}}, {{"C1", "C2"}});
}

}  // namespace vecpic
