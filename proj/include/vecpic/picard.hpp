#pragma once

#include "vecpic/boundary.hpp"
#include "vecpic/invariants.hpp"
#include "vecpic/lattice.hpp"

#include <array>
#include <string>
#include <vector>

namespace vecpic {

enum class StackTag { Vec, VecBar, VecPss, VecHss, VecPs, VecHs, V, VBar, VPss, VHss, VPs, VHs };

inline constexpr std::array<StackTag, 12> kAllTags = {StackTag::Vec,  StackTag::VecBar, StackTag::VecPss, StackTag::VecHss,
                                                      StackTag::VecPs, StackTag::VecHs, StackTag::V,      StackTag::VBar,
                                                      StackTag::VPss, StackTag::VHss,  StackTag::VPs,    StackTag::VHs};

inline const char* tagName(StackTag t) {
  switch (t) {
    case StackTag::Vec: return "Vec";
    case StackTag::VecBar: return "VecBar";
    case StackTag::VecPss: return "VecPss";
    case StackTag::VecHss: return "VecHss";
    case StackTag::VecPs: return "VecPs";
    case StackTag::VecHs: return "VecHs";
    case StackTag::V: return "V";
    case StackTag::VBar: return "VBar";
    case StackTag::VPss: return "VPss";
    case StackTag::VHss: return "VHss";
    case StackTag::VPs: return "VPs";
    case StackTag::VHs: return "VHs";
  }
  return "?";
}

inline StackTag parseTag(const std::string& s) {
  for (auto t : kAllTags)
    if (s == tagName(t)) return t;
  throw ValidationError("unknown stack tag " + s);
}

enum class BoundaryPart { none, all, nonExtremal };

/// The rigidified side uses Λ(1,0,0), Ξ, Θ in place of the four Λ-classes.
inline bool isRigidified(StackTag t) { return static_cast<int>(t) >= static_cast<int>(StackTag::V); }

inline BoundaryPart boundaryPart(StackTag t) {
  switch (t) {
    case StackTag::Vec:
    case StackTag::V: return BoundaryPart::none;
    case StackTag::VecPs:
    case StackTag::VecHs:
    case StackTag::VPs:
    case StackTag::VHs: return BoundaryPart::nonExtremal;
    default: return BoundaryPart::all;
  }
}

inline bool isCompactified(StackTag t) { return boundaryPart(t) != BoundaryPart::none; }
inline StackTag smoothCounterpart(StackTag t) { return isRigidified(t) ? StackTag::V : StackTag::Vec; }

struct StackId {
  StackTag tag = StackTag::Vec;
  NumericalContext ctx;
};

inline void requireSupported(const StackId& s) {
  if (s.ctx.r < 2) throw DomainError("Picard presentations are only available for r >= 2");
  if (s.ctx.g >= 3) return;
  switch (s.tag) {
    case StackTag::Vec:
    case StackTag::VecBar:
    case StackTag::VecPss:
    case StackTag::V:
    case StackTag::VBar:
    case StackTag::VPss: return;
    default:
      throw DomainError(std::string("genus 2 presentation is not known for ") + tagName(s.tag) +
                        "; only Vec, VecBar, VecPss, V, VBar, VPss are covered");
  }
}

inline std::vector<BoundaryIndex> presentBoundary(const StackId& s) {
  std::vector<BoundaryIndex> out;
  const auto part = boundaryPart(s.tag);
  if (part == BoundaryPart::none) return out;
  for (const auto& b : boundaryIndices(s.ctx))
    if (part == BoundaryPart::all || !b.extremal) out.push_back(b);
  return out;
}

inline AbelianPresentation picardPresentation(const StackId& s) {
  requireSupported(s);
  std::vector<std::string> gens;
  if (isRigidified(s.tag)) gens = {"Lambda(1,0,0)", "Xi", "Theta"};
  else gens.assign(kLambdaNames.begin(), kLambdaNames.end());
  const std::size_t taut = gens.size();
  const auto bnd = presentBoundary(s);
  for (const auto& b : bnd) gens.push_back(b.symbol());

  AbelianPresentation p(std::move(gens));
  if (s.ctx.g == 2) {
    // Λ(1,0,0)^10 = O(δ̃₀ + 2Σ_j δ̃₁ʲ), boundary part dropped on the smooth locus
    std::vector<BigInt> row(p.generators.size());
    row[0] = 10;
    for (std::size_t k = 0; k < bnd.size(); ++k) row[taut + k] = bnd[k].i == 0 ? -1 : -2;
    p.relations.appendRow(row);
  }
  return p;
}

struct KernelReport {
  BigInt index;                 // product of invariant factors of [Λ(1,0,0); Ξ; Θ]
  BigInt indexViaKernelBasis;   // |det| of their coordinates in a computed kernel basis
  bool ok = false;
};

inline KernelReport kernelOfRes(const NumericalContext& c) {
  if (c.g < 3) throw DomainError("kernel check is stated for g >= 3");
  const auto w = resWeights(c);
  const auto xt = xiThetaBasis(c);
  const Exponents4 lam{1, 0, 0, 0};
  IntMatrix B(3, 4);
  const std::array<const Exponents4*, 3> rowsIn{&lam, &xt.xi, &xt.theta};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) B(i, j) = (*rowsIn[i])[j];

  KernelReport rep;
  const auto sB = smithNormalForm(B);
  rep.index = 0;
  if (sB.rank() == 3) {
    rep.index = 1;
    for (const auto& f : sB.invariantFactors) rep.index *= f;
  }

  IntMatrix W(1, 4);
  for (std::size_t j = 0; j < 4; ++j) W(0, j) = w[j];
  const auto sW = smithNormalForm(W);
  if (sW.rank() != 1) throw InternalError("res weight functional vanishes");
  // coordinates of each row in the basis given by the columns of V; the first must vanish
  IntMatrix coords(3, 3);
  bool inKernel = true;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t a = 0; a < 4; ++a) {
      BigInt y = 0;
      for (std::size_t j = 0; j < 4; ++j) y += sW.Vinv(a, j) * B(i, j);
      if (a == 0) inKernel = inKernel && y == 0;
      else coords(i, a - 1) = y;
    }
  BigInt det = determinant(coords);
  rep.indexViaKernelBasis = det < 0 ? BigInt(-det) : det;
  rep.ok = inKernel && rep.index == 1 && rep.indexViaKernelBasis == 1;
  return rep;
}

struct ExactnessReport {
  GroupInvariants quotient;   // compactified presentation modulo its boundary generators
  GroupInvariants smooth;     // smooth-locus presentation
  std::size_t boundaryGenerators = 0;
  bool boundaryInjective = false;  // no relation is supported on boundary generators alone
  bool ok = false;
};

inline ExactnessReport boundaryExactness(const StackId& s) {
  if (!isCompactified(s.tag)) throw DomainError("boundary exactness needs a compactified tag");
  const auto full = picardPresentation(s);
  const auto smooth = picardPresentation({smoothCounterpart(s.tag), s.ctx});
  std::vector<std::string> bnd;
  for (const auto& b : presentBoundary(s)) bnd.push_back(b.symbol());

  ExactnessReport rep;
  rep.boundaryGenerators = bnd.size();
  rep.quotient = full.quotientBy(bnd).invariants();
  rep.smooth = smooth.invariants();

  const std::size_t taut = full.generators.size() - bnd.size();
  IntMatrix proj(full.relations.rows(), taut);
  for (std::size_t i = 0; i < full.relations.rows(); ++i)
    for (std::size_t j = 0; j < taut; ++j) proj(i, j) = full.relations(i, j);
  rep.boundaryInjective = matrixRank(proj) == matrixRank(full.relations);
  rep.ok = rep.quotient == rep.smooth && rep.boundaryInjective;
  return rep;
}

}  // namespace vecpic
