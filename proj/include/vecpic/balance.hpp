#pragma once

#include "vecpic/nodal_graph.hpp"

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

namespace vecpic {

class Multidegree {
 public:
  Multidegree(int rank, std::map<std::string, std::int64_t> degrees) : rank_(rank), degrees_(std::move(degrees)) {
    if (rank_ < 1) throw ValidationError("rank must be positive");
    for (const auto& [id, deg] : degrees_) total_ = checkedAdd(total_, deg);
  }

  /// Degrees listed in the graph's vertex order.
  static Multidegree onGraph(const DualGraph& G, int rank, const std::vector<std::int64_t>& byIndex) {
    if (byIndex.size() != G.vertexCount()) throw ValidationError("multidegree length does not match vertex count");
    std::map<std::string, std::int64_t> m;
    for (std::size_t i = 0; i < byIndex.size(); ++i) m[G.vertex(i).id] = byIndex[i];
    return Multidegree(rank, std::move(m));
  }

  int rank() const { return rank_; }
  std::int64_t totalDegree() const { return total_; }
  const std::map<std::string, std::int64_t>& degrees() const { return degrees_; }

  std::vector<std::int64_t> aligned(const DualGraph& G) const {
    if (degrees_.size() != G.vertexCount()) throw ValidationError("multidegree does not cover the vertex set");
    std::vector<std::int64_t> out(G.vertexCount());
    for (const auto& [id, deg] : degrees_) out[G.indexOf(id)] = deg;
    return out;
  }

  std::int64_t degreeOn(const DualGraph& G, VertexMask mask) const {
    auto a = aligned(G);
    std::int64_t s = 0;
    for (VertexMask f = mask; f; f &= f - 1) s += a[std::countr_zero(f)];
    return s;
  }

 private:
  int rank_;
  std::map<std::string, std::int64_t> degrees_;
  std::int64_t total_ = 0;
};

/// r·k_Z/2 − |deg_Z − d·ω_Z/ω_C|.
inline Rational basicInequalitySlack(const DualGraph& G, const Multidegree& M, const Subcurve& Z) {
  if (!Z.isProper(G)) throw ValidationError("slack needs a nonempty proper subcurve");
  const int wC = omegaC(G);
  if (wC == 0) throw DomainError("omega_C vanishes");
  Rational dev = Rational(M.degreeOn(G, Z.mask)) - Rational(M.totalDegree()) * omega(G, Z) / wC;
  if (dev < 0) dev = -dev;
  return Rational(M.rank() * kZ(G, Z), 2) - dev;
}

enum class BalanceMode { all, connectedBothSides, oneSidedConnected };

/// Per-subset data of one graph, reused across many multidegrees. Not safe to share across threads.
/// The deviation of Zᶜ is minus that of Z and k_Z = k_{Zᶜ}, so the two-sided checks only visit
/// subsets avoiding the last vertex.
class BalanceChecker {
 public:
  explicit BalanceChecker(const DualGraph& G) : n_(G.vertexCount()), wC_(vecpic::omegaC(G)) {
    if (n_ > 24) throw DomainError("balance checker limited to 24 vertices");
    full_ = G.fullMask();
    half_ = VertexMask{1} << (n_ - 1);
    const std::size_t size = std::size_t{1} << n_;
    twoOmega_.assign(size, 0);
    kw_.assign(size, 0);
    scratch_.assign(half_, 0);
    for (VertexMask m = 1; m < full_; ++m) {
      twoOmega_[m] = 2 * static_cast<std::int64_t>(omega(G, m));
      kw_[m] = static_cast<std::int64_t>(G.crossingEdges(m)) * wC_;
      if (G.isConnected(m) && G.isConnected(full_ & ~m)) {
        connected_.push_back(m);
        if (m < half_) connectedLow_.push_back(m);
      }
    }
  }

  int omegaC() const { return static_cast<int>(wC_); }

  struct ModeVerdicts {
    bool all, connectedBothSides, oneSidedConnected;
  };

  /// Integer form: |2ω_C·deg_Z − 2d·ω_Z| ≤ r·k_Z·ω_C, for the three modes at once.
  ModeVerdicts classify(const std::vector<std::int64_t>& deg, int rank) const {
    if (n_ == 1) return {true, true, true};
    const std::int64_t d = prepare(deg);
    // branch-free: the typical caller feeds mostly balanced vectors
    bool all = true, both = true, one = true;
    for (VertexMask m = 1; m < half_; ++m) all &= twoSided(scratch_[m], d, m, rank);
    for (VertexMask m : connectedLow_) both &= twoSided(scratch_[m], d, m, rank);
    for (VertexMask m : connected_) one &= upper(sumOn(m, d), d, m, rank);
    return {all, both, one};
  }

  bool check(const std::vector<std::int64_t>& deg, int rank, BalanceMode mode) const {
    if (n_ == 1) return true;
    const std::int64_t d = prepare(deg);
    switch (mode) {
      case BalanceMode::all:
        for (VertexMask m = 1; m < half_; ++m)
          if (!twoSided(scratch_[m], d, m, rank)) return false;
        return true;
      case BalanceMode::connectedBothSides:
        for (VertexMask m : connectedLow_)
          if (!twoSided(scratch_[m], d, m, rank)) return false;
        return true;
      case BalanceMode::oneSidedConnected:
        for (VertexMask m : connected_)
          if (!upper(sumOn(m, d), d, m, rank)) return false;
        return true;
    }
    return false;
  }

 private:
  std::int64_t prepare(const std::vector<std::int64_t>& deg) const {
    if (wC_ <= 0) throw DomainError("omega_C vanishes");
    if (deg.size() != n_) throw ValidationError("degree vector length does not match vertex count");
    for (VertexMask m = 1; m < half_; ++m) scratch_[m] = scratch_[m & (m - 1)] + deg[std::countr_zero(m)];
    return scratch_[half_ - 1] + deg[n_ - 1];
  }
  std::int64_t sumOn(VertexMask m, std::int64_t d) const { return m < half_ ? scratch_[m] : d - scratch_[full_ & ~m]; }

  // ω_C > 0, so the sign of lhs is the sign of deg_Z − dω_Z/ω_C
  std::int64_t lhs(std::int64_t degZ, std::int64_t d, VertexMask m) const { return 2 * wC_ * degZ - d * twoOmega_[m]; }
  bool upper(std::int64_t degZ, std::int64_t d, VertexMask m, int rank) const { return lhs(degZ, d, m) <= rank * kw_[m]; }
  bool twoSided(std::int64_t degZ, std::int64_t d, VertexMask m, int rank) const {
    const std::int64_t x = lhs(degZ, d, m), b = rank * kw_[m];
    return (x <= b) & (-x <= b);
  }

  std::size_t n_;
  std::int64_t wC_;
  VertexMask full_ = 0;
  VertexMask half_ = 0;
  std::vector<std::int64_t> twoOmega_;
  std::vector<std::int64_t> kw_;
  std::vector<VertexMask> connected_;
  std::vector<VertexMask> connectedLow_;
  mutable std::vector<std::int64_t> scratch_;  // subset sums below half_; scratch_[0] stays 0
};

inline bool isBalanced(const DualGraph& G, const Multidegree& M, BalanceMode mode = BalanceMode::all) {
  if (G.vertexCount() == 1) return true;
  if (omegaC(G) <= 0) throw DomainError("balance needs omega_C > 0");
  const auto deg = M.aligned(G);
  const SubcurveMode sm = mode == BalanceMode::all ? SubcurveMode::all : SubcurveMode::connectedBothSides;
  bool ok = true;
  forEachSubcurve(G, sm, [&](const Subcurve& z) {
    if (!ok) return;
    if (mode == BalanceMode::oneSidedConnected) {
      const Rational dev = Rational(M.degreeOn(G, z.mask)) - Rational(M.totalDegree()) * omega(G, z) / omegaC(G);
      ok = dev <= Rational(M.rank() * kZ(G, z), 2);
    } else {
      ok = basicInequalitySlack(G, M, z) >= 0;
    }
  });
  return ok;
}

/// Proper subcurves on which the basic inequality is an equality.
inline std::vector<Subcurve> saturatedSubcurves(const DualGraph& G, const Multidegree& M) {
  std::vector<Subcurve> out;
  if (G.vertexCount() == 1) return out;
  forEachSubcurve(G, SubcurveMode::all, [&](const Subcurve& z) {
    if (basicInequalitySlack(G, M, z) == 0) out.push_back(z);
  });
  return out;
}

struct ProperBalanceReport {
  bool ok = true;
  std::string diagnostic;  // empty when ok
};

/// Balanced plus the multidegree shadow of admissibility on every maximal rational chain.
inline ProperBalanceReport properlyBalancedNecessary(const DualGraph& G, const Multidegree& M) {
  if (!G.isSemistable()) throw ValidationError("properly balanced check needs a semistable graph");
  ProperBalanceReport rep;
  if (G.vertexCount() > 1) {
    forEachSubcurve(G, SubcurveMode::all, [&](const Subcurve& z) {
      if (!rep.ok) return;
      if (basicInequalitySlack(G, M, z) < 0) {
        rep.ok = false;
        std::string ids;
        for (const auto& id : G.idsOf(z.mask)) ids += (ids.empty() ? "" : ",") + id;
        rep.diagnostic = "basic inequality fails on {" + ids + "}";
      }
    });
    if (!rep.ok) return rep;
  }
  const auto deg = M.aligned(G);
  const std::int64_t r = M.rank();
  for (const auto& ch : maximalChains(G)) {
    std::int64_t total = 0;
    for (int v : ch.vertices) {
      if (deg[v] < 1 || deg[v] > r) {
        rep.ok = false;
        rep.diagnostic = "chain vertex " + G.vertex(v).id + " has degree " + std::to_string(deg[v]) + " outside [1, r]";
        return rep;
      }
      total += deg[v];
    }
    const std::string head = G.vertex(ch.vertices.front()).id;
    if (total < 1 || total > r) {
      rep.ok = false;
      rep.diagnostic = "chain at " + head + " has total degree " + std::to_string(total) + " outside [1, r]";
      return rep;
    }
    if (static_cast<std::int64_t>(ch.vertices.size()) > total) {
      rep.ok = false;
      rep.diagnostic = "chain at " + head + " is longer than its total degree";
      return rep;
    }
  }
  return rep;
}

}  // namespace vecpic
