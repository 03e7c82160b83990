#pragma once

#include "vecpic/numeric.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace vecpic {

using VertexMask = std::uint64_t;

struct Vertex {
  std::string id;
  int genus = 0;
};

/// Dual graph of a nodal curve. Vertices are kept in lexicographic id order;
/// vertex indices below always refer to that order.
class DualGraph {
 public:
  static constexpr std::size_t kMaxVertices = 63;

  DualGraph(std::vector<Vertex> vertices, const std::vector<std::pair<std::string, std::string>>& edges) {
    if (vertices.empty()) throw ValidationError("dual graph has no vertices");
    if (vertices.size() > kMaxVertices) throw ValidationError("dual graph has more than 63 vertices");
    std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i].genus < 0) throw ValidationError("negative genus on vertex " + vertices[i].id);
      if (i > 0 && vertices[i].id == vertices[i - 1].id) throw ValidationError("duplicate vertex id " + vertices[i].id);
    }
    vertices_ = std::move(vertices);
    const std::size_t n = vertices_.size();
    neighbors_.assign(n, 0);
    loops_.assign(n, 0);
    valence_.assign(n, 0);
    for (const auto& [a, b] : edges) {
      int ia = indexOf(a);
      int ib = indexOf(b);
      if (ia > ib) std::swap(ia, ib);
      edges_.emplace_back(ia, ib);
      valence_[ia] += 1;
      valence_[ib] += 1;
      if (ia == ib) {
        loops_[ia] += 1;
      } else {
        neighbors_[ia] |= VertexMask{1} << ib;
        neighbors_[ib] |= VertexMask{1} << ia;
      }
    }
    std::sort(edges_.begin(), edges_.end());
    if (!isConnected(fullMask())) throw ValidationError("dual graph is not connected");
  }

  std::size_t vertexCount() const { return vertices_.size(); }
  std::size_t edgeCount() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int indexOf(const std::string& id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                               [](const Vertex& v, const std::string& key) { return v.id < key; });
    if (it == vertices_.end() || it->id != id) throw ValidationError("unknown vertex id " + id);
    return static_cast<int>(it - vertices_.begin());
  }

  int valence(std::size_t i) const { return valence_.at(i); }
  int loopCount(std::size_t i) const { return loops_.at(i); }
  VertexMask neighbors(std::size_t i) const { return neighbors_.at(i); }

  VertexMask fullMask() const {
    return vertices_.size() == 64 ? ~VertexMask{0} : (VertexMask{1} << vertices_.size()) - 1;
  }

  /// Connectivity of the induced subgraph on `mask`. The empty set counts as disconnected.
  bool isConnected(VertexMask mask) const {
    if (mask == 0) return false;
    VertexMask seen = mask & (~mask + 1);
    VertexMask frontier = seen;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= neighbors_[std::countr_zero(f)];
      next &= mask & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == mask;
  }

  /// Edges joining `mask` to its complement.
  int crossingEdges(VertexMask mask) const {
    int k = 0;
    for (const auto& [a, b] : edges_) k += (((mask >> a) & 1) != ((mask >> b) & 1));
    return k;
  }

  /// Edges, loops included, with both ends in `mask`.
  int internalEdges(VertexMask mask) const {
    int e = 0;
    for (const auto& [a, b] : edges_) e += ((mask >> a) & 1) && ((mask >> b) & 1);
    return e;
  }

  bool isSemistable() const { return checkRationalValence(2); }
  bool isStable() const { return checkRationalValence(3); }

  VertexMask maskOf(const std::vector<std::string>& ids) const {
    VertexMask m = 0;
    for (const auto& id : ids) m |= VertexMask{1} << indexOf(id);
    return m;
  }

  std::vector<std::string> idsOf(VertexMask mask) const {
    std::vector<std::string> out;
    for (VertexMask f = mask; f; f &= f - 1) out.push_back(vertices_[std::countr_zero(f)].id);
    return out;
  }

 private:
  bool checkRationalValence(int minimum) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i].genus == 0 && valence_[i] < minimum) return false;
    return true;
  }

  std::vector<Vertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<VertexMask> neighbors_;
  std::vector<int> loops_;
  std::vector<int> valence_;
};

/// A nonempty vertex subset. Enumeration only produces proper subsets; the full
/// set is accepted where ω_C itself is wanted.
struct Subcurve {
  VertexMask mask = 0;

  static Subcurve of(const DualGraph& G, const std::vector<std::string>& ids) {
    Subcurve z{G.maskOf(ids)};
    if (z.mask == 0) throw ValidationError("empty subcurve");
    return z;
  }
  Subcurve complement(const DualGraph& G) const { return {G.fullMask() & ~mask}; }
  bool isProper(const DualGraph& G) const { return mask != 0 && mask != G.fullMask(); }
  friend bool operator==(const Subcurve&, const Subcurve&) = default;
  friend auto operator<=>(const Subcurve&, const Subcurve&) = default;
};

inline int arithmeticGenus(const DualGraph& G) {
  long total = 0;
  for (const auto& v : G.vertices()) total += v.genus;
  return static_cast<int>(total + static_cast<long>(G.edgeCount()) - static_cast<long>(G.vertexCount()) + 1);
}

inline int kZ(const DualGraph& G, const Subcurve& Z) { return G.crossingEdges(Z.mask); }

inline int omega(const DualGraph& G, VertexMask mask) {
  if (mask == 0) throw ValidationError("omega of empty subcurve");
  if (mask & ~G.fullMask()) throw ValidationError("subcurve contains vertices outside the graph");
  int w = 0;
  for (VertexMask f = mask; f; f &= f - 1) w += 2 * G.vertex(std::countr_zero(f)).genus - 2;
  return w + 2 * G.internalEdges(mask) + G.crossingEdges(mask);
}

inline int omega(const DualGraph& G, const Subcurve& Z) { return omega(G, Z.mask); }
inline int omegaC(const DualGraph& G) { return 2 * arithmeticGenus(G) - 2; }

enum class SubcurveMode { all, connectedBothSides };

template <class Fn>
void forEachSubcurve(const DualGraph& G, SubcurveMode mode, Fn&& fn) {
  const VertexMask full = G.fullMask();
  for (VertexMask m = 1; m < full; ++m) {
    if (mode == SubcurveMode::connectedBothSides && !(G.isConnected(m) && G.isConnected(full & ~m))) continue;
    fn(Subcurve{m});
  }
}

inline std::vector<Subcurve> enumerateSubcurves(const DualGraph& G, SubcurveMode mode) {
  std::vector<Subcurve> out;
  forEachSubcurve(G, mode, [&](const Subcurve& z) { out.push_back(z); });
  return out;
}

struct RationalChain {
  std::vector<int> vertices;  // ordered along the chain
  int first = -1;             // attachment next to vertices.front()
  int second = -1;            // attachment next to vertices.back()
  bool closesLoop = false;    // both ends on the same vertex
};

inline bool isExceptional(const DualGraph& G, std::size_t i) {
  return G.vertex(i).genus == 0 && G.valence(i) == 2 && G.loopCount(i) == 0;
}

/// Maximal chains of smooth rational components meeting the rest of the curve in two points.
inline std::vector<RationalChain> maximalChains(const DualGraph& G) {
  const std::size_t n = G.vertexCount();
  VertexMask exc = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (isExceptional(G, i)) exc |= VertexMask{1} << i;

  // (edge index, other end) per vertex; loops never touch exceptional vertices
  std::vector<std::vector<std::pair<int, int>>> inc(n);
  for (std::size_t e = 0; e < G.edges().size(); ++e) {
    const auto [a, b] = G.edges()[e];
    if (a == b) continue;
    inc[a].emplace_back(static_cast<int>(e), b);
    inc[b].emplace_back(static_cast<int>(e), a);
  }
  auto isExc = [&](int v) { return ((exc >> v) & 1) != 0; };

  std::vector<RationalChain> chains;
  VertexMask done = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (!isExc(static_cast<int>(s)) || ((done >> s) & 1)) continue;
    // slide to an end of this component
    int cur = static_cast<int>(s);
    int cameBy = -1;
    VertexMask seen = VertexMask{1} << s;
    for (;;) {
      auto it = std::find_if(inc[cur].begin(), inc[cur].end(), [&](const auto& p) { return p.first != cameBy && !isExc(p.second); });
      if (it != inc[cur].end()) { cameBy = it->first; break; }
      auto jt = std::find_if(inc[cur].begin(), inc[cur].end(), [&](const auto& p) { return p.first != cameBy; });
      if ((seen >> jt->second) & 1) throw DomainError("graph is a cycle of rational components");
      cameBy = jt->first;
      cur = jt->second;
      seen |= VertexMask{1} << cur;
    }
    RationalChain ch;
    ch.first = std::find_if(inc[cur].begin(), inc[cur].end(), [&](const auto& p) { return p.first == cameBy; })->second;
    for (;;) {
      ch.vertices.push_back(cur);
      done |= VertexMask{1} << cur;
      auto it = std::find_if(inc[cur].begin(), inc[cur].end(), [&](const auto& p) { return p.first != cameBy; });
      if (!isExc(it->second)) { ch.second = it->second; break; }
      cameBy = it->first;
      cur = it->second;
    }
    if (ch.first > ch.second || (ch.first == ch.second && G.vertex(ch.vertices.front()).id > G.vertex(ch.vertices.back()).id)) {
      std::reverse(ch.vertices.begin(), ch.vertices.end());
      std::swap(ch.first, ch.second);
    }
    ch.closesLoop = ch.first == ch.second;
    chains.push_back(std::move(ch));
  }
  std::sort(chains.begin(), chains.end(), [](const RationalChain& a, const RationalChain& b) {
    return std::tie(a.first, a.second, a.vertices) < std::tie(b.first, b.second, b.vertices);
  });
  return chains;
}

struct Stabilization {
  DualGraph graph;
  /// Surviving vertex id -> id in the stable model; contracted vertices are absent.
  std::map<std::string, std::string> vertexMap;
  /// For each contracted chain: its vertex ids and the node it becomes.
  std::vector<std::pair<std::vector<std::string>, std::pair<std::string, std::string>>> contracted;
};

inline Stabilization stabilize(const DualGraph& G) {
  if (!G.isSemistable()) throw ValidationError("stabilize needs a semistable graph");
  if (arithmeticGenus(G) < 2) throw DomainError("stabilize needs arithmetic genus at least 2");
  const auto chains = maximalChains(G);
  VertexMask exc = 0;
  for (const auto& ch : chains)
    for (int v : ch.vertices) exc |= VertexMask{1} << v;

  std::vector<Vertex> keep;
  std::map<std::string, std::string> vmap;
  for (std::size_t i = 0; i < G.vertexCount(); ++i)
    if (!((exc >> i) & 1)) {
      keep.push_back(G.vertex(i));
      vmap[G.vertex(i).id] = G.vertex(i).id;
    }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [a, b] : G.edges())
    if (!((exc >> a) & 1) && !((exc >> b) & 1)) edges.emplace_back(G.vertex(a).id, G.vertex(b).id);

  std::vector<std::pair<std::vector<std::string>, std::pair<std::string, std::string>>> contracted;
  for (const auto& ch : chains) {
    std::pair<std::string, std::string> node{G.vertex(ch.first).id, G.vertex(ch.second).id};
    edges.push_back(node);
    std::vector<std::string> ids;
    for (int v : ch.vertices) ids.push_back(G.vertex(v).id);
    contracted.emplace_back(std::move(ids), node);
  }
  DualGraph out(std::move(keep), edges);
  if (arithmeticGenus(out) != arithmeticGenus(G)) throw InternalError("stabilization changed the genus");
  if (!out.isStable()) throw InternalError("stabilization left an unstable component");
  return {std::move(out), std::move(vmap), std::move(contracted)};
}

}  // namespace vecpic
