#pragma once

#include "vecpic/numeric.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace vecpic {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::size_t cols, const std::vector<std::vector<BigInt>>& rowsData) : rows_(rowsData.size()), cols_(cols) {
    for (const auto& row : rowsData) {
      if (row.size() != cols) throw ValidationError("ragged integer matrix");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }
  static IntMatrix fromRows(const std::vector<std::vector<long long>>& rowsData) {
    const std::size_t cols = rowsData.empty() ? 0 : rowsData.front().size();
    IntMatrix m(rowsData.size(), cols);
    for (std::size_t i = 0; i < rowsData.size(); ++i) {
      if (rowsData[i].size() != cols) throw ValidationError("ragged integer matrix");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rowsData[i][j];
    }
    return m;
  }
  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void appendRow(const std::vector<BigInt>& row) {
    if (row.size() != cols_) throw ValidationError("row width mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
  }

  std::vector<BigInt> row(std::size_t i) const { return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_}; }

  IntMatrix columnsPermuted(const std::vector<std::size_t>& perm) const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, perm[j]);
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw ValidationError("matrix product shape mismatch");
    IntMatrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += x(i, k) * y(k, j);
      }
    return out;
  }
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> a_;
};

/// Fraction-free (Bareiss) determinant.
inline BigInt determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

struct SmithResult {
  IntMatrix D;                          // U·M·V
  IntMatrix U, V, Vinv;                 // unimodular; Vinv = V⁻¹
  std::vector<BigInt> invariantFactors;  // nonzero diagonal, positive, each dividing the next
  std::size_t rank() const { return invariantFactors.size(); }
};

inline SmithResult smithNormalForm(const IntMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  SmithResult s{M, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(n), {}};
  IntMatrix& A = s.D;

  auto swapRows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(A(i, c), A(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(s.U(i, c), s.U(j, c));
  };
  auto swapCols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(A(r, i), A(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(s.V(r, i), s.V(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(s.Vinv(i, c), s.Vinv(j, c));
  };
  // row_i -= q·row_j
  auto rowOp = [&](std::size_t i, std::size_t j, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < n; ++c) A(i, c) -= q * A(j, c);
    for (std::size_t c = 0; c < m; ++c) s.U(i, c) -= q * s.U(j, c);
  };
  // col_i -= q·col_j
  auto colOp = [&](std::size_t i, std::size_t j, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m; ++r) A(r, i) -= q * A(r, j);
    for (std::size_t r = 0; r < n; ++r) s.V(r, i) -= q * s.V(r, j);
    for (std::size_t c = 0; c < n; ++c) s.Vinv(j, c) += q * s.Vinv(i, c);
  };

  const std::size_t lim = std::min(m, n);
  for (std::size_t t = 0; t < lim; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (A(i, j) != 0 && (pi == m || abs(A(i, j)) < abs(A(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;
      swapRows(t, pi);
      swapCols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        rowOp(i, t, A(i, t) / A(t, t));  // truncating division leaves |rem| < |pivot|
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        colOp(j, t, A(t, j) / A(t, t));
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the rest by the pivot
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      rowOp(t, bad, BigInt(-1));
    }
    if (A(t, t) == 0) break;
    if (A(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) A(t, c) = -A(t, c);
      for (std::size_t c = 0; c < m; ++c) s.U(t, c) = -s.U(t, c);
    }
    s.invariantFactors.push_back(A(t, t));
  }
  return s;
}

inline std::size_t matrixRank(const IntMatrix& M) { return smithNormalForm(M).rank(); }

/// Integer basis of {x : M·x = 0}, as the columns of the returned matrix.
inline IntMatrix kernelBasis(const IntMatrix& M) {
  const auto s = smithNormalForm(M);
  const std::size_t n = M.cols(), r = s.rank();
  IntMatrix K(n, n - r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = r; j < n; ++j) K(i, j - r) = s.V(i, j);
  return K;
}

struct GroupInvariants {
  std::vector<BigInt> torsion;  // invariant factors > 1
  std::size_t freeRank = 0;
  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

/// Abelian group ⟨generators | rows of relations⟩.
struct AbelianPresentation {
  std::vector<std::string> generators;
  IntMatrix relations;

  AbelianPresentation() = default;
  explicit AbelianPresentation(std::vector<std::string> gens) : generators(std::move(gens)), relations(0, generators.size()) {}
  AbelianPresentation(std::vector<std::string> gens, IntMatrix rel) : generators(std::move(gens)), relations(std::move(rel)) {
    if (relations.cols() != generators.size()) throw ValidationError("relation width differs from generator count");
  }

  std::size_t indexOf(const std::string& g) const {
    auto it = std::find(generators.begin(), generators.end(), g);
    if (it == generators.end()) throw ValidationError("unknown generator " + g);
    return static_cast<std::size_t>(it - generators.begin());
  }

  GroupInvariants invariants() const {
    GroupInvariants out;
    const auto s = smithNormalForm(relations);
    for (const auto& f : s.invariantFactors)
      if (f != 1) out.torsion.push_back(f);
    out.freeRank = generators.size() - s.rank();
    return out;
  }

  /// The same group after killing the named generators.
  AbelianPresentation quotientBy(const std::vector<std::string>& names) const {
    AbelianPresentation q = *this;
    for (const auto& nm : names) {
      std::vector<BigInt> row(generators.size());
      row[indexOf(nm)] = 1;
      q.relations.appendRow(row);
    }
    return q;
  }

  AbelianPresentation permuted(const std::vector<std::size_t>& perm) const {
    std::vector<std::string> g(generators.size());
    for (std::size_t j = 0; j < perm.size(); ++j) g[j] = generators[perm[j]];
    return {std::move(g), relations.columnsPermuted(perm)};
  }
};

inline bool isomorphic(const AbelianPresentation& a, const AbelianPresentation& b) { return a.invariants() == b.invariants(); }

}  // namespace vecpic
