#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liecert/rat.hpp"

namespace liecert {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major, rectangular

inline Mat zeros(std::size_t rows, std::size_t cols) {
  return Mat(rows, Vec(cols, Rat(0)));
}

inline Mat identity(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Mat c = zeros(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < p; ++l)
        if (b[j][l] != 0) c[i][l] += a[i][j] * b[j][l];
    }
  return c;
}

inline Mat mat_add(const Mat& a, const Mat& b) {
  Mat c = a;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += b[i][j];
  return c;
}

inline Mat mat_scale(const Mat& a, const Rat& s) {
  Mat c = a;
  for (auto& row : c)
    for (auto& x : row) x *= s;
  return c;
}

inline Mat mat_sub(const Mat& a, const Mat& b) {
  return mat_add(a, mat_scale(b, Rat(-1)));
}

inline Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t = zeros(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline bool is_zero_mat(const Mat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

inline Mat bracket_mat(const Mat& a, const Mat& b) {
  return mat_sub(mat_mul(a, b), mat_mul(b, a));
}

inline Rat trace_mul(const Mat& a, const Mat& b) {
  Rat t(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != 0 && b[j][i] != 0) t += a[i][j] * b[j][i];
  return t;
}

/// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t rows = m.size();
  if (rows == 0) return pivots;
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) { sel = i; break; }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Mat m) { return rref(m).size(); }

/// Basis of the right kernel {x : m x = 0}.
inline std::vector<Vec> kernel_basis(Mat m) {
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vec v(cols, Rat(0));
    v[free_c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m x = b; returns one solution if consistent.
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  Mat aug = m;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  Vec x(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;  // pivot in the augmented column
    x[pivots[r]] = aug[r][cols];
  }
  return x;
}

/// Exact inverse of a square matrix; throws if singular.
inline Mat inverse(const Mat& m) {
  std::size_t n = m.size();
  Mat aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  auto pivots = rref(aug);
  if (pivots.size() != n) throw std::runtime_error("inverse: singular matrix");
  Mat inv = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

/// Incremental exact row-space builder over sparse rows keyed by column index.
/// Supports testing membership and extracting a row-reduced basis.
class RowSpan {
 public:
  using SparseRow = std::map<int, Rat>;

  /// Reduces `row` against the stored basis; if a nonzero remainder is left it
  /// is normalized, inserted, and true is returned.
  bool insert(SparseRow row) {
    reduce(row);
    if (row.empty()) return false;
    normalize(row);
    int pivot = row.begin()->first;
    // Back-substitute into existing rows to keep the basis fully reduced.
    for (auto& [p, r] : rows_) {
      auto it = r.find(pivot);
      if (it != r.end()) axpy(r, -it->second, row);
    }
    rows_.emplace(pivot, std::move(row));
    return true;
  }

  /// True iff `row` lies in the current span.
  bool contains(SparseRow row) const {
    reduce(row);
    return row.empty();
  }

  std::size_t dim() const { return rows_.size(); }

  std::vector<SparseRow> basis() const {
    std::vector<SparseRow> b;
    b.reserve(rows_.size());
    for (const auto& [p, r] : rows_) b.push_back(r);
    return b;
  }

 private:
  void reduce(SparseRow& row) const {
    // Stored rows are fully reduced, so eliminating a pivot column never
    // re-introduces another pivot column; this loop terminates.
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto e = row.begin(); e != row.end(); ++e) {
        auto jt = rows_.find(e->first);
        if (jt != rows_.end()) {
          axpy(row, -e->second, jt->second);
          changed = true;
          break;
        }
      }
    }
  }

  static void normalize(SparseRow& row) {
    Rat lead = row.begin()->second;
    for (auto& [c, v] : row) v /= lead;
  }

  static void axpy(SparseRow& dst, const Rat& c, const SparseRow& src) {
    if (c == 0) return;
    for (const auto& [col, v] : src) {
      auto it = dst.find(col);
      if (it == dst.end()) {
        dst.emplace(col, c * v);
      } else {
        it->second += c * v;
        if (it->second == 0) dst.erase(it);
      }
    }
  }

  std::map<int, SparseRow> rows_;  // pivot column -> reduced row
};

}  // namespace liecert
