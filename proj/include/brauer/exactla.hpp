#pragma once

// Exact integer linear algebra over arbitrary-precision integers: Smith
// normal form with unimodular transforms, a gcd-of-minors oracle, kernels,
// cokernels, and a sparse Smith reducer for large chain-complex differentials.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "brauer/errors.hpp"
#include "brauer/group_types.hpp"

namespace brauer::exactla {

/// Dense row-major matrix. Zero-sized shapes are representable; operations
/// that need a nonempty matrix reject them.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix diagonal(std::span<const T> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> entries() const { return data_; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(src, j) != 0) (*this)(dst, j) += k * (*this)(src, j);
    }
  }
  // col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const T& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) {
      if ((*this)(i, src) != 0) (*this)(i, dst) += k * (*this)(i, src);
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;

/// U * M * V = D with U, V unimodular and D = diag(d1, d2, ...) where the
/// d_i are nonnegative and d_i | d_{i+1}.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// Inverse of U, filled only when requested.
  IntMatrix U_inverse;

  std::vector<BigInt> diagonal() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
    return d;
  }

  std::size_t rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
      if (D(i, i) != 0) ++r;
    return r;
  }
};

namespace detail {

inline void require_nonempty(const IntMatrix& m, const char* what) {
  if (m.empty()) throw DimensionError(std::string(what) + ": empty matrix");
}

// Position of the nonzero entry of least absolute value in the block
// [t, rows) x [t, cols), or false when the block is zero.
inline bool find_min_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  BigInt best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const BigInt& x = d(i, j);
      if (x == 0) continue;
      BigInt a = abs(x);
      if (!found || a < best) {
        best = std::move(a);
        pi = i;
        pj = j;
        found = true;
        if (best == 1) return true;
      }
    }
  return found;
}

}  // namespace detail

/// Smith normal form with transforms. Pivot is always the entry of minimal
/// absolute value in the active block; invariant factors come out nonnegative.
inline SnfDecomposition snf(const IntMatrix& m, bool with_u_inverse = false) {
  detail::require_nonempty(m, "snf");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SnfDecomposition out{IntMatrix::identity(rows), m, IntMatrix::identity(cols),
                       with_u_inverse ? IntMatrix::identity(rows) : IntMatrix{}};
  IntMatrix& U = out.U;
  IntMatrix& D = out.D;
  IntMatrix& V = out.V;
  IntMatrix& Ui = out.U_inverse;

  // Row operations are mirrored on U (left) and, inversely, on U^{-1} (right).
  auto row_swap = [&](std::size_t a, std::size_t b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
    if (with_u_inverse) Ui.swap_cols(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    D.add_row_multiple(dst, src, k);
    U.add_row_multiple(dst, src, k);
    if (with_u_inverse) Ui.add_col_multiple(src, dst, -k);
  };
  auto row_negate = [&](std::size_t i) {
    D.negate_row(i);
    U.negate_row(i);
    if (with_u_inverse) Ui.negate_col(i);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    D.add_col_multiple(dst, src, k);
    V.add_col_multiple(dst, src, k);
  };

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      std::size_t pi = t, pj = t;
      if (!detail::find_min_pivot(D, t, pi, pj)) return out;  // remaining block is zero
      row_swap(t, pi);
      col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        BigInt q = D(i, t) / D(t, t);
        row_add(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        BigInt q = D(t, j) / D(t, t);
        col_add(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder now exists

      // Divisibility: pull in any row whose entries the pivot fails to divide.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D(i, j) % D(t, t) != 0) {
            row_add(t, i, BigInt(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) row_negate(t);
  }
  return out;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(const IntMatrix& m) {
  detail::require_nonempty(m, "determinant");
  if (!m.is_square()) throw DimensionError("determinant: matrix not square");
  IntMatrix a = m;
  const std::size_t n = a.rows();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && a(i, k) == 0) ++i;
      if (i == n) return 0;
      a.swap_rows(i, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Rank by fraction-free Gaussian elimination, independent of snf.
inline std::size_t rank_fraction_free(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

/// Largest dimension accepted by the minors oracle (cost grows like C(n,k)^2 k!).
inline constexpr std::size_t kMinorsOracleMaxDim = 6;

namespace detail {

// Leibniz expansion over permutations; used by the minors oracle so that it
// shares no elimination code with snf or determinant.
inline BigInt leibniz_det(const IntMatrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  const std::size_t k = rows.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    BigInt term = 1;
    for (std::size_t i = 0; i < k && term != 0; ++i) term *= a(rows[i], cols[perm[i]]);
    if (inversions % 2) total -= term;
    else total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Invariant factors as quotients delta_i / delta_{i-1} of successive gcds of
/// i x i minors, truncated at the first vanishing delta_i. Limited to
/// matrices of at most kMinorsOracleMaxDim rows and columns.
inline std::vector<BigInt> invariant_factors_via_minors(const IntMatrix& m) {
  detail::require_nonempty(m, "invariant_factors_via_minors");
  if (m.rows() > kMinorsOracleMaxDim || m.cols() > kMinorsOracleMaxDim)
    throw ResourceError("minors oracle limited to 6x6 matrices");
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    BigInt g = 0;
    detail::for_each_subset(m.rows(), k, [&](std::span<const std::size_t> rs) {
      detail::for_each_subset(m.cols(), k, [&](std::span<const std::size_t> cs) {
        g = gcd(g, abs(detail::leibniz_det(m, rs, cs)));
      });
    });
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// Canonical group from a diagonal of invariant factors of a map into Z^rows.
inline FgAbGroup group_from_diagonal(std::size_t rows, std::span<const BigInt> diag) {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) torsion.push_back(d);
  }
  return FgAbGroup{rows - rank, std::move(torsion)};
}

/// Z^rows / image(M), with M read as a map Z^cols -> Z^rows.
inline FgAbGroup cokernel(const IntMatrix& m) {
  const auto s = snf(m);
  const auto d = s.diagonal();
  return group_from_diagonal(m.rows(), d);
}

/// Kernel of M : Z^cols -> Z^rows; always free.
inline FgAbGroup kernel(const IntMatrix& m) {
  const auto s = snf(m);
  return FgAbGroup::free(m.cols() - s.rank());
}

/// Columns form a Z-basis of ker(M); shape cols x (cols - rank).
inline IntMatrix kernel_basis(const IntMatrix& m) {
  const auto s = snf(m);
  const std::size_t r = s.rank();
  IntMatrix basis(m.cols(), m.cols() - r);
  for (std::size_t j = r; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.cols(); ++i) basis(i, j - r) = s.V(i, j);
  return basis;
}

// ---------------------------------------------------------------------------
// Sparse Smith reduction.
//
// Chain-complex differentials are large, very sparse, and mostly carry unit
// entries. SparseSmith first eliminates unit pivots (Markowitz order) with
// row operations that are logged, then runs the dense snf on whatever block
// remains. The log lets callers read cokernel coordinates of arbitrary
// vectors and lift torsion generators back to Z^rows.
// ---------------------------------------------------------------------------

struct SparseEntry {
  std::size_t col;
  BigInt value;
};
using SparseRow = std::vector<SparseEntry>;  // sorted by col, no zero values

/// Coordinates of a vector's class in coker(A) = Z^f + Z/t1 + ... + Z/tk.
struct CokernelCoordinates {
  std::vector<BigInt> free;     // length f
  std::vector<BigInt> torsion;  // length k, each reduced into [0, t_i)
};

class SparseSmith {
 public:
  /// A has `rows.size()` rows and `cols` columns and maps Z^cols -> Z^rows.
  SparseSmith(std::size_t cols, std::vector<SparseRow> rows) : rows_(rows.size()), cols_(cols) {
    reduce(std::move(rows));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return unit_pivots_ + residual_rank_; }

  /// Invariant factors > 1, in divisibility order.
  const std::vector<BigInt>& torsion_factors() const { return torsion_factors_; }

  FgAbGroup cokernel() const { return FgAbGroup{rows_ - rank(), torsion_factors_}; }

  std::size_t residual_rows() const { return residual_row_ids_.size(); }
  std::size_t residual_cols() const { return residual_cols_; }

  CokernelCoordinates coordinates(std::span<const BigInt> z) const {
    if (z.size() != rows_) throw DimensionError("SparseSmith::coordinates: length mismatch");
    std::vector<BigInt> w(z.begin(), z.end());
    for (const auto& op : log_) {
      if (w[op.src] != 0) w[op.dst] -= op.multiplier * w[op.src];
    }
    CokernelCoordinates out;
    std::vector<BigInt> y(residual_row_ids_.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = w[residual_row_ids_[i]];
    std::vector<BigInt> uy(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
      for (std::size_t k = 0; k < y.size(); ++k)
        if (y[k] != 0) uy[i] += residual_.U(i, k) * y[k];
    for (std::size_t t = 0; t < torsion_index_.size(); ++t) {
      const BigInt& d = torsion_factors_[t];
      BigInt r = uy[torsion_index_[t]] % d;
      if (r < 0) r += d;
      out.torsion.push_back(std::move(r));
    }
    for (std::size_t i = residual_rank_; i < uy.size(); ++i) out.free.push_back(uy[i]);
    for (std::size_t id : zero_row_ids_) out.free.push_back(w[id]);
    return out;
  }

  /// A vector in Z^rows whose class generates the t-th torsion summand.
  std::vector<BigInt> torsion_generator(std::size_t t) const {
    if (t >= torsion_index_.size()) throw DomainError("SparseSmith::torsion_generator: index out of range");
    std::vector<BigInt> v(rows_);
    const std::size_t k = torsion_index_[t];
    for (std::size_t i = 0; i < residual_row_ids_.size(); ++i) v[residual_row_ids_[i]] = residual_.U_inverse(i, k);
    for (auto it = log_.rbegin(); it != log_.rend(); ++it) {
      if (v[it->src] != 0) v[it->dst] += it->multiplier * v[it->src];
    }
    return v;
  }

 private:
  struct RowOp {  // row[dst] -= multiplier * row[src]
    std::size_t dst;
    std::size_t src;
    BigInt multiplier;
  };

  static const BigInt* find(const SparseRow& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const SparseEntry& e, std::size_t c) { return e.col < c; });
    return (it != row.end() && it->col == col) ? &it->value : nullptr;
  }

  void reduce(std::vector<SparseRow> a) {
    std::vector<std::vector<std::size_t>> col_rows(cols_);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (const auto& e : a[i]) {
        if (e.col >= cols_) throw DimensionError("SparseSmith: column index out of range");
        col_rows[e.col].push_back(i);
      }
    std::vector<char> row_alive(rows_, 1);
    std::vector<char> col_alive(cols_, 1);
    std::vector<std::size_t> stamp(rows_, 0);
    std::size_t epoch = 0;

    auto live_rows = [&](std::size_t c) {
      ++epoch;
      std::vector<std::size_t> out;
      for (std::size_t r : col_rows[c]) {
        if (!row_alive[r] || stamp[r] == epoch) continue;
        stamp[r] = epoch;
        if (find(a[r], c)) out.push_back(r);
      }
      col_rows[c] = out;
      return out;
    };

    SparseRow merged;
    bool progress = true;
    while (progress) {
      progress = false;
      std::vector<std::pair<std::size_t, std::size_t>> order;  // (count, col)
      for (std::size_t c = 0; c < cols_; ++c)
        if (col_alive[c]) order.emplace_back(col_rows[c].size(), c);
      std::sort(order.begin(), order.end());
      for (const auto& [unused, c] : order) {
        if (!col_alive[c]) continue;
        const auto candidates = live_rows(c);
        if (candidates.empty()) continue;
        std::size_t best = rows_;
        for (std::size_t r : candidates) {
          const BigInt* v = find(a[r], c);
          if (abs(*v) == 1 && (best == rows_ || a[r].size() < a[best].size())) best = r;
        }
        if (best == rows_) continue;
        const BigInt sign = *find(a[best], c);
        const SparseRow& pivot = a[best];
        for (std::size_t r : candidates) {
          if (r == best) continue;
          const BigInt mult = *find(a[r], c) * sign;
          // a[r] -= mult * pivot
          merged.clear();
          auto x = a[r].begin();
          auto y = pivot.begin();
          while (x != a[r].end() || y != pivot.end()) {
            if (y == pivot.end() || (x != a[r].end() && x->col < y->col)) {
              merged.push_back(std::move(*x));
              ++x;
            } else if (x == a[r].end() || y->col < x->col) {
              merged.push_back({y->col, -mult * y->value});
              col_rows[y->col].push_back(r);
              ++y;
            } else {
              BigInt v = x->value - mult * y->value;
              if (v != 0) merged.push_back({x->col, std::move(v)});
              ++x;
              ++y;
            }
          }
          a[r].swap(merged);
          log_.push_back({r, best, mult});
        }
        row_alive[best] = 0;
        col_alive[c] = 0;
        col_rows[c].clear();
        ++unit_pivots_;
        progress = true;
      }
    }

    // Residual block: live rows with entries, live columns with entries.
    std::vector<std::size_t> col_pos(cols_, cols_);
    std::size_t ncols = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!row_alive[r]) continue;
      if (a[r].empty()) {
        zero_row_ids_.push_back(r);
        continue;
      }
      residual_row_ids_.push_back(r);
      for (const auto& e : a[r])
        if (col_pos[e.col] == cols_) col_pos[e.col] = ncols++;
    }
    residual_cols_ = ncols;
    if (residual_row_ids_.empty()) return;
    IntMatrix dense(residual_row_ids_.size(), ncols);
    for (std::size_t i = 0; i < residual_row_ids_.size(); ++i)
      for (const auto& e : a[residual_row_ids_[i]]) dense(i, col_pos[e.col]) = e.value;
    residual_ = snf(dense, /*with_u_inverse=*/true);
    const auto diag = residual_.diagonal();
    for (std::size_t k = 0; k < diag.size(); ++k) {
      if (diag[k] == 0) continue;
      ++residual_rank_;
      if (diag[k] > 1) {
        torsion_factors_.push_back(diag[k]);
        torsion_index_.push_back(k);
      }
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t unit_pivots_ = 0;
  std::size_t residual_rank_ = 0;
  std::size_t residual_cols_ = 0;
  std::vector<RowOp> log_;
  std::vector<std::size_t> residual_row_ids_;
  std::vector<std::size_t> zero_row_ids_;
  SnfDecomposition residual_;
  std::vector<BigInt> torsion_factors_;
  std::vector<std::size_t> torsion_index_;  // position of each torsion factor on the residual diagonal
};

inline std::vector<SparseRow> to_sparse_rows(const IntMatrix& m) {
  std::vector<SparseRow> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) rows[i].push_back({j, m(i, j)});
  return rows;
}

}  // namespace brauer::exactla
