#pragma once

// Sparse matrices over an exact field, with deterministic elimination.
//
// Pivoting rule everywhere: rows are processed in increasing index order and a
// surviving row's leading (smallest-index) nonzero column becomes its pivot.
// All derived outputs (ranks, kernel bases, solutions, projections) are thereby
// deterministic. Over the rationals the elimination is fraction-free: rows are
// kept as content-stripped integer vectors and updates cross-multiply.

#include <hochlef/field.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace hochlef {

template <class F>
struct Triplet {
  int r, c;
  F v;
};

template <class F>
class SparseMatrix {
 public:
  using Entry = std::pair<int, F>;  // (row, value) inside a column

  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(cols) {
    if (rows < 0 || cols < 0) throw error("negative matrix dimension");
  }

  static SparseMatrix from_triplets(int rows, int cols,
                                    const std::vector<Triplet<F>>& ts) {
    SparseMatrix m(rows, cols);
    for (const auto& t : ts) {
      if (t.r < 0 || t.r >= rows || t.c < 0 || t.c >= cols)
        throw error("matrix entry out of bounds");
      m.data_[t.c].push_back({t.r, t.v});
    }
    for (auto& col : m.data_) normalize_column(col);
    return m;
  }

  static SparseMatrix from_columns(int rows,
                                   std::vector<std::vector<Entry>> cols) {
    SparseMatrix m(rows, (int)cols.size());
    m.data_ = std::move(cols);
    for (auto& col : m.data_) {
      normalize_column(col);
      if (!col.empty() && (col.front().first < 0 || col.back().first >= rows))
        throw error("matrix entry out of bounds");
    }
    return m;
  }

  static SparseMatrix identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.data_[i].push_back({i, F(1)});
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long nnz() const {
    long n = 0;
    for (const auto& c : data_) n += (long)c.size();
    return n;
  }
  bool is_zero() const { return nnz() == 0; }

  const std::vector<Entry>& col(int j) const { return data_[j]; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (int j = 0; j < cols_; ++j)
      for (const auto& [r, v] : data_[j]) fn(r, j, v);
  }

  F at(int r, int c) const {
    for (const auto& [rr, v] : data_[c])
      if (rr == r) return v;
    return F(0);
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    t.data_.assign(rows_, {});
    for (int j = 0; j < cols_; ++j)
      for (const auto& [r, v] : data_[j]) t.data_[r].push_back({j, v});
    // columns of t were filled in increasing j order per row: already sorted
    return t;
  }

  SparseMatrix scale(const F& f) const {
    SparseMatrix m(rows_, cols_);
    if (f.is_zero()) return m;
    m.data_ = data_;
    for (auto& col : m.data_)
      for (auto& [r, v] : col) v = v * f;
    return m;
  }

  SparseMatrix add(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix shape mismatch");
    SparseMatrix m(rows_, cols_);
    for (int j = 0; j < cols_; ++j) {
      auto& out = m.data_[j];
      const auto &a = data_[j], &b = o.data_[j];
      std::size_t i = 0, k = 0;
      while (i < a.size() || k < b.size()) {
        if (k == b.size() || (i < a.size() && a[i].first < b[k].first)) {
          out.push_back(a[i++]);
        } else if (i == a.size() || b[k].first < a[i].first) {
          out.push_back(b[k++]);
        } else {
          F s = a[i].second + b[k].second;
          if (!s.is_zero()) out.push_back({a[i].first, s});
          ++i, ++k;
        }
      }
    }
    return m;
  }

  SparseMatrix mul(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw error("matrix shape mismatch");
    SparseMatrix m(rows_, o.cols_);
    std::vector<F> acc(rows_, F(0));
    std::vector<char> seen(rows_, 0);
    std::vector<int> touched;
    for (int j = 0; j < o.cols_; ++j) {
      touched.clear();
      for (const auto& [k, w] : o.data_[j]) {
        for (const auto& [r, v] : data_[k]) {
          if (!seen[r]) {
            seen[r] = 1;
            touched.push_back(r);
          }
          acc[r] += v * w;
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& out = m.data_[j];
      for (int r : touched) {
        if (!acc[r].is_zero()) out.push_back({r, acc[r]});
        acc[r] = F(0);
        seen[r] = 0;
      }
    }
    return m;
  }

  std::vector<F> apply(const std::vector<F>& x) const {
    if ((int)x.size() != cols_) throw error("matrix shape mismatch");
    std::vector<F> y(rows_, F(0));
    for (int j = 0; j < cols_; ++j) {
      if (x[j].is_zero()) continue;
      for (const auto& [r, v] : data_[j]) y[r] += v * x[j];
    }
    return y;
  }

  bool operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const SparseMatrix& o) const { return !(*this == o); }

 private:
  static void normalize_column(std::vector<Entry>& col) {
    std::sort(col.begin(), col.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    std::vector<Entry> out;
    for (auto& [r, v] : col) {
      if (!out.empty() && out.back().first == r)
        out.back().second += v;
      else
        out.push_back({r, v});
    }
    std::erase_if(out, [](const Entry& e) { return e.second.is_zero(); });
    col = std::move(out);
  }

  int rows_, cols_;
  std::vector<std::vector<Entry>> data_;
};

template <class F>
SparseMatrix<F> hcat(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  if (a.rows() != b.rows()) throw error("matrix shape mismatch");
  std::vector<std::vector<typename SparseMatrix<F>::Entry>> cols;
  cols.reserve(a.cols() + b.cols());
  for (int j = 0; j < a.cols(); ++j) cols.push_back(a.col(j));
  for (int j = 0; j < b.cols(); ++j) cols.push_back(b.col(j));
  return SparseMatrix<F>::from_columns(a.rows(), std::move(cols));
}

template <class F>
SparseMatrix<F> select_cols(const SparseMatrix<F>& a,
                            const std::vector<int>& idx) {
  std::vector<std::vector<typename SparseMatrix<F>::Entry>> cols;
  cols.reserve(idx.size());
  for (int j : idx) {
    if (j < 0 || j >= a.cols()) throw error("column index out of bounds");
    cols.push_back(a.col(j));
  }
  return SparseMatrix<F>::from_columns(a.rows(), std::move(cols));
}

namespace detail {

// A working row for elimination: (column, value) entries sorted by column.
template <class F>
using Row = std::vector<std::pair<int, F>>;

// r := alpha*r + beta*p, merged by column.
template <class F>
Row<F> row_combine(const Row<F>& r, const F& alpha, const Row<F>& p,
                   const F& beta) {
  Row<F> out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, k = 0;
  while (i < r.size() || k < p.size()) {
    if (k == p.size() || (i < r.size() && r[i].first < p[k].first)) {
      F v = alpha * r[i].second;
      if (!v.is_zero()) out.push_back({r[i].first, v});
      ++i;
    } else if (i == r.size() || p[k].first < r[i].first) {
      F v = beta * p[k].second;
      if (!v.is_zero()) out.push_back({p[k].first, v});
      ++k;
    } else {
      F v = alpha * r[i].second + beta * p[k].second;
      if (!v.is_zero()) out.push_back({r[i].first, v});
      ++i, ++k;
    }
  }
  return out;
}

// Generic field strategy: scale so the leading coefficient is 1; eliminate by
// subtracting a multiple of the (normalized) pivot row.
template <class F>
struct EchelonOps {
  static void normalize(Row<F>& row) {
    if (row.empty()) return;
    F lead = row.front().second;
    if (lead == F(1)) return;
    F inv = lead.inv();
    for (auto& [c, v] : row) v = v * inv;
  }
  static Row<F> eliminate(const Row<F>& row, const F& value, const Row<F>& pivot) {
    return row_combine(row, F(1), pivot, -value);
  }
};

// Rational strategy: fraction-free. Rows are scaled to coprime integer entries
// with positive leading coefficient; elimination cross-multiplies with the
// gcd stripped, then strips the content again.
template <>
struct EchelonOps<Rational> {
  static void normalize(Row<Rational>& row) {
    if (row.empty()) return;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [c, v] : row) {
      mpz_class d = v.den();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    for (const auto& [c, v] : row) {
      mpz_class n = v.num() * (den_lcm / v.den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational f(den_lcm, num_gcd);  // canonicalized; num_gcd > 0
    if (row.front().second.raw() < 0) f = -f;
    if (f == Rational(1)) return;
    for (auto& [c, v] : row) v = v * f;
  }
  static Row<Rational> eliminate(const Row<Rational>& row, const Rational& value,
                                 const Row<Rational>& pivot) {
    // row and pivot are integral; value = row[pivot col], p = pivot lead.
    mpz_class p = pivot.front().second.num(), v = value.num(), g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), v.get_mpz_t());
    Rational alpha(p / g), beta(-v / g);
    auto out = row_combine(row, alpha, pivot, beta);
    normalize(out);
    return out;
  }
};

// Row echelon with pivots restricted to columns < pivot_limit. Incoming rows
// are reduced against existing pivots; a surviving row with leading column
// < pivot_limit becomes a pivot, otherwise its residue is recorded.
template <class F>
struct Echelon {
  int pivot_limit;
  std::map<int, int> pivot_of_col;      // leading column -> index into rows
  std::vector<Row<F>> rows;             // pivot rows, in acquisition order
  std::vector<Row<F>> residues;         // rows with no pivot column left
  std::vector<int> residue_src;         // original row index of each residue

  explicit Echelon(int limit) : pivot_limit(limit) {}

  void add_row(Row<F> row, int src_index) {
    EchelonOps<F>::normalize(row);  // Rational path needs integral rows
    while (!row.empty() && row.front().first < pivot_limit) {
      auto it = pivot_of_col.find(row.front().first);
      if (it == pivot_of_col.end()) break;
      row = EchelonOps<F>::eliminate(row, row.front().second, rows[it->second]);
    }
    if (row.empty() || row.front().first >= pivot_limit) {
      residues.push_back(std::move(row));
      residue_src.push_back(src_index);
      return;
    }
    EchelonOps<F>::normalize(row);
    pivot_of_col[row.front().first] = (int)rows.size();
    rows.push_back(std::move(row));
  }

  int rank() const { return (int)rows.size(); }

  // Back-substitution: solve for x (free variables zero) such that the pivot
  // equations hold with right-hand sides read from columns >= pivot_limit.
  // rhs_col is an absolute column index (>= pivot_limit).
  std::vector<std::pair<int, F>> back_substitute(int rhs_col) const {
    std::map<int, F> x;  // pivot col -> value
    for (auto it = pivot_of_col.rbegin(); it != pivot_of_col.rend(); ++it) {
      const Row<F>& row = rows[it->second];
      F acc(0);
      F rhs(0);
      for (const auto& [c, v] : row) {
        if (c == it->first) continue;
        if (c < pivot_limit) {
          auto found = x.find(c);
          if (found != x.end()) acc += v * found->second;
        } else if (c == rhs_col) {
          rhs = v;
        }
      }
      F val = (rhs - acc) / row.front().second;
      if (!val.is_zero()) x[it->first] = val;
    }
    return {x.begin(), x.end()};
  }
};

template <class F>
std::vector<Row<F>> matrix_rows(const SparseMatrix<F>& m) {
  std::vector<Row<F>> rows(m.rows());
  m.for_each([&](int r, int c, const F& v) { rows[r].push_back({c, v}); });
  return rows;  // per-row entries arrive in increasing column order
}

}  // namespace detail

template <class F>
int rank(const SparseMatrix<F>& m) {
  // Orientation-free; echelonize whichever direction has fewer rows.
  const bool flip = m.rows() > m.cols();
  SparseMatrix<F> w = flip ? m.transpose() : m;
  detail::Echelon<F> e(w.cols());
  auto rows = detail::matrix_rows(w);
  for (std::size_t i = 0; i < rows.size(); ++i) e.add_row(std::move(rows[i]), (int)i);
  return e.rank();
}

// Columns span ker(m); columns are linearly independent and count
// cols(m) - rank(m). Deterministic.
template <class F>
SparseMatrix<F> kernel_basis(const SparseMatrix<F>& m) {
  // Echelonize [m^T | I]; rows whose left part vanishes carry kernel vectors.
  auto rows = detail::matrix_rows(m.transpose());
  detail::Echelon<F> e(m.rows());
  for (int i = 0; i < (int)rows.size(); ++i) {
    rows[i].push_back({m.rows() + i, F(1)});
    e.add_row(std::move(rows[i]), i);
  }
  std::vector<std::vector<typename SparseMatrix<F>::Entry>> cols;
  for (const auto& res : e.residues) {
    if (res.empty()) continue;  // cannot happen: the identity tail never dies
    std::vector<typename SparseMatrix<F>::Entry> col;
    for (const auto& [c, v] : res) col.push_back({c - m.rows(), v});
    cols.push_back(std::move(col));
  }
  return SparseMatrix<F>::from_columns(m.cols(), std::move(cols));
}

// Least solution (free variables zero) of a x = b for each column b of rhs;
// nullopt if any column is inconsistent.
template <class F>
std::optional<SparseMatrix<F>> solve(const SparseMatrix<F>& a,
                                     const SparseMatrix<F>& rhs) {
  if (a.rows() != rhs.rows()) throw error("matrix shape mismatch");
  auto rows = detail::matrix_rows(hcat(a, rhs));
  detail::Echelon<F> e(a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) e.add_row(std::move(rows[i]), (int)i);
  for (const auto& res : e.residues)
    if (!res.empty()) return std::nullopt;  // 0 = nonzero rhs combination
  std::vector<std::vector<typename SparseMatrix<F>::Entry>> cols(rhs.cols());
  for (int j = 0; j < rhs.cols(); ++j) {
    auto x = e.back_substitute(a.cols() + j);
    cols[j].assign(x.begin(), x.end());
  }
  return SparseMatrix<F>::from_columns(a.cols(), std::move(cols));
}

// Indices of a deterministic column basis of the column space.
template <class F>
std::vector<int> pivot_columns(const SparseMatrix<F>& m) {
  detail::Echelon<F> e(m.cols());
  auto rows = detail::matrix_rows(m);
  for (std::size_t i = 0; i < rows.size(); ++i) e.add_row(std::move(rows[i]), (int)i);
  std::vector<int> out;
  out.reserve(e.pivot_of_col.size());
  for (const auto& [c, idx] : e.pivot_of_col) out.push_back(c);
  return out;
}

}  // namespace hochlef
