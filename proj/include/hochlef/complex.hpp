#pragma once

// Bounded chain complexes with homological indexing: d_n : C_n -> C_{n-1}.

#include <hochlef/field.hpp>
#include <hochlef/matrix.hpp>

#include <map>
#include <utility>
#include <vector>

namespace hochlef {

template <class F>
struct HomologySummary {
  int degree = 0;
  int dimension = 0;
  SparseMatrix<F> cycle_basis;  // dim(C_n) x dimension, columns are cycles
  SparseMatrix<F> projection;   // dimension x dim(C_n), kills boundaries,
                                // projection * cycle_basis = identity
};

template <class F>
class ChainComplex {
 public:
  // dims[i] = dim C_{lo+i}; diffs[i] = d_{lo+i+1} : C_{lo+i+1} -> C_{lo+i}.
  ChainComplex(int lo, std::vector<int> dims, std::vector<SparseMatrix<F>> diffs)
      : lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
    if (dims_.empty()) throw error("empty chain complex");
    if (diffs_.size() + 1 != dims_.size())
      throw error("differential count mismatch");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
      if (diffs_[i].rows() != dims_[i] || diffs_[i].cols() != dims_[i + 1])
        throw error("differential shape mismatch");
    }
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
      if (!diffs_[i].mul(diffs_[i + 1]).is_zero())
        throw error("differential does not square to zero");
    }
  }

  int lo() const { return lo_; }
  int hi() const { return lo_ + (int)dims_.size() - 1; }
  int dim(int n) const {
    return (n < lo_ || n > hi()) ? 0 : dims_[n - lo_];
  }
  const std::vector<int>& dims() const { return dims_; }

  // Differential leaving degree n. Zero-shaped at the boundary degrees.
  SparseMatrix<F> d(int n) const {
    if (n > lo_ && n <= hi()) return diffs_[n - lo_ - 1];
    if (n == lo_) return SparseMatrix<F>(0, dims_.front());
    if (n == hi() + 1) return SparseMatrix<F>(dims_.back(), 0);
    throw error("degree out of range");
  }

  int rank_d(int n) const {
    if (n <= lo_ || n > hi()) return 0;
    auto it = rank_cache_.find(n);
    if (it != rank_cache_.end()) return it->second;
    int r = rank(diffs_[n - lo_ - 1]);
    rank_cache_[n] = r;
    return r;
  }

  // dim H_n = dim ker d_n - rank d_{n+1}, via ranks only.
  int homology_dim(int n) const {
    check_adjacent(n);
    if (n < lo_ || n > hi()) return 0;
    return dim(n) - rank_d(n) - rank_d(n + 1);
  }

  HomologySummary<F> homology_at(int n) const {
    check_adjacent(n);
    HomologySummary<F> h;
    h.degree = n;
    if (n < lo_ || n > hi()) {
      h.cycle_basis = SparseMatrix<F>(0, 0);
      h.projection = SparseMatrix<F>(0, 0);
      return h;
    }
    const int nn = dim(n);
    SparseMatrix<F> z = kernel_basis(d(n));
    SparseMatrix<F> dn1 = d(n + 1);
    SparseMatrix<F> b = select_cols(dn1, pivot_columns(dn1));
    // representatives: kernel columns independent from the boundary basis
    SparseMatrix<F> bz = hcat(b, z);
    std::vector<int> reps;
    for (int j : pivot_columns(bz))
      if (j >= b.cols()) reps.push_back(j - b.cols());
    SparseMatrix<F> h_basis = select_cols(z, reps);
    h.dimension = h_basis.cols();
    h.cycle_basis = h_basis;
    if (h.dimension == 0) {
      h.projection = SparseMatrix<F>(0, nn);
      return h;
    }
    // projection p with p*[b|h] = [0|I]: solve [b|h]^T y = [0;I], p = tail of y^T
    SparseMatrix<F> bh = hcat(b, h_basis);
    int r = b.cols(), hd = h.dimension;
    std::vector<Triplet<F>> rhs_t;
    for (int i = 0; i < hd; ++i) rhs_t.push_back({r + i, i, F(1)});
    auto rhs = SparseMatrix<F>::from_triplets(r + hd, hd, rhs_t);
    auto y = solve(bh.transpose(), rhs);
    if (!y) throw error("internal: homology projection solve failed");
    h.projection = y->transpose();
    return h;
  }

 private:
  void check_adjacent(int n) const {
    if (n < lo_ - 1 || n > hi() + 1) throw error("degree out of range");
  }

  int lo_;
  std::vector<int> dims_;
  std::vector<SparseMatrix<F>> diffs_;
  mutable std::map<int, int> rank_cache_;
};

}  // namespace hochlef
