#pragma once

// Hochschild chain complex windows: C_n(A) = A ox A[1]^{ox n} truncated at a
// maximal bar length L, with the differential b = b0 + b1.  Heads may live in
// a coefficient bimodule.  Indexing is homological: HH_n = H^{-n}, and for a
// degree-0 algebra position i holds exactly the bar-length-i words, so the
// window is exact in degrees <= L-1.

#include <hochlef/algebra.hpp>
#include <hochlef/complex.hpp>
#include <hochlef/field.hpp>
#include <hochlef/matrix.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hochlef {

struct BarWord {
  int head = 0;
  std::vector<int> tail;

  bool operator==(const BarWord& o) const {
    return head == o.head && tail == o.tail;
  }
  // enumeration order: (bar length, head, tail) lexicographic
  bool operator<(const BarWord& o) const {
    if (tail.size() != o.tail.size()) return tail.size() < o.tail.size();
    if (head != o.head) return head < o.head;
    return tail < o.tail;
  }
};

template <class F>
using BarChain = std::map<BarWord, F>;

template <class F>
void bc_add(BarChain<F>& c, const BarWord& w, const F& v) {
  if (v.is_zero()) return;
  auto it = c.find(w);
  if (it == c.end()) {
    c.emplace(w, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) c.erase(it);
}

template <class F>
BarChain<F> bc_scale(const F& s, const BarChain<F>& x) {
  BarChain<F> r;
  for (auto& [w, c] : x) bc_add(r, w, s * c);
  return r;
}

template <class F>
BarChain<F> bc_sum(const BarChain<F>& x, const BarChain<F>& y) {
  BarChain<F> r = x;
  for (auto& [w, c] : y) bc_add(r, w, c);
  return r;
}

// finite-dimensional graded bimodule over a fixed algebra
template <class F>
struct Bimodule {
  GradedAlgebra<F> algebra;
  std::vector<std::string> basis;
  std::vector<int> degree;
  std::vector<SparseVec<F>> diff;
  std::vector<std::vector<SparseVec<F>>> left;   // left[a][m] = a.m
  std::vector<std::vector<SparseVec<F>>> right;  // right[m][a] = m.a

  int dim() const { return (int)basis.size(); }
  SparseVec<F> e(int i) const { return {{i, F(1)}}; }

  SparseVec<F> act_left(const SparseVec<F>& a, const SparseVec<F>& m) const {
    SparseVec<F> acc;
    for (auto& [i, ci] : a)
      for (auto& [j, cj] : m) {
        F c = ci * cj;
        for (auto& [l, v] : left[i][j]) acc.push_back({l, c * v});
      }
    sv_normalize(acc);
    return acc;
  }

  SparseVec<F> act_right(const SparseVec<F>& m, const SparseVec<F>& a) const {
    SparseVec<F> acc;
    for (auto& [j, cj] : m)
      for (auto& [i, ci] : a) {
        F c = cj * ci;
        for (auto& [l, v] : right[j][i]) acc.push_back({l, c * v});
      }
    sv_normalize(acc);
    return acc;
  }

  SparseVec<F> d_vec(const SparseVec<F>& m) const {
    SparseVec<F> acc;
    for (auto& [i, ci] : m)
      for (auto& [l, v] : diff[i]) acc.push_back({l, ci * v});
    sv_normalize(acc);
    return acc;
  }

  bool is_degree_zero() const {
    for (int d : degree)
      if (d != 0) return false;
    for (auto& dv : diff)
      if (!dv.empty()) return false;
    return true;
  }
};

template <class F>
ValidationReport validate(const Bimodule<F>& m) {
  ValidationReport rep;
  const auto& a = m.algebra;
  auto arep = validate(a);
  if (!arep.ok()) {
    rep.violations.push_back("bimodule base algebra invalid");
    return rep;
  }
  const int dm = m.dim(), da = a.dim();
  bool shape = dm > 0 && (int)m.degree.size() == dm &&
               (int)m.diff.size() == dm && (int)m.left.size() == da &&
               (int)m.right.size() == dm;
  if (shape)
    for (auto& row : m.left) shape = shape && (int)row.size() == dm;
  if (shape)
    for (auto& row : m.right) shape = shape && (int)row.size() == da;
  if (!shape) {
    rep.violations.push_back("bimodule shape mismatch");
    return rep;
  }
  for (int j = 0; j < dm; ++j) {
    if (m.act_left(a.unit, m.e(j)) != m.e(j))
      rep.violations.push_back("bimodule not unital on the left at " +
                               m.basis[j]);
    if (m.act_right(m.e(j), a.unit) != m.e(j))
      rep.violations.push_back("bimodule not unital on the right at " +
                               m.basis[j]);
  }
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int l = 0; l < dm; ++l) {
        if (m.act_left(a.mul[i][j], m.e(l)) !=
            m.act_left(a.e(i), m.act_left(a.e(j), m.e(l))))
          rep.violations.push_back("left action not associative at (" +
                                   a.basis[i] + "," + a.basis[j] + "," +
                                   m.basis[l] + ")");
        if (m.act_right(m.act_right(m.e(l), a.e(i)), a.e(j)) !=
            m.act_right(m.e(l), a.mul[i][j]))
          rep.violations.push_back("right action not associative at (" +
                                   m.basis[l] + "," + a.basis[i] + "," +
                                   a.basis[j] + ")");
        if (m.act_right(m.act_left(a.e(i), m.e(l)), a.e(j)) !=
            m.act_left(a.e(i), m.act_right(m.e(l), a.e(j))))
          rep.violations.push_back("actions do not commute at (" +
                                   a.basis[i] + "," + m.basis[l] + "," +
                                   a.basis[j] + ")");
      }
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < dm; ++j) {
      for (auto& [l, c] : m.left[i][j])
        if (m.degree[l] != a.degree[i] + m.degree[j]) {
          rep.violations.push_back("bimodule grading violated at left (" +
                                   a.basis[i] + "," + m.basis[j] + ")");
          break;
        }
      for (auto& [l, c] : m.right[j][i])
        if (m.degree[l] != m.degree[j] + a.degree[i]) {
          rep.violations.push_back("bimodule grading violated at right (" +
                                   m.basis[j] + "," + a.basis[i] + ")");
          break;
        }
    }
  for (int j = 0; j < dm; ++j) {
    for (auto& [l, c] : m.diff[j])
      if (m.degree[l] != m.degree[j] + 1) {
        rep.violations.push_back("bimodule differential degree wrong at " +
                                 m.basis[j]);
        break;
      }
    if (!m.d_vec(m.diff[j]).empty())
      rep.violations.push_back("bimodule d^2 != 0 at " + m.basis[j]);
  }
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < dm; ++j) {
      auto lhs = m.d_vec(m.left[i][j]);
      auto rhs = sv_add(m.act_left(a.diff[i], m.e(j)),
                        sv_scale(parity_sign<F>(a.degree[i]),
                                 m.act_left(a.e(i), m.diff[j])));
      if (lhs != rhs)
        rep.violations.push_back("bimodule Leibniz fails on the left at (" +
                                 a.basis[i] + "," + m.basis[j] + ")");
      lhs = m.d_vec(m.right[j][i]);
      rhs = sv_add(m.act_right(m.diff[j], a.e(i)),
                   sv_scale(parity_sign<F>(m.degree[j]),
                            m.act_right(m.e(j), a.diff[i])));
      if (lhs != rhs)
        rep.violations.push_back("bimodule Leibniz fails on the right at (" +
                                 m.basis[j] + "," + a.basis[i] + ")");
    }
  return rep;
}

template <class F>
void require_valid(const Bimodule<F>& m) {
  auto rep = validate(m);
  if (!rep.ok()) throw error("invalid bimodule: " + rep.violations.front());
}

template <class F>
Bimodule<F> diagonal_bimodule(const GradedAlgebra<F>& a) {
  require_valid(a);
  Bimodule<F> m;
  m.algebra = a;
  m.basis = a.basis;
  m.degree = a.degree;
  m.diff = a.diff;
  m.left = a.mul;
  m.right = a.mul;
  return m;
}

// module space = A with m.a = ma and a.m = phi(a)m, for an endomorphism phi
template <class F>
Bimodule<F> twisted_bimodule(const AlgebraMorphism<F>& phi) {
  if (!(phi.source == phi.target)) throw error("endomorphism required");
  auto rep = validate(phi);
  if (!rep.ok()) throw error("invalid morphism: " + rep.violations.front());
  const auto& a = phi.source;
  Bimodule<F> m;
  m.algebra = a;
  m.basis = a.basis;
  m.degree = a.degree;
  m.diff = a.diff;
  m.right = a.mul;
  m.left.assign(a.dim(), std::vector<SparseVec<F>>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    auto img = phi.apply(a.e(i));
    for (int j = 0; j < a.dim(); ++j)
      m.left[i][j] = a.mul_vec(img, a.e(j));
  }
  return m;
}

// homological degree of a word (negative of its total cohomological degree)
template <class F>
int bar_degree(const GradedAlgebra<F>& a, const Bimodule<F>* m,
               const BarWord& w) {
  int total = m ? m->degree[w.head] : a.degree[w.head];
  for (int t : w.tail) total += a.degree[t] - 1;
  return -total;
}

namespace detail {

// eta_i = deg(a_0) + deg(sa_1) + ... + deg(sa_i)
template <class F>
std::vector<int> bar_etas(const GradedAlgebra<F>& a, const Bimodule<F>* m,
                          const BarWord& w) {
  std::vector<int> eta(w.tail.size() + 1);
  eta[0] = m ? m->degree[w.head] : a.degree[w.head];
  for (std::size_t i = 0; i < w.tail.size(); ++i)
    eta[i + 1] = eta[i] + a.degree[w.tail[i]] - 1;
  return eta;
}

}  // namespace detail

// b0: differential applied to the head and to each letter
template <class F>
BarChain<F> bar_b0(const GradedAlgebra<F>& a, const Bimodule<F>* m,
                   const BarChain<F>& x) {
  BarChain<F> out;
  for (auto& [w, c] : x) {
    const auto& head_diff = m ? m->diff[w.head] : a.diff[w.head];
    for (auto& [l, v] : head_diff) bc_add(out, BarWord{l, w.tail}, c * v);
    auto eta = detail::bar_etas(a, m, w);
    for (std::size_t i = 0; i < w.tail.size(); ++i) {
      F s = F(0) - parity_sign<F>(eta[i]);
      for (auto& [l, v] : a.diff[w.tail[i]]) {
        BarWord nw = w;
        nw.tail[i] = l;
        bc_add(out, nw, c * s * v);
      }
    }
  }
  return out;
}

// b1: head merge, adjacent merges, and the wrap-around term
template <class F>
BarChain<F> bar_b1(const GradedAlgebra<F>& a, const Bimodule<F>* m,
                   const BarChain<F>& x) {
  BarChain<F> out;
  for (auto& [w, c] : x) {
    const std::size_t n = w.tail.size();
    if (n == 0) continue;
    auto eta = detail::bar_etas(a, m, w);
    // (-1)^{deg a0} (a0 a1)[a2|...]
    {
      F s = parity_sign<F>(eta[0]);
      const auto& prod = m ? m->right[w.head][w.tail[0]]
                           : a.mul[w.head][w.tail[0]];
      BarWord nw{0, std::vector<int>(w.tail.begin() + 1, w.tail.end())};
      for (auto& [l, v] : prod) {
        nw.head = l;
        bc_add(out, nw, c * s * v);
      }
    }
    // sum_i (-1)^{eta_i} a0[...|a_i a_{i+1}|...]
    for (std::size_t i = 1; i < n; ++i) {
      F s = parity_sign<F>(eta[i]);
      for (auto& [l, v] : a.mul[w.tail[i - 1]][w.tail[i]]) {
        BarWord nw{w.head, {}};
        nw.tail.reserve(n - 1);
        nw.tail.insert(nw.tail.end(), w.tail.begin(), w.tail.begin() + i - 1);
        nw.tail.push_back(l);
        nw.tail.insert(nw.tail.end(), w.tail.begin() + i + 1, w.tail.end());
        bc_add(out, nw, c * s * v);
      }
    }
    // -(-1)^{eta_{n-1}(deg a_n + 1)} (a_n a0)[a1|...|a_{n-1}]
    {
      bool odd = parity_odd(eta[n - 1]) && parity_odd(a.degree[w.tail[n - 1]] + 1);
      F s = odd ? F(1) : F(-1);
      const auto& prod = m ? m->left[w.tail[n - 1]][w.head]
                           : a.mul[w.tail[n - 1]][w.head];
      BarWord nw{0, std::vector<int>(w.tail.begin(), w.tail.end() - 1)};
      for (auto& [l, v] : prod) {
        nw.head = l;
        bc_add(out, nw, c * s * v);
      }
    }
  }
  return out;
}

template <class F>
BarChain<F> bar_b(const GradedAlgebra<F>& a, const Bimodule<F>* m,
                  const BarChain<F>& x) {
  return bc_sum(bar_b0(a, m, x), bar_b1(a, m, x));
}

template <class F>
class HochschildWindow {
 public:
  HochschildWindow(GradedAlgebra<F> a, std::optional<Bimodule<F>> m, int L)
      : algebra_(std::move(a)), coeff_(std::move(m)), max_bar_(L) {
    if (L < 1) throw error("window length must be at least 1");
    require_valid(algebra_);
    if (coeff_) {
      require_valid(*coeff_);
      if (!(coeff_->algebra == algebra_))
        throw error("bimodule over a different algebra");
    }
    const Bimodule<F>* mm = coeff_ ? &*coeff_ : nullptr;
    const int da = algebra_.dim();
    const int dm = coeff_ ? coeff_->dim() : da;

    std::map<int, std::vector<BarWord>> buckets;
    for (int n = 0; n <= L; ++n) {
      BarWord w;
      w.tail.assign(n, 0);
      for (int head = 0; head < dm; ++head) {
        w.head = head;
        std::fill(w.tail.begin(), w.tail.end(), 0);
        while (true) {
          buckets[bar_degree(algebra_, mm, w)].push_back(w);
          int pos = n - 1;
          while (pos >= 0 && w.tail[pos] == da - 1) w.tail[pos--] = 0;
          if (pos < 0) break;
          ++w.tail[pos];
        }
      }
    }
    lo_ = buckets.begin()->first;
    hi_ = buckets.rbegin()->first;
    words_.resize(hi_ - lo_ + 1);
    index_.resize(hi_ - lo_ + 1);
    for (auto& [deg, ws] : buckets) words_[deg - lo_] = std::move(ws);
    for (int i = 0; i < (int)words_.size(); ++i)
      for (int p = 0; p < (int)words_[i].size(); ++p)
        index_[i][words_[i][p]] = p;

    std::vector<int> dims;
    for (auto& ws : words_) dims.push_back((int)ws.size());
    std::vector<SparseMatrix<F>> diffs;
    for (int i = lo_ + 1; i <= hi_; ++i) {
      std::vector<Triplet<F>> t0, t1;
      const auto& src = words_[i - lo_];
      const auto& dst = index_[i - 1 - lo_];
      for (int col = 0; col < (int)src.size(); ++col) {
        BarChain<F> one;
        one.emplace(src[col], F(1));
        for (auto& [w2, v] : bar_b0(algebra_, mm, one)) {
          auto it = dst.find(w2);
          if (it == dst.end()) throw error("internal: word left the window");
          t0.push_back({it->second, col, v});
        }
        for (auto& [w2, v] : bar_b1(algebra_, mm, one)) {
          auto it = dst.find(w2);
          if (it == dst.end()) throw error("internal: word left the window");
          t1.push_back({it->second, col, v});
        }
      }
      int r = dims[i - 1 - lo_], cdim = dims[i - lo_];
      b0s_.push_back(SparseMatrix<F>::from_triplets(r, cdim, t0));
      b1s_.push_back(SparseMatrix<F>::from_triplets(r, cdim, t1));
      diffs.push_back(b0s_.back().add(b1s_.back()));
    }
    complex_.emplace(lo_, dims, std::move(diffs));
    certified_ = algebra_.is_degree_zero() &&
                 (!coeff_ || coeff_->is_degree_zero());
  }

  const GradedAlgebra<F>& algebra() const { return algebra_; }
  const std::optional<Bimodule<F>>& coefficients() const { return coeff_; }
  const ChainComplex<F>& complex() const { return *complex_; }
  int max_bar() const { return max_bar_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool certified() const { return certified_; }

  const std::vector<BarWord>& words(int i) const {
    if (i < lo_ || i > hi_) throw error("degree out of range");
    return words_[i - lo_];
  }

  int position(int i, const BarWord& w) const {
    if (i < lo_ || i > hi_) return -1;
    auto it = index_[i - lo_].find(w);
    return it == index_[i - lo_].end() ? -1 : it->second;
  }

  SparseMatrix<F> b0_mat(int i) const { return part_mat(b0s_, i); }
  SparseMatrix<F> b1_mat(int i) const { return part_mat(b1s_, i); }

  SparseMatrix<F> column(const BarChain<F>& x, int i) const {
    if (i < lo_ || i > hi_) throw error("degree out of range");
    std::vector<Triplet<F>> t;
    for (auto& [w, c] : x) {
      int p = position(i, w);
      if (p < 0) throw error("word not in window degree");
      t.push_back({p, 0, c});
    }
    return SparseMatrix<F>::from_triplets((int)words_[i - lo_].size(), 1, t);
  }

  BarChain<F> chain_of(int i, const SparseMatrix<F>& column, int col = 0) const {
    if (i < lo_ || i > hi_) throw error("degree out of range");
    BarChain<F> r;
    for (auto& [row, v] : column.col(col)) bc_add(r, words_[i - lo_][row], v);
    return r;
  }

 private:
  SparseMatrix<F> part_mat(const std::vector<SparseMatrix<F>>& v, int i) const {
    if (i > lo_ && i <= hi_) return v[i - lo_ - 1];
    if (i == lo_) return SparseMatrix<F>(0, (int)words_.front().size());
    if (i == hi_ + 1) return SparseMatrix<F>((int)words_.back().size(), 0);
    throw error("degree out of range");
  }

  GradedAlgebra<F> algebra_;
  std::optional<Bimodule<F>> coeff_;
  int max_bar_;
  int lo_ = 0, hi_ = 0;
  bool certified_ = false;
  std::vector<std::vector<BarWord>> words_;
  std::vector<std::map<BarWord, int>> index_;
  std::vector<SparseMatrix<F>> b0s_, b1s_;
  std::optional<ChainComplex<F>> complex_;
};

template <class F>
HochschildWindow<F> hochschild_complex(const GradedAlgebra<F>& a, int L) {
  return HochschildWindow<F>(a, std::nullopt, L);
}

template <class F>
HochschildWindow<F> hochschild_complex(const GradedAlgebra<F>& a,
                                       const Bimodule<F>& m, int L) {
  return HochschildWindow<F>(a, m, L);
}

struct HHResult {
  std::vector<int> dims;
  bool certified = false;
  std::string note;
};

namespace detail {

template <class F>
HHResult window_dims(const HochschildWindow<F>& win, int i_max) {
  HHResult r;
  for (int i = 0; i <= i_max; ++i) {
    if (i < win.lo() - 1 || i > win.hi() + 1)
      r.dims.push_back(0);
    else
      r.dims.push_back(win.complex().homology_dim(i));
  }
  r.certified = win.certified();
  r.note = r.certified ? "exact" : "truncated - window result";
  return r;
}

}  // namespace detail

template <class F>
HHResult hh_dims(const GradedAlgebra<F>& a, int i_max) {
  if (i_max < 0) throw error("negative degree");
  auto win = hochschild_complex(a, i_max + 1);
  return detail::window_dims(win, i_max);
}

template <class F>
HHResult hh_with_coefficients(const GradedAlgebra<F>& a, const Bimodule<F>& m,
                              int i_max) {
  if (i_max < 0) throw error("negative degree");
  auto win = hochschild_complex(a, m, i_max + 1);
  return detail::window_dims(win, i_max);
}

}  // namespace hochlef
