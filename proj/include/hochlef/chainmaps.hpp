#pragma once

// Chain-level operations between Hochschild complexes: the shuffle product,
// the Kunneth quasi-isomorphism C(A) ox C(B) -> C(A ox B) and its inverse on
// homology, the clubsuit isomorphism C(A) -> C(A^op), and the trace map that
// collapses matrix-entry words over an algebra.

#include <algorithm>
#include <utility>
#include <vector>

#include <hochlef/algebra.hpp>
#include <hochlef/hochschild.hpp>

namespace hochlef {

// --------------------------------------------------------------------------
// shuffle product
//
// sh(a0[a1|..|an] ox b0[b1|..|bm]) = (-1)^heart a0b0 sh_nm[a1..an, b1..bm]
// where heart = deg(b0) * sum_i deg(s a_i) and sh_nm runs over (n,m)-shuffles
// with the Koszul sign of the permutation on the suspended letters.
// --------------------------------------------------------------------------

template <class F>
BarChain<F> shuffle(const GradedAlgebra<F>& a, const BarChain<F>& x,
                    const BarChain<F>& y) {
  BarChain<F> out;
  for (const auto& [u, cu] : x) {
    const int n = static_cast<int>(u.tail.size());
    std::vector<int> du(n);
    int sum_su = 0;
    for (int i = 0; i < n; ++i) {
      du[i] = a.degree[u.tail[i]] - 1;
      sum_su += du[i];
    }
    for (const auto& [v, cv] : y) {
      const int m = static_cast<int>(v.tail.size());
      SparseVec<F> head = a.mul_vec(a.e(u.head), a.e(v.head));
      if (head.empty()) continue;
      std::vector<int> dv(m);
      for (int j = 0; j < m; ++j) dv[j] = a.degree[v.tail[j]] - 1;

      F base = cu * cv;
      if (parity_odd(a.degree[v.head]) && parity_odd(sum_su)) base = -base;

      // mask: 0 = next letter of u, 1 = next letter of v; next_permutation
      // over the sorted mask enumerates every (n,m)-shuffle exactly once.
      std::vector<int> mask(n + m, 0);
      std::fill(mask.begin() + n, mask.end(), 1);
      std::vector<int> tail(n + m), pos_u(n), pos_v(m);
      do {
        int iu = 0, iv = 0;
        for (int s = 0; s < n + m; ++s) {
          if (mask[s] == 0) {
            pos_u[iu] = s;
            tail[s] = u.tail[iu++];
          } else {
            pos_v[iv] = s;
            tail[s] = v.tail[iv++];
          }
        }
        bool neg = false;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < m; ++j)
            if (pos_v[j] < pos_u[i] && parity_odd(du[i]) && parity_odd(dv[j]))
              neg = !neg;
        F sign = base;
        if (neg) sign = -sign;
        for (const auto& [h, ch] : head) bc_add(out, BarWord{h, tail}, sign * ch);
      } while (std::next_permutation(mask.begin(), mask.end()));
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// Kunneth map
//
// K(x ox y) = sh(x', y') where x' substitutes a -> a ox 1_B letterwise and
// y' substitutes b -> 1_A ox b (multilinearly when a unit has several basis
// components). It is a chain map and an associative product on chains.
// --------------------------------------------------------------------------

namespace detail {

// Substitute basis indices by sparse vectors, letter by letter, expanding
// products of components multilinearly.
template <class F, class Img>
BarChain<F> substitute_word(const BarWord& word, const F& coeff, Img&& img) {
  SparseVec<F> head = img(word.head);
  std::vector<std::pair<std::vector<int>, F>> partial{{{}, F(1)}};
  for (int letter : word.tail) {
    SparseVec<F> li = img(letter);
    std::vector<std::pair<std::vector<int>, F>> next;
    next.reserve(partial.size() * li.size());
    for (const auto& [tl, c] : partial)
      for (const auto& [i, ci] : li) {
        auto t = tl;
        t.push_back(i);
        next.emplace_back(std::move(t), c * ci);
      }
    partial = std::move(next);
  }
  BarChain<F> out;
  for (const auto& [h, ch] : head)
    for (const auto& [tl, c] : partial) bc_add(out, BarWord{h, tl}, coeff * ch * c);
  return out;
}

}  // namespace detail

template <class F>
BarChain<F> kunneth(const GradedAlgebra<F>& a, const GradedAlgebra<F>& b,
                    const GradedAlgebra<F>& ab, const BarChain<F>& x,
                    const BarChain<F>& y) {
  const int db = b.dim();
  auto embed_a = [&](int i) {
    SparseVec<F> out;
    for (const auto& [u, cu] : b.unit) out.emplace_back(i * db + u, cu);
    return out;
  };
  auto embed_b = [&](int j) {
    SparseVec<F> out;
    for (const auto& [u, cu] : a.unit) out.emplace_back(u * db + j, cu);
    return out;
  };
  BarChain<F> xe, ye;
  for (const auto& [word, c] : x)
    xe = bc_sum(xe, detail::substitute_word(word, c, embed_a));
  for (const auto& [word, c] : y)
    ye = bc_sum(ye, detail::substitute_word(word, c, embed_b));
  return shuffle(ab, xe, ye);
}

template <class F>
BarChain<F> kunneth(const GradedAlgebra<F>& a, const GradedAlgebra<F>& b,
                    const BarChain<F>& x, const BarChain<F>& y) {
  return kunneth(a, b, tensor(a, b), x, y);
}

// --------------------------------------------------------------------------
// Kunneth on homology
//
// For degree-0 algebras the window of length n_max+1 certifies HH_0..HH_n_max
// exactly; block[n] sends oplus_{i+j=n} HH_i(A) ox HH_j(B) (columns ordered by
// ascending i, then the A-class index, then the B-class index) to HH_n(A ox B)
// in the basis produced by homology_at. Each block must be square and
// invertible; inverse[n] is its two-sided inverse.
// --------------------------------------------------------------------------

template <class F>
struct KunnethBlocks {
  int n_max = 0;
  GradedAlgebra<F> product;              // tensor(a, b)
  std::vector<SparseMatrix<F>> block;    // block[n]: HH_n(A ox B) from classes
  std::vector<SparseMatrix<F>> inverse;  // inverse[n] * block[n] = identity
};

template <class F>
KunnethBlocks<F> kunneth_on_homology(const GradedAlgebra<F>& a,
                                     const GradedAlgebra<F>& b, int n_max) {
  if (!a.is_degree_zero() || !b.is_degree_zero())
    throw error("certified window required");
  if (n_max < 0) throw error("degree out of range");
  KunnethBlocks<F> result;
  result.n_max = n_max;
  result.product = tensor(a, b);
  const int L = n_max + 1;
  HochschildWindow<F> wa(a, std::nullopt, L);
  HochschildWindow<F> wb(b, std::nullopt, L);
  HochschildWindow<F> wab(result.product, std::nullopt, L);
  std::vector<HomologySummary<F>> ha, hb;
  for (int i = 0; i <= n_max; ++i) {
    ha.push_back(wa.complex().homology_at(i));
    hb.push_back(wb.complex().homology_at(i));
  }
  for (int n = 0; n <= n_max; ++n) {
    auto hab = wab.complex().homology_at(n);
    std::vector<Triplet<F>> trip;
    int col = 0;
    for (int i = 0; i <= n; ++i) {
      const int j = n - i;
      for (int p = 0; p < ha[i].dimension; ++p) {
        auto xa = wa.chain_of(i, ha[i].cycle_basis, p);
        for (int q = 0; q < hb[j].dimension; ++q) {
          auto xb = wb.chain_of(j, hb[j].cycle_basis, q);
          auto image = kunneth(a, b, result.product, xa, xb);
          auto projected = hab.projection.mul(wab.column(image, n));
          for (const auto& [row, value] : projected.col(0))
            trip.push_back({row, col, value});
          ++col;
        }
      }
    }
    if (col != hab.dimension) throw error("Kunneth failure");
    auto block = SparseMatrix<F>::from_triplets(hab.dimension, col, trip);
    auto inv = solve(block, SparseMatrix<F>::identity(hab.dimension));
    if (!inv) throw error("Kunneth failure");
    result.block.push_back(std::move(block));
    result.inverse.push_back(std::move(*inv));
  }
  return result;
}

// --------------------------------------------------------------------------
// clubsuit: C(A) -> C(A^op)
//
// (a0[a1|..|an])^club = (-1)^{n + sum_{i<j} deg(s a_i) deg(s a_j)} a0[an|..|a1]
// --------------------------------------------------------------------------

template <class F>
BarChain<F> clubsuit(const GradedAlgebra<F>& a, const BarChain<F>& x) {
  BarChain<F> out;
  for (const auto& [word, c] : x) {
    const int n = static_cast<int>(word.tail.size());
    bool neg = parity_odd(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (parity_odd(a.degree[word.tail[i]] - 1) &&
            parity_odd(a.degree[word.tail[j]] - 1))
          neg = !neg;
    BarWord rev{word.head, {word.tail.rbegin(), word.tail.rend()}};
    bc_add(out, rev, neg ? -c : c);
  }
  return out;
}

// --------------------------------------------------------------------------
// trace map
//
// A matrix word M0[M1|..|Mk] (square matrices with entries in B) maps to the
// sum over cyclic index tuples (i0,..,ik) of M0_{i0 i1}[M1_{i1 i2}|..|Mk_{ik i0}],
// expanded multilinearly over the basis components of each entry. No extra
// sign appears once the entries are homogeneous.
// --------------------------------------------------------------------------

template <class F>
struct AlgMatrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<SparseVec<F>>> entry;  // entry[i][j]

  static AlgMatrix zero(int r, int c) {
    AlgMatrix m;
    m.rows = r;
    m.cols = c;
    m.entry.assign(r, std::vector<SparseVec<F>>(c));
    return m;
  }

  bool is_zero() const {
    for (const auto& row : entry)
      for (const auto& e : row)
        if (!e.empty()) return false;
    return true;
  }

  friend bool operator==(const AlgMatrix& a, const AlgMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entry == b.entry;
  }
};

template <class F>
AlgMatrix<F> alg_mat_mul(const GradedAlgebra<F>& a, const AlgMatrix<F>& x,
                         const AlgMatrix<F>& y) {
  if (x.cols != y.rows) throw error("matrix size mismatch");
  auto out = AlgMatrix<F>::zero(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j) {
      SparseVec<F> acc;
      for (int l = 0; l < x.cols; ++l)
        if (!x.entry[i][l].empty() && !y.entry[l][j].empty())
          acc = sv_add(acc, a.mul_vec(x.entry[i][l], y.entry[l][j]));
      out.entry[i][j] = std::move(acc);
    }
  return out;
}

template <class F>
BarChain<F> trace_map(const GradedAlgebra<F>& b,
                      const std::vector<AlgMatrix<F>>& word, const F& coeff) {
  if (word.empty()) throw error("empty matrix word");
  const int n = word[0].rows;
  for (const auto& m : word)
    if (m.rows != n || m.cols != n) throw error("matrix size mismatch");
  const int k = static_cast<int>(word.size()) - 1;
  BarChain<F> out;
  if (n == 0) return out;
  std::vector<int> idx(k + 1, 0);
  for (;;) {
    bool zero = false;
    for (int t = 0; t <= k && !zero; ++t)
      zero = word[t].entry[idx[t]][idx[(t + 1) % (k + 1)]].empty();
    if (!zero) {
      const SparseVec<F>& head = word[0].entry[idx[0]][idx[k == 0 ? 0 : 1]];
      std::vector<std::pair<std::vector<int>, F>> partial{{{}, coeff}};
      for (int t = 1; t <= k; ++t) {
        const SparseVec<F>& sv = word[t].entry[idx[t]][idx[(t + 1) % (k + 1)]];
        std::vector<std::pair<std::vector<int>, F>> next;
        next.reserve(partial.size() * sv.size());
        for (const auto& [tl, c] : partial)
          for (const auto& [bi, ci] : sv) {
            auto t2 = tl;
            t2.push_back(bi);
            next.emplace_back(std::move(t2), c * ci);
          }
        partial = std::move(next);
      }
      for (const auto& [h, ch] : head)
        for (const auto& [tl, c] : partial) bc_add(out, BarWord{h, tl}, ch * c);
    }
    int t = 0;
    while (t <= k && ++idx[t] == n) idx[t++] = 0;
    if (t > k) break;
  }
  return out;
}

}  // namespace hochlef
