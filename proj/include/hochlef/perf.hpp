#pragma once

// Perfect modules and bimodules as bounded complexes of idempotent-image
// projectives. A term at cohomological position p is the right module e.B^n
// cut out of the free column module B^n by an idempotent matrix e over B;
// differentials act by left multiplication with matrices over B satisfying
// e'.delta.e = delta; an optional left algebra acts through per-term corner
// representations rho: A -> e.M_n(B).e strictly commuting with delta.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <hochlef/algebra.hpp>
#include <hochlef/chainmaps.hpp>
#include <hochlef/complex.hpp>
#include <hochlef/hochschild.hpp>
#include <hochlef/matrix.hpp>

namespace hochlef {

template <class F>
struct PerfTerm {
  int position = 0;
  AlgMatrix<F> idempotent;              // square over the base algebra
  std::vector<AlgMatrix<F>> action;     // per left-algebra basis element
};

template <class F>
struct PerfComplex {
  GradedAlgebra<F> base;
  std::optional<GradedAlgebra<F>> left;
  std::vector<PerfTerm<F>> terms;       // strictly increasing positions
  std::map<int, AlgMatrix<F>> diff;     // source position p -> map to p+1

  int term_index(int position) const {
    for (int i = 0; i < static_cast<int>(terms.size()); ++i)
      if (terms[i].position == position) return i;
    return -1;
  }
};

namespace detail {

// k-linear matrix of left multiplication by s on the base algebra
template <class F>
SparseMatrix<F> left_mult_matrix(const GradedAlgebra<F>& b, const SparseVec<F>& s) {
  std::vector<std::vector<typename SparseMatrix<F>::Entry>> cols(b.dim());
  for (int j = 0; j < b.dim(); ++j)
    for (auto& [k, v] : b.mul_vec(s, b.e(j))) cols[j].emplace_back(k, v);
  return SparseMatrix<F>::from_columns(b.dim(), std::move(cols));
}

template <class F>
SparseMatrix<F> right_mult_matrix(const GradedAlgebra<F>& b, const SparseVec<F>& s) {
  std::vector<std::vector<typename SparseMatrix<F>::Entry>> cols(b.dim());
  for (int j = 0; j < b.dim(); ++j)
    for (auto& [k, v] : b.mul_vec(b.e(j), s)) cols[j].emplace_back(k, v);
  return SparseMatrix<F>::from_columns(b.dim(), std::move(cols));
}

// k-linear matrix of a matrix over B acting by left multiplication on columns
template <class F>
SparseMatrix<F> k_matrix_of(const GradedAlgebra<F>& b, const AlgMatrix<F>& m) {
  const int db = b.dim();
  std::vector<Triplet<F>> trip;
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      if (m.entry[r][c].empty()) continue;
      for (int j = 0; j < db; ++j)
        for (auto& [k, v] : b.mul_vec(m.entry[r][c], b.e(j)))
          trip.push_back({r * db + k, c * db + j, v});
    }
  return SparseMatrix<F>::from_triplets(m.rows * db, m.cols * db, trip);
}

// inclusion/projection pair for the image of a k-linear idempotent:
// iota.pi = P, pi.iota = identity
template <class F>
std::pair<SparseMatrix<F>, SparseMatrix<F>> image_of_idempotent(
    const SparseMatrix<F>& p) {
  SparseMatrix<F> iota = select_cols(p, pivot_columns(p));
  auto pi = solve(iota, p);
  if (!pi) throw error("internal: idempotent image projection failed");
  return {std::move(iota), std::move(*pi)};
}

template <class F>
AlgMatrix<F> amat_lincomb(int rows, int cols,
                          const std::vector<std::pair<F, const AlgMatrix<F>*>>& terms) {
  auto out = AlgMatrix<F>::zero(rows, cols);
  for (auto& [c, m] : terms)
    for (int r = 0; r < rows; ++r)
      for (int cc = 0; cc < cols; ++cc)
        out.entry[r][cc] = sv_add(out.entry[r][cc], sv_scale(c, m->entry[r][cc]));
  return out;
}

}  // namespace detail

template <class F>
ValidationReport validate(const PerfComplex<F>& x) {
  ValidationReport rep;
  auto fail = [&](const std::string& s) { rep.violations.push_back(s); };
  if (!validate(x.base).ok()) fail("base algebra invalid");
  for (auto& d : x.base.diff)
    if (!d.empty()) {
      fail("base algebra differential must vanish");
      break;
    }
  if (x.terms.empty()) fail("empty complex");
  for (size_t i = 1; i < x.terms.size(); ++i)
    if (x.terms[i - 1].position >= x.terms[i].position) {
      fail("positions not strictly increasing");
      break;
    }
  if (x.left) {
    if (!validate(*x.left).ok()) fail("left algebra invalid");
    if (!x.left->is_degree_zero())
      fail("left algebra must be concentrated in degree zero");
  }
  for (auto& t : x.terms) {
    const std::string at = " at position " + std::to_string(t.position);
    if (t.idempotent.rows != t.idempotent.cols) {
      fail("idempotent matrix not square" + at);
      continue;
    }
    if (!(alg_mat_mul(x.base, t.idempotent, t.idempotent) == t.idempotent))
      fail("term is not idempotent" + at);
    if (x.left) {
      if (static_cast<int>(t.action.size()) != x.left->dim()) {
        fail("action matrix count mismatch" + at);
        continue;
      }
      bool shaped = true;
      for (auto& m : t.action)
        if (m.rows != t.idempotent.rows || m.cols != t.idempotent.cols)
          shaped = false;
      if (!shaped) {
        fail("action matrix shape mismatch" + at);
        continue;
      }
      std::vector<std::pair<F, const AlgMatrix<F>*>> unit_comb;
      for (auto& [i, c] : x.left->unit) unit_comb.emplace_back(c, &t.action[i]);
      if (!(detail::amat_lincomb(t.idempotent.rows, t.idempotent.cols,
                                 unit_comb) == t.idempotent))
        fail("action not unital" + at);
      for (int i = 0; i < x.left->dim() && rep.violations.size() < 40; ++i)
        for (int j = 0; j < x.left->dim(); ++j) {
          std::vector<std::pair<F, const AlgMatrix<F>*>> comb;
          for (auto& [k, c] : x.left->mul[i][j]) comb.emplace_back(c, &t.action[k]);
          if (!(alg_mat_mul(x.base, t.action[i], t.action[j]) ==
                detail::amat_lincomb(t.idempotent.rows, t.idempotent.cols, comb))) {
            fail("action not multiplicative" + at);
            goto next_term;
          }
        }
      for (auto& m : t.action)
        if (!(alg_mat_mul(x.base, t.idempotent,
                          alg_mat_mul(x.base, m, t.idempotent)) == m)) {
          fail("action leaves the corner" + at);
          break;
        }
    }
  next_term:;
  }
  for (auto& [p, d] : x.diff) {
    const std::string at = " at position " + std::to_string(p);
    int u = x.term_index(p), v = x.term_index(p + 1);
    if (u < 0 || v < 0) {
      fail("differential endpoint missing" + at);
      continue;
    }
    const auto& e = x.terms[u].idempotent;
    const auto& ep = x.terms[v].idempotent;
    if (d.rows != ep.rows || d.cols != e.cols) {
      fail("differential shape mismatch" + at);
      continue;
    }
    if (!(alg_mat_mul(x.base, ep, alg_mat_mul(x.base, d, e)) == d))
      fail("differential not compatible with idempotents" + at);
    if (x.left && x.terms[u].action.size() == x.terms[v].action.size())
      for (size_t i = 0; i < x.terms[u].action.size(); ++i)
        if (!(alg_mat_mul(x.base, x.terms[v].action[i], d) ==
              alg_mat_mul(x.base, d, x.terms[u].action[i]))) {
          fail("action does not commute with the differential" + at);
          break;
        }
    auto next = x.diff.find(p + 1);
    if (next != x.diff.end() && next->second.cols == d.rows &&
        !alg_mat_mul(x.base, next->second, d).is_zero())
      fail("differential does not square to zero" + at);
  }
  return rep;
}

template <class F>
void require_valid(const PerfComplex<F>& x) {
  auto rep = validate(x);
  if (!rep.ok()) throw error("invalid perfect complex: " + rep.violations.front());
}

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

template <class F>
PerfComplex<F> free_module(const GradedAlgebra<F>& a, int position = 0) {
  PerfComplex<F> x;
  x.base = a;
  auto e = AlgMatrix<F>::zero(1, 1);
  e.entry[0][0] = a.unit;
  x.terms.push_back({position, std::move(e), {}});
  return x;
}

template <class F>
PerfComplex<F> projective_module(const GradedAlgebra<F>& a, int idx,
                                 int position = 0) {
  if (idx < 0 || idx >= a.dim()) throw error("basis index out of range");
  if (a.mul[idx][idx] != a.e(idx)) throw error("basis element is not idempotent");
  PerfComplex<F> x;
  x.base = a;
  auto e = AlgMatrix<F>::zero(1, 1);
  e.entry[0][0] = a.e(idx);
  x.terms.push_back({position, std::move(e), {}});
  return x;
}

// graph of a morphism phi: A -> B, i.e. B with left action through phi
template <class F>
PerfComplex<F> graph_bimodule(const AlgebraMorphism<F>& phi) {
  if (!validate(phi).ok()) throw error("invalid morphism");
  PerfComplex<F> x;
  x.base = phi.target;
  x.left = phi.source;
  auto e = AlgMatrix<F>::zero(1, 1);
  e.entry[0][0] = phi.target.unit;
  std::vector<AlgMatrix<F>> action;
  for (int i = 0; i < phi.source.dim(); ++i) {
    auto m = AlgMatrix<F>::zero(1, 1);
    m.entry[0][0] = phi.apply(phi.source.e(i));
    action.push_back(std::move(m));
  }
  x.terms.push_back({0, std::move(e), std::move(action)});
  require_valid(x);
  return x;
}

// Ae ox fA for idempotent basis elements e, f: (fA)^{dim Ae} with the left
// action acting through multiplication on the Ae factor
template <class F>
PerfComplex<F> projective_bimodule(const GradedAlgebra<F>& a, int e_idx,
                                   int f_idx, int position = 0) {
  for (int idx : {e_idx, f_idx}) {
    if (idx < 0 || idx >= a.dim()) throw error("basis index out of range");
    if (a.mul[idx][idx] != a.e(idx)) throw error("basis element is not idempotent");
  }
  auto [iota, pi] = detail::image_of_idempotent(
      detail::right_mult_matrix(a, a.e(e_idx)));  // basis of Ae
  const int n = iota.cols();
  PerfComplex<F> x;
  x.base = a;
  x.left = a;
  auto e = AlgMatrix<F>::zero(n, n);
  for (int i = 0; i < n; ++i) e.entry[i][i] = a.e(f_idx);
  std::vector<AlgMatrix<F>> action;
  for (int g = 0; g < a.dim(); ++g) {
    auto cg = pi.mul(detail::left_mult_matrix(a, a.e(g)).mul(iota));
    auto m = AlgMatrix<F>::zero(n, n);
    cg.for_each([&](int r, int c, const F& v) { m.entry[r][c] = {{f_idx, v}}; });
    action.push_back(std::move(m));
  }
  x.terms.push_back({position, std::move(e), std::move(action)});
  require_valid(x);
  return x;
}

// ---------------------------------------------------------------------------
// flattening and tensor calculus
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
struct FlatTerm {
  int position = 0;
  SparseMatrix<F> iota, pi;  // into/out of B^(n*dimB) coordinates
  int dim() const { return iota.cols(); }
};

template <class F>
std::vector<FlatTerm<F>> flatten_terms(const PerfComplex<F>& x) {
  std::vector<FlatTerm<F>> out;
  for (auto& t : x.terms) {
    auto [iota, pi] = image_of_idempotent(k_matrix_of(x.base, t.idempotent));
    out.push_back({t.position, std::move(iota), std::move(pi)});
  }
  return out;
}

// a bounded complex of left modules given by plain linear algebra:
// per-term action matrices for each algebra basis element plus k-linear
// differentials between adjacent positions
template <class F>
struct LeftTermData {
  int position = 0;
  int dim = 0;
  std::vector<SparseMatrix<F>> act;
};

template <class F>
struct LeftComplexData {
  std::vector<LeftTermData<F>> terms;       // ascending positions
  std::map<int, SparseMatrix<F>> diff;      // position p -> p+1
};

template <class F>
LeftComplexData<F> left_data_of(const GradedAlgebra<F>& a, const Bimodule<F>& m) {
  LeftComplexData<F> out;
  if (m.dim() == 0) return out;
  int lo = m.degree[0], hi = m.degree[0];
  for (int d : m.degree) {
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  std::map<int, std::vector<int>> by_degree;
  for (int j = 0; j < m.dim(); ++j) by_degree[m.degree[j]].push_back(j);
  std::map<int, SparseMatrix<F>> select;  // degree -> iota (m.dim x cnt)
  for (int d = lo; d <= hi; ++d) {
    std::vector<Triplet<F>> trip;
    auto& idx = by_degree[d];
    for (int c = 0; c < static_cast<int>(idx.size()); ++c)
      trip.push_back({idx[c], c, F(1)});
    select[d] = SparseMatrix<F>::from_triplets(m.dim(), idx.size(), trip);
  }
  for (int d = lo; d <= hi; ++d) {
    LeftTermData<F> t;
    t.position = d;
    t.dim = select[d].cols();
    for (int g = 0; g < a.dim(); ++g) {
      std::vector<std::vector<typename SparseMatrix<F>::Entry>> cols(t.dim);
      auto& idx = by_degree[d];
      for (int c = 0; c < static_cast<int>(idx.size()); ++c) {
        auto img = m.act_left(a.e(g), m.e(idx[c]));
        // re-express inside the degree-d block
        for (auto& [k, v] : img) {
          int local = -1;
          for (int q = 0; q < static_cast<int>(idx.size()); ++q)
            if (idx[q] == k) local = q;
          if (local < 0) throw error("left action does not preserve degree");
          cols[c].emplace_back(local, v);
        }
      }
      t.act.push_back(SparseMatrix<F>::from_columns(t.dim, std::move(cols)));
    }
    out.terms.push_back(std::move(t));
  }
  // module differential split into degree blocks
  bool has_diff = false;
  for (auto& d : m.diff)
    if (!d.empty()) has_diff = true;
  if (has_diff) {
    std::vector<std::vector<typename SparseMatrix<F>::Entry>> cols(m.dim());
    for (int j = 0; j < m.dim(); ++j)
      for (auto& [k, v] : m.diff[j]) cols[j].emplace_back(k, v);
    auto dm = SparseMatrix<F>::from_columns(m.dim(), std::move(cols));
    for (int d = lo; d < hi; ++d)
      out.diff[d] = select[d + 1].transpose().mul(dm).mul(select[d]);
  }
  return out;
}

// a perfect complex over opposite(a), read as a complex of left a-modules
template <class F>
LeftComplexData<F> left_data_of_op(const GradedAlgebra<F>& a,
                                   const PerfComplex<F>& m) {
  LeftComplexData<F> out;
  auto flats = flatten_terms(m);
  const int db = m.base.dim();
  for (size_t v = 0; v < flats.size(); ++v) {
    LeftTermData<F> t;
    t.position = flats[v].position;
    t.dim = flats[v].dim();
    const int slots = m.terms[v].idempotent.rows;
    for (int g = 0; g < a.dim(); ++g) {
      // left action of a-basis g = right multiplication by the same index in A^op
      auto rg = right_mult_matrix(m.base, m.base.e(g));
      std::vector<Triplet<F>> trip;
      for (int s = 0; s < slots; ++s)
        rg.for_each([&](int r, int c, const F& val) {
          trip.push_back({s * db + r, s * db + c, val});
        });
      auto big = SparseMatrix<F>::from_triplets(slots * db, slots * db, trip);
      t.act.push_back(flats[v].pi.mul(big).mul(flats[v].iota));
    }
    out.terms.push_back(std::move(t));
  }
  for (auto& [p, d] : m.diff) {
    int u = m.term_index(p), w = m.term_index(p + 1);
    out.diff[p] = flats[w].pi.mul(k_matrix_of(m.base, d)).mul(flats[u].iota);
  }
  return out;
}

// total complex of (perfect right complex) ox_A (left complex data)
template <class F>
std::map<int, int> derived_tensor_core(const PerfComplex<F>& n,
                                       const LeftComplexData<F>& w) {
  require_valid(n);
  std::map<int, int> result;
  if (w.terms.empty()) return result;

  struct Piece {
    int u, v;
    SparseMatrix<F> iota, pi;
    int offset = 0;
    int dim() const { return iota.cols(); }
  };
  auto act_of = [&](const LeftTermData<F>& t, const SparseVec<F>& s) {
    SparseMatrix<F> acc(t.dim, t.dim);
    for (auto& [i, c] : s) acc = acc.add(t.act[i].scale(c));
    return acc;
  };
  auto big = [&](const LeftTermData<F>& t, const AlgMatrix<F>& am) {
    std::vector<Triplet<F>> trip;
    for (int r = 0; r < am.rows; ++r)
      for (int c = 0; c < am.cols; ++c) {
        if (am.entry[r][c].empty()) continue;
        act_of(t, am.entry[r][c]).for_each([&](int rr, int cc, const F& v) {
          trip.push_back({r * t.dim + rr, c * t.dim + cc, v});
        });
      }
    return SparseMatrix<F>::from_triplets(am.rows * t.dim, am.cols * t.dim, trip);
  };

  std::map<int, std::vector<Piece>> pieces;  // total position -> pieces
  for (int u = 0; u < static_cast<int>(n.terms.size()); ++u)
    for (int v = 0; v < static_cast<int>(w.terms.size()); ++v) {
      auto [iota, pi] =
          image_of_idempotent(big(w.terms[v], n.terms[u].idempotent));
      pieces[n.terms[u].position + w.terms[v].position].push_back(
          {u, v, std::move(iota), std::move(pi), 0});
    }
  const int jmin = pieces.begin()->first, jmax = pieces.rbegin()->first;
  std::map<int, int> total_dim;
  for (auto& [j, ps] : pieces) {
    int off = 0;
    for (auto& p : ps) {
      p.offset = off;
      off += p.dim();
    }
    total_dim[j] = off;
  }
  // homological chain complex at degree h = -j
  std::vector<int> dims;
  for (int j = jmax; j >= jmin; --j) dims.push_back(total_dim.count(j) ? total_dim[j] : 0);
  std::vector<SparseMatrix<F>> diffs;
  for (int j = jmax - 1; j >= jmin; --j) {  // maps C_{h} -> C_{h-1}, pos j -> j+1
    std::vector<Triplet<F>> trip;
    const auto& src = pieces.count(j) ? pieces[j] : std::vector<Piece>{};
    const auto& dst = pieces.count(j + 1) ? pieces[j + 1] : std::vector<Piece>{};
    for (auto& s : src)
      for (auto& d : dst) {
        SparseMatrix<F> block(0, 0);
        if (s.v == d.v && n.diff.count(n.terms[s.u].position) &&
            n.terms[d.u].position == n.terms[s.u].position + 1) {
          block = d.pi.mul(big(w.terms[s.v], n.diff.at(n.terms[s.u].position)))
                      .mul(s.iota);
        } else if (s.u == d.u && w.diff.count(w.terms[s.v].position) &&
                   w.terms[d.v].position == w.terms[s.v].position + 1) {
          const auto& dm = w.diff.at(w.terms[s.v].position);
          const int slots = n.terms[s.u].idempotent.rows;
          std::vector<Triplet<F>> bt;
          for (int sl = 0; sl < slots; ++sl)
            dm.for_each([&](int r, int c, const F& v) {
              bt.push_back({sl * dm.rows() + r, sl * dm.cols() + c, v});
            });
          auto bd = SparseMatrix<F>::from_triplets(slots * dm.rows(),
                                                   slots * dm.cols(), bt);
          block = d.pi.mul(bd).mul(s.iota);
          if (parity_odd(n.terms[s.u].position)) block = block.scale(F(-1));
        } else {
          continue;
        }
        block.for_each([&](int r, int c, const F& v) {
          trip.push_back({d.offset + r, s.offset + c, v});
        });
      }
    diffs.push_back(SparseMatrix<F>::from_triplets(
        total_dim.count(j + 1) ? total_dim[j + 1] : 0,
        total_dim.count(j) ? total_dim[j] : 0, trip));
  }
  ChainComplex<F> complex(-jmax, dims, diffs);
  for (int j = jmin; j <= jmax; ++j) {
    int d = complex.homology_dim(-j);
    if (d != 0) result[j] = d;
  }
  return result;
}

}  // namespace detail

// flatten a perfect bimodule complex (left algebra equal to the base) into an
// honest bimodule whose grading records the positions
template <class F>
Bimodule<F> flatten_bimodule(const PerfComplex<F>& x) {
  require_valid(x);
  if (!x.left || !(*x.left == x.base))
    throw error("flatten requires the left algebra to equal the base");
  const auto& b = x.base;
  const int db = b.dim();
  auto flats = detail::flatten_terms(x);
  std::vector<int> offset(flats.size());
  int total = 0;
  for (size_t u = 0; u < flats.size(); ++u) {
    offset[u] = total;
    total += flats[u].dim();
  }
  Bimodule<F> m;
  m.algebra = b;
  m.basis.resize(total);
  m.degree.assign(total, 0);
  m.diff.assign(total, {});
  for (size_t u = 0; u < flats.size(); ++u)
    for (int i = 0; i < flats[u].dim(); ++i) {
      m.basis[offset[u] + i] =
          "p" + std::to_string(flats[u].position) + "." + std::to_string(i);
      m.degree[offset[u] + i] = flats[u].position;
    }
  auto place = [&](size_t from, size_t to, const SparseMatrix<F>& block,
                   std::vector<SparseVec<F>>& out) {
    for (int c = 0; c < block.cols(); ++c)
      for (auto& [r, v] : block.col(c))
        out[offset[from] + c].emplace_back(offset[to] + r, v);
  };
  for (auto& [p, d] : x.diff) {
    size_t u = x.term_index(p), v = x.term_index(p + 1);
    place(u, v, flats[v].pi.mul(detail::k_matrix_of(b, d)).mul(flats[u].iota),
          m.diff);
  }
  for (auto& col : m.diff) sv_normalize(col);
  m.left.assign(db, std::vector<SparseVec<F>>(total));
  m.right.assign(total, std::vector<SparseVec<F>>(db));
  for (int g = 0; g < db; ++g) {
    std::vector<SparseVec<F>> lcol(total), rcol(total);
    for (size_t u = 0; u < flats.size(); ++u) {
      place(u, u,
            flats[u].pi.mul(detail::k_matrix_of(b, x.terms[u].action[g]))
                .mul(flats[u].iota),
            lcol);
      const int slots = x.terms[u].idempotent.rows;
      auto rg = detail::right_mult_matrix(b, b.e(g));
      std::vector<Triplet<F>> trip;
      for (int s = 0; s < slots; ++s)
        rg.for_each([&](int r, int c, const F& v) {
          trip.push_back({s * db + r, s * db + c, v});
        });
      auto bigr = SparseMatrix<F>::from_triplets(slots * db, slots * db, trip);
      place(u, u, flats[u].pi.mul(bigr).mul(flats[u].iota), rcol);
    }
    for (int j = 0; j < total; ++j) {
      sv_normalize(lcol[j]);
      sv_normalize(rcol[j]);
      m.left[g][j] = lcol[j];
      m.right[j][g] = rcol[j];
    }
  }
  require_valid(m);
  return m;
}

template <class F>
std::map<int, int> derived_tensor(const PerfComplex<F>& n, const Bimodule<F>& m) {
  if (!(m.algebra == n.base)) throw error("incompatible actions");
  if (!n.base.is_degree_zero())
    throw error("base algebra must be concentrated in degree zero");
  return detail::derived_tensor_core(n, detail::left_data_of(n.base, m));
}

template <class F>
std::map<int, int> derived_tensor(const PerfComplex<F>& n, const PerfComplex<F>& m) {
  if (!(m.base == opposite(n.base))) throw error("incompatible actions");
  require_valid(m);
  return detail::derived_tensor_core(n, detail::left_data_of_op(n.base, m));
}

template <class F>
std::map<int, int> perf_homology(const PerfComplex<F>& n) {
  if (!n.base.is_degree_zero())
    throw error("base algebra must be concentrated in degree zero");
  return detail::derived_tensor_core(
      n, detail::left_data_of(n.base, diagonal_bimodule(n.base)));
}

inline long long euler_characteristic(const std::map<int, int>& dims) {
  long long chi = 0;
  for (auto& [j, d] : dims) chi += parity_odd(j) ? -static_cast<long long>(d) : d;
  return chi;
}

}  // namespace hochlef
