#pragma once

// Finite-dimensional graded (DG) algebras presented by total structure
// constant tables, plus the constructors used by the theorem corpus.

#include <hochlef/field.hpp>
#include <hochlef/matrix.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hochlef {

// sparse coordinate vector: sorted by index, no explicit zeros
template <class F>
using SparseVec = std::vector<std::pair<int, F>>;

template <class F>
void sv_normalize(SparseVec<F>& v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<F> out;
  for (auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.push_back({i, c});
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& e) { return e.second.is_zero(); }),
            out.end());
  v = std::move(out);
}

template <class F>
SparseVec<F> sv_add(const SparseVec<F>& a, const SparseVec<F>& b) {
  SparseVec<F> r = a;
  r.insert(r.end(), b.begin(), b.end());
  sv_normalize(r);
  return r;
}

template <class F>
SparseVec<F> sv_scale(const F& c, const SparseVec<F>& a) {
  if (c.is_zero()) return {};
  SparseVec<F> r;
  for (auto& [i, v] : a) r.push_back({i, c * v});
  return r;
}

template <class F>
F sv_coeff(const SparseVec<F>& a, int i) {
  for (auto& [j, v] : a)
    if (j == i) return v;
  return F(0);
}

inline bool parity_odd(int n) { return (n & 1) != 0; }

template <class F>
F parity_sign(int n) {
  return parity_odd(n) ? F(-1) : F(1);
}

// provenance for path algebras; kept through opposite() so the two-term
// bimodule resolution stays available there as well
struct PathInfo {
  int vertices = 0;
  std::vector<std::pair<int, int>> arrows;  // (source, target), 0-based
  std::vector<int> vertex_idx;              // basis index of e_i
  std::vector<int> arrow_idx;               // basis index of each arrow
};

template <class F>
struct GradedAlgebra {
  std::vector<std::string> basis;
  std::vector<int> degree;
  std::vector<std::vector<SparseVec<F>>> mul;  // mul[i][j] = basis_i * basis_j
  SparseVec<F> unit;
  std::vector<SparseVec<F>> diff;  // d(basis_i), degree +1
  std::optional<PathInfo> path_info;

  int dim() const { return (int)basis.size(); }

  int index_of(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
      if (basis[i] == label) return i;
    return -1;
  }

  SparseVec<F> e(int i) const { return {{i, F(1)}}; }

  SparseVec<F> mul_vec(const SparseVec<F>& x, const SparseVec<F>& y) const {
    SparseVec<F> acc;
    for (auto& [i, xi] : x)
      for (auto& [j, yj] : y) {
        F c = xi * yj;
        for (auto& [l, m] : mul[i][j]) acc.push_back({l, c * m});
      }
    sv_normalize(acc);
    return acc;
  }

  SparseVec<F> d_vec(const SparseVec<F>& x) const {
    SparseVec<F> acc;
    for (auto& [i, xi] : x)
      for (auto& [l, m] : diff[i]) acc.push_back({l, xi * m});
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

  bool operator==(const GradedAlgebra& o) const {
    return basis == o.basis && degree == o.degree && mul == o.mul &&
           unit == o.unit && diff == o.diff;
  }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

template <class F>
ValidationReport validate(const GradedAlgebra<F>& a) {
  ValidationReport rep;
  const int n = a.dim();
  if (n == 0) {
    rep.violations.push_back("structure: empty basis");
    return rep;
  }
  bool shape_ok = (int)a.degree.size() == n && (int)a.diff.size() == n &&
                  (int)a.mul.size() == n;
  if (shape_ok)
    for (auto& row : a.mul) shape_ok = shape_ok && (int)row.size() == n;
  if (!shape_ok) {
    rep.violations.push_back("structure: table shapes do not match basis");
    return rep;
  }
  auto in_range = [n](const SparseVec<F>& v) {
    for (auto& [i, c] : v)
      if (i < 0 || i >= n) return false;
    return true;
  };
  bool idx_ok = in_range(a.unit);
  for (int i = 0; i < n && idx_ok; ++i) idx_ok = in_range(a.diff[i]);
  for (int i = 0; i < n && idx_ok; ++i)
    for (int j = 0; j < n && idx_ok; ++j) idx_ok = in_range(a.mul[i][j]);
  if (!idx_ok) {
    rep.violations.push_back("structure: coordinate index out of range");
    return rep;
  }
  if (std::set<std::string>(a.basis.begin(), a.basis.end()).size() !=
      a.basis.size())
    rep.violations.push_back("structure: duplicate basis label");

  // unit laws
  for (int i = 0; i < n; ++i) {
    if (a.mul_vec(a.unit, a.e(i)) != a.e(i))
      rep.violations.push_back("unit law fails on the left at " + a.basis[i]);
    if (a.mul_vec(a.e(i), a.unit) != a.e(i))
      rep.violations.push_back("unit law fails on the right at " + a.basis[i]);
  }

  // grading of products and of the differential
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (auto& [l, c] : a.mul[i][j])
        if (a.degree[l] != a.degree[i] + a.degree[j]) {
          rep.violations.push_back("grading violated in mu(" + a.basis[i] +
                                   "," + a.basis[j] + ")");
          break;
        }
  for (int i = 0; i < n; ++i)
    for (auto& [l, c] : a.diff[i])
      if (a.degree[l] != a.degree[i] + 1) {
        rep.violations.push_back("differential degree wrong at " + a.basis[i]);
        break;
      }

  // d^2 = 0
  for (int i = 0; i < n; ++i)
    if (!a.d_vec(a.diff[i]).empty())
      rep.violations.push_back("d^2 != 0 at " + a.basis[i]);

  // Leibniz rule d(xy) = d(x)y + (-1)^{deg x} x d(y)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto lhs = a.d_vec(a.mul[i][j]);
      auto rhs = sv_add(a.mul_vec(a.diff[i], a.e(j)),
                        sv_scale(parity_sign<F>(a.degree[i]),
                                 a.mul_vec(a.e(i), a.diff[j])));
      if (lhs != rhs)
        rep.violations.push_back("Leibniz rule fails at (" + a.basis[i] + "," +
                                 a.basis[j] + ")");
    }

  // associativity
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        if (a.mul_vec(a.mul[i][j], a.e(l)) != a.mul_vec(a.e(i), a.mul[j][l]))
          rep.violations.push_back("associativity fails at (" + a.basis[i] +
                                   "," + a.basis[j] + "," + a.basis[l] + ")");
  return rep;
}

template <class F>
void require_valid(const GradedAlgebra<F>& a) {
  auto rep = validate(a);
  if (!rep.ok()) throw error("invalid algebra: " + rep.violations.front());
}

// mu^op(x,y) = (-1)^{deg x deg y} mu(y,x); same grading and differential
template <class F>
GradedAlgebra<F> opposite(const GradedAlgebra<F>& a) {
  require_valid(a);
  GradedAlgebra<F> r = a;
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.mul[i][j] =
          sv_scale(parity_sign<F>(a.degree[i] * a.degree[j]), a.mul[j][i]);
  if (a.path_info) {
    r.path_info = a.path_info;
    for (auto& [s, t] : r.path_info->arrows) std::swap(s, t);
  }
  return r;
}

// (x ox y)(x' ox y') = (-1)^{deg y deg x'} xx' ox yy'
template <class F>
GradedAlgebra<F> tensor(const GradedAlgebra<F>& a, const GradedAlgebra<F>& b) {
  require_valid(a);
  require_valid(b);
  const int da = a.dim(), db = b.dim(), n = da * db;
  GradedAlgebra<F> r;
  r.basis.reserve(n);
  r.degree.reserve(n);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      r.basis.push_back(a.basis[i] + "⊗" + b.basis[j]);
      r.degree.push_back(a.degree[i] + b.degree[j]);
    }
  r.mul.assign(n, std::vector<SparseVec<F>>(n));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      for (int i2 = 0; i2 < da; ++i2)
        for (int j2 = 0; j2 < db; ++j2) {
          F s = parity_sign<F>(b.degree[j] * a.degree[i2]);
          SparseVec<F> out;
          for (auto& [l, c1] : a.mul[i][i2])
            for (auto& [m, c2] : b.mul[j][j2])
              out.push_back({l * db + m, s * c1 * c2});
          sv_normalize(out);
          r.mul[i * db + j][i2 * db + j2] = std::move(out);
        }
  for (auto& [i, c1] : a.unit)
    for (auto& [j, c2] : b.unit) r.unit.push_back({i * db + j, c1 * c2});
  sv_normalize(r.unit);
  r.diff.assign(n, {});
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      SparseVec<F> dv;
      for (auto& [l, c] : a.diff[i]) dv.push_back({l * db + j, c});
      F s = parity_sign<F>(a.degree[i]);
      for (auto& [m, c] : b.diff[j]) dv.push_back({i * db + m, s * c});
      sv_normalize(dv);
      r.diff[i * db + j] = std::move(dv);
    }
  return r;
}

struct Quiver {
  struct Arrow {
    int source = 0;
    int target = 0;
    std::string name;
  };
  int vertices = 0;
  std::vector<Arrow> arrows;
};

template <class F>
GradedAlgebra<F> path_algebra(const Quiver& q) {
  if (q.vertices < 1) throw error("quiver needs at least one vertex");
  for (auto& ar : q.arrows)
    if (ar.source < 0 || ar.source >= q.vertices || ar.target < 0 ||
        ar.target >= q.vertices)
      throw error("arrow endpoint out of range");
  // acyclicity: Kahn's algorithm on the vertex graph
  {
    std::vector<int> indeg(q.vertices, 0);
    for (auto& ar : q.arrows) indeg[ar.target]++;
    std::vector<int> queue;
    for (int v = 0; v < q.vertices; ++v)
      if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      ++seen;
      for (auto& ar : q.arrows)
        if (ar.source == v && --indeg[ar.target] == 0)
          queue.push_back(ar.target);
    }
    if (seen != q.vertices) throw error("quiver not acyclic");
  }
  std::vector<std::string> names;
  for (int k = 0; k < (int)q.arrows.size(); ++k)
    names.push_back(q.arrows[k].name.empty() ? "a" + std::to_string(k + 1)
                                             : q.arrows[k].name);

  struct Path {
    int start;
    std::vector<int> arrows;  // indices into q.arrows, composable chain
  };
  std::vector<Path> paths;
  for (int v = 0; v < q.vertices; ++v) paths.push_back({v, {}});
  std::map<std::pair<int, std::vector<int>>, int> index;
  for (int v = 0; v < q.vertices; ++v) index[{v, {}}] = v;
  std::size_t level_begin = 0;
  while (level_begin < paths.size()) {
    std::size_t level_end = paths.size();
    for (std::size_t p = level_begin; p < level_end; ++p)
      for (int k = 0; k < (int)q.arrows.size(); ++k) {
        int tgt = paths[p].arrows.empty() ? paths[p].start
                                          : q.arrows[paths[p].arrows.back()].target;
        if (q.arrows[k].source != tgt) continue;
        Path np{paths[p].start, paths[p].arrows};
        np.arrows.push_back(k);
        index[{np.start, np.arrows}] = (int)paths.size();
        paths.push_back(std::move(np));
      }
    level_begin = level_end;
  }

  auto path_target = [&](const Path& p) {
    return p.arrows.empty() ? p.start : q.arrows[p.arrows.back()].target;
  };
  const int n = (int)paths.size();
  GradedAlgebra<F> r;
  for (auto& p : paths) {
    if (p.arrows.empty()) {
      r.basis.push_back("e" + std::to_string(p.start + 1));
    } else {
      std::string lbl;
      for (int k : p.arrows) lbl += names[k];
      r.basis.push_back(lbl);
    }
  }
  if (std::set<std::string>(r.basis.begin(), r.basis.end()).size() !=
      r.basis.size())
    throw error("duplicate basis label");
  r.degree.assign(n, 0);
  r.diff.assign(n, {});
  r.mul.assign(n, std::vector<SparseVec<F>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (path_target(paths[i]) != paths[j].start) continue;
      std::vector<int> comp = paths[i].arrows;
      comp.insert(comp.end(), paths[j].arrows.begin(), paths[j].arrows.end());
      r.mul[i][j] = {{index.at({paths[i].start, comp}), F(1)}};
    }
  for (int v = 0; v < q.vertices; ++v) r.unit.push_back({v, F(1)});
  PathInfo info;
  info.vertices = q.vertices;
  for (auto& ar : q.arrows) info.arrows.push_back({ar.source, ar.target});
  for (int v = 0; v < q.vertices; ++v) info.vertex_idx.push_back(v);
  for (int k = 0; k < (int)q.arrows.size(); ++k)
    info.arrow_idx.push_back(index.at({q.arrows[k].source, {k}}));
  r.path_info = info;
  return r;
}

template <class F>
GradedAlgebra<F> field_algebra() {
  GradedAlgebra<F> r;
  r.basis = {"1"};
  r.degree = {0};
  r.mul = {{{{0, F(1)}}}};
  r.unit = {{0, F(1)}};
  r.diff = {{}};
  return r;
}

template <class F>
GradedAlgebra<F> matrix_algebra(int n) {
  if (n < 1 || n > 9) throw error("matrix size out of range");
  const int d = n * n;
  GradedAlgebra<F> r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.basis.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  r.degree.assign(d, 0);
  r.diff.assign(d, {});
  r.mul.assign(d, std::vector<SparseVec<F>>(d));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e)
          if (b == c) r.mul[a * n + b][c * n + e] = {{a * n + e, F(1)}};
  for (int i = 0; i < n; ++i) r.unit.push_back({i * n + i, F(1)});
  return r;
}

template <class F>
GradedAlgebra<F> product_algebra(const std::vector<GradedAlgebra<F>>& comps) {
  if (comps.empty()) throw error("empty product");
  for (auto& c : comps) require_valid(c);
  GradedAlgebra<F> r;
  std::vector<int> offset;
  int n = 0;
  for (auto& c : comps) {
    offset.push_back(n);
    n += c.dim();
  }
  for (int ci = 0; ci < (int)comps.size(); ++ci) {
    auto& c = comps[ci];
    for (int i = 0; i < c.dim(); ++i) {
      r.basis.push_back(c.dim() == 1
                            ? "e" + std::to_string(ci + 1)
                            : "c" + std::to_string(ci + 1) + "." + c.basis[i]);
      r.degree.push_back(c.degree[i]);
    }
  }
  r.mul.assign(n, std::vector<SparseVec<F>>(n));
  r.diff.assign(n, {});
  for (int ci = 0; ci < (int)comps.size(); ++ci) {
    auto& c = comps[ci];
    int off = offset[ci];
    auto shift = [off](const SparseVec<F>& v) {
      SparseVec<F> s;
      for (auto& [i, x] : v) s.push_back({i + off, x});
      return s;
    };
    for (int i = 0; i < c.dim(); ++i) {
      for (int j = 0; j < c.dim(); ++j)
        r.mul[off + i][off + j] = shift(c.mul[i][j]);
      r.diff[off + i] = shift(c.diff[i]);
    }
    auto su = shift(c.unit);
    r.unit.insert(r.unit.end(), su.begin(), su.end());
  }
  sv_normalize(r.unit);
  return r;
}

template <class F>
GradedAlgebra<F> group_algebra(const std::vector<std::vector<int>>& table) {
  const int n = (int)table.size();
  auto fail = []() -> GradedAlgebra<F> {
    throw error("multiplication table is not a group");
  };
  if (n == 0) return fail();
  for (auto& row : table) {
    if ((int)row.size() != n) return fail();
    std::vector<char> seen(n, 0);
    for (int x : row) {
      if (x < 0 || x >= n || seen[x]) return fail();
      seen[x] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      if (seen[table[i][j]]) return fail();
      seen[table[i][j]] = 1;
    }
  }
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n; ++i)
      ok = ok && table[e][i] == i && table[i][e] == i;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) return fail();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]]) return fail();

  GradedAlgebra<F> r;
  for (int i = 0; i < n; ++i) r.basis.push_back("g" + std::to_string(i));
  r.degree.assign(n, 0);
  r.diff.assign(n, {});
  r.mul.assign(n, std::vector<SparseVec<F>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.mul[i][j] = {{table[i][j], F(1)}};
  r.unit = {{id, F(1)}};
  return r;
}

template <class F>
GradedAlgebra<F> exterior_algebra(int gens, int gen_degree) {
  if (gens < 0 || gens > 10) throw error("generator count out of range");
  const int n = 1 << gens;
  GradedAlgebra<F> r;
  for (int mask = 0; mask < n; ++mask) {
    std::string lbl;
    for (int i = 0; i < gens; ++i)
      if (mask & (1 << i)) lbl += "x" + std::to_string(i + 1);
    r.basis.push_back(mask == 0 ? "1" : lbl);
    r.degree.push_back(gen_degree * __builtin_popcount((unsigned)mask));
  }
  r.diff.assign(n, {});
  r.mul.assign(n, std::vector<SparseVec<F>>(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s & t) continue;
      int inversions = 0;
      for (int b = 0; b < gens; ++b)
        if (t & (1 << b)) inversions += __builtin_popcount((unsigned)s >> (b + 1));
      F sign = parity_odd(gen_degree) ? parity_sign<F>(inversions) : F(1);
      r.mul[s][t] = {{s | t, sign}};
    }
  r.unit = {{0, F(1)}};
  return r;
}

// dim A/[A,A] for degree-0 algebras; independent bound for HH_0
template <class F>
int commutator_quotient_dim(const GradedAlgebra<F>& a) {
  require_valid(a);
  if (!a.is_degree_zero()) throw error("oracle defined for degree-0 algebras");
  const int n = a.dim();
  std::vector<Triplet<F>> t;
  int col = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (auto& [l, c] : a.mul[i][j]) t.push_back({l, col, c});
      for (auto& [l, c] : a.mul[j][i]) t.push_back({l, col, F(0) - c});
      ++col;
    }
  auto m = SparseMatrix<F>::from_triplets(n, col, t);
  return n - rank(m);
}

template <class F>
struct AlgebraMorphism {
  GradedAlgebra<F> source;
  GradedAlgebra<F> target;
  SparseMatrix<F> matrix;  // target coords x source coords

  SparseVec<F> apply(const SparseVec<F>& x) const {
    SparseVec<F> acc;
    for (auto& [j, c] : x)
      for (auto& [i, m] : matrix.col(j)) acc.push_back({i, c * m});
    sv_normalize(acc);
    return acc;
  }
};

template <class F>
ValidationReport validate(const AlgebraMorphism<F>& f) {
  ValidationReport rep;
  if (!validate(f.source).ok()) rep.violations.push_back("source algebra invalid");
  if (!validate(f.target).ok()) rep.violations.push_back("target algebra invalid");
  if (f.matrix.rows() != f.target.dim() || f.matrix.cols() != f.source.dim()) {
    rep.violations.push_back("structure: matrix shape mismatch");
    return rep;
  }
  if (!rep.ok()) return rep;
  if (f.apply(f.source.unit) != f.target.unit)
    rep.violations.push_back("morphism not unital");
  const int n = f.source.dim();
  for (int i = 0; i < n; ++i)
    for (auto& [l, c] : f.matrix.col(i))
      if (f.target.degree[l] != f.source.degree[i]) {
        rep.violations.push_back("morphism degree violated at " +
                                 f.source.basis[i]);
        break;
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (f.apply(f.source.mul[i][j]) !=
          f.target.mul_vec(f.apply(f.source.e(i)), f.apply(f.source.e(j))))
        rep.violations.push_back("morphism not multiplicative at (" +
                                 f.source.basis[i] + "," + f.source.basis[j] +
                                 ")");
  for (int i = 0; i < n; ++i)
    if (f.apply(f.source.diff[i]) != f.target.d_vec(f.apply(f.source.e(i))))
      rep.violations.push_back("morphism does not respect d at " +
                               f.source.basis[i]);
  return rep;
}

}  // namespace hochlef
