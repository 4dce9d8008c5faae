#pragma once
// Exact singular-cohomology calculus on finitely presented graded-commutative
// rings equipped with an integration functional and a Todd class: Poincare
// duality pushforwards, Todd square roots, Mukai vectors, graph classes of
// ring morphisms, convolution operators, Lefschetz numbers, and the two-maps
// intersection identity.
//
// A model packages the cohomology ring of a space at the level the formulas
// consume: sheaf-like objects enter only through their character classes.

#include <string>
#include <utility>
#include <vector>

#include <hochlef/algebra.hpp>
#include <hochlef/matrix.hpp>

namespace hochlef {

template <class F>
struct CohomologyModel {
  GradedAlgebra<F> ring;  // graded-commutative, degrees 0..top_degree
  SparseVec<F> integral;  // integration functional, supported in top degree
  SparseVec<F> todd;      // even class with constant term 1
  int top_degree = 0;

  int dim() const { return ring.dim(); }
};

template <class F>
SparseVec<F> cup(const CohomologyModel<F>& m, const SparseVec<F>& x,
                 const SparseVec<F>& y) {
  return m.ring.mul_vec(x, y);
}

template <class F>
F integrate(const CohomologyModel<F>& m, const SparseVec<F>& x) {
  F out(0);
  for (const auto& [i, v] : x) out = out + sv_coeff(m.integral, i) * v;
  return out;
}

// Matrix of the Poincare pairing (alpha, beta) -> integral of alpha cup beta.
template <class F>
SparseMatrix<F> poincare_gram(const CohomologyModel<F>& m) {
  const int n = m.dim();
  std::vector<Triplet<F>> t;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      F v = integrate(m, m.ring.mul[i][j]);
      if (!v.is_zero()) t.push_back({i, j, v});
    }
  return SparseMatrix<F>::from_triplets(n, n, std::move(t));
}

template <class F>
ValidationReport validate(const CohomologyModel<F>& m) {
  ValidationReport rep;
  auto ring_rep = validate(m.ring);
  for (auto& v : ring_rep.violations) rep.violations.push_back(v);
  if (!rep.ok()) return rep;
  for (const auto& dv : m.ring.diff)
    if (!dv.empty()) {
      rep.violations.push_back("model differential must vanish");
      return rep;
    }
  if (m.top_degree < 0 || parity_odd(m.top_degree))
    rep.violations.push_back("top degree must be even and nonnegative");
  for (int d : m.ring.degree)
    if (d < 0 || d > m.top_degree) {
      rep.violations.push_back("basis degree out of range");
      break;
    }
  const int n = m.dim();
  for (int i = 0; i < n && rep.ok(); ++i)
    for (int j = 0; j < n; ++j) {
      auto flip = sv_scale(parity_sign<F>(m.ring.degree[i] * m.ring.degree[j]),
                           m.ring.mul[i][j]);
      if (!(m.ring.mul[j][i] == flip)) {
        rep.violations.push_back("not graded commutative at (" +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 ")");
        break;
      }
    }
  for (const auto& [i, v] : m.integral)
    if (i < 0 || i >= n || m.ring.degree[i] != m.top_degree) {
      rep.violations.push_back(
          "integration functional not supported in top degree");
      break;
    }
  for (const auto& [i, v] : m.todd) {
    if (i < 0 || i >= n || parity_odd(m.ring.degree[i])) {
      rep.violations.push_back("todd class must be even");
      break;
    }
  }
  auto diff0 = sv_add(m.todd, sv_scale(F(-1), m.ring.unit));
  for (const auto& [i, v] : diff0)
    if (i >= 0 && i < n && m.ring.degree[i] == 0) {
      rep.violations.push_back("todd constant term must be one");
      break;
    }
  if (rep.ok() && rank(poincare_gram(m)) != n)
    rep.violations.push_back("Poincare pairing degenerate");
  return rep;
}

template <class F>
void require_valid(const CohomologyModel<F>& m) {
  auto rep = validate(m);
  if (!rep.ok()) throw error("invalid model: " + rep.violations.front());
}

// A morphism of spaces f: X -> Y, recorded through its pullback ring map
// f^*: H(Y) -> H(X) on coordinates.
template <class F>
struct ModelMorphism {
  CohomologyModel<F> source;  // X
  CohomologyModel<F> target;  // Y
  SparseMatrix<F> pullback;   // source coords x target coords
};

template <class F>
ValidationReport validate(const ModelMorphism<F>& f) {
  ValidationReport rep;
  const int ns = f.source.dim();
  const int nt = f.target.dim();
  if (f.pullback.rows() != ns || f.pullback.cols() != nt) {
    rep.violations.push_back("pullback shape mismatch");
    return rep;
  }
  auto apply = [&](const SparseVec<F>& x) {
    SparseVec<F> acc;
    for (const auto& [j, c] : x)
      for (const auto& [i, m] : f.pullback.col(j)) acc.push_back({i, c * m});
    sv_normalize(acc);
    return acc;
  };
  if (!(apply(f.target.ring.unit) == f.source.ring.unit))
    rep.violations.push_back("pullback does not preserve the unit");
  for (int j = 0; j < nt && rep.ok(); ++j)
    for (const auto& [i, v] : f.pullback.col(j))
      if (f.source.ring.degree[i] != f.target.ring.degree[j]) {
        rep.violations.push_back("pullback does not preserve degree");
        break;
      }
  for (int i = 0; i < nt && rep.ok(); ++i)
    for (int j = 0; j < nt; ++j) {
      auto lhs = apply(f.target.ring.mul[i][j]);
      auto rhs = f.source.ring.mul_vec(apply(f.target.ring.e(i)),
                                       apply(f.target.ring.e(j)));
      if (!(lhs == rhs)) {
        rep.violations.push_back("pullback not multiplicative at (" +
                                 std::to_string(i) + "," + std::to_string(j) +
                                 ")");
        break;
      }
    }
  return rep;
}

template <class F>
void require_valid(const ModelMorphism<F>& f) {
  auto rep = validate(f);
  if (!rep.ok()) throw error("invalid morphism: " + rep.violations.front());
}

namespace detail {

template <class F>
SparseMatrix<F> sv_column(const SparseVec<F>& x, int dim) {
  std::vector<Triplet<F>> t;
  for (const auto& [i, v] : x) t.push_back({i, 0, v});
  return SparseMatrix<F>::from_triplets(dim, 1, std::move(t));
}

template <class F>
SparseVec<F> apply_matrix(const SparseMatrix<F>& m, const SparseVec<F>& x) {
  SparseVec<F> acc;
  for (const auto& [j, c] : x)
    for (const auto& [i, v] : m.col(j)) acc.push_back({i, c * v});
  sv_normalize(acc);
  return acc;
}

}  // namespace detail

// Multiplicative inverse of a class whose constant term is one; finite
// because the positive-degree part is nilpotent.
template <class F>
SparseVec<F> inverse_unital(const CohomologyModel<F>& m, const SparseVec<F>& x) {
  auto nil = sv_add(x, sv_scale(F(-1), m.ring.unit));
  for (const auto& [i, v] : nil)
    if (m.ring.degree[i] == 0) throw error("constant term must be one");
  SparseVec<F> inv = m.ring.unit;
  SparseVec<F> pow = m.ring.unit;
  for (int k = 1; k <= m.top_degree; ++k) {
    pow = cup(m, pow, nil);
    if (pow.empty()) break;
    inv = sv_add(inv, sv_scale(parity_sign<F>(k), pow));
  }
  return inv;
}

// Square root of the Todd class by the binomial series, exact and finite.
template <class F>
SparseVec<F> sqrt_todd(const CohomologyModel<F>& m) {
  auto nil = sv_add(m.todd, sv_scale(F(-1), m.ring.unit));
  for (const auto& [i, v] : nil)
    if (m.ring.degree[i] == 0) throw error("todd constant term must be one");
  SparseVec<F> s = m.ring.unit;
  SparseVec<F> pow = m.ring.unit;
  F coeff(1);
  for (int k = 1; k <= m.top_degree; ++k) {
    pow = cup(m, pow, nil);
    if (pow.empty()) break;
    coeff = coeff * F(3 - 2 * k) / F(2 * k);
    s = sv_add(s, sv_scale(coeff, pow));
  }
  if (!(cup(m, s, s) == m.todd)) throw error("internal: square root failed");
  return s;
}

// Pushforward f_*: H(X) -> H(Y), the Poincare adjoint of the pullback:
// the unique solution of  integral_Y f_*(a) cup b = integral_X a cup f^*(b).
template <class F>
SparseMatrix<F> pushforward(const ModelMorphism<F>& f) {
  require_valid(f);
  const int ns = f.source.dim();
  const int nt = f.target.dim();
  auto gram = poincare_gram(f.target);
  if (rank(gram) != nt) throw error("degenerate pairing");
  std::vector<Triplet<F>> q;  // q[s][i] = integral_X (x_i cup f^* y_s)
  for (int s = 0; s < nt; ++s) {
    auto pulled = f.pullback.col(s);
    SparseVec<F> pv(pulled.begin(), pulled.end());
    for (int i = 0; i < ns; ++i) {
      F v = integrate(f.source, f.source.ring.mul_vec(f.source.ring.e(i), pv));
      if (!v.is_zero()) q.push_back({s, i, v});
    }
  }
  auto sol = solve(gram.transpose(),
                   SparseMatrix<F>::from_triplets(nt, ns, std::move(q)));
  if (!sol) throw error("degenerate pairing");
  return *sol;
}

// Supertrace of a degree-preserving operator on the model.
template <class F>
F supertrace(const CohomologyModel<F>& m, const SparseMatrix<F>& op) {
  if (op.rows() != m.dim() || op.cols() != m.dim())
    throw error("operator shape mismatch");
  F out(0);
  op.for_each([&](int r, int c, const F& v) {
    if (r == c) out = parity_odd(m.ring.degree[r]) ? out - v : out + v;
  });
  return out;
}

// Mukai vector of a character class: ch cup sqrt(td).
template <class F>
SparseVec<F> mukai_vector(const CohomologyModel<F>& m, const SparseVec<F>& ch) {
  return cup(m, ch, sqrt_todd(m));
}

// Product model for X x Y with the Koszul-signed cup product, together with
// the pullbacks of the two projections  X <-q- X x Y -p-> Y.
template <class F>
struct KunnethProduct {
  CohomologyModel<F> model;
  ModelMorphism<F> p;  // projection X x Y -> Y
  ModelMorphism<F> q;  // projection X x Y -> X
};

template <class F>
KunnethProduct<F> product_model(const CohomologyModel<F>& x,
                                const CohomologyModel<F>& y) {
  require_valid(x);
  require_valid(y);
  const int dy = y.dim();
  KunnethProduct<F> kp;
  kp.model.ring = tensor(x.ring, y.ring);
  kp.model.top_degree = x.top_degree + y.top_degree;
  // both top degrees are even, so the interleaving sign is +1
  for (const auto& [i, vi] : x.integral)
    for (const auto& [j, vj] : y.integral)
      kp.model.integral.push_back({i * dy + j, vi * vj});
  sv_normalize(kp.model.integral);
  for (const auto& [i, vi] : x.todd)
    for (const auto& [j, vj] : y.todd)
      kp.model.todd.push_back({i * dy + j, vi * vj});
  sv_normalize(kp.model.todd);
  std::vector<Triplet<F>> pt, qt;
  for (int s = 0; s < dy; ++s)
    for (const auto& [u, cu] : x.ring.unit) pt.push_back({u * dy + s, s, cu});
  for (int r = 0; r < x.dim(); ++r)
    for (const auto& [v, cv] : y.ring.unit) qt.push_back({r * dy + v, r, cv});
  kp.p = ModelMorphism<F>{
      kp.model, y,
      SparseMatrix<F>::from_triplets(kp.model.dim(), dy, std::move(pt))};
  kp.q = ModelMorphism<F>{
      kp.model, x,
      SparseMatrix<F>::from_triplets(kp.model.dim(), x.dim(), std::move(qt))};
  require_valid(kp.model);
  return kp;
}

// Convolution with a kernel class on X x Y: beta -> p_*(kernel cup q^* beta),
// a parity-preserving operator H(X) -> H(Y).
template <class F>
SparseMatrix<F> convolution_operator(const KunnethProduct<F>& kp,
                                     const SparseVec<F>& kernel) {
  for (const auto& [i, v] : kernel)
    if (i < 0 || i >= kp.model.dim()) throw error("model mismatch");
  auto p_star = pushforward(kp.p);
  const int nx = kp.q.target.dim();
  std::vector<std::vector<typename SparseMatrix<F>::Entry>> cols;
  for (int j = 0; j < nx; ++j) {
    auto qcol = kp.q.pullback.col(j);
    SparseVec<F> qj(qcol.begin(), qcol.end());
    auto w = cup(kp.model, kernel, qj);
    cols.push_back(detail::apply_matrix(p_star, w));
  }
  return SparseMatrix<F>::from_columns(kp.p.target.dim(), std::move(cols));
}

template <class F>
bool parity_preserving(const CohomologyModel<F>& x, const CohomologyModel<F>& y,
                       const SparseMatrix<F>& op) {
  bool ok = true;
  op.for_each([&](int r, int c, const F& v) {
    (void)v;
    if (parity_odd(y.ring.degree[r]) != parity_odd(x.ring.degree[c])) ok = false;
  });
  return ok;
}

// Character and Mukai data of the structure class of the graph of f, by the
// duality solve   integral_{XxY} i_*(g) cup (a (x) b) = integral_X g cup a cup f^*(b).
template <class F>
struct GraphClass {
  KunnethProduct<F> product;
  SparseVec<F> ch;
  SparseVec<F> mukai;
};

template <class F>
GraphClass<F> graph_class(const ModelMorphism<F>& f) {
  require_valid(f);
  GraphClass<F> g;
  g.product = product_model(f.source, f.target);
  const int dy = f.target.dim();
  // pullback of the graph embedding X -> X x Y: (a (x) b) -> a cup f^*(b)
  std::vector<std::vector<typename SparseMatrix<F>::Entry>> cols;
  for (int r = 0; r < f.source.dim(); ++r)
    for (int s = 0; s < dy; ++s) {
      auto pulled = f.pullback.col(s);
      SparseVec<F> pv(pulled.begin(), pulled.end());
      cols.push_back(
          f.source.ring.mul_vec(f.source.ring.e(r), pv));
    }
  ModelMorphism<F> embed{
      f.source, g.product.model,
      SparseMatrix<F>::from_columns(f.source.dim(), std::move(cols))};
  auto i_star = pushforward(embed);
  auto pushed = detail::apply_matrix(i_star, f.source.todd);
  g.ch = cup(g.product.model, pushed,
             inverse_unital(g.product.model, g.product.model.todd));
  g.mukai = mukai_vector(g.product.model, g.ch);
  return g;
}

// Lefschetz number of a self-map, evaluated three independent ways: the
// supertrace of the pullback, of the pushforward, and of the convolution
// operator of the graph's Mukai class.
template <class F>
struct LefschetzReport {
  F pull_trace{};
  F push_trace{};
  F kernel_trace{};
  bool consistent = false;
};

template <class F>
LefschetzReport<F> lefschetz_number(const ModelMorphism<F>& f) {
  if (!(f.source.ring == f.target.ring) ||
      f.source.top_degree != f.target.top_degree)
    throw error("square model required");
  LefschetzReport<F> rep;
  rep.pull_trace = supertrace(f.source, f.pullback);
  rep.push_trace = supertrace(f.target, pushforward(f));
  auto g = graph_class(f);
  rep.kernel_trace =
      supertrace(f.target, convolution_operator(g.product, g.mukai));
  rep.consistent =
      rep.pull_trace == rep.push_trace && rep.push_trace == rep.kernel_trace;
  return rep;
}

// Two-maps identity: the intersection number of the two graph classes equals
// the supertrace of g^* composed with f_*.
template <class F>
struct TwoMapsReport {
  F lhs{};
  F rhs{};
  bool pass = false;
};

template <class F>
TwoMapsReport<F> verify_two_maps(const ModelMorphism<F>& f,
                                 const ModelMorphism<F>& g) {
  if (!(f.source.ring == g.source.ring) || !(f.target.ring == g.target.ring))
    throw error("incompatible morphisms");
  if (f.source.top_degree != f.target.top_degree)
    throw error("theorem hypothesis violated");
  auto gf = graph_class(f);
  auto gg = graph_class(g);
  const auto& pm = gf.product.model;
  TwoMapsReport<F> rep;
  rep.lhs = integrate(pm, cup(pm, gf.ch, cup(pm, gg.ch, pm.todd)));
  auto composite = g.pullback.mul(pushforward(f));
  rep.rhs = supertrace(f.source, composite);
  rep.pass = rep.lhs == rep.rhs;
  return rep;
}

// Operator identities tying the graph kernel to the pullback and the
// pushforward conjugated by the Todd square roots.
template <class F>
struct CohLemmasReport {
  SparseMatrix<F> forward_operator;   // H(X) -> H(Y), from the kernel
  SparseMatrix<F> forward_formula;    // f_*(sqrt(td_X) cup -) cup sqrt(td_Y)^{-1}
  SparseMatrix<F> backward_operator;  // H(Y) -> H(X), from the kernel
  SparseMatrix<F> backward_formula;   // sqrt(td_X) cup f^*(- cup sqrt(td_Y)^{-1})
  bool pass = false;
};

template <class F>
CohLemmasReport<F> verify_cohomological_lemmas(const ModelMorphism<F>& f) {
  auto g = graph_class(f);
  const auto& kp = g.product;
  auto sqrt_x = sqrt_todd(f.source);
  auto sqrt_y_inv = inverse_unital(f.target, sqrt_todd(f.target));
  auto f_star = pushforward(f);
  CohLemmasReport<F> rep;
  rep.forward_operator = convolution_operator(kp, g.mukai);
  {
    std::vector<std::vector<typename SparseMatrix<F>::Entry>> cols;
    for (int j = 0; j < f.source.dim(); ++j) {
      auto v = cup(f.source, sqrt_x, f.source.ring.e(j));
      auto w = detail::apply_matrix(f_star, v);
      cols.push_back(cup(f.target, w, sqrt_y_inv));
    }
    rep.forward_formula =
        SparseMatrix<F>::from_columns(f.target.dim(), std::move(cols));
  }
  {
    // the same kernel convolved in the opposite direction: q_*(k cup p^* -)
    auto q_star = pushforward(kp.q);
    std::vector<std::vector<typename SparseMatrix<F>::Entry>> cols;
    for (int s = 0; s < f.target.dim(); ++s) {
      auto pcol = kp.p.pullback.col(s);
      SparseVec<F> ps(pcol.begin(), pcol.end());
      auto w = cup(kp.model, g.mukai, ps);
      cols.push_back(detail::apply_matrix(q_star, w));
    }
    rep.backward_operator =
        SparseMatrix<F>::from_columns(f.source.dim(), std::move(cols));
  }
  {
    std::vector<std::vector<typename SparseMatrix<F>::Entry>> cols;
    for (int s = 0; s < f.target.dim(); ++s) {
      auto v = cup(f.target, f.target.ring.e(s), sqrt_y_inv);
      auto w = detail::apply_matrix(f.pullback, v);
      cols.push_back(cup(f.source, sqrt_x, w));
    }
    rep.backward_formula =
        SparseMatrix<F>::from_columns(f.source.dim(), std::move(cols));
  }
  rep.pass = rep.forward_operator == rep.forward_formula &&
             rep.backward_operator == rep.backward_formula;
  return rep;
}

// --- model constructors -----------------------------------------------------

// Truncated polynomial ring k[h]/(h^{n+1}) with deg h = 2, with the Todd
// class of the standard (1+h)^{n+1} series.
template <class F>
CohomologyModel<F> projective_space(int n) {
  if (n < 0) throw error("dimension must be nonnegative");
  CohomologyModel<F> m;
  for (int k = 0; k <= n; ++k) {
    m.ring.basis.push_back(k == 0 ? "1" : (k == 1 ? "h" : "h" + std::to_string(k)));
    m.ring.degree.push_back(2 * k);
  }
  m.ring.diff.assign(n + 1, {});
  m.ring.mul.assign(n + 1, std::vector<SparseVec<F>>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      if (i + j <= n) m.ring.mul[i][j] = {{i + j, F(1)}};
  m.ring.unit = {{0, F(1)}};
  m.integral = {{n, F(1)}};
  m.top_degree = 2 * n;
  // td = (h / (1 - e^{-h}))^{n+1}: invert the exponential series, then power
  SparseVec<F> series;
  F fact(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact = fact * F(k + 1);
    series.push_back({k, parity_sign<F>(k) / fact});
  }
  auto t = inverse_unital(m, series);
  SparseVec<F> td = m.ring.unit;
  for (int k = 0; k <= n; ++k) td = cup(m, td, t);
  m.todd = td;
  require_valid(m);
  return m;
}

// Exterior algebra on two degree-1 classes with integral(x1 x2) = 1, td = 1.
template <class F>
CohomologyModel<F> torus_surface() {
  CohomologyModel<F> m;
  m.ring = exterior_algebra<F>(2, 1);
  m.integral = {{3, F(1)}};
  m.todd = m.ring.unit;
  m.top_degree = 2;
  require_valid(m);
  return m;
}

template <class F>
ModelMorphism<F> identity_morphism(const CohomologyModel<F>& m) {
  return ModelMorphism<F>{m, m, SparseMatrix<F>::identity(m.dim())};
}

// Self-map of a projective-space model pulling h back to d*h.
template <class F>
ModelMorphism<F> projective_self_map(const CohomologyModel<F>& m, const F& d) {
  std::vector<Triplet<F>> t;
  F pw(1);
  for (int k = 0; k < m.dim(); ++k) {
    if (!pw.is_zero()) t.push_back({k, k, pw});
    pw = pw * d;
  }
  return ModelMorphism<F>{m, m,
                          SparseMatrix<F>::from_triplets(m.dim(), m.dim(), t)};
}

// Self-map of the torus model with the given integer action on degree one:
// x1 -> m00 x1 + m10 x2, x2 -> m01 x1 + m11 x2.
template <class F>
ModelMorphism<F> torus_endomorphism(const CohomologyModel<F>& m, const F& m00,
                                    const F& m01, const F& m10, const F& m11) {
  std::vector<Triplet<F>> t{{0, 0, F(1)}};
  F det = m00 * m11 - m01 * m10;
  if (!m00.is_zero()) t.push_back({1, 1, m00});
  if (!m10.is_zero()) t.push_back({2, 1, m10});
  if (!m01.is_zero()) t.push_back({1, 2, m01});
  if (!m11.is_zero()) t.push_back({2, 2, m11});
  if (!det.is_zero()) t.push_back({3, 3, det});
  return ModelMorphism<F>{m, m, SparseMatrix<F>::from_triplets(4, 4, t)};
}

template <class F>
ModelMorphism<F> compose(const ModelMorphism<F>& f, const ModelMorphism<F>& g) {
  if (!(f.target.ring == g.source.ring)) throw error("incompatible morphisms");
  return ModelMorphism<F>{f.source, g.target, f.pullback.mul(g.pullback)};
}

}  // namespace hochlef
