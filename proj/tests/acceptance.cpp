// Acceptance gate.  Each criterion is verified exactly and reported on one
// line; the process exits nonzero if any criterion fails.  Runtime budgets
// are part of the pass condition where stated.

#include <array>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <hochlef/algebra.hpp>
#include <hochlef/chainmaps.hpp>
#include <hochlef/cohomology.hpp>
#include <hochlef/hochschild.hpp>
#include <hochlef/invariants.hpp>
#include <hochlef/perf.hpp>
#include <hochlef/resolution.hpp>

namespace {

using F = hochlef::Rational;
using hochlef::AlgebraMorphism;
using hochlef::AlgMatrix;
using hochlef::BarChain;
using hochlef::BarWord;
using hochlef::GradedAlgebra;
using hochlef::ModelMorphism;
using hochlef::PerfComplex;
using hochlef::Quiver;
using hochlef::SparseMatrix;
using hochlef::SparseVec;
using hochlef::Triplet;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Named {
  std::string name;
  GradedAlgebra<F> algebra;
};

std::vector<Named> corpus() {
  auto k = hochlef::field_algebra<F>();
  auto grp = [](int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return hochlef::group_algebra<F>(t);
  };
  std::vector<Named> out;
  out.push_back({"k", k});
  out.push_back({"k x k", hochlef::product_algebra<F>({k, k})});
  out.push_back({"k x k x k", hochlef::product_algebra<F>({k, k, k})});
  out.push_back({"M2(k)", hochlef::matrix_algebra<F>(2)});
  out.push_back({"k[Z/2]", grp(2)});
  out.push_back({"k[Z/3]", grp(3)});
  out.push_back({"A2", hochlef::path_algebra<F>(Quiver{2, {{0, 1, "a"}}})});
  out.push_back({"A3 linear",
                 hochlef::path_algebra<F>(Quiver{3, {{0, 1, "a"}, {1, 2, "b"}}})});
  out.push_back({"A3 zigzag",
                 hochlef::path_algebra<F>(Quiver{3, {{0, 1, "a"}, {2, 1, "b"}}})});
  out.push_back({"Kronecker",
                 hochlef::path_algebra<F>(Quiver{2, {{0, 1, "a"}, {0, 1, "b"}}})});
  return out;
}

AlgebraMorphism<F> morphism(const GradedAlgebra<F>& a,
                            const std::vector<std::pair<int, int>>& entries) {
  std::vector<Triplet<F>> t;
  for (auto [dst, src] : entries) t.push_back({dst, src, F(1)});
  return AlgebraMorphism<F>{a, a,
                            SparseMatrix<F>::from_triplets(a.dim(), a.dim(),
                                                           std::move(t))};
}

AlgebraMorphism<F> identity_on(const GradedAlgebra<F>& a) {
  return AlgebraMorphism<F>{a, a, SparseMatrix<F>::identity(a.dim())};
}

BarChain<F> random_word(std::mt19937_64& rng, const GradedAlgebra<F>& a,
                        int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), idx(0, a.dim() - 1),
      coeff(1, 5);
  BarWord word{idx(rng), {}};
  int n = len(rng);
  for (int i = 0; i < n; ++i) word.tail.push_back(idx(rng));
  BarChain<F> c;
  hochlef::bc_add(c, word, F(coeff(rng)));
  return c;
}

// -------------------------------------------------------------------------

bool criterion1(std::string& detail) {
  const auto t0 = Clock::now();
  int windows = 0;
  for (const auto& [name, a] : corpus())
    for (int L = 1; L <= 6; ++L) {
      auto win = hochlef::hochschild_complex(a, L);
      for (int i = win.lo() + 2; i <= win.hi(); ++i) {
        auto b0h = win.b0_mat(i), b1h = win.b1_mat(i);
        auto b0l = win.b0_mat(i - 1), b1l = win.b1_mat(i - 1);
        if (!b0l.mul(b0h).is_zero()) {
          detail = name + ": b0^2 != 0 at degree " + std::to_string(i);
          return false;
        }
        if (!b1l.mul(b1h).is_zero()) {
          detail = name + ": b1^2 != 0 at degree " + std::to_string(i);
          return false;
        }
        if (!b0l.mul(b1h).add(b1l.mul(b0h)).is_zero()) {
          detail = name + ": b0 b1 + b1 b0 != 0 at degree " + std::to_string(i);
          return false;
        }
        if (!b0l.add(b1l).mul(b0h.add(b1h)).is_zero()) {
          detail = name + ": b^2 != 0 at degree " + std::to_string(i);
          return false;
        }
      }
      ++windows;
    }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << "b^2 = b0^2 = b1^2 = b0 b1 + b1 b0 = 0 on " << windows
     << " windows over 10 algebras, L <= 6 (" << dt << " s, budget 60 s)";
  detail = os.str();
  return dt < 60.0;
}

bool criterion2(std::string& detail) {
  for (const auto& [name, a] : corpus()) {
    auto bar = hochlef::hh_dims(a, 4);
    auto res = hochlef::hh_via_resolution(a, hochlef::diagonal_bimodule(a), 4);
    if (!bar.certified || bar.dims != res.dims) {
      detail = name + ": bar and resolution dimensions disagree";
      return false;
    }
    if (bar.dims[0] != hochlef::commutator_quotient_dim(a)) {
      detail = name + ": HH_0 differs from the commutator quotient";
      return false;
    }
  }
  detail = "bar = resolution = commutator quotient on 10 algebras, degrees <= 4";
  return true;
}

bool criterion3(std::string& detail) {
  auto all = corpus();
  auto pick = [&](const std::string& n) -> const GradedAlgebra<F>& {
    for (const auto& c : all)
      if (c.name == n) return c.algebra;
    throw hochlef::error("corpus lookup failed");
  };
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"k", "k"},       {"k", "A2"},      {"k x k", "k x k"},
      {"k x k", "A2"},  {"A2", "A2"},     {"k x k", "M2(k)"}};
  for (const auto& [na, nb] : pairs) {
    const auto& a = pick(na);
    const auto& b = pick(nb);
    auto da = hochlef::hh_dims(a, 3).dims;
    auto db = hochlef::hh_dims(b, 3).dims;
    auto dab = hochlef::hh_dims(hochlef::tensor(a, b), 3).dims;
    for (int n = 0; n <= 3; ++n) {
      int expected = 0;
      for (int i = 0; i <= n; ++i) expected += da[i] * db[n - i];
      if (dab[n] != expected) {
        detail = na + " (x) " + nb + ": Kunneth dimension fails at degree " +
                 std::to_string(n);
        return false;
      }
    }
    auto kb = hochlef::kunneth_on_homology(a, b, 3);
    for (int n = 0; n <= 3; ++n) {
      const auto& blk = kb.block[n];
      const auto& inv = kb.inverse[n];
      if (!(blk.mul(inv) == SparseMatrix<F>::identity(blk.rows())) ||
          !(inv.mul(blk) == SparseMatrix<F>::identity(blk.cols()))) {
        detail = na + " (x) " + nb + ": Kunneth block not invertible at degree " +
                 std::to_string(n);
        return false;
      }
    }
  }
  detail = "Kunneth dimensions and invertible blocks on 6 pairs, degrees <= 3";
  return true;
}

bool criterion4(std::string& detail) {
  auto all = corpus();
  auto pick = [&](const std::string& n) -> const GradedAlgebra<F>& {
    for (const auto& c : all)
      if (c.name == n) return c.algebra;
    throw hochlef::error("corpus lookup failed");
  };
  const auto& kk = pick("k x k");
  const auto& a2 = pick("A2");
  const auto& zz = pick("A3 zigzag");
  const auto& m2 = pick("M2(k)");
  const auto& z3 = pick("k[Z/3]");
  std::vector<std::pair<std::string, PerfComplex<F>>> bims;
  bims.push_back({"id graph A2", hochlef::graph_bimodule(identity_on(a2))});
  bims.push_back({"id graph k x k", hochlef::graph_bimodule(identity_on(kk))});
  bims.push_back({"id graph A3 zigzag", hochlef::graph_bimodule(identity_on(zz))});
  bims.push_back({"swap graph",
                  hochlef::graph_bimodule(morphism(kk, {{1, 0}, {0, 1}}))});
  bims.push_back(
      {"reflection graph",
       hochlef::graph_bimodule(
           morphism(zz, {{2, 0}, {1, 1}, {0, 2}, {4, 3}, {3, 4}}))});
  bims.push_back(
      {"conjugation graph",
       hochlef::graph_bimodule(morphism(m2, {{3, 0}, {2, 1}, {1, 2}, {0, 3}}))});
  bims.push_back(
      {"inversion graph",
       hochlef::graph_bimodule(morphism(z3, {{0, 0}, {2, 1}, {1, 2}}))});
  bims.push_back({"projective (0,0)", hochlef::projective_bimodule(a2, 0, 0)});
  bims.push_back({"projective (1,0)", hochlef::projective_bimodule(a2, 1, 0)});
  for (const auto& [name, x] : bims) {
    auto rep = hochlef::verify_main_lemma(*x.left, x.base, x, 2);
    if (!rep.pass) {
      detail = name + ": direct and convolution maps differ";
      return false;
    }
  }
  detail = "direct map = Eu'-convolution on " + std::to_string(bims.size()) +
           " bimodules, certified degrees";
  return true;
}

bool criterion5(std::string& detail) {
  auto all = corpus();
  auto pick = [&](const std::string& n) -> const GradedAlgebra<F>& {
    for (const auto& c : all)
      if (c.name == n) return c.algebra;
    throw hochlef::error("corpus lookup failed");
  };
  const auto& kk = pick("k x k");
  const auto& zz = pick("A3 zigzag");
  const auto& m2 = pick("M2(k)");
  const auto& z3 = pick("k[Z/3]");

  struct Case {
    std::string name;
    const GradedAlgebra<F>* a;
    PerfComplex<F> x;
    long expected;
  };
  std::vector<Case> cases;
  cases.push_back({"k x k swap", &kk,
                   hochlef::graph_bimodule(morphism(kk, {{1, 0}, {0, 1}})), 0});
  cases.push_back(
      {"A3 reflection", &zz,
       hochlef::graph_bimodule(
           morphism(zz, {{2, 0}, {1, 1}, {0, 2}, {4, 3}, {3, 4}})),
       1});
  cases.push_back(
      {"M2 conjugation", &m2,
       hochlef::graph_bimodule(morphism(m2, {{3, 0}, {2, 1}, {1, 2}, {0, 3}})),
       1});
  cases.push_back(
      {"Z/3 inversion", &z3,
       hochlef::graph_bimodule(morphism(z3, {{0, 0}, {2, 1}, {1, 2}})), 1});
  // diagonal fixtures: the expected value is the alternating sum of the
  // Hochschild dimensions
  for (const char* nm : {"k x k", "A2", "A3 zigzag", "k[Z/2]", "Kronecker"}) {
    const auto& a = pick(nm);
    auto dims = hochlef::hh_dims(a, 2).dims;
    long expected = 0;
    for (std::size_t i = 0; i < dims.size(); ++i)
      expected += (i % 2 == 0 ? dims[i] : -dims[i]);
    cases.push_back({std::string(nm) + " diagonal", &a,
                     hochlef::graph_bimodule(identity_on(a)), expected});
  }
  for (const auto& c : cases) {
    auto rep = hochlef::verify_lfp(*c.a, c.x);
    if (!rep.equal || rep.lhs != c.expected || !(rep.rhs == F(c.expected))) {
      detail = c.name + ": Lefschetz numbers disagree";
      return false;
    }
  }
  detail = "lhs = rhs on " + std::to_string(cases.size()) +
           " fixtures including swap = 0 and reflection = 1";
  return true;
}

bool criterion6(std::string& detail) {
  const std::vector<std::pair<std::string, Quiver>> quivers = {
      {"A2", Quiver{2, {{0, 1, "a"}}}},
      {"A3", Quiver{3, {{0, 1, "a"}, {1, 2, "b"}}}},
      {"Kronecker", Quiver{2, {{0, 1, "a"}, {0, 1, "b"}}}}};
  for (const auto& [name, q] : quivers) {
    auto a = hochlef::path_algebra<F>(q);
    auto aop = hochlef::opposite(a);
    long table_total = 0;
    for (int i = 0; i < q.vertices; ++i)
      for (int j = 0; j < q.vertices; ++j) {
        auto rep = hochlef::verify_hrr(a, hochlef::projective_module(a, i),
                                       hochlef::projective_module(aop, j));
        // tensor-collapse oracle: count basis elements fixed by e_i on the
        // left and e_j on the right
        long oracle = 0;
        for (int x = 0; x < a.dim(); ++x)
          if (a.mul_vec(a.e(i), a.e(x)) == a.e(x) &&
              a.mul_vec(a.e(x), a.e(j)) == a.e(x))
            ++oracle;
        table_total += oracle;
        if (!rep.equal || rep.chi != oracle || !(rep.pairing_value == F(oracle))) {
          detail = name + ": pairing table differs from dim e_i A e_j at (" +
                   std::to_string(i) + "," + std::to_string(j) + ")";
          return false;
        }
      }
    auto rep = hochlef::verify_hrr(a, hochlef::free_module(a),
                                   hochlef::free_module(aop));
    if (!rep.equal || !(rep.pairing_value == F(table_total))) {
      detail = name + ": (A, A) pairing differs from the collapsed table";
      return false;
    }
  }
  detail = "pairing tables equal dim e_i A e_j on A2, A3, Kronecker, plus (A, A)";
  return true;
}

bool criterion7(std::string& detail) {
  for (const auto& [name, a] : corpus()) {
    if (!hochlef::verify_nondegenerate(a, 2).pass) {
      detail = name + ": Gram matrix not invertible";
      return false;
    }
    if (!hochlef::verify_pairing_symmetry(a).pass) {
      detail = name + ": graded symmetry fails";
      return false;
    }
  }
  detail = "invertible Gram matrices and graded symmetry on 10 algebras";
  return true;
}

bool criterion8(std::string& detail) {
  const auto t0 = Clock::now();
  auto p1 = hochlef::projective_space<F>(1);
  auto p2 = hochlef::projective_space<F>(2);
  auto t2 = hochlef::torus_surface<F>();
  auto deg = [&](long d) { return hochlef::projective_self_map(p1, F(d)); };
  auto tor = [&](long a, long b, long c, long d) {
    return hochlef::torus_endomorphism(t2, F(a), F(b), F(c), F(d));
  };

  for (long d : {-1L, 0L, 1L, 2L, 3L}) {
    auto rep = hochlef::lefschetz_number(deg(d));
    if (!rep.consistent || !(rep.pull_trace == F(1 + d))) {
      detail = "P1 degree " + std::to_string(d) + ": Lefschetz number wrong";
      return false;
    }
  }
  const std::vector<std::array<long, 4>> mats = {
      {1, 0, 0, 1}, {0, 0, 0, 0}, {2, 1, 1, 1}, {0, 1, 1, 0}, {2, 0, 0, 3}};
  for (const auto& m : mats) {
    auto rep = hochlef::lefschetz_number(tor(m[0], m[1], m[2], m[3]));
    const long want = 1 - (m[0] + m[3]) + (m[0] * m[3] - m[1] * m[2]);
    if (!rep.consistent || !(rep.pull_trace == F(want))) {
      detail = "torus matrix: Lefschetz number differs from 1 - tr + det";
      return false;
    }
  }
  for (auto [d, e] : std::vector<std::pair<long, long>>{{1, 1}, {2, 3}, {0, 2}}) {
    auto rep = hochlef::verify_two_maps(deg(d), deg(e));
    if (!rep.pass || !(rep.lhs == F(d + e))) {
      detail = "two maps (" + std::to_string(d) + "," + std::to_string(e) +
               "): pairing differs from d + e";
      return false;
    }
  }
  auto models = std::vector<hochlef::CohomologyModel<F>>{
      p1, p2, hochlef::product_model(p1, p1).model, t2};
  for (const auto& m : models) {
    auto g = hochlef::graph_class(hochlef::identity_morphism(m));
    if (!(hochlef::convolution_operator(g.product, g.mukai) ==
          SparseMatrix<F>::identity(m.dim()))) {
      detail = "diagonal kernel does not convolve to the identity";
      return false;
    }
  }
  std::vector<ModelMorphism<F>> maps;
  for (long d : {-1L, 0L, 1L, 2L, 3L}) maps.push_back(deg(d));
  for (const auto& m : mats) maps.push_back(tor(m[0], m[1], m[2], m[3]));
  maps.push_back(hochlef::identity_morphism(p2));
  maps.push_back(
      hochlef::identity_morphism(hochlef::product_model(p1, p1).model));
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (!hochlef::verify_cohomological_lemmas(maps[i]).pass) {
      detail = "operator lemmas fail on corpus morphism " + std::to_string(i);
      return false;
    }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << "Lefschetz, two-maps, diagonal kernels, and operator lemmas on the "
        "model corpus ("
     << dt << " s, budget 10 s)";
  detail = os.str();
  return dt < 10.0;
}

bool criterion9(std::string& detail) {
  std::mt19937_64 rng(20260814);
  auto k = hochlef::field_algebra<F>();
  auto kk = hochlef::product_algebra<F>({k, k});

  // chain-map checks on >= 1000 random chains per corpus algebra
  for (const auto& [name, a] : corpus()) {
    auto ab = hochlef::tensor(a, kk);
    auto op = hochlef::opposite(a);
    std::uniform_int_distribution<int> idx(0, a.dim() - 1), pickn(1, 3),
        coin(0, 2), val(1, 3);
    auto random_mat = [&](int n) {
      auto m = AlgMatrix<F>::zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (coin(rng) == 0) m.entry[i][j] = {{idx(rng), F(val(rng))}};
      return m;
    };
    for (int trial = 0; trial < 1000; ++trial) {
      // Kunneth map is a chain map
      auto x = random_word(rng, a, 2);
      auto y = random_word(rng, kk, 2);
      int dx = static_cast<int>(x.begin()->first.tail.size());
      auto lhs =
          hochlef::bar_b<F>(ab, nullptr, hochlef::kunneth(a, kk, x, y));
      auto rhs = hochlef::bc_sum(
          hochlef::kunneth(a, kk, hochlef::bar_b<F>(a, nullptr, x), y),
          hochlef::bc_scale(
              hochlef::parity_sign<F>(dx),
              hochlef::kunneth(a, kk, x, hochlef::bar_b<F>(kk, nullptr, y))));
      if (!(lhs == rhs)) {
        detail = name + ": Kunneth chain-map identity fails";
        return false;
      }
      // clubsuit is an involutive chain map
      auto z = random_word(rng, a, 3);
      if (!(hochlef::clubsuit(a, hochlef::bar_b<F>(a, nullptr, z)) ==
            hochlef::bar_b<F>(op, nullptr, hochlef::clubsuit(a, z)))) {
        detail = name + ": clubsuit chain-map identity fails";
        return false;
      }
      if (!(hochlef::clubsuit(op, hochlef::clubsuit(a, z)) == z)) {
        detail = name + ": clubsuit involution fails";
        return false;
      }
      // trace map is a chain map on matrix words
      int n = pickn(rng);
      std::vector<AlgMatrix<F>> word = {random_mat(n), random_mat(n),
                                        random_mat(n)};
      auto tl =
          hochlef::bar_b<F>(a, nullptr, hochlef::trace_map(a, word, F(1)));
      auto tr = hochlef::trace_map(
          a, {hochlef::alg_mat_mul(a, word[0], word[1]), word[2]}, F(1));
      tr = hochlef::bc_sum(
          tr, hochlef::trace_map(
                  a, {word[0], hochlef::alg_mat_mul(a, word[1], word[2])},
                  F(-1)));
      tr = hochlef::bc_sum(
          tr, hochlef::trace_map(
                  a, {hochlef::alg_mat_mul(a, word[2], word[0]), word[1]},
                  F(1)));
      if (!(tl == tr)) {
        detail = name + ": trace-map chain identity fails";
        return false;
      }
    }
  }

  // Kunneth associativity
  {
    auto a = kk;
    auto b = hochlef::path_algebra<F>(Quiver{2, {{0, 1, "a"}}});
    std::vector<std::vector<int>> t2(2, std::vector<int>(2));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) t2[i][j] = (i + j) % 2;
    auto c = hochlef::group_algebra<F>(t2);
    auto ab = hochlef::tensor(a, b);
    auto bc = hochlef::tensor(b, c);
    if (hochlef::tensor(ab, c).mul != hochlef::tensor(a, bc).mul) {
      detail = "tensor bracketings disagree";
      return false;
    }
    for (int trial = 0; trial < 200; ++trial) {
      auto x = random_word(rng, a, 1);
      auto y = random_word(rng, b, 1);
      auto z = random_word(rng, c, 1);
      if (!(hochlef::kunneth(ab, c, hochlef::kunneth(a, b, x, y), z) ==
            hochlef::kunneth(a, bc, x, hochlef::kunneth(b, c, y, z)))) {
        detail = "Kunneth associativity fails";
        return false;
      }
    }
  }

  // cohomology side: projection formula, supertrace equality, functoriality
  auto p1 = hochlef::projective_space<F>(1);
  auto p2 = hochlef::projective_space<F>(2);
  auto t2m = hochlef::torus_surface<F>();
  auto deg = [&](long d) { return hochlef::projective_self_map(p1, F(d)); };
  auto kp = hochlef::product_model(p1, p1);
  {
    std::vector<ModelMorphism<F>> maps = {
        deg(2), kp.p, kp.q,
        hochlef::torus_endomorphism(t2m, F(2), F(1), F(1), F(1))};
    for (const auto& f : maps) {
      auto fs = hochlef::pushforward(f);
      for (int i = 0; i < f.source.dim(); ++i)
        for (int j = 0; j < f.target.dim(); ++j) {
          auto pulled = f.pullback.col(j);
          SparseVec<F> pb(pulled.begin(), pulled.end());
          auto lhs = hochlef::detail::apply_matrix(
              fs, hochlef::cup(f.source, f.source.ring.e(i), pb));
          auto rhs = hochlef::cup(
              f.target, hochlef::detail::apply_matrix(fs, f.source.ring.e(i)),
              f.target.ring.e(j));
          if (!(lhs == rhs)) {
            detail = "projection formula fails";
            return false;
          }
        }
    }
  }
  {
    std::vector<ModelMorphism<F>> maps;
    for (long d : {-1L, 0L, 1L, 2L, 3L}) maps.push_back(deg(d));
    maps.push_back(hochlef::torus_endomorphism(t2m, F(2), F(1), F(1), F(1)));
    maps.push_back(hochlef::torus_endomorphism(t2m, F(0), F(1), F(1), F(0)));
    maps.push_back(hochlef::identity_morphism(p2));
    for (const auto& f : maps)
      if (!(hochlef::supertrace(f.source, f.pullback) ==
            hochlef::supertrace(f.target, hochlef::pushforward(f)))) {
        detail = "supertrace(f^*) != supertrace(f_*)";
        return false;
      }
  }
  {
    auto check_pair = [&](const ModelMorphism<F>& f, const ModelMorphism<F>& g) {
      auto gf = hochlef::graph_class(f);
      auto gg = hochlef::graph_class(g);
      auto gc = hochlef::graph_class(hochlef::compose(f, g));
      auto of = hochlef::convolution_operator(gf.product, gf.mukai);
      auto og = hochlef::convolution_operator(gg.product, gg.mukai);
      auto oc = hochlef::convolution_operator(gc.product, gc.mukai);
      return oc == og.mul(of);
    };
    if (!check_pair(deg(2), deg(3)) ||
        !check_pair(hochlef::torus_endomorphism(t2m, F(2), F(1), F(1), F(1)),
                    hochlef::torus_endomorphism(t2m, F(0), F(1), F(1), F(0)))) {
      detail = "graph-kernel functoriality fails in the cohomology module";
      return false;
    }
  }
  {
    // graph-kernel functoriality in the DG module: the induced map of the
    // composite graph equals the composite of induced maps
    auto k3 = hochlef::product_algebra<F>({k, k, k});
    auto z3 = corpus()[5].algebra;
    auto zz = corpus()[8].algebra;
    auto induced = [&](const AlgebraMorphism<F>& f) {
      return hochlef::induced_map_direct(hochlef::graph_bimodule(f), 0);
    };
    auto check = [&](const AlgebraMorphism<F>& f, const AlgebraMorphism<F>& g) {
      AlgebraMorphism<F> gf{f.source, g.target, g.matrix.mul(f.matrix)};
      return induced(gf) == induced(g).mul(induced(f));
    };
    auto cyc = morphism(k3, {{1, 0}, {2, 1}, {0, 2}});
    auto swp = morphism(k3, {{1, 0}, {0, 1}, {2, 2}});
    auto inv = morphism(z3, {{0, 0}, {2, 1}, {1, 2}});
    auto refl = morphism(zz, {{2, 0}, {1, 1}, {0, 2}, {4, 3}, {3, 4}});
    if (!check(cyc, swp) || !check(swp, cyc) || !check(cyc, cyc) ||
        !check(swp, swp) || !check(inv, inv) || !check(refl, refl)) {
      detail = "graph-kernel functoriality fails in the DG module";
      return false;
    }
  }
  detail =
      "chain maps on 1000 random chains per algebra, involution, "
      "associativity, projection formula, supertraces, functoriality";
  return true;
}

}  // namespace

int main() {
  bool all = true;
  struct Entry {
    int number;
    bool (*run)(std::string&);
  };
  const std::vector<Entry> entries = {
      {1, criterion1}, {2, criterion2}, {3, criterion3},
      {4, criterion4}, {5, criterion5}, {6, criterion6},
      {7, criterion7}, {8, criterion8}, {9, criterion9}};
  for (const auto& e : entries) {
    std::string detail;
    bool ok = false;
    try {
      ok = e.run(detail);
    } catch (const std::exception& ex) {
      ok = false;
      detail = std::string("exception: ") + ex.what();
    }
    std::cout << "criterion " << e.number << ": " << (ok ? "PASS" : "FAIL")
              << "  " << detail << "\n";
    all = all && ok;
  }
  return all ? 0 : 1;
}
