#include <catch2/catch_amalgamated.hpp>

#include <hochlef/algebra.hpp>
#include <hochlef/hochschild.hpp>
#include <hochlef/perf.hpp>

#include <map>
#include <vector>

using hochlef::AlgebraMorphism;
using hochlef::AlgMatrix;
using hochlef::GradedAlgebra;
using hochlef::PerfComplex;
using hochlef::PerfTerm;
using hochlef::Quiver;
using hochlef::Rational;
using hochlef::SparseMatrix;
using hochlef::SparseVec;
using hochlef::Triplet;

namespace {

using F = Rational;
using Dims = std::map<int, int>;

GradedAlgebra<F> kk() {
  return hochlef::product_algebra<F>(
      {hochlef::field_algebra<F>(), hochlef::field_algebra<F>()});
}

GradedAlgebra<F> a2() { return hochlef::path_algebra<F>(Quiver{2, {{0, 1, "a"}}}); }

GradedAlgebra<F> zigzag() {
  return hochlef::path_algebra<F>(Quiver{3, {{0, 1, "a"}, {2, 1, "b"}}});
}

AlgMatrix<F> amat(int rows, int cols,
                  std::vector<std::tuple<int, int, SparseVec<F>>> entries) {
  auto m = AlgMatrix<F>::zero(rows, cols);
  for (auto& [r, c, v] : entries) m.entry[r][c] = v;
  return m;
}

AlgebraMorphism<F> morphism(const GradedAlgebra<F>& src,
                            const GradedAlgebra<F>& dst,
                            std::vector<Triplet<F>> entries) {
  return AlgebraMorphism<F>{
      src, dst,
      SparseMatrix<F>::from_triplets(dst.dim(), src.dim(), std::move(entries))};
}

AlgebraMorphism<F> swap_kk() {
  auto p = kk();
  return morphism(p, p, {{1, 0, F(1)}, {0, 1, F(1)}});
}

AlgebraMorphism<F> reflection() {
  auto z = zigzag();
  return morphism(z, z,
                  {{2, 0, F(1)}, {1, 1, F(1)}, {0, 2, F(1)}, {4, 3, F(1)}, {3, 4, F(1)}});
}

AlgebraMorphism<F> identity_on(const GradedAlgebra<F>& a) {
  std::vector<Triplet<F>> t;
  for (int i = 0; i < a.dim(); ++i) t.push_back({i, i, F(1)});
  return morphism(a, a, std::move(t));
}

bool mentions(const hochlef::ValidationReport& r, const std::string& what) {
  for (auto& v : r.violations)
    if (v.find(what) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("rectangular algebra matrices", "[perf]") {
  auto p = a2();
  auto x = amat(1, 2, {{0, 0, {{0, F(1)}}}, {0, 1, {{2, F(1)}}}});
  auto y = amat(2, 1, {{0, 0, {{2, F(1)}}}, {1, 0, {{1, F(1)}}}});
  auto xy = hochlef::alg_mat_mul(p, x, y);
  CHECK(xy.rows == 1);
  CHECK(xy.cols == 1);
  CHECK(xy.entry[0][0] == SparseVec<F>{{2, F(2)}});
  CHECK_THROWS_WITH(hochlef::alg_mat_mul(p, x, x), "matrix size mismatch");
}

TEST_CASE("perf complex validation", "[perf]") {
  CHECK(hochlef::validate(hochlef::free_module(a2())).ok());
  CHECK(hochlef::validate(hochlef::graph_bimodule(identity_on(kk()))).ok());
  CHECK(hochlef::validate(hochlef::graph_bimodule(swap_kk())).ok());
  CHECK(hochlef::validate(hochlef::graph_bimodule(reflection())).ok());

  auto z = zigzag();
  CHECK_THROWS_WITH(
      hochlef::graph_bimodule(morphism(z, z, {})),  // zero map: not unital
      "invalid morphism");

  auto p = a2();
  PerfComplex<F> bad;
  bad.base = p;
  bad.terms.push_back({0, amat(1, 1, {{0, 0, {{2, F(1)}}}}), {}});
  CHECK(mentions(hochlef::validate(bad), "idempotent"));
  CHECK_THROWS(hochlef::require_valid(bad));

  PerfComplex<F> empty;
  empty.base = p;
  CHECK(mentions(hochlef::validate(empty), "empty"));

  auto k = hochlef::field_algebra<F>();
  PerfComplex<F> sq;
  sq.base = k;
  for (int pos = 0; pos < 3; ++pos)
    sq.terms.push_back({pos, amat(1, 1, {{0, 0, {{0, F(1)}}}}), {}});
  sq.diff[0] = amat(1, 1, {{0, 0, {{0, F(1)}}}});
  sq.diff[1] = amat(1, 1, {{0, 0, {{0, F(1)}}}});
  CHECK(mentions(hochlef::validate(sq), "square"));

  auto prod = kk();
  PerfComplex<F> incomp;
  incomp.base = prod;
  incomp.terms.push_back({0, amat(1, 1, {{0, 0, {{0, F(1)}}}}), {}});
  incomp.terms.push_back({1, amat(1, 1, {{0, 0, {{0, F(1)}}}}), {}});
  incomp.diff[0] = amat(1, 1, {{0, 0, {{1, F(1)}}}});
  CHECK(mentions(hochlef::validate(incomp), "compatible"));

  PerfComplex<F> dup;
  dup.base = prod;
  dup.terms.push_back({0, amat(1, 1, {{0, 0, prod.unit}}), {}});
  dup.terms.push_back({0, amat(1, 1, {{0, 0, prod.unit}}), {}});
  CHECK(mentions(hochlef::validate(dup), "position"));

  PerfComplex<F> nu;
  nu.base = prod;
  nu.left = prod;
  nu.terms.push_back({0,
                      amat(1, 1, {{0, 0, prod.unit}}),
                      {amat(1, 1, {{0, 0, {{0, F(1)}}}}),
                       amat(1, 1, {{0, 0, {{0, F(1)}}}})}});
  CHECK(mentions(hochlef::validate(nu), "unital"));

  PerfComplex<F> nc;
  nc.base = prod;
  nc.left = prod;
  nc.terms.push_back({0,
                      amat(1, 1, {{0, 0, prod.unit}}),
                      {amat(1, 1, {{0, 0, {{0, F(1)}}}}),
                       amat(1, 1, {{0, 0, {{1, F(1)}}}})}});
  nc.terms.push_back({1,
                      amat(1, 1, {{0, 0, prod.unit}}),
                      {amat(1, 1, {{0, 0, {{1, F(1)}}}}),
                       amat(1, 1, {{0, 0, {{0, F(1)}}}})}});
  nc.diff[0] = amat(1, 1, {{0, 0, prod.unit}});
  CHECK(mentions(hochlef::validate(nc), "commute"));

  PerfComplex<F> stray;
  stray.base = prod;
  stray.terms.push_back({0, amat(1, 1, {{0, 0, prod.unit}}), {}});
  stray.diff[5] = amat(1, 1, {{0, 0, prod.unit}});
  CHECK(mentions(hochlef::validate(stray), "endpoint"));
}

TEST_CASE("graph bimodules flatten to twisted bimodules", "[perf]") {
  for (auto& phi : {identity_on(kk()), swap_kk(), reflection()}) {
    auto flat = hochlef::flatten_bimodule(hochlef::graph_bimodule(phi));
    auto tw = hochlef::twisted_bimodule(phi);
    CHECK(flat.algebra == tw.algebra);
    CHECK(flat.degree == tw.degree);
    CHECK(flat.diff == tw.diff);
    CHECK(flat.left == tw.left);
    CHECK(flat.right == tw.right);
  }
}

TEST_CASE("projective bimodules", "[perf]") {
  auto p = a2();
  auto pb = hochlef::projective_bimodule(p, 0, 0);  // Ae1 ox e1A
  REQUIRE(pb.terms.size() == 1);
  CHECK(pb.terms[0].idempotent.rows == 1);
  CHECK(pb.terms[0].idempotent.entry[0][0] == SparseVec<F>{{0, F(1)}});
  auto flat = hochlef::flatten_bimodule(pb);
  REQUIRE(flat.dim() == 2);
  // basis: e1 and a inside the slot; left mult by the arrow kills everything
  CHECK(flat.left[2][0].empty());
  CHECK(flat.left[2][1].empty());
  CHECK(flat.left[0][0] == SparseVec<F>{{0, F(1)}});
  CHECK(flat.right[0][2] == SparseVec<F>{{1, F(1)}});  // e1 * a = a

  auto pb2 = hochlef::projective_bimodule(p, 1, 0);  // Ae2 ox e1A
  CHECK(pb2.terms[0].idempotent.rows == 2);
  CHECK(hochlef::flatten_bimodule(pb2).dim() == 4);

  CHECK_THROWS_WITH(hochlef::projective_bimodule(p, 2, 0),
                    "basis element is not idempotent");
}

TEST_CASE("perf homology", "[perf]") {
  auto p = a2();
  CHECK(hochlef::perf_homology(hochlef::free_module(p)) == Dims{{0, 3}});
  CHECK(hochlef::perf_homology(hochlef::projective_module(p, 0)) ==
        Dims{{0, 2}});
  CHECK(hochlef::perf_homology(hochlef::projective_module(p, 1)) ==
        Dims{{0, 1}});

  auto prod = kk();
  PerfComplex<F> cone;
  cone.base = prod;
  cone.terms.push_back({0, amat(1, 1, {{0, 0, prod.unit}}), {}});
  cone.terms.push_back({1, amat(1, 1, {{0, 0, prod.unit}}), {}});
  cone.diff[0] = amat(1, 1, {{0, 0, prod.unit}});
  hochlef::require_valid(cone);
  CHECK(hochlef::perf_homology(cone) == Dims{});

  CHECK(hochlef::perf_homology(hochlef::free_module(prod, -2)) ==
        Dims{{-2, 2}});
}

TEST_CASE("derived tensor", "[perf]") {
  auto p = a2();
  auto pop = hochlef::opposite(p);

  CHECK(hochlef::derived_tensor(hochlef::free_module(p),
                                hochlef::diagonal_bimodule(p)) == Dims{{0, 3}});

  // e_i A ox_A A e_j has dimension dim e_i A e_j
  CHECK(hochlef::derived_tensor(hochlef::projective_module(p, 0),
                                hochlef::projective_module(pop, 0)) ==
        Dims{{0, 1}});
  CHECK(hochlef::derived_tensor(hochlef::projective_module(p, 0),
                                hochlef::projective_module(pop, 1)) ==
        Dims{{0, 1}});
  CHECK(hochlef::derived_tensor(hochlef::projective_module(p, 1),
                                hochlef::projective_module(pop, 0)) == Dims{});

  CHECK(hochlef::derived_tensor(hochlef::projective_module(p, 0),
                                hochlef::projective_module(pop, 1, 1)) ==
        Dims{{1, 1}});

  auto prod = kk();
  CHECK(hochlef::derived_tensor(hochlef::free_module(prod),
                                hochlef::twisted_bimodule(swap_kk())) ==
        Dims{{0, 2}});

  CHECK_THROWS_WITH(hochlef::derived_tensor(hochlef::free_module(p),
                                            hochlef::diagonal_bimodule(prod)),
                    "incompatible actions");
  CHECK_THROWS_WITH(hochlef::derived_tensor(hochlef::free_module(p),
                                            hochlef::projective_module(p, 0)),
                    "incompatible actions");
}

TEST_CASE("euler characteristic", "[perf]") {
  CHECK(hochlef::euler_characteristic({}) == 0);
  CHECK(hochlef::euler_characteristic({{0, 1}}) == 1);
  CHECK(hochlef::euler_characteristic({{0, 1}, {1, 1}}) == 0);
  CHECK(hochlef::euler_characteristic({{1, 1}}) == -1);
  CHECK(hochlef::euler_characteristic({{0, 2}, {1, 3}, {3, 5}}) == -6);
}
