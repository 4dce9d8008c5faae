#include <catch2/catch_amalgamated.hpp>

#include <hochlef/algebra.hpp>
#include <hochlef/cohomology.hpp>

#include <string>
#include <vector>

using hochlef::CohomologyModel;
using hochlef::ModelMorphism;
using hochlef::Rational;
using hochlef::SparseMatrix;
using hochlef::SparseVec;
using hochlef::Triplet;

namespace {

using F = Rational;

CohomologyModel<F> p1() { return hochlef::projective_space<F>(1); }
CohomologyModel<F> p2() { return hochlef::projective_space<F>(2); }
CohomologyModel<F> torus() { return hochlef::torus_surface<F>(); }

ModelMorphism<F> deg(const CohomologyModel<F>& m, long d) {
  return hochlef::projective_self_map(m, F(d));
}

ModelMorphism<F> torus_map(long a, long b, long c, long d) {
  return hochlef::torus_endomorphism(torus(), F(a), F(b), F(c), F(d));
}

SparseMatrix<F> mat(int rows, int cols, std::vector<Triplet<F>> entries) {
  return SparseMatrix<F>::from_triplets(rows, cols, std::move(entries));
}

bool mentions(const hochlef::ValidationReport& rep, const std::string& what) {
  for (auto& v : rep.violations)
    if (v.find(what) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("cohomology model constructors", "[cohomology]") {
  auto a = p1();
  CHECK(a.dim() == 2);
  CHECK(a.todd == SparseVec<F>{{0, F(1)}, {1, F(1)}});
  CHECK(validate(a).ok());

  auto b = p2();
  CHECK(b.todd == SparseVec<F>{{0, F(1)}, {1, F(3, 2)}, {2, F(1)}});
  CHECK(validate(b).ok());

  auto c = hochlef::projective_space<F>(3);
  CHECK(c.todd == SparseVec<F>{{0, F(1)}, {1, F(2)}, {2, F(11, 6)}, {3, F(1)}});
  CHECK(hochlef::integrate(c, c.todd) == F(1));

  auto t = torus();
  CHECK(t.ring.mul[1][2] == SparseVec<F>{{3, F(1)}});
  CHECK(t.ring.mul[2][1] == SparseVec<F>{{3, F(-1)}});
  CHECK(hochlef::integrate(t, t.ring.mul[1][2]) == F(1));
  CHECK(validate(t).ok());

  auto kp = hochlef::product_model(a, a);
  CHECK(kp.model.dim() == 4);
  CHECK(kp.model.integral == SparseVec<F>{{3, F(1)}});
  CHECK(kp.model.todd ==
        SparseVec<F>{{0, F(1)}, {1, F(1)}, {2, F(1)}, {3, F(1)}});
  CHECK(validate(kp.model).ok());
  CHECK(validate(hochlef::product_model(t, t).model).ok());

  // validation failures
  auto bad = p1();
  bad.integral = {{0, F(1)}};
  CHECK(mentions(validate(bad), "not supported in top degree"));
  auto bad2 = torus();
  bad2.todd = {{0, F(1)}, {1, F(1)}};
  CHECK(mentions(validate(bad2), "todd class must be even"));
  auto bad3 = p1();
  bad3.todd = {{1, F(1)}};
  CHECK(mentions(validate(bad3), "todd constant term must be one"));
  auto bad4 = p1();
  bad4.integral = {};
  CHECK(mentions(validate(bad4), "Poincare pairing degenerate"));
  CohomologyModel<F> bad5;
  bad5.ring = hochlef::path_algebra<F>(hochlef::Quiver{2, {{0, 1, "a"}}});
  bad5.integral = {{0, F(1)}};
  bad5.todd = bad5.ring.unit;
  bad5.top_degree = 0;
  CHECK(mentions(validate(bad5), "not graded commutative"));
}

TEST_CASE("todd square roots and inverses", "[cohomology]") {
  auto a = p1();
  CHECK(hochlef::sqrt_todd(a) == SparseVec<F>{{0, F(1)}, {1, F(1, 2)}});
  CHECK(hochlef::inverse_unital(a, a.todd) == SparseVec<F>{{0, F(1)}, {1, F(-1)}});

  auto b = p2();
  CHECK(hochlef::sqrt_todd(b) ==
        SparseVec<F>{{0, F(1)}, {1, F(3, 4)}, {2, F(7, 32)}});

  auto t = torus();
  CHECK(hochlef::sqrt_todd(t) == t.ring.unit);

  for (auto m : {hochlef::projective_space<F>(3),
                 hochlef::product_model(p1(), p1()).model,
                 hochlef::product_model(p1(), p2()).model}) {
    auto s = hochlef::sqrt_todd(m);
    CHECK(cup(m, s, s) == m.todd);
    auto inv = hochlef::inverse_unital(m, m.todd);
    CHECK(cup(m, inv, m.todd) == m.ring.unit);
  }

  auto doctored = p1();
  doctored.todd = {{1, F(1)}};
  CHECK_THROWS_WITH(hochlef::sqrt_todd(doctored),
                    "todd constant term must be one");
  CHECK_THROWS_WITH(hochlef::inverse_unital(a, SparseVec<F>{{1, F(1)}}),
                    "constant term must be one");
}

TEST_CASE("pushforwards by duality", "[cohomology]") {
  auto a = p1();
  CHECK(hochlef::pushforward(hochlef::identity_morphism(a)) ==
        SparseMatrix<F>::identity(2));

  // degree-m self-map: f_*(1) = m, f_*(h) = h
  CHECK(hochlef::pushforward(deg(a, 3)) == mat(2, 2, {{0, 0, F(3)}, {1, 1, F(1)}}));

  // projection of a product: integration along the fiber
  auto kp = hochlef::product_model(a, a);
  CHECK(hochlef::pushforward(kp.p) == mat(2, 4, {{0, 2, F(1)}, {1, 3, F(1)}}));

  // projection formula f_*(alpha cup f^* beta) = f_*(alpha) cup beta
  std::vector<ModelMorphism<F>> maps = {deg(a, 2), kp.p, kp.q,
                                        torus_map(2, 1, 1, 1)};
  for (const auto& f : maps) {
    auto fs = hochlef::pushforward(f);
    for (int i = 0; i < f.source.dim(); ++i)
      for (int j = 0; j < f.target.dim(); ++j) {
        auto pulled = f.pullback.col(j);
        SparseVec<F> pb(pulled.begin(), pulled.end());
        auto lhs = hochlef::detail::apply_matrix(
            fs, cup(f.source, f.source.ring.e(i), pb));
        auto rhs = cup(f.target,
                       hochlef::detail::apply_matrix(fs, f.source.ring.e(i)),
                       f.target.ring.e(j));
        CHECK(lhs == rhs);
      }
  }

  // supertrace of the pullback equals the supertrace of the pushforward
  for (const auto& f : {deg(a, 5), torus_map(2, 1, 1, 1), torus_map(0, 1, 1, 0)}) {
    CHECK(hochlef::supertrace(f.source, f.pullback) ==
          hochlef::supertrace(f.target, hochlef::pushforward(f)));
  }

  auto bad = p1();
  bad.integral = {};
  ModelMorphism<F> broken{bad, bad, SparseMatrix<F>::identity(2)};
  CHECK_THROWS_WITH(hochlef::pushforward(broken), "degenerate pairing");
}

TEST_CASE("graph classes", "[cohomology]") {
  auto a = p1();
  auto gid = hochlef::graph_class(hochlef::identity_morphism(a));
  CHECK(gid.ch == SparseVec<F>{{1, F(1)}, {2, F(1)}, {3, F(-1)}});
  CHECK(gid.mukai == SparseVec<F>{{1, F(1)}, {2, F(1)}});
  // Euler characteristic of the diagonal structure class
  CHECK(hochlef::integrate(gid.product.model,
                           cup(gid.product.model, gid.ch,
                               gid.product.model.todd)) == F(1));

  auto g2 = hochlef::graph_class(deg(a, 2));
  CHECK(g2.ch == SparseVec<F>{{1, F(1)}, {2, F(2)}, {3, F(-2)}});
  CHECK(g2.mukai == SparseVec<F>{{1, F(1)}, {2, F(2)}, {3, F(-1, 2)}});

  auto pt = hochlef::projective_space<F>(0);
  auto gpt = hochlef::graph_class(hochlef::identity_morphism(pt));
  CHECK(gpt.ch == SparseVec<F>{{0, F(1)}});
  CHECK(gpt.mukai == SparseVec<F>{{0, F(1)}});
}

TEST_CASE("convolution operators", "[cohomology]") {
  // the diagonal's Mukai kernel convolves to the identity operator
  for (auto m : {p1(), p2(), hochlef::product_model(p1(), p1()).model, torus()}) {
    auto g = hochlef::graph_class(hochlef::identity_morphism(m));
    CHECK(hochlef::convolution_operator(g.product, g.mukai) ==
          SparseMatrix<F>::identity(m.dim()));
  }

  auto a = p1();
  auto kp = hochlef::product_model(a, a);
  CHECK(hochlef::convolution_operator(kp, {}) == SparseMatrix<F>(2, 2));
  // kernel 1 (x) 1: beta -> (integral of beta) * 1
  CHECK(hochlef::convolution_operator(kp, {{0, F(1)}}) ==
        mat(2, 2, {{0, 1, F(1)}}));
  CHECK_THROWS_WITH(hochlef::convolution_operator(kp, {{99, F(1)}}),
                    "model mismatch");

  // operators of graph kernels preserve parity
  auto tf = torus_map(2, 1, 1, 1);
  auto gt = hochlef::graph_class(tf);
  auto op = hochlef::convolution_operator(gt.product, gt.mukai);
  CHECK(hochlef::parity_preserving(torus(), torus(), op));

  // kernel composition is functorial on operators
  auto f = deg(a, 2);
  auto g = deg(a, 3);
  auto gf = hochlef::graph_class(f);
  auto gg = hochlef::graph_class(g);
  auto gfg = hochlef::graph_class(hochlef::compose(f, g));
  auto of = hochlef::convolution_operator(gf.product, gf.mukai);
  auto og = hochlef::convolution_operator(gg.product, gg.mukai);
  auto ofg = hochlef::convolution_operator(gfg.product, gfg.mukai);
  CHECK(ofg == og.mul(of));

  auto tn = torus_map(0, 1, 1, 0);
  auto gtn = hochlef::graph_class(tn);
  auto gcomp = hochlef::graph_class(hochlef::compose(tf, tn));
  CHECK(hochlef::convolution_operator(gcomp.product, gcomp.mukai) ==
        hochlef::convolution_operator(gtn.product, gtn.mukai)
            .mul(hochlef::convolution_operator(gt.product, gt.mukai)));
}

TEST_CASE("lefschetz numbers", "[cohomology]") {
  auto a = p1();
  for (long d : {-1L, 0L, 1L, 2L, 3L}) {
    auto rep = hochlef::lefschetz_number(deg(a, d));
    CHECK(rep.consistent);
    CHECK(rep.pull_trace == F(1 + d));
    CHECK(rep.push_trace == F(1 + d));
    CHECK(rep.kernel_trace == F(1 + d));
  }

  auto rep2 = hochlef::lefschetz_number(deg(p2(), 2));
  CHECK(rep2.consistent);
  CHECK(rep2.pull_trace == F(7));

  // torus: 1 - tr(M) + det(M)
  struct Case {
    long m00, m01, m10, m11, expected;
  };
  for (auto c : std::vector<Case>{{1, 0, 0, 1, 0},
                                  {0, 0, 0, 0, 1},
                                  {2, 1, 1, 1, -1},
                                  {0, 1, 1, 0, 0},
                                  {2, 0, 0, 3, 2},
                                  {-1, 0, 0, -1, 4}}) {
    auto rep = hochlef::lefschetz_number(torus_map(c.m00, c.m01, c.m10, c.m11));
    CHECK(rep.consistent);
    CHECK(rep.pull_trace == F(c.expected));
  }

  auto kp = hochlef::product_model(a, a);
  CHECK_THROWS_WITH(hochlef::lefschetz_number(kp.p), "square model required");
}

TEST_CASE("two maps theorem", "[cohomology]") {
  auto a = p1();
  struct Case {
    long d, e, expected;
  };
  for (auto c : std::vector<Case>{{1, 1, 2}, {2, 3, 5}, {0, 2, 2}}) {
    auto rep = hochlef::verify_two_maps(deg(a, c.d), deg(a, c.e));
    CHECK(rep.pass);
    CHECK(rep.lhs == F(c.expected));
    CHECK(rep.rhs == F(c.expected));
  }

  auto rep2 = hochlef::verify_two_maps(hochlef::identity_morphism(p2()),
                                       hochlef::identity_morphism(p2()));
  CHECK(rep2.pass);
  CHECK(rep2.lhs == F(3));

  auto t = torus();
  auto rept = hochlef::verify_two_maps(hochlef::identity_morphism(t),
                                       hochlef::identity_morphism(t));
  CHECK(rept.pass);
  CHECK(rept.lhs == F(0));

  auto reptn = hochlef::verify_two_maps(torus_map(2, 1, 1, 1),
                                        torus_map(0, 1, 1, 0));
  CHECK(reptn.pass);
  CHECK(reptn.lhs == F(2));

  // the hypothesis dim X = dim Y is necessary
  auto pt = hochlef::projective_space<F>(0);
  ModelMorphism<F> collapse{a, pt, mat(2, 1, {{0, 0, F(1)}})};
  CHECK_THROWS_WITH(hochlef::verify_two_maps(collapse, collapse),
                    "theorem hypothesis violated");
}

TEST_CASE("cohomological operator lemmas", "[cohomology]") {
  auto a = p1();
  auto rid = hochlef::verify_cohomological_lemmas(hochlef::identity_morphism(a));
  CHECK(rid.pass);
  CHECK(rid.forward_operator == SparseMatrix<F>::identity(2));
  CHECK(rid.backward_operator == SparseMatrix<F>::identity(2));

  auto r2 = hochlef::verify_cohomological_lemmas(deg(a, 2));
  CHECK(r2.pass);
  CHECK(r2.forward_operator ==
        mat(2, 2, {{0, 0, F(2)}, {1, 0, F(-1, 2)}, {1, 1, F(1)}}));
  CHECK(r2.backward_operator ==
        mat(2, 2, {{0, 0, F(1)}, {1, 0, F(-1, 2)}, {1, 1, F(2)}}));
  CHECK(hochlef::verify_cohomological_lemmas(deg(a, -1)).pass);

  // factor swap on the product model
  auto kp = hochlef::product_model(a, a);
  std::vector<Triplet<F>> sw;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) sw.push_back({j * 2 + i, i * 2 + j, F(1)});
  ModelMorphism<F> swap{kp.model, kp.model, mat(4, 4, std::move(sw))};
  auto rsw = hochlef::verify_cohomological_lemmas(swap);
  CHECK(rsw.pass);
  CHECK(rsw.forward_operator.rows() == 4);

  CHECK(hochlef::verify_cohomological_lemmas(torus_map(2, 1, 1, 1)).pass);
}
