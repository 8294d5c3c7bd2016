#include <doctest.h>

#include "quivrep/catalog.hpp"
#include "quivrep/morphism.hpp"
#include "quivrep/rng.hpp"

using namespace quivrep;

namespace {

Path random_source_path(const QuiverMorphism& phi, int max_len, Rng& rng) {
  const QuiverSchema& q = phi.source();
  VertexId base = q.pair_vertices() ? VertexId::of(rng.next_int(-4, 4), rng.next_int(-4, 4))
                                    : VertexId::of(rng.next_int(-8, 8));
  Path p(q, q.normalize_vertex(base));
  const int len = static_cast<int>(rng.next_int(0, max_len));
  for (int i = 0; i < len; ++i) {
    const auto arrows = q.arrows_from(p.head());
    p = p.then(arrows[static_cast<std::size_t>(rng.next_int(0, arrows.size() - 1))]);
  }
  return p;
}

}  // namespace

TEST_CASE("the grid-to-chain morphism maps by the diagonal index") {
  const QuiverMorphism f = QuiverMorphism::f();
  CHECK(f.map_vertex(VertexId::of(2, 5)) == VertexId::of(-3));
  // rho1 arrows go to forward arrows, rho2 to backward ones.
  const ArrowId a1 = f.map_arrow({ArrowKind::rho1, VertexId::of(2, 5)});
  CHECK(a1.kind == ArrowKind::fwd);
  CHECK(a1.base == VertexId::of(-3));
  const ArrowId a2 = f.map_arrow({ArrowKind::rho2, VertexId::of(2, 5)});
  CHECK(a2.kind == ArrowKind::bwd);
  CHECK(a2.base == VertexId::of(-3));
}

TEST_CASE("the weight-to-cycle morphism solves k = j m mod (m+n)") {
  const QuiverMorphism g = QuiverMorphism::g(3, 2);
  // Independent oracle: solve 3 j = k mod 5 by enumeration.
  for (std::int64_t k = -10; k <= 10; ++k) {
    std::int64_t expected = -1;
    for (std::int64_t j = 0; j < 5; ++j)
      if (((j * 3 - k) % 5 + 5) % 5 == 0) expected = j;
    CHECK(g.map_vertex(VertexId::of(k)) == VertexId::of(expected));
  }
  CHECK(g.map_vertex(VertexId::of(1)) == VertexId::of(2));
  CHECK(g.map_vertex(VertexId::of(3)) == VertexId::of(1));

  const ArrowId im = g.map_arrow({ArrowKind::rho2, VertexId::of(0)});
  CHECK(im.kind == ArrowKind::bwd);
  CHECK(im.base == VertexId::of(0));

  CHECK_THROWS_AS(QuiverMorphism::g(2, 4), std::domain_error);
}

TEST_CASE("morphisms commute with tails and heads") {
  const QuiverMorphism f = QuiverMorphism::f();
  const QuiverMorphism g = QuiverMorphism::g(5, 3);
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const VertexId v = VertexId::of(rng.next_int(-20, 20), rng.next_int(-20, 20));
    for (const ArrowId& r : f.source().arrows_from(v)) {
      CHECK(f.map_vertex(f.source().tail(r)) == f.target().tail(f.map_arrow(r)));
      CHECK(f.map_vertex(f.source().head(r)) == f.target().head(f.map_arrow(r)));
    }
    const VertexId w = VertexId::of(rng.next_int(-20, 20));
    for (const ArrowId& r : g.source().arrows_from(w)) {
      CHECK(g.map_vertex(g.source().tail(r)) == g.target().tail(g.map_arrow(r)));
      CHECK(g.map_vertex(g.source().head(r)) == g.target().head(g.map_arrow(r)));
    }
  }
}

TEST_CASE("euclidean special case: g for (1,-1) is the identity relabelling") {
  const QuiverMorphism g = QuiverMorphism::g(1, -1);
  CHECK(g.target() == QuiverSchema::qinf());
  for (std::int64_t k = -5; k <= 5; ++k) CHECK(g.map_vertex(VertexId::of(k)) == VertexId::of(k));
  const Representation v = [&]() {
    Representation r(g.source());
    r.set_dim(VertexId::of(0), 1);
    r.set_dim(VertexId::of(1), 2);
    r.set_mat({ArrowKind::rho1, VertexId::of(0)}, Matrix::from_int_rows({{1}, {2}}));
    return r;
  }();
  const Representation pv = pushforward_left(g, v);
  CHECK(pv.dim(VertexId::of(0)) == 1);
  CHECK(pv.dim(VertexId::of(1)) == 2);
  CHECK(pv.mat({ArrowKind::fwd, VertexId::of(0)}) == Matrix::from_int_rows({{1}, {2}}));
}

TEST_CASE("covering verification") {
  CHECK(is_covering(QuiverMorphism::f(), Window::box(-5, 5, -5, 5)).ok);
  for (const auto& [m, n] :
       std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}, {3, 2}, {5, 3}, {1, -1}})
    CHECK(is_covering(QuiverMorphism::g(m, n), Window::range(-10, 10)).ok);
}

TEST_CASE("a folding onto the one-loop quiver is not a covering") {
  // A_2 chain 0 -> 1 collapsed onto the vertex of Qhat(1).
  const QuiverSchema a2 = QuiverSchema::awindow(3, 1, 0, 1);
  const QuiverSchema loop = QuiverSchema::qhat(1);
  std::map<VertexId, VertexId> vmap{{VertexId::of(0), VertexId::of(0)},
                                    {VertexId::of(1), VertexId::of(0)}};
  std::map<ArrowId, ArrowId> amap{
      {{ArrowKind::rho2, VertexId::of(0)}, {ArrowKind::bwd, VertexId::of(0)}}};
  const QuiverMorphism fold = QuiverMorphism::table(a2, loop, vmap, amap);
  const CoveringReport rep = is_covering(fold, Window::range(0, 1));
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.witness.has_value());
  CHECK(*rep.witness == VertexId::of(0));  // no in-arrow of 0 lifts the loops
}

TEST_CASE("table morphisms validate commutation with tails and heads") {
  const QuiverSchema a2 = QuiverSchema::awindow(3, 1, 0, 1);
  const QuiverSchema loop = QuiverSchema::qhat(1);
  std::map<VertexId, VertexId> vmap{{VertexId::of(0), VertexId::of(0)}};
  std::map<ArrowId, ArrowId> amap{
      {{ArrowKind::rho2, VertexId::of(0)}, {ArrowKind::bwd, VertexId::of(0)}}};
  CHECK_THROWS_AS(QuiverMorphism::table(a2, loop, vmap, amap), std::domain_error);
}

TEST_CASE("unique path lifting") {
  const QuiverMorphism g = QuiverMorphism::g(3, 2);
  const QuiverSchema q5 = QuiverSchema::qhat(5);

  // Lift of the forward arrow rho_0 to head 3: only rho1^0 works.
  const Path rho0(q5, VertexId::of(0), {{ArrowKind::fwd, VertexId::of(0)}});
  const Path lifted = lift_path(g, rho0, VertexId::of(3));
  CHECK(lifted.length() == 1);
  CHECK(lifted.arrows()[0].kind == ArrowKind::rho1);
  CHECK(lifted.tail() == VertexId::of(0));
  CHECK(lifted.head() == VertexId::of(3));
  // Independent uniqueness scan over a window of candidate rho1 arrows.
  int candidates = 0;
  for (std::int64_t k = -40; k <= 40; ++k)
    if (k + 3 == 3 && ((k % 5) + 5) % 5 == 0) ++candidates;
  CHECK(candidates == 1);

  // Trivial path lifts to the trivial path.
  const Path e0(q5, VertexId::of(0));
  CHECK(lift_path(g, e0, VertexId::of(0)) == Path(g.source(), VertexId::of(0)));

  // Backward arrow on the chain lifts to a rho2 arrow on the grid.
  const QuiverMorphism f = QuiverMorphism::f();
  const Path rbar0(QuiverSchema::qinf(), VertexId::of(0), {{ArrowKind::bwd, VertexId::of(0)}});
  const Path flift = lift_path(f, rbar0, VertexId::of(0, 1));
  CHECK(flift.length() == 1);
  CHECK(flift.arrows()[0] == ArrowId{ArrowKind::rho2, VertexId::of(0, 0)});

  // Head mismatch is a usage error.
  CHECK_THROWS_AS(lift_path(g, rho0, VertexId::of(0)), std::domain_error);
}

TEST_CASE("lifting inverts the morphism on paths") {
  Rng rng(55);
  for (const QuiverMorphism& phi :
       {QuiverMorphism::f(), QuiverMorphism::g(3, 2), QuiverMorphism::g(2, 1)})
    for (int t = 0; t < 100; ++t) {
      const Path p = random_source_path(phi, 5, rng);
      CHECK(lift_path(phi, phi.map_path(p), p.head()) == p);
    }
}

TEST_CASE("restriction queries compose with the morphism") {
  const QuiverMorphism g = QuiverMorphism::g(3, 2);
  Representation vp(g.target());
  vp.set_dim(VertexId::of(0), 1);  // simple at vertex 0 of the 5-cycle
  const LazyRep r = restrict(g, vp);
  CHECK(r.dim(VertexId::of(5)) == 1);   // 5 maps to 0
  CHECK(r.dim(VertexId::of(1)) == 0);   // 1 maps to 2
  CHECK(r.dim(VertexId::of(0)) == 1);
  CHECK(r.dim(VertexId::of(-5)) == 1);

  const LazyRep zero = restrict(QuiverMorphism::f(), Representation(QuiverSchema::qinf()));
  for (std::int64_t i = -3; i <= 3; ++i)
    for (std::int64_t j = -3; j <= 3; ++j) CHECK(zero.dim(VertexId::of(i, j)) == 0);

  // Arrow queries: g*(V')(rho1^0) = V'(rho_0).
  Representation w(g.target());
  for (std::int64_t k = 0; k < 5; ++k) w.set_dim(VertexId::of(k), 1);
  Matrix two(1, 1);
  two.at(0, 0) = 2;
  w.set_mat({ArrowKind::fwd, VertexId::of(0)}, two);
  const LazyRep rw = restrict(g, w);
  CHECK(rw.mat({ArrowKind::rho1, VertexId::of(0)}) == two);

  // Materialization agrees with the on-demand queries.
  const Representation mat = rw.materialize(Window::range(-6, 6));
  for (std::int64_t k = -6; k <= 6; ++k)
    CHECK(mat.dim(VertexId::of(k)) == rw.dim(VertexId::of(k)));
}

TEST_CASE("pushforward of the two-point module concentrates on one cycle vertex") {
  const QuiverMorphism g = QuiverMorphism::g(3, 2);
  Representation v(g.source());
  v.set_dim(VertexId::of(0), 1);
  v.set_dim(VertexId::of(5), 1);
  const Representation pv = pushforward_left(g, v);
  CHECK(pv.dim(VertexId::of(0)) == 2);
  CHECK(pv.total_dim() == 2);
  CHECK(hom_basis(pv, pv).size() == 4);
  CHECK(pushforward_right(g, v) == pv);

  CHECK(pushforward_left(g, Representation(g.source())).is_zero());
  CHECK(pushforward_right(g, Representation(g.source())).is_zero());
}

TEST_CASE("pushforward diagonal dimensions of the seven-vertex family") {
  const QuiverMorphism f = QuiverMorphism::f();
  const Representation v = build_V_lambda(rat_of(2), true).rep;
  const Representation pv = pushforward_left(f, v);
  // Independent oracle: sum dims over each diagonal i - j.
  std::map<std::int64_t, int> diag;
  for (const auto& [x, d] : v.dims()) diag[x.a - x.b] += d;
  for (const auto& [k, d] : diag) CHECK(pv.dim(VertexId::of(k)) == d);
  CHECK(pv.dim(VertexId::of(-2)) == 1);
  CHECK(pv.dim(VertexId::of(-1)) == 2);
  CHECK(pv.dim(VertexId::of(0)) == 2);
  CHECK(pv.dim(VertexId::of(1)) == 2);
  CHECK(pv.dim(VertexId::of(2)) == 1);
  CHECK(pushforward_right(f, v) == pv);
}

TEST_CASE("pushforward respects path images blockwise") {
  // For a path tau' downstairs, phi_!(V)(tau') assembles the matrices of the
  // unique lifts over each head fiber point.
  Rng rng(66);
  const QuiverMorphism g = QuiverMorphism::g(3, 2);
  for (int t = 0; t < 50; ++t) {
    const Representation v = random_rep(g.source(), Window::range(0, 7), 2, rng);
    const Representation pv = pushforward_left(g, v);
    // Random target path.
    const QuiverSchema& q5 = g.target();
    Path tau(q5, VertexId::of(rng.next_int(0, 4)));
    const int len = static_cast<int>(rng.next_int(0, 3));
    for (int i = 0; i < len; ++i) {
      const auto arrows = q5.arrows_from(tau.head());
      tau = tau.then(arrows[static_cast<std::size_t>(rng.next_int(0, 1))]);
    }
    const Matrix lhs = pv.path_matrix(tau);

    const auto tail_fiber = g.fiber_in(tau.tail(), v.support());
    const auto head_fiber = g.fiber_in(tau.head(), v.support());
    std::map<VertexId, std::size_t> toff, hoff;
    std::size_t tt = 0, hh = 0;
    for (const VertexId& x : tail_fiber) {
      toff[x] = tt;
      tt += static_cast<std::size_t>(v.dim(x));
    }
    for (const VertexId& x : head_fiber) {
      hoff[x] = hh;
      hh += static_cast<std::size_t>(v.dim(x));
    }
    Matrix rhs(hh, tt);
    for (const VertexId& y : head_fiber) {
      const Path lift = lift_path(g, tau, y);
      if (!toff.count(lift.tail())) continue;  // tail dim zero: block vanishes
      rhs.set_block(hoff[y], toff[lift.tail()], v.path_matrix(lift));
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pushforward is additive and faithful on morphisms") {
  Rng rng(91);
  const QuiverMorphism g = QuiverMorphism::g(3, 2);
  for (int t = 0; t < 20; ++t) {
    const Representation v = random_rep(g.source(), Window::range(0, 5), 2, rng);
    const Representation u = random_rep(g.source(), Window::range(0, 5), 2, rng);
    CHECK(iso(pushforward_left(g, direct_sum(v, u)),
              direct_sum(pushforward_left(g, v), pushforward_left(g, u)),
              rng.fork()) == IsoVerdict::yes);

    const RepMorphism s = random_morphism(v, u, rng);
    const RepMorphism ps = pushforward_left_mor(g, s);
    CHECK(ps.intertwines());
    CHECK(ps.is_zero() == s.is_zero());  // faithfulness
  }
}

TEST_CASE("adjunction between restriction and right extension") {
  Rng rng(101);
  const QuiverMorphism g = QuiverMorphism::g(3, 2);
  for (int t = 0; t < 20; ++t) {
    const Representation vp = random_rep(g.target(), Window::range(0, 4), 2, rng);
    const Representation u = random_rep(g.source(), Window::range(-2, 6), 2, rng);
    CHECK(hom_basis_from_restriction(restrict(g, vp), u).size() ==
          hom_basis(vp, pushforward_right(g, u)).size());
  }
  const QuiverMorphism f = QuiverMorphism::f();
  for (int t = 0; t < 20; ++t) {
    const Representation vp = random_rep(f.target(), Window::range(-2, 2), 2, rng);
    const Representation u = random_rep(f.source(), Window::box(-1, 1, -1, 1), 2, rng);
    CHECK(hom_basis_from_restriction(restrict(f, vp), u).size() ==
          hom_basis(vp, pushforward_right(f, u)).size());
  }
}

TEST_CASE("adjunction between left extension and restriction") {
  // The companion identity: dim Hom(phi_! V, V') = dim Hom(V, phi* V'), with
  // the restriction materialized over the support of V plus one outgoing step.
  Rng rng(107);
  const QuiverMorphism g = QuiverMorphism::g(3, 2);
  for (int t = 0; t < 20; ++t) {
    const Representation v = random_rep(g.source(), Window::range(-2, 6), 2, rng);
    const Representation vp = random_rep(g.target(), Window::range(0, 4), 2, rng);
    std::int64_t lo = v.support().front().a, hi = lo;
    for (const VertexId& x : v.support()) {
      lo = std::min(lo, x.a);
      hi = std::max(hi, x.a);
    }
    const Representation phistar =
        restrict(g, vp).materialize(Window::range(lo - 5, hi + 5));
    CHECK(hom_basis(pushforward_left(g, v), vp).size() == hom_basis(v, phistar).size());
  }
}

TEST_CASE("pushforward preserves kernels and cokernels") {
  Rng rng(111);
  const QuiverMorphism g = QuiverMorphism::g(3, 2);
  for (int t = 0; t < 20; ++t) {
    const Representation v = random_rep(g.source(), Window::range(0, 5), 2, rng);
    const Representation u = random_rep(g.source(), Window::range(0, 5), 2, rng);
    const RepMorphism s = random_morphism(v, u, rng);
    const RepMorphism ps = pushforward_left_mor(g, s);
    CHECK(iso(pushforward_left(g, kernel_rep(s).first), kernel_rep(ps).first, rng.fork()) ==
          IsoVerdict::yes);
    CHECK(iso(pushforward_left(g, cokernel_rep(s).first), cokernel_rep(ps).first, rng.fork()) ==
          IsoVerdict::yes);
  }
}

TEST_CASE("restriction and pushforward transport relations") {
  const QuiverMorphism g = QuiverMorphism::g(3, 2);
  const Window w = Window::range(0, 10);

  // The preimage of the cyclic relations is exactly the commutation family.
  const RelationSet rhat =
      relation_instances(g.target(), RelFamily::Rhat, Window::range(0, 4));
  const RelationSet pre = preimage_relations(g, rhat, w);
  const RelationSet direct = relation_instances(g.source(), RelFamily::Rmn, w);
  CHECK(relation_sets_match(pre, direct));
  CHECK(!pre.generators.empty());

  // Same for the grid morphism over a box; the target relations must cover
  // every diagonal the box touches.
  const QuiverMorphism f = QuiverMorphism::f();
  const RelationSet rinf =
      relation_instances(f.target(), RelFamily::Rinf, Window::range(-4, 4));
  const RelationSet fpre = preimage_relations(f, rinf, Window::box(-2, 2, -2, 2));
  const RelationSet fdirect =
      relation_instances(f.source(), RelFamily::RinfXinf, Window::box(-2, 2, -2, 2));
  CHECK(relation_sets_match(fpre, fdirect));

  // A window too narrow to contain any full generator produces none.
  CHECK(preimage_relations(g, rhat, Window::range(1, 1)).generators.empty());

  // A representation satisfying the preimage relations pushes forward to one
  // satisfying the originals.
  Rng rng(121);
  for (int t = 0; t < 10; ++t) {
    Representation vp(g.target());
    for (std::int64_t k = 0; k < 5; ++k)
      vp.set_dim(VertexId::of(k), static_cast<int>(rng.next_int(1, 2)));
    for (std::int64_t k = 0; k < 5; ++k) {
      const ArrowId r{ArrowKind::fwd, VertexId::of(k)};
      Matrix m(vp.dim(g.target().head(r)), vp.dim(VertexId::of(k)));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rat_of(rng.next_int(-2, 2));
      vp.set_mat(r, std::move(m));
    }
    const Representation v = restrict(g, vp).materialize(Window::range(-4, 9));
    CHECK(check_relations(v, relations_for_support(v, RelFamily::Rmn)).empty());
    CHECK(check_relations(pushforward_left(g, v), rhat).empty());
  }
}

TEST_CASE("translation twist on the grid") {
  const Representation v = build_V_lambda(rat_of(2), true).rep;
  const Representation v1 = translate(v, 1);
  CHECK(v1.dim(VertexId::of(0, 0)) == v.dim(VertexId::of(1, 1)));
  CHECK(v1.dim(VertexId::of(-1, -1)) == v.dim(VertexId::of(0, 0)));
  CHECK(translate(v, 0) == v);
  CHECK(translate(translate(v, 3), -3) == v);

  // Diagonals are translation invariant, so the chain image is unchanged.
  const QuiverMorphism f = QuiverMorphism::f();
  CHECK(pushforward_left(f, v1) == pushforward_left(f, v));

  CHECK_THROWS_AS(translate(Representation(QuiverSchema::qmn(3, 2)), 1), std::domain_error);
}

TEST_CASE("orbit canonicalization") {
  const Representation v = build_V_lambda(rat_of(2), true).rep;
  const Representation canon = orbit_canonical(v);
  CHECK(orbit_canonical(canon) == canon);
  for (std::int64_t z = -3; z <= 3; ++z) CHECK(orbit_canonical(translate(v, z)) == canon);

  Representation s(QuiverSchema::qinfxinf());
  s.set_dim(VertexId::of(3, 3), 1);
  CHECK(orbit_canonical(s).dim(VertexId::of(0, 0)) == 1);

  CHECK_THROWS_AS(orbit_canonical(Representation(QuiverSchema::qinfxinf())), std::domain_error);
}
