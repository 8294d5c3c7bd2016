#include <doctest.h>

#include <set>

#include "quivrep/quiver.hpp"

using namespace quivrep;

namespace {

std::set<std::pair<int, std::int64_t>> arrow_set_1d(const std::vector<ArrowId>& arrows) {
  std::set<std::pair<int, std::int64_t>> out;
  for (const ArrowId& r : arrows) out.insert({static_cast<int>(r.kind), r.base.a});
  return out;
}

}  // namespace

TEST_CASE("schema construction validates parameters") {
  CHECK_THROWS_AS(QuiverSchema::qmn(0, 1), std::domain_error);
  CHECK_THROWS_AS(QuiverSchema::qmn(2, 4), std::domain_error);
  CHECK_THROWS_AS(QuiverSchema::qhat(-1), std::domain_error);
  CHECK_NOTHROW(QuiverSchema::qmn(1, 1));    // double arrow k -> k+1
  CHECK_NOTHROW(QuiverSchema::qmn(1, -1));   // Euclidean case
  CHECK(QuiverSchema::qinf() == QuiverSchema::qhat(0));
}

TEST_CASE("arrows out of a vertex") {
  const QuiverSchema q32 = QuiverSchema::qmn(3, 2);
  const auto from0 = q32.arrows_from(VertexId::of(0));
  REQUIRE(from0.size() == 2);
  CHECK(q32.head(from0[0]) == VertexId::of(3));  // rho1^0: 0 -> 3
  CHECK(q32.head(from0[1]) == VertexId::of(2));  // rho2^0: 0 -> 2

  const QuiverSchema grid = QuiverSchema::qinfxinf();
  const auto fromOO = grid.arrows_from(VertexId::of(0, 0));
  REQUIRE(fromOO.size() == 2);
  CHECK(grid.head(fromOO[0]) == VertexId::of(1, 0));
  CHECK(grid.head(fromOO[1]) == VertexId::of(0, 1));

  const QuiverSchema q5 = QuiverSchema::qhat(5);
  const auto from0h = q5.arrows_from(VertexId::of(0));
  REQUIRE(from0h.size() == 2);
  CHECK(from0h[0].kind == ArrowKind::fwd);
  CHECK(q5.head(from0h[0]) == VertexId::of(1));
  CHECK(from0h[1].kind == ArrowKind::bwd);
  CHECK(q5.head(from0h[1]) == VertexId::of(4));  // 0 -> -1 = 4 mod 5

  CHECK_THROWS_AS(q32.arrows_from(VertexId::of(0, 1)), std::domain_error);
  CHECK_THROWS_AS(q5.arrows_from(VertexId::of(7)), std::domain_error);
}

TEST_CASE("arrows into a vertex") {
  const QuiverSchema q32 = QuiverSchema::qmn(3, 2);
  CHECK(arrow_set_1d(q32.arrows_into(VertexId::of(0))) ==
        std::set<std::pair<int, std::int64_t>>{{static_cast<int>(ArrowKind::rho1), -3},
                                               {static_cast<int>(ArrowKind::rho2), -2}});

  const QuiverSchema q5 = QuiverSchema::qhat(5);
  CHECK(arrow_set_1d(q5.arrows_into(VertexId::of(0))) ==
        std::set<std::pair<int, std::int64_t>>{{static_cast<int>(ArrowKind::fwd), 4},
                                               {static_cast<int>(ArrowKind::bwd), 1}});

  const QuiverSchema qi = QuiverSchema::qinf();
  CHECK(arrow_set_1d(qi.arrows_into(VertexId::of(0))) ==
        std::set<std::pair<int, std::int64_t>>{{static_cast<int>(ArrowKind::fwd), -1},
                                               {static_cast<int>(ArrowKind::bwd), 1}});
}

TEST_CASE("every vertex has two arrows in and two out") {
  const std::vector<QuiverSchema> schemas = {QuiverSchema::qmn(3, 2), QuiverSchema::qmn(1, -1),
                                             QuiverSchema::qmn(5, 3), QuiverSchema::qhat(5),
                                             QuiverSchema::qinf(), QuiverSchema::qinfxinf()};
  for (const QuiverSchema& q : schemas) {
    const Window w = q.pair_vertices() ? Window::box(-3, 3, -3, 3) : Window::range(-6, 6);
    for (const VertexId& v : vertices_in(q, w)) {
      CHECK(q.arrows_from(v).size() == 2);
      CHECK(q.arrows_into(v).size() == 2);
      for (const ArrowId& r : q.arrows_from(v)) CHECK(q.tail(r) == v);
      for (const ArrowId& r : q.arrows_into(v)) CHECK(q.head(r) == v);
    }
  }
}

TEST_CASE("window subquiver of the weight chain") {
  // (m, n) = (3, 2) on [0, 2]: single arrow 0 -> 2, vertex 1 isolated.
  const QuiverSchema aw = QuiverSchema::awindow(3, 2, 0, 2);
  CHECK(aw.arrows_from(VertexId::of(0)).size() == 1);
  CHECK(aw.arrows_from(VertexId::of(1)).empty());
  CHECK(aw.arrows_into(VertexId::of(2)).size() == 1);
  CHECK_THROWS_AS(aw.arrows_from(VertexId::of(3)), std::domain_error);
  CHECK(vertices_in(aw, Window::range(-10, 10)).size() == 3);
}

TEST_CASE("windows normalize their corners") {
  const Window w = Window::range(5, -5);
  CHECK(w.lo.a == -5);
  CHECK(w.hi.a == 5);
  const QuiverSchema q32 = QuiverSchema::qmn(3, 2);
  CHECK(w.contains(VertexId::of(0), q32));
  CHECK_FALSE(w.contains(VertexId::of(6), q32));
}
