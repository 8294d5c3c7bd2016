#include <doctest.h>

#include <algorithm>
#include <set>

#include "quivrep/path.hpp"
#include "quivrep/rng.hpp"

using namespace quivrep;

namespace {

const QuiverSchema q32 = QuiverSchema::qmn(3, 2);

Path arrow_path(const QuiverSchema& q, ArrowKind kind, std::int64_t base) {
  return Path(q, VertexId::of(base), {{kind, VertexId::of(base)}});
}

Path random_path(const QuiverSchema& q, const Window& w, int max_len, Rng& rng) {
  VertexId base = q.pair_vertices() ? VertexId::of(rng.next_int(w.lo.a, w.hi.a),
                                                   rng.next_int(w.lo.b, w.hi.b))
                                    : VertexId::of(rng.next_int(w.lo.a, w.hi.a));
  Path p(q, q.normalize_vertex(base));
  const int len = static_cast<int>(rng.next_int(0, max_len));
  for (int i = 0; i < len; ++i) {
    const auto arrows = q.arrows_from(p.head());
    p = p.then(arrows[static_cast<std::size_t>(rng.next_int(0, arrows.size() - 1))]);
  }
  return p;
}

PathSum random_pathsum(const QuiverSchema& q, const Window& w, Rng& rng) {
  PathSum s(q);
  const int terms = static_cast<int>(rng.next_int(1, 3));
  for (int i = 0; i < terms; ++i)
    s.add_term(random_path(q, w, 3, rng), rat_of(rng.next_int(-3, 3)));
  return s;
}

/// Independent reduction oracle: applies the single commutation rewrite at a
/// seeded random admissible position until none applies.
Path reduce_random_order(const Path& p, Rng& rng) {
  Path cur = p;
  while (true) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < cur.length(); ++i)
      if (rewrite_inversion_at(cur, i)) spots.push_back(i);
    if (spots.empty()) return cur;
    const std::size_t pick = spots[static_cast<std::size_t>(rng.next_int(0, spots.size() - 1))];
    cur = *rewrite_inversion_at(cur, pick);
  }
}

}  // namespace

TEST_CASE("path composition") {
  const Path p1 = arrow_path(q32, ArrowKind::rho1, 0);  // 0 -> 3
  const Path p2 = arrow_path(q32, ArrowKind::rho2, 3);  // 3 -> 5
  const auto prod = compose(p2, p1);
  REQUIRE(prod.has_value());
  CHECK(prod->tail() == VertexId::of(0));
  CHECK(prod->head() == VertexId::of(5));
  CHECK(prod->length() == 2);

  // head 2 != tail 1: zero
  CHECK_FALSE(compose(arrow_path(q32, ArrowKind::rho1, 1), arrow_path(q32, ArrowKind::rho2, 0))
                  .has_value());

  // trivial paths are one-sided identities
  const Path e3(q32, VertexId::of(3));
  const auto left = compose(e3, p1);
  REQUIRE(left.has_value());
  CHECK(*left == p1);
  const auto right = compose(p1, Path(q32, VertexId::of(0)));
  REQUIRE(right.has_value());
  CHECK(*right == p1);
}

TEST_CASE("mixed schemas are rejected") {
  const Path a = arrow_path(q32, ArrowKind::rho1, 0);
  const Path b(QuiverSchema::qmn(2, 1), VertexId::of(3));
  CHECK_THROWS_AS(compose(a, b), std::domain_error);
  PathSum s(q32);
  CHECK_THROWS_AS(s.add_term(b, rat_of(1)), std::domain_error);
}

TEST_CASE("path sum multiplication") {
  const Path r10 = arrow_path(q32, ArrowKind::rho1, 0);
  CHECK(pathsum_mul(PathSum(r10), PathSum(Path(q32, VertexId::of(0)))) == PathSum(r10));

  // (rho2^3 + rho1^3) * rho1^0 has two composable terms
  PathSum lhs(q32);
  lhs.add_term(arrow_path(q32, ArrowKind::rho2, 3), 1);
  lhs.add_term(arrow_path(q32, ArrowKind::rho1, 3), 1);
  const PathSum prod = pathsum_mul(lhs, PathSum(r10));
  CHECK(prod.size() == 2);
  for (const auto& [p, c] : prod.terms()) {
    CHECK(p.tail() == VertexId::of(0));
    CHECK(p.length() == 2);
    CHECK(c == 1);
  }

  // non-composable pair gives zero
  CHECK(pathsum_mul(PathSum(arrow_path(q32, ArrowKind::rho1, 1)),
                    PathSum(arrow_path(q32, ArrowKind::rho2, 0)))
            .is_zero());
}

TEST_CASE("path sum multiplication is associative on seeded triples") {
  const std::vector<QuiverSchema> schemas = {q32, QuiverSchema::qmn(1, -1), QuiverSchema::qhat(5),
                                             QuiverSchema::qinf(), QuiverSchema::qinfxinf()};
  for (const QuiverSchema& q : schemas) {
    Rng rng(1234);
    const Window w = q.pair_vertices() ? Window::box(-2, 2, -2, 2) : Window::range(-5, 5);
    for (int t = 0; t < 200; ++t) {
      const PathSum a = random_pathsum(q, w, rng);
      const PathSum b = random_pathsum(q, w, rng);
      const PathSum c = random_pathsum(q, w, rng);
      CHECK(pathsum_mul(pathsum_mul(a, b), c) == pathsum_mul(a, pathsum_mul(b, c)));
    }
  }
}

TEST_CASE("normal form straightens a single inversion") {
  // rho2^3 rho1^0 = rho1^2 rho2^0 modulo the commutation ideal
  const Path p = Path(q32, VertexId::of(0),
                      {{ArrowKind::rho1, VertexId::of(0)}, {ArrowKind::rho2, VertexId::of(3)}});
  const Path expected = Path(q32, VertexId::of(0),
                             {{ArrowKind::rho2, VertexId::of(0)}, {ArrowKind::rho1, VertexId::of(2)}});
  CHECK(normal_form_path(p) == expected);
  CHECK(normal_form(PathSum(p)) == PathSum(expected));
}

TEST_CASE("normal form of a longer word matches brute-force reduction") {
  // rho2^5 rho1^2 rho2^0 (applied right to left): 0 -> 2 -> 5 -> 7
  const Path p = Path(q32, VertexId::of(0),
                      {{ArrowKind::rho2, VertexId::of(0)},
                       {ArrowKind::rho1, VertexId::of(2)},
                       {ArrowKind::rho2, VertexId::of(5)}});
  // One rewrite: rho1^4 rho2^2 rho2^0
  const Path expected = Path(q32, VertexId::of(0),
                             {{ArrowKind::rho2, VertexId::of(0)},
                              {ArrowKind::rho2, VertexId::of(2)},
                              {ArrowKind::rho1, VertexId::of(4)}});
  CHECK(normal_form_path(p) == expected);

  Rng rng(5);
  CHECK(reduce_random_order(p, rng) == expected);
}

TEST_CASE("trivial paths are already normal") {
  const Path e0(q32, VertexId::of(0));
  CHECK(normal_form_path(e0) == e0);
}

TEST_CASE("rewriting terminates and is confluent on seeded monomials") {
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    const Path p = random_path(q32, Window::range(-6, 6), 6, rng);
    const Path canonical = normal_form_path(p);
    CHECK(normal_form_path(canonical) == canonical);  // idempotent
    CHECK(canonical.tail() == p.tail());
    CHECK(canonical.head() == p.head());
    // reductions in two different random orders agree with the closed form
    Rng o1(rng.fork()), o2(rng.fork());
    CHECK(reduce_random_order(p, o1) == canonical);
    CHECK(reduce_random_order(p, o2) == canonical);
    // canonical means: no rho1 applied before a rho2
    bool seen_rho1 = false;
    for (const ArrowId& r : canonical.arrows()) {
      if (r.kind == ArrowKind::rho1) seen_rho1 = true;
      if (r.kind == ArrowKind::rho2) CHECK_FALSE(seen_rho1);
    }
  }
}

TEST_CASE("relation instances on the cyclic quiver") {
  const QuiverSchema q5 = QuiverSchema::qhat(5);
  const RelationSet rels = relation_instances(q5, RelFamily::Rhat, Window::range(0, 4));
  CHECK(rels.generators.size() == 5);
  for (const PathSum& g : rels.generators) {
    REQUIRE(g.size() == 2);
    auto it = g.terms().begin();
    const Path& a = it->first;
    const Rat ca = it->second;
    ++it;
    const Path& b = it->first;
    CHECK(a.length() == 2);
    CHECK(b.length() == 2);
    CHECK(a.tail() == b.tail());
    CHECK(a.head() == b.head());
    CHECK(ca * it->second == -1);
  }
}

TEST_CASE("relation instances on a weight window") {
  const RelationSet rels = relation_instances(q32, RelFamily::Rmn, Window::range(0, 5));
  REQUIRE(rels.generators.size() == 1);
  // Exactly the k = 0 generator rho1^2 rho2^0 - rho2^3 rho1^0.
  PathSum expected(q32);
  expected.add_term(Path(q32, VertexId::of(0),
                         {{ArrowKind::rho2, VertexId::of(0)}, {ArrowKind::rho1, VertexId::of(2)}}),
                    1);
  expected.add_term(Path(q32, VertexId::of(0),
                         {{ArrowKind::rho1, VertexId::of(0)}, {ArrowKind::rho2, VertexId::of(3)}}),
                    -1);
  CHECK(relation_canonical(rels.generators[0]) == relation_canonical(expected));

  // Independent window scan.
  int inside = 0;
  for (std::int64_t k = -20; k <= 20; ++k)
    if (k >= 0 && k + 5 <= 5) ++inside;
  CHECK(inside == 1);
}

TEST_CASE("relation instances on the grid") {
  const QuiverSchema grid = QuiverSchema::qinfxinf();
  const RelationSet rels = relation_instances(grid, RelFamily::RinfXinf, Window::box(0, 1, 0, 1));
  REQUIRE(rels.generators.size() == 1);
  const PathSum& g = rels.generators[0];
  CHECK(g.terms().begin()->first.tail() == VertexId::of(0, 0));
  CHECK(g.terms().begin()->first.head() == VertexId::of(1, 1));
}

TEST_CASE("every relation generator is a parallel pair") {
  const std::vector<std::pair<QuiverSchema, RelFamily>> cases = {
      {q32, RelFamily::Rmn},
      {QuiverSchema::qmn(1, -1), RelFamily::Rmn},
      {QuiverSchema::qhat(5), RelFamily::Rhat},
      {QuiverSchema::qinf(), RelFamily::Rinf},
      {QuiverSchema::qinfxinf(), RelFamily::RinfXinf}};
  for (const auto& [q, fam] : cases) {
    const Window w = q.pair_vertices() ? Window::box(-3, 3, -3, 3) : Window::range(-6, 6);
    const RelationSet rels = relation_instances(q, fam, w);
    CHECK(!rels.generators.empty());
    for (const PathSum& g : rels.generators) {
      REQUIRE(g.size() == 2);
      const Path& a = g.terms().begin()->first;
      const Path& b = std::next(g.terms().begin())->first;
      CHECK(a.tail() == b.tail());
      CHECK(a.head() == b.head());
    }
  }
}

TEST_CASE("incompatible relation families are rejected") {
  CHECK_THROWS_AS(relation_instances(q32, RelFamily::Rhat, Window::range(0, 4)),
                  std::domain_error);
  CHECK_THROWS_AS(relation_instances(QuiverSchema::qhat(5), RelFamily::Rinf, Window::range(0, 4)),
                  std::domain_error);
  CHECK_THROWS_AS(normal_form(PathSum(QuiverSchema::qinf())), std::domain_error);
}
