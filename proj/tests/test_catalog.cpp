#include <doctest.h>

#include <set>

#include "quivrep/catalog.hpp"
#include "quivrep/morphism.hpp"

using namespace quivrep;

TEST_CASE("window specs validate their parameters") {
  CHECK_THROWS_AS(WindowSpec(2, 4, 0, 1), std::domain_error);
  CHECK_THROWS_AS(WindowSpec(3, 2, 0, 4), std::domain_error);  // b - a > m
  CHECK(WindowSpec(3, 2, 0, 3).boundary_case());
  CHECK_FALSE(WindowSpec(3, 2, 0, 2).boundary_case());
}

TEST_CASE("interval catalog over the (3,2) window {0,1,2}") {
  const auto entries = catalog_interval_modules(WindowSpec(3, 2, 0, 2));
  REQUIRE(entries.size() == 4);  // chain 0 - 2 gives 3 intervals, plus S_1
  std::multiset<std::size_t> dims;
  for (const CatalogEntry& e : entries) {
    dims.insert(e.rep.total_dim());
    CHECK(verify_entry(e));
    CHECK(is_indecomposable(e.rep).verdict == IndecVerdict::yes);
  }
  CHECK(dims == std::multiset<std::size_t>{1, 1, 1, 2});
}

TEST_CASE("one-vertex window has a single interval") {
  const auto entries = catalog_interval_modules(WindowSpec(3, 2, 0, 0));
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].rep.total_dim() == 1);
}

TEST_CASE("cyclic boundary windows are refused by the interval catalog") {
  // (2,1) on {0,1,2}: the long arrow closes a cycle.
  CHECK_THROWS_AS(catalog_interval_modules(WindowSpec(2, 1, 0, 2)), std::domain_error);
}

TEST_CASE("the boundary window of (3,2) is still a chain") {
  // {0,1,2,3}: edges 0-2, 1-3 and the long arrow 0-3 form the chain 2-0-3-1,
  // so there are 4+3+2+1 intervals.
  const auto entries = catalog_interval_modules(WindowSpec(3, 2, 0, 3));
  CHECK(entries.size() == 10);
  for (const CatalogEntry& e : entries) CHECK(verify_entry(e));
}

TEST_CASE("the cycle family separates its parameter") {
  const auto fam = catalog_lambda_family(2, {rat_of(1), rat_of(2), rat_of(3)});
  REQUIRE(fam.size() == 3);
  for (const CatalogEntry& e : fam) {
    CHECK(e.rep.total_dim() == 3);
    CHECK(is_indecomposable(e.rep).verdict == IndecVerdict::yes);
    CHECK(check_relations(e.rep, relations_for_support(e.rep, RelFamily::Rmn)).empty());
  }
  CHECK_FALSE(iso_indecomposable(fam[1].rep, fam[2].rep));
  CHECK_FALSE(iso_indecomposable(fam[0].rep, fam[1].rep));
  CHECK(iso_indecomposable(fam[1].rep, fam[1].rep));

  CHECK_THROWS_AS(catalog_lambda_family(2, {rat_of(0)}), std::domain_error);
}

TEST_CASE("tampered catalog entries fail re-verification") {
  const auto entries = catalog_interval_modules(WindowSpec(3, 2, 0, 2));
  CatalogEntry tampered = entries[0];
  tampered.rep = direct_sum(tampered.rep, tampered.rep);
  CHECK_FALSE(verify_entry(tampered));
}

TEST_CASE("band catalog at width 1 sees only the simple") {
  const BandCatalog cat = catalog_preprojective_band({1, 2, {-1, 0, 1}, 3});
  REQUIRE(cat.classes.size() == 1);
  CHECK(cat.classes[0].rep.total_dim() == 1);
  CHECK(cat.classes[0].rep.dim(VertexId::of(0)) == 1);
}

TEST_CASE("band catalog at width 2 with scalar entries") {
  const BandCatalog cat = catalog_preprojective_band({2, 1, {-1, 0, 1}, 3});
  // Simple, forward interval, backward interval.
  REQUIRE(cat.classes.size() == 3);
  for (const CatalogEntry& e : cat.classes) {
    CHECK(check_relations(e.rep, relations_for_support(e.rep, RelFamily::Rinf)).empty());
    CHECK(is_indecomposable(e.rep).verdict == IndecVerdict::yes);
  }
  // Deterministic and stable across decomposition seeds.
  const BandCatalog again = catalog_preprojective_band({2, 1, {-1, 0, 1}, 12345});
  CHECK(again.classes.size() == cat.classes.size());
}

TEST_CASE("shift to origin anchors the support") {
  Representation v(QuiverSchema::qinf());
  v.set_dim(VertexId::of(3), 1);
  v.set_dim(VertexId::of(4), 1);
  v.set_mat({ArrowKind::fwd, VertexId::of(3)}, Matrix::identity(1));
  const Representation s = shift_to_origin(v);
  CHECK(s.dim(VertexId::of(0)) == 1);
  CHECK(s.dim(VertexId::of(1)) == 1);
  CHECK_FALSE(s.mat({ArrowKind::fwd, VertexId::of(0)}).is_zero());
}

TEST_CASE("band support enumeration matches a brute-force subset scan") {
  // Small instance: diagonals {0, 1} with dims 2 and 1, extent 3.
  const std::vector<std::int64_t> diags = {0, 1};
  const std::map<std::int64_t, int> diag_dim = {{0, 2}, {1, 1}};
  const int extent = 3;
  const std::size_t max_cells = 3;

  auto supports = enumerate_band_supports(diags, diag_dim, extent, max_cells);
  for (auto& s : supports) std::sort(s.begin(), s.end());
  std::sort(supports.begin(), supports.end());
  // No duplicates.
  CHECK(std::adjacent_find(supports.begin(), supports.end()) == supports.end());

  // Oracle: scan all subsets of the 6 candidate cells.
  std::vector<VertexId> cells;
  for (std::int64_t k : diags)
    for (int i = 0; i < extent; ++i) cells.push_back(VertexId::of(i, i - k));
  std::sort(cells.begin(), cells.end());
  auto adjacent = [](VertexId a, VertexId b) {
    const std::int64_t da = b.a - a.a, db = b.b - a.b;
    return (da == 1 && db == 0) || (da == -1 && db == 0) || (da == 0 && db == 1) ||
           (da == 0 && db == -1);
  };
  std::vector<std::vector<VertexId>> expected;
  for (unsigned mask = 1; mask < (1u << cells.size()); ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (mask & (1u << i)) sub.push_back(cells[i]);
    if (sub.size() > max_cells) continue;
    // connected?
    std::vector<bool> seen(sub.size(), false);
    seen[0] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < sub.size(); ++i)
        for (std::size_t j = 0; j < sub.size(); ++j)
          if (seen[i] && !seen[j] && adjacent(sub[i], sub[j])) {
            seen[j] = true;
            grew = true;
          }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) continue;
    // per-diagonal counts in [1, dim], min first coordinate 0
    std::map<std::int64_t, int> count;
    std::int64_t min_i = extent;
    for (const VertexId& x : sub) {
      ++count[x.a - x.b];
      min_i = std::min(min_i, x.a);
    }
    bool ok = min_i == 0;
    for (std::int64_t k : diags)
      if (!count.count(k) || count[k] > diag_dim.at(k)) ok = false;
    for (const auto& [k, c] : count)
      if (!diag_dim.count(k)) ok = false;
    if (ok) expected.push_back(sub);
  }
  std::sort(expected.begin(), expected.end());
  CHECK(supports == expected);
}

TEST_CASE("minimal polynomials and their rational roots") {
  // Rotation by 90 degrees: t^2 + 1, no rational roots.
  const Matrix rot = Matrix::from_int_rows({{0, 1}, {-1, 0}});
  const auto mp = minimal_polynomial(rot);
  REQUIRE(mp.size() == 3);
  CHECK(mp[0] == 1);
  CHECK(mp[1] == 0);
  CHECK(mp[2] == 1);
  CHECK(polynomial_rational_roots(mp).empty());

  // Distinct diagonal entries: roots recovered exactly.
  Matrix diag(2, 2);
  diag.at(0, 0) = rat_of(2);
  diag.at(1, 1) = rat_of(-3, 2);
  const auto roots = polynomial_rational_roots(minimal_polynomial(diag));
  REQUIRE(roots.size() == 2);
  CHECK(((roots[0] == rat_of(2) && roots[1] == rat_of(-3, 2)) ||
         (roots[1] == rat_of(2) && roots[0] == rat_of(-3, 2))));

  // Nilpotent Jordan block: minimal polynomial t^2, root 0 only.
  const Matrix nil = Matrix::from_int_rows({{0, 1}, {0, 0}});
  const auto nil_mp = minimal_polynomial(nil);
  REQUIRE(nil_mp.size() == 3);
  CHECK(nil_mp[0] == 0);
  CHECK(nil_mp[1] == 0);
  const auto nil_roots = polynomial_rational_roots(nil_mp);
  REQUIRE(nil_roots.size() == 1);
  CHECK(nil_roots[0] == 0);

  // The identity has degree-1 minimal polynomial.
  CHECK(minimal_polynomial(Matrix::identity(3)).size() == 2);
}

TEST_CASE("band lift of the forward interval") {
  Representation v(QuiverSchema::qinf());
  v.set_dim(VertexId::of(0), 1);
  v.set_dim(VertexId::of(1), 1);
  v.set_mat({ArrowKind::fwd, VertexId::of(0)}, Matrix::identity(1));

  const BandLiftResult res = lift_band_rep(v);
  REQUIRE(res.lift.has_value());
  CHECK(res.all_translates_agree);
  CHECK(res.lift->dim(VertexId::of(0, 0)) == 1);
  CHECK(res.lift->dim(VertexId::of(1, 0)) == 1);
  CHECK_FALSE(res.lift->mat({ArrowKind::rho1, VertexId::of(0, 0)}).is_zero());
  CHECK(iso(pushforward_left(QuiverMorphism::f(), *res.lift), v, 2) == IsoVerdict::yes);
}

TEST_CASE("band lift of a simple is the grid simple") {
  Representation v(QuiverSchema::qinf());
  v.set_dim(VertexId::of(0), 1);
  const BandLiftResult res = lift_band_rep(v);
  REQUIRE(res.lift.has_value());
  CHECK(res.lift->total_dim() == 1);
  CHECK(res.lift->dim(VertexId::of(0, 0)) == 1);

  Representation wide(QuiverSchema::qinf());
  for (std::int64_t k = 0; k < 6; ++k) wide.set_dim(VertexId::of(k), 1);
  CHECK_THROWS_AS(lift_band_rep(wide), std::domain_error);
}

TEST_CASE("window classification on the finite-type window") {
  const ClassifyResult r = window_classify(WindowSpec(3, 2, 0, 2), 3, 1001, 40);
  CHECK(r.interval_classes.size() == 4);
  CHECK(r.unmatched_leaves == 0);
  CHECK(r.uncertified_leaves == 0);
  CHECK(!r.seen.empty());
  std::size_t total_hits = 0;
  for (const auto& [cls, count] : r.seen) {
    CHECK(cls < r.interval_classes.size());
    total_hits += count;
  }
  CHECK(total_hits > 0);
}

TEST_CASE("window classification exhibits the cycle family for n = 1") {
  const std::vector<Rat> lambdas = {rat_of(1), rat_of(2), rat_of(3), rat_of(5), rat_of(7)};
  const ClassifyResult r = window_classify(WindowSpec(2, 1, 0, 2), 2, 1002, 20, lambdas);
  CHECK(r.boundary_case);
  CHECK(r.lambda_classes.size() == 5);
  CHECK(r.lambda_family_pairwise_noniso);
  for (const CatalogEntry& e : r.lambda_classes) {
    CHECK(e.rep.dims().size() == 3);
    CHECK(e.rep.total_dim() == 3);
  }
}

TEST_CASE("single-vertex window classifies to one class") {
  const ClassifyResult r = window_classify(WindowSpec(3, 2, 1, 1), 2, 1003, 20);
  CHECK(r.interval_classes.size() == 1);
  CHECK(r.unmatched_leaves == 0);
  CHECK(r.seen.size() == 1);
}

TEST_CASE("window classification is deterministic for a fixed seed") {
  const ClassifyResult a = window_classify(WindowSpec(3, 2, 0, 2), 2, 77, 15);
  const ClassifyResult b = window_classify(WindowSpec(3, 2, 0, 2), 2, 77, 15);
  CHECK(a.seen == b.seen);
  CHECK(a.unmatched_leaves == b.unmatched_leaves);
}
