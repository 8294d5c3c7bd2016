#include <doctest.h>

#include "quivrep/catalog.hpp"
#include "quivrep/lie.hpp"
#include "quivrep/rng.hpp"

using namespace quivrep;

namespace {

const QuiverSchema q32 = QuiverSchema::qmn(3, 2);

UElement mono(std::int64_t r, std::int64_t k, std::int64_t s) {
  return UElement(UMonomial{r, UIndex::single(k), s});
}

UElement mono_pair(std::int64_t r, std::int64_t i, std::int64_t j, std::int64_t s) {
  return UElement(UMonomial{r, UIndex::pair(i, j), s});
}

}  // namespace

TEST_CASE("idempotents and shift rules in the rational mode") {
  const UMode m32 = UMode::rational_mode(3, 2);

  // a_3 . (alpha1 a_0) = alpha1 a_0 because alpha1 a_0 = a_3 alpha1.
  CHECK(u_mul(mono(0, 3, 0), mono(1, 0, 0), m32) == mono(1, 0, 0));
  // a_2 . (alpha1 a_0) = 0.
  CHECK(u_mul(mono(0, 2, 0), mono(1, 0, 0), m32).is_zero());
  // (alpha1 a_0) . (a_0 alpha2) = alpha1 a_0 alpha2.
  CHECK(u_mul(mono(1, 0, 0), mono(0, 0, 1), m32) == mono(1, 0, 1));

  // Orthogonal idempotents.
  CHECK(u_mul(mono(0, 1, 0), mono(0, 1, 0), m32) == mono(0, 1, 0));
  CHECK(u_mul(mono(0, 1, 0), mono(0, 2, 0), m32).is_zero());

  // Bilinearity over sums.
  UElement x = mono(0, 3, 0);
  x += mono(0, 2, 0);
  CHECK(u_mul(x, mono(1, 0, 0), m32) == mono(1, 0, 0));
}

TEST_CASE("pair-indexed mode shifts coordinates independently") {
  const UMode irr = UMode::irrational_mode();
  // alpha1 a_(i,j) = a_(i+1,j) alpha1; alpha2 a_(i,j) = a_(i,j+1) alpha2.
  CHECK(u_mul(mono_pair(0, 1, 0, 0), mono_pair(1, 0, 0, 0), irr) == mono_pair(1, 0, 0, 0));
  // a_(0,1) . (alpha2 a_(0,0)) with the right factor in normal form a_(0,1) alpha2.
  CHECK(u_mul(mono_pair(0, 0, 1, 0), mono_pair(0, 0, 1, 1), irr) == mono_pair(0, 0, 1, 1));
  CHECK(u_mul(mono_pair(0, 0, 0, 0), mono_pair(1, 0, 0, 0), irr).is_zero());

  // Associativity on seeded triples; no parameter enters anywhere.
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    auto rnd = [&]() {
      return mono_pair(rng.next_int(0, 2), rng.next_int(-2, 2), rng.next_int(-2, 2),
                       rng.next_int(0, 2));
    };
    const UElement a = rnd(), b = rnd(), c = rnd();
    CHECK(u_mul(u_mul(a, b, irr), c, irr) == u_mul(a, u_mul(b, c, irr), irr));
  }
}

TEST_CASE("mode mismatches are rejected") {
  CHECK_THROWS_AS(u_mul(mono(0, 0, 0), mono_pair(0, 0, 0, 0), UMode::rational_mode(3, 2)),
                  std::domain_error);
  CHECK_THROWS_AS(u_mul(mono(0, 0, 0), mono(0, 0, 0), UMode::irrational_mode()),
                  std::domain_error);
}

TEST_CASE("phi sends paths to normal-form monomials") {
  // rho1^0 rho2^{-2} (applied right to left, tail -2).
  const Path p(q32, VertexId::of(-2),
               {{ArrowKind::rho2, VertexId::of(-2)}, {ArrowKind::rho1, VertexId::of(0)}});
  CHECK(phi_map_path(p) == mono(1, 0, 1));

  CHECK(phi_map_path(Path(q32, VertexId::of(7))) == mono(0, 7, 0));

  // The commutation generator is in the kernel.
  PathSum gen(q32);
  gen.add_term(Path(q32, VertexId::of(0),
                    {{ArrowKind::rho2, VertexId::of(0)}, {ArrowKind::rho1, VertexId::of(2)}}),
               1);
  gen.add_term(Path(q32, VertexId::of(0),
                    {{ArrowKind::rho1, VertexId::of(0)}, {ArrowKind::rho2, VertexId::of(3)}}),
               -1);
  CHECK(phi_map(gen).is_zero());
}

TEST_CASE("psi produces the canonical path of a monomial") {
  const Path p1 = psi_path(UMonomial{1, UIndex::single(0), 1}, 3, 2);
  CHECK(p1.tail() == VertexId::of(-2));
  CHECK(p1.length() == 2);
  CHECK(p1.arrows()[0] == ArrowId{ArrowKind::rho2, VertexId::of(-2)});
  CHECK(p1.arrows()[1] == ArrowId{ArrowKind::rho1, VertexId::of(0)});

  CHECK(psi_path(UMonomial{0, UIndex::single(4), 0}, 3, 2) == Path(q32, VertexId::of(4)));

  const Path p2 = psi_path(UMonomial{2, UIndex::single(1), 0}, 3, 2);
  CHECK(p2.tail() == VertexId::of(1));
  CHECK(p2.arrows()[0] == ArrowId{ArrowKind::rho1, VertexId::of(1)});
  CHECK(p2.arrows()[1] == ArrowId{ArrowKind::rho1, VertexId::of(4)});

  CHECK_THROWS_AS(psi_path(UMonomial{1, UIndex::pair(0, 0), 0}, 3, 2), std::domain_error);
}

TEST_CASE("roundtrip identities on bounded filtered pieces") {
  // (1,1) is the double-arrow case: both arrow families step by one but stay
  // distinct, and the roundtrip still holds.
  for (const auto& [m, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {3, 2}, {1, -1}, {2, 1}, {1, 1}}) {
    const RoundtripReport rep = roundtrip_check(m, n, 4, Window::range(-10, 10), 100, 3);
    CHECK(rep.ok);
    CHECK(rep.paths_checked > 0);
    CHECK(rep.monomials_checked > 0);
    CHECK(rep.products_checked == 100);
    if (!rep.ok)
      for (const auto& c : rep.counterexamples) MESSAGE(c);
  }
}

TEST_CASE("phi is multiplicative on seeded pairs") {
  CHECK(phi_multiplicativity_failures(3, 2, 200, 77) == 0);
  CHECK(phi_multiplicativity_failures(1, -1, 200, 78) == 0);
}

TEST_CASE("weight module of the two-point module has zero operators") {
  Representation v(q32);
  v.set_dim(VertexId::of(0), 1);
  v.set_dim(VertexId::of(5), 1);
  const WeightModule w = rep_to_weight_module(v, rat_of(0));
  CHECK(w.alpha1.is_zero());
  CHECK(w.alpha2.is_zero());
  CHECK(lie_check(w).ok);
}

TEST_CASE("weight module of a cycle family member passes the commutation check") {
  const Representation v = catalog_lambda_family(2, {rat_of(2)}).front().rep;
  const WeightModule w = rep_to_weight_module(v, rat_of(0));
  CHECK(lie_check(w).ok);
  // One forward block per chain arrow.
  CHECK(w.alpha2.rows() == 3);
  CHECK_FALSE(w.alpha2.is_zero());
}

TEST_CASE("gamma offsets shift the Cartan eigenvalues but not the checks") {
  const Representation v = catalog_lambda_family(2, {rat_of(5)}).front().rep;
  CHECK(lie_check(rep_to_weight_module(v, rat_of(1, 2))).ok);
}

TEST_CASE("a relation-violating module is rejected or detected") {
  const Representation bad = build_V_lambda(rat_of(2), /*repaired=*/false).rep;
  CHECK_THROWS_AS(rep_to_weight_module(bad, rat_of(0)), std::domain_error);

  const WeightModule w = rep_to_weight_module(bad, rat_of(0), /*verify_relations=*/false);
  const LieCheckReport r = lie_check(w);
  CHECK_FALSE(r.ok);
  CHECK(r.detail == "alpha1 alpha2 != alpha2 alpha1");

  const Representation good = build_V_lambda(rat_of(2), /*repaired=*/true).rep;
  CHECK(lie_check(rep_to_weight_module(good, rat_of(0))).ok);
}

TEST_CASE("weight modules require a weight or grid schema") {
  Representation v(QuiverSchema::qhat(5));
  v.set_dim(VertexId::of(0), 1);
  CHECK_THROWS_AS(rep_to_weight_module(v, rat_of(0)), std::domain_error);
}
