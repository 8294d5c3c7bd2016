#include "quivrep/suite.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "quivrep/decompose.hpp"
#include "quivrep/lie.hpp"
#include "quivrep/morphism.hpp"
#include "quivrep/rng.hpp"

namespace quivrep {

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::uncertified: return "UNCERTIFIED";
    case CheckStatus::expected_fail: return "EXPECTED-FAIL";
  }
  return "?";
}

struct Runner {
  ReportDoc report;

  void run(const std::string& id, const std::string& subject,
           const std::function<std::string()>& body, bool expect_failure = false) {
    CheckResult r;
    r.id = id;
    r.subject = subject;
    const auto t0 = std::chrono::steady_clock::now();
    std::string witness;
    try {
      witness = body();  // empty string means the property held
    } catch (const std::exception& e) {
      witness = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (expect_failure) {
      r.status = witness.empty() ? CheckStatus::fail : CheckStatus::expected_fail;
      r.witness = witness.empty() ? "expected a failing witness, saw none" : witness;
    } else {
      r.status = witness.empty() ? CheckStatus::pass : CheckStatus::fail;
      r.witness = witness;
    }
    report.checks.push_back(std::move(r));
  }
};

Representation two_point_rep(std::int64_t m, std::int64_t n) {
  Representation v(QuiverSchema::qmn(m, n));
  v.set_dim(VertexId::of(0), 1);
  v.set_dim(VertexId::of(m + n), 1);
  return v;
}

/// Relation-satisfying representation on Q_{m,n}: restriction of a seeded
/// Rhat-satisfying representation of the cyclic quiver, materialized over the
/// window (one-sided random maps make the preprojective relations hold).
Representation seeded_relation_rep(const QuiverMorphism& g, const Window& w, int dim_max,
                                   Rng& rng) {
  const QuiverSchema target = g.target();
  Representation vp(target);
  const std::int64_t s = target.s();
  for (std::int64_t k = 0; k < s; ++k)
    vp.set_dim(VertexId::of(k), static_cast<int>(rng.next_int(1, dim_max)));
  const bool forward_only = rng.next_int(0, 1) == 0;
  for (std::int64_t k = 0; k < s; ++k) {
    const ArrowId r{forward_only ? ArrowKind::fwd : ArrowKind::bwd, VertexId::of(k)};
    Matrix m(vp.dim(target.head(r)), vp.dim(VertexId::of(k)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rat_of(rng.next_int(-2, 2));
    vp.set_mat(r, std::move(m));
  }
  return restrict(g, vp).materialize(w);
}

std::string iso_witness(IsoVerdict v, const std::string& what) {
  if (v == IsoVerdict::yes) return "";
  return what + (v == IsoVerdict::no ? ": not isomorphic" : ": uncertified");
}

}  // namespace

std::string ReportDoc::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << status_name(c.status) << " " << c.id << ": " << c.subject;
    if (!c.witness.empty() && c.status != CheckStatus::pass) os << " [" << c.witness << "]";
    os << " (" << c.seconds << "s)\n";
  }
  os << (ok() ? "ALL CHECKS PASSED" : "FAILURES PRESENT") << "\n";
  return os.str();
}

nlohmann::json ReportDoc::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks)
    arr.push_back({{"id", c.id},
                   {"subject", c.subject},
                   {"status", status_name(c.status)},
                   {"witness", c.witness},
                   {"seconds", c.seconds}});
  return {{"checks", arr}, {"ok", ok()}};
}

ReportDoc run_benchmark_suite(const SuiteConfig& config) {
  Runner runner;

  // A1: the path algebra modulo the commutation ideal is isomorphic to the
  // idempotented enveloping algebra, verified on filtered pieces.
  runner.run("A1", "algebra roundtrip for (2,1),(3,2),(1,-1),(5,3), degree 4, window [-10,10]",
             [&]() -> std::string {
               for (const auto& [m, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{
                        {2, 1}, {3, 2}, {1, -1}, {5, 3}}) {
                 const RoundtripReport r =
                     roundtrip_check(m, n, 4, Window::range(-10, 10), 100, config.seed);
                 if (!r.ok)
                   return "(" + std::to_string(m) + "," + std::to_string(n) + "): " +
                          r.counterexamples.front();
               }
               return "";
             });

  // A2: multiplicativity of the path-algebra-to-enveloping-algebra map.
  runner.run("A2", "phi multiplicativity on 200 seeded path pairs per (m,n)",
             [&]() -> std::string {
               for (const auto& [m, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{
                        {2, 1}, {3, 2}, {1, -1}, {5, 3}}) {
                 const std::size_t bad = phi_multiplicativity_failures(m, n, 200, config.seed + 2);
                 if (bad)
                   return "(" + std::to_string(m) + "," + std::to_string(n) + "): " +
                          std::to_string(bad) + " failures";
               }
               return "";
             });

  // A3: the push-down functor is not full.
  runner.run("A3", "dim End(V) = 2 and dim End(g_!V) = 4 for the two-point module",
             [&]() -> std::string {
               const Representation v = two_point_rep(3, 2);
               const std::size_t d1 = hom_basis(v, v).size();
               const Representation pv = pushforward_left(QuiverMorphism::g(3, 2), v);
               const std::size_t d2 = hom_basis(pv, pv).size();
               if (d1 != 2) return "dim End(V) = " + std::to_string(d1);
               if (d2 != 4) return "dim End(g_!V) = " + std::to_string(d2);
               return "";
             });

  // A4: the push-down functor is not essentially surjective: the cyclic
  // lambda representation has no zero path composite (the full forward cycle
  // acts by lambda^5), while every pushforward of a windowed module kills a
  // long enough composite.
  runner.run("A4", "cyclic lambda=2 module has invertible cycles; pushforwards kill a composite",
             [&]() -> std::string {
               const QuiverSchema qh = QuiverSchema::qhat(5);
               const Representation v = cyclic_rep(5, rat_of(2), rat_of(1));
               if (!check_relations(v, relation_instances(qh, RelFamily::Rhat, Window::range(0, 4)))
                        .empty())
                 return "cyclic module violates the preprojective relations";
               // Every composite of length <= 5 is a nonzero scalar.
               std::vector<Path> frontier;
               for (std::int64_t k = 0; k < 5; ++k) frontier.push_back(Path(qh, VertexId::of(k)));
               for (int len = 1; len <= 5; ++len) {
                 std::vector<Path> next;
                 for (const Path& p : frontier)
                   for (const ArrowId& r : qh.arrows_from(p.head())) next.push_back(p.then(r));
                 frontier = std::move(next);
                 for (const Path& p : frontier)
                   if (v.path_matrix(p).is_zero()) return "zero composite at " + p.to_string();
               }
               // The forward 5-cycle acts by 2^5 at every vertex.
               for (std::int64_t k = 0; k < 5; ++k) {
                 Path cyc(qh, VertexId::of(k));
                 for (int t = 0; t < 5; ++t) cyc = cyc.then({ArrowKind::fwd, cyc.head()});
                 if (!(v.path_matrix(cyc) == rat_of(32) * Matrix::identity(1)))
                   return "forward cycle does not act by 2^5";
               }
               // Pushforwards of windowed catalog modules kill a composite
               // longer than the support width.
               const QuiverMorphism g = QuiverMorphism::g(3, 2);
               for (const CatalogEntry& e : catalog_interval_modules(WindowSpec(3, 2, 0, 2))) {
                 const Representation pu = pushforward_left(g, e.rep);
                 const auto supp = e.rep.support();
                 const std::int64_t width = supp.back().a - supp.front().a + 1;
                 bool found_zero = false;
                 for (std::int64_t k = 0; k < 5 && !found_zero; ++k) {
                   Path cyc(qh, VertexId::of(k));
                   for (std::int64_t t = 0; t <= width; ++t)
                     cyc = cyc.then({ArrowKind::fwd, cyc.head()});
                   if (pu.dim(cyc.tail()) > 0 && pu.path_matrix(cyc).is_zero()) found_zero = true;
                 }
                 if (!found_zero) return "no vanishing composite over " + e.name;
               }
               return "";
             });

  // A5: covering verification plus lift round-trips.
  runner.run("A5", "covering checks for f and g with 100 seeded lift round-trips each",
             [&]() -> std::string {
               Rng rng(config.seed + 5);
               const QuiverMorphism f = QuiverMorphism::f();
               const CoveringReport cf = is_covering(f, Window::box(-5, 5, -5, 5));
               if (!cf.ok) return "f not covering: " + cf.reason;
               auto lift_roundtrips = [&](const QuiverMorphism& phi, const Window& w,
                                          const std::string& name) -> std::string {
                 for (std::size_t t = 0; t < config.covering_lifts; ++t) {
                   VertexId base = phi.source().pair_vertices()
                                       ? VertexId::of(rng.next_int(-3, 3), rng.next_int(-3, 3))
                                       : VertexId::of(rng.next_int(w.lo.a, w.hi.a));
                   Path p(phi.source(), base);
                   const int len = static_cast<int>(rng.next_int(0, 5));
                   for (int i = 0; i < len; ++i) {
                     const auto arrows = phi.source().arrows_from(p.head());
                     p = p.then(arrows[static_cast<std::size_t>(
                         rng.next_int(0, static_cast<long long>(arrows.size()) - 1))]);
                   }
                   if (!(lift_path(phi, phi.map_path(p), p.head()) == p))
                     return name + ": lift round-trip failed at " + p.to_string();
                 }
                 return "";
               };
               std::string w = lift_roundtrips(f, Window::box(-3, 3, -3, 3), "f");
               if (!w.empty()) return w;
               for (const auto& [m, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{
                        {2, 1}, {3, 2}, {5, 3}}) {
                 const QuiverMorphism g = QuiverMorphism::g(m, n);
                 const CoveringReport cg = is_covering(g, Window::range(-10, 10));
                 if (!cg.ok)
                   return "g(" + std::to_string(m) + "," + std::to_string(n) +
                          ") not covering: " + cg.reason;
                 w = lift_roundtrips(g, Window::range(-10, 10),
                                     "g(" + std::to_string(m) + "," + std::to_string(n) + ")");
                 if (!w.empty()) return w;
               }
               return "";
             });

  // A6: restriction is left adjoint to the right extension.
  runner.run("A6", "dim Hom(phi* V', U) = dim Hom(V', phi_* U) on seeded pairs for f and g",
             [&]() -> std::string {
               Rng rng(config.seed + 6);
               const QuiverMorphism g = QuiverMorphism::g(3, 2);
               for (std::size_t t = 0; t < config.adjunction_pairs; ++t) {
                 const Representation vp =
                     random_rep(g.target(), Window::range(0, 4), 2, rng);
                 const Representation u =
                     random_rep(g.source(), Window::range(-3, 6), 2, rng);
                 const std::size_t lhs = hom_basis_from_restriction(restrict(g, vp), u).size();
                 const std::size_t rhs = hom_basis(vp, pushforward_right(g, u)).size();
                 if (lhs != rhs)
                   return "g: " + std::to_string(lhs) + " != " + std::to_string(rhs);
               }
               const QuiverMorphism f = QuiverMorphism::f();
               for (std::size_t t = 0; t < config.adjunction_pairs; ++t) {
                 const Representation vp =
                     random_rep(f.target(), Window::range(-2, 2), 2, rng);
                 const Representation u =
                     random_rep(f.source(), Window::box(-1, 1, -1, 1), 2, rng);
                 const std::size_t lhs = hom_basis_from_restriction(restrict(f, vp), u).size();
                 const std::size_t rhs = hom_basis(vp, pushforward_right(f, u)).size();
                 if (lhs != rhs)
                   return "f: " + std::to_string(lhs) + " != " + std::to_string(rhs);
               }
               return "";
             });

  // A7: additivity and exactness of the left extension.
  runner.run("A7", "g_! preserves direct sums, kernels and cokernels on seeded morphisms",
             [&]() -> std::string {
               Rng rng(config.seed + 7);
               const QuiverMorphism g = QuiverMorphism::g(3, 2);
               for (std::size_t t = 0; t < config.exactness_pairs; ++t) {
                 const Representation v = random_rep(g.source(), Window::range(0, 5), 2, rng);
                 const Representation u = random_rep(g.source(), Window::range(0, 5), 2, rng);
                 const IsoVerdict sum_ok =
                     iso(pushforward_left(g, direct_sum(v, u)),
                         direct_sum(pushforward_left(g, v), pushforward_left(g, u)), rng.fork());
                 std::string w = iso_witness(sum_ok, "additivity");
                 if (!w.empty()) return w;

                 const RepMorphism s = random_morphism(v, u, rng);
                 const RepMorphism ps = pushforward_left_mor(g, s);
                 w = iso_witness(iso(pushforward_left(g, kernel_rep(s).first),
                                     kernel_rep(ps).first, rng.fork()),
                                 "kernel preservation");
                 if (!w.empty()) return w;
                 w = iso_witness(iso(pushforward_left(g, cokernel_rep(s).first),
                                     cokernel_rep(ps).first, rng.fork()),
                                 "cokernel preservation");
                 if (!w.empty()) return w;
               }
               return "";
             });

  // A8: relation transport along g.
  runner.run("A8", "preimage of the cyclic relations matches the commutation relations; "
                   "pushforwards of relation-satisfying modules satisfy them",
             [&]() -> std::string {
               Rng rng(config.seed + 8);
               for (const auto& [m, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{
                        {2, 1}, {3, 2}, {5, 3}}) {
                 const QuiverMorphism g = QuiverMorphism::g(m, n);
                 const Window w = Window::range(0, 2 * (m + n));
                 const Window cyc = Window::range(0, g.target().s() - 1);
                 const RelationSet rhat =
                     relation_instances(g.target(), RelFamily::Rhat, cyc);
                 const RelationSet pre = preimage_relations(g, rhat, w);
                 const RelationSet direct = relation_instances(g.source(), RelFamily::Rmn, w);
                 if (!relation_sets_match(pre, direct))
                   return "(" + std::to_string(m) + "," + std::to_string(n) +
                          "): preimage relations differ from the direct instances";
                 for (int t = 0; t < 10; ++t) {
                   const Representation v =
                       seeded_relation_rep(g, Window::range(-m - n, 2 * (m + n)), 2, rng);
                   if (!check_relations(v, relations_for_support(v, RelFamily::Rmn)).empty())
                     return "seeded module does not satisfy the source relations";
                   const Representation pv = pushforward_left(g, v);
                   if (!check_relations(pv, relation_instances(g.target(), RelFamily::Rhat, cyc))
                            .empty())
                     return "pushforward violates the target relations";
                 }
               }
               return "";
             });

  // A9: finite representation type on a narrow window.
  runner.run("A9", "window (3,2,[0,2]): every leaf of 200 seeded modules is one of 4 intervals",
             [&]() -> std::string {
               const ClassifyResult r = window_classify(WindowSpec(3, 2, 0, 2), 3,
                                                        config.seed + 9, config.classify_samples);
               if (r.interval_classes.size() != 4)
                 return "expected 4 interval classes, got " +
                        std::to_string(r.interval_classes.size());
               if (r.uncertified_leaves) return "uncertified leaves present";
               if (r.unmatched_leaves)
                 return std::to_string(r.unmatched_leaves) + " leaves matched no interval";
               return "";
             });

  // A10: tame behaviour on the cyclic window.
  runner.run("A10", "window (2,1,[0,2]): lambda family gives 5 pairwise non-isomorphic classes",
             [&]() -> std::string {
               const std::vector<CatalogEntry> fam =
                   catalog_lambda_family(2, config.lambda_values);
               if (fam.size() != 5) return "expected 5 family members";
               for (const CatalogEntry& e : fam) {
                 if (e.rep.total_dim() != 3 || e.rep.dims().size() != 3)
                   return e.name + ": wrong dimension vector";
                 if (is_indecomposable(e.rep).verdict != IndecVerdict::yes)
                   return e.name + ": not certified indecomposable";
               }
               for (std::size_t i = 0; i < fam.size(); ++i)
                 for (std::size_t j = i + 1; j < fam.size(); ++j)
                   if (iso_indecomposable(fam[i].rep, fam[j].rep))
                     return fam[i].name + " isomorphic to " + fam[j].name;
               return "";
             });

  // A11a: the printed 7-vertex family member violates the grid relations.
  runner.run("A11a", "printed grid family member fails the relation check at the lower square",
             [&]() -> std::string {
               const CatalogEntry printed = build_V_lambda(rat_of(2), /*repaired=*/false);
               const auto violations =
                   check_relations(printed.rep, relations_for_support(printed.rep, RelFamily::RinfXinf));
               if (violations.empty()) return "";
               std::ostringstream os;
               os << "violated: " << violations.front().generator.to_string() << " residual "
                  << violations.front().residual;
               return os.str();
             },
             /*expect_failure=*/true);

  // A11b: the repaired variant passes relations, is indecomposable, separates
  // the parameter, and its chain images do too.
  runner.run("A11b", "repaired grid family: relations, indecomposability, parameter separation",
             [&]() -> std::string {
               const QuiverMorphism f = QuiverMorphism::f();
               std::vector<Representation> reps, images;
               for (const Rat& lam : config.vlambda_values) {
                 const CatalogEntry e = build_V_lambda(lam, /*repaired=*/true);
                 if (!check_relations(e.rep, relations_for_support(e.rep, RelFamily::RinfXinf))
                          .empty())
                   return e.name + ": relations fail";
                 if (is_indecomposable(e.rep).verdict != IndecVerdict::yes)
                   return e.name + ": not indecomposable";
                 const Representation img = pushforward_left(f, e.rep);
                 if (!check_relations(img, relations_for_support(img, RelFamily::Rinf)).empty())
                   return e.name + ": image relations fail";
                 if (is_indecomposable(img).verdict != IndecVerdict::yes)
                   return e.name + ": image not indecomposable";
                 reps.push_back(e.rep);
                 images.push_back(img);
               }
               for (std::size_t i = 0; i < reps.size(); ++i)
                 for (std::size_t j = i + 1; j < reps.size(); ++j) {
                   if (iso_indecomposable(reps[i], reps[j])) return "family members isomorphic";
                   if (iso_indecomposable(images[i], images[j])) return "images isomorphic";
                 }
               return "";
             });

  // A12: band lifting and orbit finiteness.
  runner.run("A12", "every band catalog class lifts to the grid, uniquely up to translation",
             [&]() -> std::string {
               auto lift_all = [&](const BandCatalogParams& params,
                                   const std::string& tag) -> std::string {
                 const BandCatalog cat = catalog_preprojective_band(params);
                 if (cat.classes.empty()) return tag + ": band catalog came out empty";
                 for (const CatalogEntry& e : cat.classes) {
                   const BandLiftResult lift = lift_band_rep(e.rep);
                   if (!lift.lift) return tag + "/" + e.name + ": no lift found within bounds";
                   if (!lift.all_translates_agree)
                     return tag + "/" + e.name + ": found lifts disagree after canonicalization";
                   if (!check_relations(*lift.lift,
                                        relations_for_support(*lift.lift, RelFamily::RinfXinf))
                            .empty())
                     return tag + "/" + e.name + ": lift violates the grid relations";
                   const IsoVerdict ok =
                       iso(pushforward_left(QuiverMorphism::f(), *lift.lift), e.rep, 17);
                   if (ok != IsoVerdict::yes)
                     return tag + "/" + e.name + ": pushforward of lift not isomorphic";
                 }
                 BandCatalogParams reseeded = params;
                 reseeded.seed = params.seed + 101;
                 const BandCatalog again = catalog_preprojective_band(reseeded);
                 if (again.classes.size() != cat.classes.size())
                   return tag + ": class count not stable across seeds: " +
                          std::to_string(cat.classes.size()) + " vs " +
                          std::to_string(again.classes.size());
                 return "";
               };
               std::string w = lift_all(config.band, "width4");
               if (!w.empty()) return w;
               return lift_all(config.band_signed, "signed-width3");
             });

  // A13: weight-module adapter.
  runner.run("A13", "commutation relations hold for all converted catalog modules",
             [&]() -> std::string {
               std::vector<CatalogEntry> entries = catalog_interval_modules(WindowSpec(3, 2, 0, 2));
               for (CatalogEntry& e : catalog_lambda_family(2, config.lambda_values))
                 entries.push_back(std::move(e));
               for (const Rat& lam : config.vlambda_values)
                 entries.push_back(build_V_lambda(lam, /*repaired=*/true));
               for (const CatalogEntry& e : entries) {
                 const WeightModule w = rep_to_weight_module(e.rep, rat_of(0));
                 const LieCheckReport r = lie_check(w);
                 if (!r.ok) return e.name + ": " + r.detail;
               }
               return "";
             });

  if (config.tamper_catalog) {
    runner.run("NEG", "negative control: tampered catalog entry must be rejected",
               [&]() -> std::string {
                 Representation s0(QuiverSchema::qmn(3, 2));
                 s0.set_dim(VertexId::of(0), 1);
                 CatalogEntry tampered{"tampered", direct_sum(s0, s0), true, RelFamily::Rmn,
                                       "negative control"};
                 if (verify_entry(tampered)) return "";
                 return "tampered entry detected: claims indecomposable but splits";
               });
  }

  return runner.report;
}

}  // namespace quivrep
