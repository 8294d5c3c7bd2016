#include "quivrep/morphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace quivrep {

namespace {

std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

std::int64_t mod_pos(std::int64_t k, std::int64_t s) {
  std::int64_t r = k % s;
  return r < 0 ? r + s : r;
}

// Inverse of a mod s (s > 0, gcd(a, s) = 1), by extended Euclid.
std::int64_t mod_inverse(std::int64_t a, std::int64_t s) {
  std::int64_t t = 0, newt = 1, r = s, newr = mod_pos(a, s);
  while (newr != 0) {
    const std::int64_t q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1) throw std::domain_error("element not invertible mod s");
  return mod_pos(t, s);
}

}  // namespace

QuiverMorphism QuiverMorphism::f() {
  QuiverMorphism phi;
  phi.kind_ = Kind::F;
  phi.source_ = QuiverSchema::qinfxinf();
  phi.target_ = QuiverSchema::qinf();
  return phi;
}

QuiverMorphism QuiverMorphism::g(std::int64_t m, std::int64_t n) {
  if (m == 0 || n == 0 || std::gcd(iabs(m), iabs(n)) != 1)
    throw std::domain_error("g requires nonzero m, n with gcd(m, n) = 1");
  QuiverMorphism phi;
  phi.kind_ = Kind::G;
  phi.m_ = m;
  phi.n_ = n;
  phi.s_ = iabs(m + n);
  phi.source_ = QuiverSchema::qmn(m, n);
  phi.target_ = QuiverSchema::qhat(phi.s_);
  if (phi.s_ > 0) phi.minv_ = mod_inverse(m, phi.s_);
  return phi;
}

QuiverMorphism QuiverMorphism::table(QuiverSchema source, QuiverSchema target,
                                     std::map<VertexId, VertexId> vmap,
                                     std::map<ArrowId, ArrowId> amap) {
  QuiverMorphism phi;
  phi.kind_ = Kind::Table;
  phi.source_ = std::move(source);
  phi.target_ = std::move(target);
  phi.vmap_ = std::move(vmap);
  phi.amap_ = std::move(amap);
  for (const auto& [v, w] : phi.vmap_) {
    if (!phi.source_.valid_vertex(v) || !phi.target_.valid_vertex(w))
      throw std::domain_error("table morphism: invalid vertex entry");
  }
  for (const auto& [r, r2] : phi.amap_) {
    if (!phi.source_.valid_arrow(r) || !phi.target_.valid_arrow(r2))
      throw std::domain_error("table morphism: invalid arrow entry");
    auto vt = phi.vmap_.find(phi.source_.tail(r));
    auto vh = phi.vmap_.find(phi.source_.head(r));
    if (vt == phi.vmap_.end() || vh == phi.vmap_.end())
      throw std::domain_error("table morphism: arrow endpoint not in vertex table");
    if (!(vt->second == phi.target_.tail(r2)) || !(vh->second == phi.target_.head(r2)))
      throw std::domain_error("table morphism does not commute with tail/head");
  }
  return phi;
}

VertexId QuiverMorphism::map_vertex(VertexId v) const {
  switch (kind_) {
    case Kind::F:
      return VertexId::of(v.a - v.b);
    case Kind::G: {
      if (s_ == 0) return VertexId::of(v.a * m_);  // m = +-1, j_k = k * m^{-1} = k * m
      return VertexId::of(mod_pos(v.a * minv_, s_));
    }
    case Kind::Table: {
      auto it = vmap_.find(v);
      if (it == vmap_.end()) throw std::domain_error("vertex not in morphism table");
      return it->second;
    }
  }
  throw std::logic_error("unreachable");
}

ArrowId QuiverMorphism::map_arrow(ArrowId r) const {
  switch (kind_) {
    case Kind::F: {
      const VertexId base = map_vertex(r.base);
      if (r.kind == ArrowKind::rho1) return {ArrowKind::fwd, base};
      if (r.kind == ArrowKind::rho2) return {ArrowKind::bwd, base};
      throw std::domain_error("arrow not in source schema of f");
    }
    case Kind::G: {
      const VertexId base = map_vertex(r.base);
      if (r.kind == ArrowKind::rho1) return {ArrowKind::fwd, base};
      if (r.kind == ArrowKind::rho2) return {ArrowKind::bwd, base};
      throw std::domain_error("arrow not in source schema of g");
    }
    case Kind::Table: {
      auto it = amap_.find(r);
      if (it == amap_.end()) throw std::domain_error("arrow not in morphism table");
      return it->second;
    }
  }
  throw std::logic_error("unreachable");
}

Path QuiverMorphism::map_path(const Path& p) const {
  std::vector<ArrowId> arrows;
  arrows.reserve(p.length());
  for (const ArrowId& r : p.arrows()) arrows.push_back(map_arrow(r));
  return Path(target_, map_vertex(p.tail()), std::move(arrows));
}

std::vector<VertexId> QuiverMorphism::fiber_in_window(VertexId tv, const Window& w) const {
  tv = target_.normalize_vertex(tv);
  std::vector<VertexId> out;
  switch (kind_) {
    case Kind::F:
      // {(i, j) : i - j = tv.a} inside the box.
      for (std::int64_t i = w.lo.a; i <= w.hi.a; ++i) {
        const std::int64_t j = i - tv.a;
        if (j >= w.lo.b && j <= w.hi.b) out.push_back(VertexId::of(i, j));
      }
      break;
    case Kind::G:
      if (s_ == 0) {
        const std::int64_t k = tv.a * m_;
        if (k >= w.lo.a && k <= w.hi.a) out.push_back(VertexId::of(k));
      } else {
        for (std::int64_t k = w.lo.a; k <= w.hi.a; ++k)
          if (mod_pos(k * minv_, s_) == tv.a) out.push_back(VertexId::of(k));
      }
      break;
    case Kind::Table:
      for (const auto& [v, image] : vmap_)
        if (image == tv && w.contains(v, source_)) out.push_back(v);
      break;
  }
  return out;
}

std::vector<VertexId> QuiverMorphism::fiber_in(VertexId tv,
                                               const std::vector<VertexId>& candidates) const {
  tv = target_.normalize_vertex(tv);
  std::vector<VertexId> out;
  for (const VertexId& v : candidates)
    if (map_vertex(v) == tv) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CoveringReport is_covering(const QuiverMorphism& phi, const Window& w) {
  for (const VertexId& x : vertices_in(phi.source(), w)) {
    std::vector<ArrowId> in_src;
    try {
      in_src = phi.source().arrows_into(x);
    } catch (const std::domain_error&) {
      continue;
    }
    const std::vector<ArrowId> in_tgt = phi.target().arrows_into(phi.map_vertex(x));

    std::multiset<ArrowId> images;
    for (const ArrowId& r : in_src) {
      try {
        images.insert(phi.map_arrow(r));
      } catch (const std::domain_error&) {
        return {false, x, "arrow into " + phi.source().vertex_str(x) + " has no image"};
      }
    }
    for (const ArrowId& r2 : in_tgt) {
      const auto cnt = images.count(r2);
      if (cnt == 0)
        return {false, x,
                "no arrow into " + phi.source().vertex_str(x) + " lifts " +
                    phi.target().arrow_str(r2)};
      if (cnt > 1)
        return {false, x, "lift of " + phi.target().arrow_str(r2) + " is not unique"};
    }
    if (images.size() != in_tgt.size())
      return {false, x, "in-arrow counts differ at " + phi.source().vertex_str(x)};
  }
  return {};
}

Path lift_path(const QuiverMorphism& phi, const Path& tau, VertexId head_vertex) {
  if (!(tau.schema() == phi.target())) throw std::domain_error("lift_path: path not in target");
  head_vertex = phi.source().normalize_vertex(head_vertex);
  if (!(phi.map_vertex(head_vertex) == tau.head()))
    throw std::domain_error("lift_path: head vertex does not map to head of path");

  VertexId at = head_vertex;
  std::vector<ArrowId> lifted(tau.length(), ArrowId{});
  for (std::size_t idx = tau.length(); idx-- > 0;) {
    const ArrowId& target_arrow = tau.arrows()[idx];
    std::optional<ArrowId> found;
    for (const ArrowId& cand : phi.source().arrows_into(at)) {
      ArrowId image;
      try {
        image = phi.map_arrow(cand);
      } catch (const std::domain_error&) {
        continue;
      }
      if (image == target_arrow) {
        if (found) throw std::domain_error("lift_path: lift not unique (not a covering)");
        found = cand;
      }
    }
    if (!found) throw std::domain_error("lift_path: no lift (not a covering)");
    lifted[idx] = *found;
    at = phi.source().tail(*found);
  }
  return Path(phi.source(), at, std::move(lifted));
}

LazyRep::LazyRep(QuiverMorphism phi, Representation target_rep)
    : phi_(std::move(phi)), rep_(std::move(target_rep)) {
  if (!(rep_.schema() == phi_.target()))
    throw std::domain_error("restriction: representation not on the target schema");
}

int LazyRep::dim(VertexId v) const { return rep_.dim(phi_.map_vertex(v)); }

Matrix LazyRep::mat(ArrowId r) const { return rep_.mat(phi_.map_arrow(r)); }

Representation LazyRep::materialize(const Window& w) const {
  Representation out(phi_.source());
  for (const VertexId& x : vertices_in(phi_.source(), w)) out.set_dim(x, dim(x));
  for (const VertexId& x : out.support())
    for (const ArrowId& r : phi_.source().arrows_from(x)) {
      const VertexId h = phi_.source().head(r);
      if (!w.contains(h, phi_.source()) || out.dim(h) == 0) continue;
      out.set_mat(r, mat(r));
    }
  return out;
}

LazyRep restrict(const QuiverMorphism& phi, const Representation& target_rep) {
  return LazyRep(phi, target_rep);
}

namespace {

struct FiberLayout {
  std::vector<VertexId> members;         // ascending source vertices
  std::map<VertexId, std::size_t> offset;  // block offsets
  std::size_t total = 0;
};

FiberLayout fiber_layout(const QuiverMorphism& phi, const Representation& v, VertexId tv) {
  FiberLayout lay;
  lay.members = phi.fiber_in(tv, v.support());
  for (const VertexId& x : lay.members) {
    lay.offset[x] = lay.total;
    lay.total += static_cast<std::size_t>(v.dim(x));
  }
  return lay;
}

}  // namespace

Representation pushforward_left(const QuiverMorphism& phi, const Representation& v) {
  if (!(v.schema() == phi.source()))
    throw std::domain_error("pushforward: representation not on the source schema");
  Representation out(phi.target());

  std::set<VertexId> target_support;
  for (const VertexId& x : v.support()) target_support.insert(phi.map_vertex(x));

  std::map<VertexId, FiberLayout> layouts;
  for (const VertexId& tv : target_support) {
    FiberLayout lay = fiber_layout(phi, v, tv);
    out.set_dim(tv, static_cast<int>(lay.total));
    layouts[tv] = std::move(lay);
  }

  // Assemble each target arrow meeting the support from the blocks of the
  // source arrows lying over it.
  std::set<ArrowId> target_arrows;
  for (const VertexId& tv : target_support) {
    for (const ArrowId& r : phi.target().arrows_from(tv)) target_arrows.insert(r);
    for (const ArrowId& r : phi.target().arrows_into(tv)) target_arrows.insert(r);
  }
  for (const ArrowId& tr : target_arrows) {
    const VertexId tt = phi.target().tail(tr), th = phi.target().head(tr);
    if (out.dim(tt) == 0 || out.dim(th) == 0) continue;
    const FiberLayout& lt = layouts.at(tt);
    const FiberLayout& lh = layouts.at(th);
    Matrix block(lh.total, lt.total);
    bool nonzero = false;
    for (const VertexId& x : lt.members)
      for (const ArrowId& r : phi.source().arrows_from(x)) {
        if (!(phi.map_arrow(r) == tr)) continue;
        const VertexId h = phi.source().head(r);
        auto oh = lh.offset.find(h);
        if (oh == lh.offset.end()) continue;
        const Matrix m = v.mat(r);
        if (m.is_zero()) continue;
        block.set_block(oh->second, lt.offset.at(x), m);
        nonzero = true;
      }
    if (nonzero) out.set_mat(tr, std::move(block));
  }
  return out;
}

Representation pushforward_right(const QuiverMorphism& phi, const Representation& v) {
  // Finite fibers within a finite support: the product over a fiber equals the
  // coproduct under the same canonical ordering.
  return pushforward_left(phi, v);
}

RepMorphism pushforward_left_mor(const QuiverMorphism& phi, const RepMorphism& s) {
  Representation pv = pushforward_left(phi, s.source);
  Representation pu = pushforward_left(phi, s.target);
  RepMorphism out{pv, pu, {}};

  std::set<VertexId> target_support;
  for (const VertexId& x : s.source.support()) target_support.insert(phi.map_vertex(x));
  for (const VertexId& x : s.target.support()) target_support.insert(phi.map_vertex(x));

  for (const VertexId& tv : target_support) {
    const FiberLayout lv = fiber_layout(phi, s.source, tv);
    const FiberLayout lu = fiber_layout(phi, s.target, tv);
    if (lv.total == 0 || lu.total == 0) continue;
    Matrix block(lu.total, lv.total);
    bool nonzero = false;
    for (const VertexId& x : lv.members) {
      auto ou = lu.offset.find(x);
      if (ou == lu.offset.end()) continue;
      const Matrix m = s.comp(x);
      if (m.is_zero()) continue;
      block.set_block(ou->second, lv.offset.at(x), m);
      nonzero = true;
    }
    if (nonzero) out.comps[tv] = std::move(block);
  }
  return out;
}

std::vector<RepMorphism> hom_basis_from_restriction(const LazyRep& v, const Representation& u) {
  if (!(u.schema() == v.morphism().source()))
    throw std::domain_error("hom_basis_from_restriction: schema mismatch");
  // Window: support of U plus tails of arrows into it; components elsewhere
  // map into the zero space and impose nothing.
  std::set<VertexId> verts;
  for (const VertexId& x : u.support()) {
    verts.insert(x);
    for (const ArrowId& r : u.schema().arrows_into(x)) verts.insert(u.schema().tail(r));
  }
  if (verts.empty()) return {};
  std::int64_t alo = verts.begin()->a, ahi = alo, blo = verts.begin()->b, bhi = blo;
  for (const VertexId& x : verts) {
    alo = std::min(alo, x.a);
    ahi = std::max(ahi, x.a);
    blo = std::min(blo, x.b);
    bhi = std::max(bhi, x.b);
  }
  const Window w = u.schema().pair_vertices() ? Window::box(alo, ahi, blo, bhi)
                                              : Window{VertexId::of(alo, 0), VertexId::of(ahi, 0)};
  return hom_basis(v.materialize(w), u);
}

RelationSet preimage_relations(const QuiverMorphism& phi, const RelationSet& target_rels,
                               const Window& w) {
  RelFamily fam = target_rels.family;
  if (phi.kind() == QuiverMorphism::Kind::F)
    fam = RelFamily::RinfXinf;
  else if (phi.kind() == QuiverMorphism::Kind::G)
    fam = RelFamily::Rmn;
  RelationSet out{phi.source(), fam, {}};

  for (const PathSum& gen : target_rels.generators) {
    if (gen.is_zero()) continue;
    const VertexId head = gen.terms().begin()->first.head();
    for (const auto& [p, c] : gen.terms()) {
      (void)c;
      if (!(p.head() == head))
        throw std::domain_error("preimage_relations: generator terms have mismatched heads");
    }
    for (const VertexId& x : phi.fiber_in_window(head, w)) {
      PathSum lifted(phi.source());
      std::optional<VertexId> tail;
      bool tails_match = true;
      for (const auto& [p, c] : gen.terms()) {
        const Path lift = lift_path(phi, p, x);
        if (!tail)
          tail = lift.tail();
        else if (!(*tail == lift.tail()))
          tails_match = false;
        lifted.add_term(lift, c);
      }
      if (!tails_match)
        throw std::domain_error("preimage_relations: lifted terms have mismatched tails");
      if (tail && !w.contains(*tail, phi.source())) continue;
      out.generators.push_back(std::move(lifted));
    }
  }
  return out;
}

Representation translate(const Representation& v, std::int64_t z) {
  if (v.schema().family() != Family::QinfXinf)
    throw std::domain_error("translate is defined on the grid schema only");
  Representation out(v.schema());
  for (const VertexId& x : v.support()) out.set_dim(VertexId::of(x.a - z, x.b - z), v.dim(x));
  for (const auto& [r, m] : v.mats())
    out.set_mat({r.kind, VertexId::of(r.base.a - z, r.base.b - z)}, m);
  return out;
}

Representation orbit_canonical(const Representation& v) {
  if (v.schema().family() != Family::QinfXinf)
    throw std::domain_error("orbit_canonical is defined on the grid schema only");
  if (v.is_zero()) throw std::domain_error("orbit_canonical: zero representation");
  VertexId anchor = v.support().front();
  for (const VertexId& x : v.support()) {
    const auto key = std::make_pair(x.a + x.b, x.a);
    const auto best = std::make_pair(anchor.a + anchor.b, anchor.a);
    if (key < best) anchor = x;
  }
  return translate(v, anchor.a);
}

}  // namespace quivrep
