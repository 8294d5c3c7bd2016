#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quivrep/path.hpp"
#include "quivrep/representation.hpp"

namespace quivrep {

/// Quiver morphism between two schemas. The two closed-form rules of interest
/// are `f` (grid -> doubly infinite chain, (i,j) |-> i-j) and `g(m,n)`
/// (Q_{m,n} -> Qhat_{|m+n|}, k |-> j_k with k = j_k * m mod (m+n)); arbitrary
/// finite vertex/arrow tables cover windowed examples.
class QuiverMorphism {
 public:
  enum class Kind { F, G, Table };

  /// f : QinfXinf -> Qinf.
  static QuiverMorphism f();
  /// g : Q_{m,n} -> Qhat_{|m+n|}; requires gcd(m, n) = 1.
  static QuiverMorphism g(std::int64_t m, std::int64_t n);
  /// Finite table; validates compatibility with tails and heads.
  static QuiverMorphism table(QuiverSchema source, QuiverSchema target,
                              std::map<VertexId, VertexId> vmap,
                              std::map<ArrowId, ArrowId> amap);

  Kind kind() const { return kind_; }
  const QuiverSchema& source() const { return source_; }
  const QuiverSchema& target() const { return target_; }
  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  const std::map<VertexId, VertexId>& vertex_table() const { return vmap_; }
  const std::map<ArrowId, ArrowId>& arrow_table() const { return amap_; }

  VertexId map_vertex(VertexId v) const;
  ArrowId map_arrow(ArrowId r) const;
  Path map_path(const Path& p) const;

  /// Fiber over a target vertex, intersected with a finite source window.
  std::vector<VertexId> fiber_in_window(VertexId target_vertex, const Window& w) const;
  /// Fiber over a target vertex, intersected with a finite candidate list.
  std::vector<VertexId> fiber_in(VertexId target_vertex,
                                 const std::vector<VertexId>& candidates) const;

 private:
  Kind kind_ = Kind::F;
  QuiverSchema source_, target_;
  std::int64_t m_ = 0, n_ = 0, s_ = 0, minv_ = 0;
  std::map<VertexId, VertexId> vmap_;
  std::map<ArrowId, ArrowId> amap_;
};

struct CoveringReport {
  bool ok = true;
  std::optional<VertexId> witness;
  std::string reason;
};

/// Arrow-level covering criterion: for every source vertex in the window, the
/// morphism restricts to a bijection from arrows into x onto arrows into
/// phi(x). This is equivalent to unique head-anchored path lifting by
/// induction on path length.
CoveringReport is_covering(const QuiverMorphism& phi, const Window& w);

/// The unique source path with the given head mapping to tau. Requires
/// phi(head_vertex) == head(tau); throws std::domain_error otherwise or when
/// lifting fails (non-covering morphism).
Path lift_path(const QuiverMorphism& phi, const Path& tau, VertexId head_vertex);

/// Restriction phi^*(V'): a lazily evaluated source representation, queryable
/// at any vertex or arrow and materializable over a finite window.
class LazyRep {
 public:
  LazyRep(QuiverMorphism phi, Representation target_rep);

  int dim(VertexId v) const;
  Matrix mat(ArrowId r) const;
  Representation materialize(const Window& w) const;

  const QuiverMorphism& morphism() const { return phi_; }
  const Representation& target_rep() const { return rep_; }

 private:
  QuiverMorphism phi_;
  Representation rep_;
};

LazyRep restrict(const QuiverMorphism& phi, const Representation& target_rep);

/// Left extension phi_!: direct sum over fibers, blocks in ascending source
/// vertex order. Requires finitely supported input.
Representation pushforward_left(const QuiverMorphism& phi, const Representation& v);

/// Right extension phi_*: for finitely supported input this is the finite
/// product over fibers, which coincides with the coproduct matrix for matrix.
Representation pushforward_right(const QuiverMorphism& phi, const Representation& v);

/// phi_! on morphisms (blockwise).
RepMorphism pushforward_left_mor(const QuiverMorphism& phi, const RepMorphism& s);

/// Hom(phi^* V', U) computed against a finitely supported partner by
/// materializing the restriction over U's support plus one arrow step.
std::vector<RepMorphism> hom_basis_from_restriction(const LazyRep& v, const Representation& u);

/// Lifts each target-relation generator to every fiber point of its head
/// inside the window, keeping instances whose tail also lies in the window.
RelationSet preimage_relations(const QuiverMorphism& phi, const RelationSet& target_rels,
                               const Window& w);

/// Diagonal translation twist on the grid: result(i,j) = V(i+z, j+z).
Representation translate(const Representation& v, std::int64_t z);

/// Canonical representative of the translation orbit: the support vertex with
/// minimal i+j (ties by minimal i) is moved to first coordinate 0. Idempotent;
/// throws on the zero representation.
Representation orbit_canonical(const Representation& v);

}  // namespace quivrep
