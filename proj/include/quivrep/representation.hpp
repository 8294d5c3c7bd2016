#pragma once

#include <map>
#include <optional>
#include <vector>

#include "quivrep/matrix.hpp"
#include "quivrep/path.hpp"
#include "quivrep/quiver.hpp"
#include "quivrep/rng.hpp"

namespace quivrep {

/// Finitely supported representation: rational vector spaces on finitely many
/// vertices and exact matrices on arrows. A stored matrix for arrow r has
/// shape dim(head) x dim(tail); matrices that are zero (or touch a dimension-0
/// vertex) need not be stored, and queries materialize them on demand.
class Representation {
 public:
  Representation() = default;  // empty representation of the default schema
  explicit Representation(QuiverSchema schema) : schema_(std::move(schema)) {}

  const QuiverSchema& schema() const { return schema_; }
  const std::map<VertexId, int>& dims() const { return dims_; }
  const std::map<ArrowId, Matrix>& mats() const { return mats_; }

  int dim(VertexId v) const;
  std::size_t total_dim() const;
  bool is_zero() const { return dims_.empty(); }
  std::vector<VertexId> support() const;

  /// Matrix of an arrow, shape dim(head) x dim(tail) (zero if unset).
  Matrix mat(ArrowId r) const;
  /// Matrix of a path, composed in application order.
  Matrix path_matrix(const Path& p) const;

  void set_dim(VertexId v, int d);
  void set_mat(ArrowId r, Matrix m);

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.schema_ == b.schema_ && a.dims_ == b.dims_ && a.mats_ == b.mats_;
  }

 private:
  QuiverSchema schema_;
  std::map<VertexId, int> dims_;
  std::map<ArrowId, Matrix> mats_;
};

/// Graded linear map between two representations of the same schema.
/// Intertwining: target(r) comp(tail) == comp(head) source(r) for each arrow
/// meeting either support.
struct RepMorphism {
  Representation source;
  Representation target;
  std::map<VertexId, Matrix> comps;

  Matrix comp(VertexId v) const;
  bool is_zero() const;
  bool intertwines() const;
};

RepMorphism identity_morphism(const Representation& v);
RepMorphism zero_morphism(const Representation& v, const Representation& u);
RepMorphism compose(const RepMorphism& f, const RepMorphism& g);  // f after g
RepMorphism add(const RepMorphism& f, const RepMorphism& g);
RepMorphism scale(const Rat& c, const RepMorphism& f);

struct RelationViolation {
  PathSum generator;
  Matrix residual;
};

/// Evaluates each generator on V; empty result means all relations hold.
std::vector<RelationViolation> check_relations(const Representation& v, const RelationSet& rels);

/// Relation instances covering the support of V expanded by one arrow step.
RelationSet relations_for_support(const Representation& v, RelFamily family);

Representation direct_sum(const Representation& v, const Representation& u);

/// Basis of Hom(V, U): kernel of the intertwining system assembled over the
/// supports plus the one-arrow boundary (arrows leaving V's support into U's).
std::vector<RepMorphism> hom_basis(const Representation& v, const Representation& u);

/// Pointwise kernel of a morphism, with induced arrow maps and the inclusion.
std::pair<Representation, RepMorphism> kernel_rep(const RepMorphism& s);
/// Pointwise image inside the target, with the inclusion.
std::pair<Representation, RepMorphism> image_rep(const RepMorphism& s);
/// Pointwise cokernel of a morphism, with the projection from the target.
std::pair<Representation, RepMorphism> cokernel_rep(const RepMorphism& s);

/// Conjugates V by an invertible change of basis at each support vertex.
Representation base_change(const Representation& v, const std::map<VertexId, Matrix>& p);

/// Seeded random representation on the window (dims in [0, dim_max], small
/// integer entries). At least one vertex is forced nonzero.
Representation random_rep(const QuiverSchema& schema, const Window& w, int dim_max, Rng& rng);

/// Seeded random invertible integer change of basis for every support vertex.
std::map<VertexId, Matrix> random_base_change(const Representation& v, Rng& rng);

/// Random element of Hom(V, U) (integer combination of a hom basis).
RepMorphism random_morphism(const Representation& v, const Representation& u, Rng& rng);

}  // namespace quivrep
