#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "quivrep/quiver.hpp"
#include "quivrep/rational.hpp"

namespace quivrep {

/// A path in a quiver, stored in application order: arrows()[0] is applied
/// first (it is the rightmost factor of the written form). An empty arrow
/// sequence is the trivial path e_x at the base vertex.
class Path {
 public:
  Path(QuiverSchema schema, VertexId base);
  Path(QuiverSchema schema, VertexId base, std::vector<ArrowId> arrows);

  const QuiverSchema& schema() const { return schema_; }
  VertexId tail() const { return base_; }
  VertexId head() const;
  std::size_t length() const { return arrows_.size(); }
  bool trivial() const { return arrows_.empty(); }
  const std::vector<ArrowId>& arrows() const { return arrows_; }

  /// Path extended by one more arrow at the end (the arrow is applied last).
  Path then(ArrowId next) const;

  std::string to_string() const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.schema_ == b.schema_ && a.base_ == b.base_ && a.arrows_ == b.arrows_;
  }
  friend bool operator<(const Path& a, const Path& b);

 private:
  QuiverSchema schema_;
  VertexId base_;
  std::vector<ArrowId> arrows_;
};

/// Concatenation p2 p1 (p1 applied first): nullopt encodes the zero product,
/// taken when head(p1) != tail(p2). Trivial paths act as one-sided identities.
std::optional<Path> compose(const Path& p2, const Path& p1);

/// Finite rational linear combination of paths of a single schema; the zero
/// element is the empty combination. No zero coefficients are ever stored.
class PathSum {
 public:
  explicit PathSum(QuiverSchema schema) : schema_(std::move(schema)) {}
  PathSum(const Path& p, Rat coeff = 1);

  const QuiverSchema& schema() const { return schema_; }
  const std::map<Path, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Path& p, const Rat& c);

  PathSum& operator+=(const PathSum& o);
  PathSum& operator-=(const PathSum& o);
  friend PathSum operator+(PathSum a, const PathSum& b) { return a += b; }
  friend PathSum operator-(PathSum a, const PathSum& b) { return a -= b; }
  friend PathSum operator*(const Rat& c, PathSum a);
  friend bool operator==(const PathSum& a, const PathSum& b) {
    return a.schema_ == b.schema_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  QuiverSchema schema_;
  std::map<Path, Rat> terms_;
};

/// Bilinear extension of path concatenation. Throws on schema mismatch.
PathSum pathsum_mul(const PathSum& a, const PathSum& b);

/// One oriented rewrite on Q_{m,n}: if arrows i, i+1 of the path are
/// rho1^k followed by rho2^{k+m}, replaces them by rho2^k, rho1^{k+n}.
/// Exposed so independent checks can reduce with arbitrary strategies.
std::optional<Path> rewrite_inversion_at(const Path& p, std::size_t i);

/// Canonical representative of a Q_{m,n} path modulo the commutation ideal:
/// all rho2 arrows applied first, then all rho1 arrows.
Path normal_form_path(const Path& p);

/// Termwise canonical form of a path sum; idempotent. Requires a Qmn schema.
PathSum normal_form(const PathSum& a);

enum class RelFamily { Rmn, Rhat, Rinf, RinfXinf };

/// Commutation/preprojective relation generators. Every generator is a
/// difference of two length-2 paths sharing tail and head.
struct RelationSet {
  QuiverSchema schema;
  RelFamily family;
  std::vector<PathSum> generators;
};

/// All generators of the family with both endpoint vertices inside the window
/// (window ignored for Qhat with s > 0, which is already finite).
RelationSet relation_instances(const QuiverSchema& schema, RelFamily family, const Window& w);

/// Scales so the coefficient of the smallest path is 1; used for syntactic
/// comparison of relation sets.
PathSum relation_canonical(const PathSum& g);

bool relation_sets_match(const RelationSet& a, const RelationSet& b);

std::ostream& operator<<(std::ostream& os, const Path& p);
std::ostream& operator<<(std::ostream& os, const PathSum& s);

}  // namespace quivrep
