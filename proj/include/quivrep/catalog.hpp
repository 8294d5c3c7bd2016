#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quivrep/decompose.hpp"
#include "quivrep/representation.hpp"

namespace quivrep {

/// Window of weights [a, b] inside Q_{m,n}; the reps supported there form the
/// subcategory studied by the finite/tame type results.
struct WindowSpec {
  std::int64_t m, n, a, b;

  WindowSpec(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t b);
  bool boundary_case() const { return b - a == m; }
};

struct CatalogEntry {
  std::string name;
  Representation rep;
  bool expect_indecomposable = true;
  std::optional<RelFamily> expect_relations;
  std::string provenance;
};

/// Re-verifies the stored expectations; false means the entry is stale.
bool verify_entry(const CatalogEntry& e);

/// All interval modules of the windowed quiver (vertices [a, b], arrows of
/// Q_{m,n} with both endpoints inside). The underlying graph must be a
/// disjoint union of chains; a cycle raises std::domain_error. Entries are
/// representations of Q_{m,n} supported inside the window, each certified
/// indecomposable.
std::vector<CatalogEntry> catalog_interval_modules(const WindowSpec& spec);

/// One-parameter family on Q_{m,1}, window {0..m}: dimension 1 everywhere,
/// chain maps 1, long arrow lambda. Rejects lambda = 0.
std::vector<CatalogEntry> catalog_lambda_family(std::int64_t m, const std::vector<Rat>& lambdas);

/// The 7-vertex grid representation with a 2-dimensional middle space.
/// `repaired == false` reproduces the printed diagram, whose lower square
/// violates the grid relations when lambda != 1; `repaired == true` replaces
/// the map (1,-1) -> (1,0) by lambda, restoring them.
CatalogEntry build_V_lambda(const Rat& lambda, bool repaired);

/// Cyclic representation of Qhat_s with all forward maps `fwd` and all
/// backward maps `bwd` on one-dimensional spaces.
Representation cyclic_rep(std::int64_t s, const Rat& fwd, const Rat& bwd);

struct BandCatalogParams {
  int max_width = 4;
  int dim_max = 2;
  std::vector<long> entry_set = {-1, 0, 1};
  std::uint64_t seed = 7;
};

struct BandCatalog {
  std::vector<CatalogEntry> classes;  // indecomposables up to iso and shift
  std::size_t candidates_scanned = 0;
  std::size_t reps_decomposed = 0;
  BandCatalogParams params;
  /// Bounded search: absence from the list is not a nonexistence proof.
  std::string bounds_note;
};

/// Exhaustive bounded enumeration of representations of the doubly infinite
/// chain with the preprojective relations, supported on `width` consecutive
/// vertices with dims in [1, dim_max] and entries from the entry set, for all
/// widths up to max_width; decomposes everything and collects the
/// indecomposable classes up to isomorphism and integer shift.
BandCatalog catalog_preprojective_band(const BandCatalogParams& params);

/// Shifts a chain representation so its support starts at 0.
Representation shift_to_origin(const Representation& v);

struct BandLiftResult {
  std::optional<Representation> lift;  // canonical representative
  std::size_t lifts_found = 0;
  bool all_translates_agree = true;
  std::size_t supports_tried = 0;
};

/// Candidate supports for a band lift: connected subsets of the grid cells
/// over the given diagonals with first coordinates in [0, extent), per-diagonal
/// cell counts bounded by the diagonal dimension (and at least one cell per
/// diagonal), at most max_cells cells, and minimal first coordinate 0. Each
/// set is produced exactly once.
std::vector<std::vector<VertexId>> enumerate_band_supports(
    const std::vector<std::int64_t>& diags, const std::map<std::int64_t, int>& diag_dim,
    int extent, std::size_t max_cells);

/// Bounded search for a grid representation U with the grid relations and
/// f_!(U) isomorphic to V (V on the chain with preprojective relations,
/// support width <= 5). Candidate supports live inside the diagonal band over
/// supp(V); entries are drawn from the entries of V together with 0 and +-1.
BandLiftResult lift_band_rep(const Representation& v, int extent_bound = 8,
                             std::size_t max_lifts = 8);

struct ClassifyResult {
  std::vector<CatalogEntry> interval_classes;
  /// Index into interval_classes for each distinct leaf class seen, with its
  /// multiplicity over all samples.
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  std::size_t samples = 0;
  std::size_t unmatched_leaves = 0;   // leaves not matching any interval class
  std::size_t uncertified_leaves = 0;
  bool boundary_case = false;
  /// n == 1 only: the lambda family members, pairwise non-isomorphic.
  std::vector<CatalogEntry> lambda_classes;
  bool lambda_family_pairwise_noniso = true;
};

/// Decomposes `samples` seeded random representations supported on the window
/// and matches every leaf against the interval catalog. For n == 1 the
/// interval matching is reported but not asserted (tame type); the lambda
/// family at the given parameters is exhibited instead.
ClassifyResult window_classify(const WindowSpec& spec, int dim_max, std::uint64_t seed,
                               std::size_t samples = 200,
                               const std::vector<Rat>& lambdas = {});

}  // namespace quivrep
