#pragma once

#include <optional>
#include <vector>

#include "quivrep/representation.hpp"

namespace quivrep {

/// Endomorphism algebra of a representation with structure constants, the
/// radical (computed by the characteristic-zero trace form criterion), and the
/// dimension of the semisimple quotient.
struct EndAlgebra {
  std::vector<RepMorphism> basis;
  /// left_mult[i] is the matrix of x -> basis[i] * x in the chosen basis.
  std::vector<Matrix> left_mult;
  /// gram(i, j) = Tr(L_i L_j); the radical is its kernel.
  Matrix gram;
  /// Columns are coordinate vectors of a radical basis.
  Matrix radical;
  std::vector<Rat> identity_coords;

  std::size_t dim() const { return basis.size(); }
  std::size_t radical_dim() const { return radical.cols(); }
  std::size_t semisimple_dim() const { return dim() - radical_dim(); }
};

EndAlgebra end_algebra(const Representation& v);

/// Coordinates of an endomorphism in the basis of `alg`.
std::vector<Rat> end_coords(const EndAlgebra& alg, const RepMorphism& f);

/// Trace-form radical membership test for an element given by coordinates.
bool in_radical(const EndAlgebra& alg, const std::vector<Rat>& coords);

/// Fitting decomposition along e in End(V): with N the total dimension,
/// returns (ker e^N, im e^N) when both are nonzero, nullopt when e^N is zero
/// or invertible.
std::optional<std::pair<Representation, Representation>> fitting_split(const Representation& v,
                                                                       const RepMorphism& e);

/// Monic minimal polynomial of a square matrix, coefficients low to high.
std::vector<Rat> minimal_polynomial(const Matrix& m);

/// All rational roots of a polynomial with rational coefficients (low to
/// high); the divisor search is bounded, so roots with huge numerators or
/// denominators in the scaled constant/leading coefficients may be missed.
std::vector<Rat> polynomial_rational_roots(std::vector<Rat> poly);

enum class IndecVerdict { yes, no, uncertified };

struct IndecResult {
  IndecVerdict verdict;
  /// Present when verdict == no and a concrete splitting was found.
  std::optional<std::pair<Representation, Representation>> witness;
};

/// Certified exactly when dim(End/J) == 1. The zero representation is
/// conventionally not indecomposable.
IndecResult is_indecomposable(const Representation& v);

struct DecomposeLeaf {
  Representation rep;
  /// True when dim(End/J) == 1 for the leaf; a false flag means no probe
  /// split the summand although dim(End/J) > 1.
  bool certified;
};

/// Krull-Schmidt style decomposition: recursively applies Fitting splits over
/// the End basis and 64 seeded integer combinations with coefficients in
/// [-3, 3]. Deterministic given the seed.
std::vector<DecomposeLeaf> decompose(const Representation& v, std::uint64_t seed);

/// Complete isomorphism test for two certified indecomposables: V and U are
/// isomorphic iff some composite of a Hom(V,U) and a Hom(U,V) basis element
/// lies outside the radical of End(V). Throws if a precondition fails.
bool iso_indecomposable(const Representation& v, const Representation& u);

enum class IsoVerdict { yes, no, uncertified };

/// Decompose-and-match isomorphism test; uncertified only when some leaf
/// could not be certified.
IsoVerdict iso(const Representation& v, const Representation& u, std::uint64_t seed);

}  // namespace quivrep
