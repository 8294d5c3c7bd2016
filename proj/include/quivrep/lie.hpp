#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quivrep/path.hpp"
#include "quivrep/representation.hpp"

namespace quivrep {

/// Index of a weight projection: a single integer in the rational mode, a
/// pair (i, j) in the irrational mode (where no irrational arithmetic is ever
/// performed; the pair reindexing removes the parameter entirely).
struct UIndex {
  bool is_pair = false;
  std::int64_t a = 0, b = 0;

  static UIndex single(std::int64_t k) { return {false, k, 0}; }
  static UIndex pair(std::int64_t i, std::int64_t j) { return {true, i, j}; }

  friend auto operator<=>(const UIndex&, const UIndex&) = default;
};

/// Normal-form monomial alpha1^r a_idx alpha2^s of the modified enveloping
/// algebra.
struct UMonomial {
  std::int64_t r = 0;
  UIndex idx;
  std::int64_t s = 0;

  friend auto operator<=>(const UMonomial&, const UMonomial&) = default;
};

/// Multiplication parameters: the rational mode carries the weights (m, n) of
/// alpha1 and alpha2; the irrational mode has none.
struct UMode {
  bool rational = true;
  std::int64_t m = 0, n = 0;

  static UMode rational_mode(std::int64_t m, std::int64_t n) { return {true, m, n}; }
  static UMode irrational_mode() { return {false, 0, 0}; }
};

/// Finite rational combination of normal-form monomials.
class UElement {
 public:
  UElement() = default;
  explicit UElement(bool pair_indices) : pair_(pair_indices) {}
  UElement(const UMonomial& m, Rat c = 1);

  bool pair_indices() const { return pair_; }
  const std::map<UMonomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const UMonomial& m, const Rat& c);

  UElement& operator+=(const UElement& o);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator*(const Rat& c, UElement a);
  friend bool operator==(const UElement& a, const UElement& b) {
    return a.pair_ == b.pair_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  bool pair_ = false;
  std::map<UMonomial, Rat> terms_;
};

/// Bilinear product, renormalized to normal form. On monomials:
///   a_k a_l = delta_{kl} a_k,  alpha1 a_k = a_{k+m} alpha1,
///   alpha2 a_k = a_{k+n} alpha2 (rational mode; shifts (1,0), (0,1) in the
/// irrational mode). Throws on mode mismatch.
UElement u_mul(const UElement& x, const UElement& y, const UMode& mode);

/// Convenience monomial builders.
UMonomial u_idem(std::int64_t k);
UMonomial u_idem(std::int64_t i, std::int64_t j);

/// Algebra map from the path algebra of Q_{m,n}: a path with tail k, r rho1
/// arrows and s rho2 arrows goes to alpha1^r a_{k+s n} alpha2^s.
UElement phi_map(const PathSum& p);
UElement phi_map_path(const Path& p);

/// Section of phi: alpha1^r a_k alpha2^s maps to the canonical normal-form
/// path rho1^{k+(r-1)m} ... rho1^k rho2^{k-n} ... rho2^{k-sn}.
Path psi_path(const UMonomial& mono, std::int64_t m, std::int64_t n);
PathSum psi_map(const UElement& u, std::int64_t m, std::int64_t n);

struct RoundtripReport {
  bool ok = true;
  std::size_t paths_checked = 0;
  std::size_t monomials_checked = 0;
  std::size_t products_checked = 0;
  std::vector<std::string> counterexamples;
};

/// Verifies psi(phi(.)) and phi(psi(.)) are identities on the bounded bases
/// (paths with at most `degree` arrows and tail in the window; monomials with
/// r+s <= degree and index in the window) and that phi is multiplicative on
/// seeded path-sum pairs.
RoundtripReport roundtrip_check(std::int64_t m, std::int64_t n, int degree, const Window& w,
                                std::size_t seeded_pairs = 100, std::uint64_t seed = 1);

/// Number of seeded path-sum pairs on which phi fails to be multiplicative.
std::size_t phi_multiplicativity_failures(std::int64_t m, std::int64_t n, std::size_t pairs,
                                          std::uint64_t seed);

/// Weight module attached to a representation: the operators of alpha1 and
/// alpha2 on the total graded space, with the Cartan element acting on the
/// k-th piece by gamma + k (rational mode).
struct WeightModule {
  Representation rep;
  Rat gamma;
  std::vector<VertexId> pieces;       // sorted support
  std::vector<std::size_t> offsets;   // block offsets into the total space
  Matrix alpha1, alpha2;
  bool rational_mode = true;          // false for grid representations
};

/// Builds the weight module; verifies the commutation relations on request
/// and throws std::domain_error carrying the first violation if they fail.
WeightModule rep_to_weight_module(const Representation& v, const Rat& gamma,
                                  bool verify_relations = true);

struct LieCheckReport {
  bool ok = true;
  std::string detail;
};

/// Exact matrix verification of the commutation relations: [beta, alpha1] =
/// m alpha1, [beta, alpha2] = n alpha2 and alpha1 alpha2 = alpha2 alpha1 in
/// the rational mode; in the grid mode the beta commutators hold degreewise
/// by construction and the commutativity of alpha1, alpha2 is checked.
LieCheckReport lie_check(const WeightModule& w);

}  // namespace quivrep
