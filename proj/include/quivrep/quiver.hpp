#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace quivrep {

/// Vertex of one of the supported quiver families. One-dimensional families
/// (Q_{m,n}, Qhat_s, A-windows) use only `a`; the grid family uses the pair
/// (a, b). A VertexId is only meaningful against the schema that produced it.
struct VertexId {
  std::int64_t a = 0;
  std::int64_t b = 0;

  static VertexId of(std::int64_t k) { return {k, 0}; }
  static VertexId of(std::int64_t i, std::int64_t j) { return {i, j}; }

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

enum class ArrowKind : unsigned char {
  rho1,  // step sigma(1)=m on Q_{m,n}, (1,0) on the grid
  rho2,  // step sigma(2)=n on Q_{m,n}, (0,1) on the grid
  fwd,   // rho_i : i -> i+1 on Qhat_s
  bwd,   // rhobar_i : i -> i-1 on Qhat_s
};

/// Arrow identified by its kind and its tail vertex.
struct ArrowId {
  ArrowKind kind = ArrowKind::rho1;
  VertexId base;  // tail

  friend auto operator<=>(const ArrowId&, const ArrowId&) = default;
};

enum class Family { Qmn, QinfXinf, Qhat, Awindow };

/// Intensional description of a quiver family: vertices and arrows are never
/// enumerated globally, only per vertex or per finite window.
///
///  - Qmn(m, n):       vertices Z, arrows rho1^k : k -> k+m, rho2^k : k -> k+n,
///                     with m, n nonzero and gcd(m, n) = 1.
///  - QinfXinf:        vertices Z x Z, arrows rho1 : (i,j) -> (i+1,j) and
///                     rho2 : (i,j) -> (i,j+1).
///  - Qhat(s):         vertices Z/sZ with forward and backward arrows; s = 0
///                     is the doubly infinite chain.
///  - Awindow(m,n,a,b): the full subquiver of Qmn(m, n) on the segment [a, b].
class QuiverSchema {
 public:
  QuiverSchema() = default;

  static QuiverSchema qmn(std::int64_t m, std::int64_t n);
  static QuiverSchema qinfxinf();
  static QuiverSchema qhat(std::int64_t s);
  static QuiverSchema qinf() { return qhat(0); }
  static QuiverSchema awindow(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t b);

  Family family() const { return family_; }
  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  std::int64_t s() const { return s_; }
  std::int64_t window_lo() const { return lo_; }
  std::int64_t window_hi() const { return hi_; }

  bool pair_vertices() const { return family_ == Family::QinfXinf; }

  bool valid_vertex(VertexId v) const;
  /// Reduces mod s for Qhat; identity elsewhere.
  VertexId normalize_vertex(VertexId v) const;

  bool valid_arrow(ArrowId r) const;
  VertexId tail(ArrowId r) const;
  VertexId head(ArrowId r) const;

  /// All arrows with the given tail, in a fixed deterministic order.
  /// Throws std::domain_error when the vertex is not in the schema.
  std::vector<ArrowId> arrows_from(VertexId v) const;
  /// All arrows with the given head.
  std::vector<ArrowId> arrows_into(VertexId v) const;

  std::string vertex_str(VertexId v) const;
  std::string arrow_str(ArrowId r) const;
  std::string to_string() const;

  friend bool operator==(const QuiverSchema&, const QuiverSchema&) = default;

 private:
  Family family_ = Family::Qmn;
  std::int64_t m_ = 1, n_ = 1;  // Qmn / Awindow
  std::int64_t s_ = 0;          // Qhat
  std::int64_t lo_ = 0, hi_ = 0;  // Awindow
};

/// Axis-aligned box of vertices, used as the finite probe window for the
/// infinite families. For one-dimensional families only the `a` axis matters.
struct Window {
  VertexId lo, hi;

  static Window range(std::int64_t lo, std::int64_t hi);
  static Window box(std::int64_t alo, std::int64_t ahi, std::int64_t blo, std::int64_t bhi);

  bool contains(VertexId v, const QuiverSchema& schema) const;

  friend auto operator<=>(const Window&, const Window&) = default;
};

/// Vertices of the schema inside the window. For Qhat with s > 0 the full
/// (finite) vertex set is returned and the window is ignored.
std::vector<VertexId> vertices_in(const QuiverSchema& schema, const Window& w);

std::ostream& operator<<(std::ostream& os, const VertexId& v);

}  // namespace quivrep
