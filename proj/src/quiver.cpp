#include "quivrep/quiver.hpp"

#include <numeric>
#include <stdexcept>

namespace quivrep {

namespace {

std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

std::int64_t mod_pos(std::int64_t k, std::int64_t s) {
  std::int64_t r = k % s;
  return r < 0 ? r + s : r;
}

}  // namespace

QuiverSchema QuiverSchema::qmn(std::int64_t m, std::int64_t n) {
  if (m == 0 || n == 0) throw std::domain_error("Qmn requires nonzero m and n");
  if (std::gcd(iabs(m), iabs(n)) != 1) throw std::domain_error("Qmn requires gcd(m, n) = 1");
  QuiverSchema q;
  q.family_ = Family::Qmn;
  q.m_ = m;
  q.n_ = n;
  return q;
}

QuiverSchema QuiverSchema::qinfxinf() {
  QuiverSchema q;
  q.family_ = Family::QinfXinf;
  return q;
}

QuiverSchema QuiverSchema::qhat(std::int64_t s) {
  if (s < 0) throw std::domain_error("Qhat requires s >= 0");
  QuiverSchema q;
  q.family_ = Family::Qhat;
  q.s_ = s;
  return q;
}

QuiverSchema QuiverSchema::awindow(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t b) {
  if (m == 0 || n == 0) throw std::domain_error("Awindow requires nonzero steps");
  if (a > b) std::swap(a, b);
  QuiverSchema q;
  q.family_ = Family::Awindow;
  q.m_ = m;
  q.n_ = n;
  q.lo_ = a;
  q.hi_ = b;
  return q;
}

bool QuiverSchema::valid_vertex(VertexId v) const {
  switch (family_) {
    case Family::Qmn: return v.b == 0;
    case Family::QinfXinf: return true;
    case Family::Qhat: return v.b == 0 && (s_ == 0 || (v.a >= 0 && v.a < s_));
    case Family::Awindow: return v.b == 0 && v.a >= lo_ && v.a <= hi_;
  }
  return false;
}

VertexId QuiverSchema::normalize_vertex(VertexId v) const {
  if (family_ == Family::Qhat && s_ > 0) return VertexId::of(mod_pos(v.a, s_));
  return v;
}

VertexId QuiverSchema::tail(ArrowId r) const { return r.base; }

VertexId QuiverSchema::head(ArrowId r) const {
  switch (family_) {
    case Family::Qmn:
    case Family::Awindow:
      if (r.kind == ArrowKind::rho1) return VertexId::of(r.base.a + m_);
      if (r.kind == ArrowKind::rho2) return VertexId::of(r.base.a + n_);
      break;
    case Family::QinfXinf:
      if (r.kind == ArrowKind::rho1) return VertexId::of(r.base.a + 1, r.base.b);
      if (r.kind == ArrowKind::rho2) return VertexId::of(r.base.a, r.base.b + 1);
      break;
    case Family::Qhat:
      if (r.kind == ArrowKind::fwd) return normalize_vertex(VertexId::of(r.base.a + 1));
      if (r.kind == ArrowKind::bwd) return normalize_vertex(VertexId::of(r.base.a - 1));
      break;
  }
  throw std::domain_error("arrow kind not valid for this schema");
}

bool QuiverSchema::valid_arrow(ArrowId r) const {
  switch (family_) {
    case Family::Qmn:
    case Family::QinfXinf:
      if (r.kind != ArrowKind::rho1 && r.kind != ArrowKind::rho2) return false;
      return valid_vertex(r.base);
    case Family::Qhat:
      if (r.kind != ArrowKind::fwd && r.kind != ArrowKind::bwd) return false;
      return valid_vertex(r.base);
    case Family::Awindow: {
      if (r.kind != ArrowKind::rho1 && r.kind != ArrowKind::rho2) return false;
      if (!valid_vertex(r.base)) return false;
      const std::int64_t h = r.base.a + (r.kind == ArrowKind::rho1 ? m_ : n_);
      return h >= lo_ && h <= hi_;
    }
  }
  return false;
}

std::vector<ArrowId> QuiverSchema::arrows_from(VertexId v) const {
  if (!valid_vertex(v)) throw std::domain_error("vertex not valid for schema: " + vertex_str(v));
  std::vector<ArrowId> out;
  switch (family_) {
    case Family::Qmn:
    case Family::QinfXinf:
      out = {{ArrowKind::rho1, v}, {ArrowKind::rho2, v}};
      break;
    case Family::Qhat:
      out = {{ArrowKind::fwd, v}, {ArrowKind::bwd, v}};
      break;
    case Family::Awindow:
      for (ArrowKind k : {ArrowKind::rho1, ArrowKind::rho2}) {
        ArrowId r{k, v};
        if (valid_arrow(r)) out.push_back(r);
      }
      break;
  }
  return out;
}

std::vector<ArrowId> QuiverSchema::arrows_into(VertexId v) const {
  if (!valid_vertex(v)) throw std::domain_error("vertex not valid for schema: " + vertex_str(v));
  std::vector<ArrowId> out;
  switch (family_) {
    case Family::Qmn:
      out = {{ArrowKind::rho1, VertexId::of(v.a - m_)}, {ArrowKind::rho2, VertexId::of(v.a - n_)}};
      break;
    case Family::QinfXinf:
      out = {{ArrowKind::rho1, VertexId::of(v.a - 1, v.b)},
             {ArrowKind::rho2, VertexId::of(v.a, v.b - 1)}};
      break;
    case Family::Qhat:
      out = {{ArrowKind::fwd, normalize_vertex(VertexId::of(v.a - 1))},
             {ArrowKind::bwd, normalize_vertex(VertexId::of(v.a + 1))}};
      break;
    case Family::Awindow:
      for (ArrowKind k : {ArrowKind::rho1, ArrowKind::rho2}) {
        ArrowId r{k, VertexId::of(v.a - (k == ArrowKind::rho1 ? m_ : n_))};
        if (valid_vertex(r.base) && valid_arrow(r)) out.push_back(r);
      }
      break;
  }
  return out;
}

std::string QuiverSchema::vertex_str(VertexId v) const {
  if (pair_vertices())
    return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
  return std::to_string(v.a);
}

std::string QuiverSchema::arrow_str(ArrowId r) const {
  switch (r.kind) {
    case ArrowKind::rho1: return "rho1^" + vertex_str(r.base);
    case ArrowKind::rho2: return "rho2^" + vertex_str(r.base);
    case ArrowKind::fwd: return "rho_" + vertex_str(r.base);
    case ArrowKind::bwd: return "rhobar_" + vertex_str(r.base);
  }
  return "?";
}

std::string QuiverSchema::to_string() const {
  switch (family_) {
    case Family::Qmn:
      return "Q(" + std::to_string(m_) + "," + std::to_string(n_) + ")";
    case Family::QinfXinf: return "QinfXinf";
    case Family::Qhat: return s_ == 0 ? "Qinf" : "Qhat(" + std::to_string(s_) + ")";
    case Family::Awindow:
      return "Awindow(" + std::to_string(m_) + "," + std::to_string(n_) + ";[" +
             std::to_string(lo_) + "," + std::to_string(hi_) + "])";
  }
  return "?";
}

Window Window::range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) std::swap(lo, hi);
  return {VertexId::of(lo, lo), VertexId::of(hi, hi)};
}

Window Window::box(std::int64_t alo, std::int64_t ahi, std::int64_t blo, std::int64_t bhi) {
  if (alo > ahi) std::swap(alo, ahi);
  if (blo > bhi) std::swap(blo, bhi);
  return {VertexId::of(alo, blo), VertexId::of(ahi, bhi)};
}

bool Window::contains(VertexId v, const QuiverSchema& schema) const {
  if (v.a < lo.a || v.a > hi.a) return false;
  if (schema.pair_vertices() && (v.b < lo.b || v.b > hi.b)) return false;
  return true;
}

std::vector<VertexId> vertices_in(const QuiverSchema& schema, const Window& w) {
  std::vector<VertexId> out;
  if (schema.family() == Family::Qhat && schema.s() > 0) {
    for (std::int64_t k = 0; k < schema.s(); ++k) out.push_back(VertexId::of(k));
    return out;
  }
  if (schema.pair_vertices()) {
    for (std::int64_t i = w.lo.a; i <= w.hi.a; ++i)
      for (std::int64_t j = w.lo.b; j <= w.hi.b; ++j) out.push_back(VertexId::of(i, j));
    return out;
  }
  std::int64_t lo = w.lo.a, hi = w.hi.a;
  if (schema.family() == Family::Awindow) {
    lo = std::max(lo, schema.window_lo());
    hi = std::min(hi, schema.window_hi());
  }
  for (std::int64_t k = lo; k <= hi; ++k) out.push_back(VertexId::of(k));
  return out;
}

std::ostream& operator<<(std::ostream& os, const VertexId& v) {
  return os << "(" << v.a << "," << v.b << ")";
}

}  // namespace quivrep
