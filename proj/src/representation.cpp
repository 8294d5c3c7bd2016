#include "quivrep/representation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace quivrep {

int Representation::dim(VertexId v) const {
  auto it = dims_.find(schema_.normalize_vertex(v));
  return it == dims_.end() ? 0 : it->second;
}

std::size_t Representation::total_dim() const {
  std::size_t t = 0;
  for (const auto& [v, d] : dims_) t += static_cast<std::size_t>(d);
  return t;
}

std::vector<VertexId> Representation::support() const {
  std::vector<VertexId> out;
  out.reserve(dims_.size());
  for (const auto& [v, d] : dims_) out.push_back(v);
  return out;
}

Matrix Representation::mat(ArrowId r) const {
  r.base = schema_.normalize_vertex(r.base);
  auto it = mats_.find(r);
  if (it != mats_.end()) return it->second;
  return Matrix::zero(dim(schema_.head(r)), dim(schema_.tail(r)));
}

Matrix Representation::path_matrix(const Path& p) const {
  if (!(p.schema() == schema_)) throw std::domain_error("path_matrix: schema mismatch");
  Matrix m = Matrix::identity(dim(p.tail()));
  for (const ArrowId& r : p.arrows()) m = mat(r) * m;
  return m;
}

void Representation::set_dim(VertexId v, int d) {
  v = schema_.normalize_vertex(v);
  if (!schema_.valid_vertex(v)) throw std::domain_error("set_dim: vertex not in schema");
  if (d < 0) throw std::domain_error("set_dim: negative dimension");
  if (d == 0)
    dims_.erase(v);
  else
    dims_[v] = d;
}

void Representation::set_mat(ArrowId r, Matrix m) {
  r.base = schema_.normalize_vertex(r.base);
  if (!schema_.valid_arrow(r)) throw std::domain_error("set_mat: arrow not in schema");
  const std::size_t hr = static_cast<std::size_t>(dim(schema_.head(r)));
  const std::size_t tc = static_cast<std::size_t>(dim(schema_.tail(r)));
  if (m.rows() != hr || m.cols() != tc)
    throw std::domain_error("set_mat: matrix shape does not match vertex dimensions");
  if (m.is_zero())
    mats_.erase(r);
  else
    mats_[r] = std::move(m);
}

Matrix RepMorphism::comp(VertexId v) const {
  v = source.schema().normalize_vertex(v);
  auto it = comps.find(v);
  if (it != comps.end()) return it->second;
  return Matrix::zero(target.dim(v), source.dim(v));
}

bool RepMorphism::is_zero() const {
  for (const auto& [v, m] : comps)
    if (!m.is_zero()) return false;
  return true;
}

namespace {

/// Arrows that impose a nontrivial intertwining equation between V and U.
std::set<ArrowId> binding_arrows(const Representation& v, const Representation& u) {
  std::set<ArrowId> out;
  for (const VertexId& x : v.support())
    for (const ArrowId& r : v.schema().arrows_from(x))
      if (u.dim(v.schema().head(r)) > 0) out.insert(r);
  return out;
}

}  // namespace

bool RepMorphism::intertwines() const {
  if (!(source.schema() == target.schema())) return false;
  for (const ArrowId& r : binding_arrows(source, target)) {
    const VertexId t = source.schema().tail(r), h = source.schema().head(r);
    if (!(target.mat(r) * comp(t) == comp(h) * source.mat(r))) return false;
  }
  return true;
}

RepMorphism identity_morphism(const Representation& v) {
  RepMorphism m{v, v, {}};
  for (const VertexId& x : v.support()) m.comps[x] = Matrix::identity(v.dim(x));
  return m;
}

RepMorphism zero_morphism(const Representation& v, const Representation& u) {
  return RepMorphism{v, u, {}};
}

RepMorphism compose(const RepMorphism& f, const RepMorphism& g) {
  if (!(f.source.schema() == g.source.schema()))
    throw std::domain_error("compose: schema mismatch");
  RepMorphism out{g.source, f.target, {}};
  std::set<VertexId> verts;
  for (const auto& x : g.source.support()) verts.insert(x);
  for (const auto& [x, m] : f.comps) verts.insert(x);
  for (const VertexId& x : verts) {
    Matrix m = f.comp(x) * g.comp(x);
    if (!m.is_zero()) out.comps[x] = std::move(m);
  }
  return out;
}

RepMorphism add(const RepMorphism& f, const RepMorphism& g) {
  RepMorphism out{f.source, f.target, {}};
  std::set<VertexId> verts;
  for (const auto& [x, m] : f.comps) verts.insert(x);
  for (const auto& [x, m] : g.comps) verts.insert(x);
  for (const VertexId& x : verts) {
    Matrix m = f.comp(x) + g.comp(x);
    if (!m.is_zero()) out.comps[x] = std::move(m);
  }
  return out;
}

RepMorphism scale(const Rat& c, const RepMorphism& f) {
  RepMorphism out{f.source, f.target, {}};
  if (c == 0) return out;
  for (const auto& [x, m] : f.comps) out.comps[x] = c * m;
  return out;
}

std::vector<RelationViolation> check_relations(const Representation& v, const RelationSet& rels) {
  if (!(v.schema() == rels.schema)) throw std::domain_error("check_relations: schema mismatch");
  std::vector<RelationViolation> out;
  for (const PathSum& g : rels.generators) {
    if (g.is_zero()) continue;
    const Path& first = g.terms().begin()->first;
    Matrix residual = Matrix::zero(v.dim(first.head()), v.dim(first.tail()));
    for (const auto& [p, c] : g.terms()) residual += c * v.path_matrix(p);
    if (!residual.is_zero()) out.push_back({g, residual});
  }
  return out;
}

RelationSet relations_for_support(const Representation& v, RelFamily family) {
  std::int64_t alo = 0, ahi = 0, blo = 0, bhi = 0;
  bool first = true;
  for (const VertexId& x : v.support()) {
    if (first) {
      alo = ahi = x.a;
      blo = bhi = x.b;
      first = false;
    } else {
      alo = std::min(alo, x.a);
      ahi = std::max(ahi, x.a);
      blo = std::min(blo, x.b);
      bhi = std::max(bhi, x.b);
    }
  }
  const std::int64_t pad =
      std::abs(v.schema().m()) + std::abs(v.schema().n()) + 2;  // one arrow step each way
  Window w = v.schema().pair_vertices() ? Window::box(alo - 2, ahi + 2, blo - 2, bhi + 2)
                                        : Window::range(alo - pad, ahi + pad);
  return relation_instances(v.schema(), family, w);
}

Representation direct_sum(const Representation& v, const Representation& u) {
  if (!(v.schema() == u.schema())) throw std::domain_error("direct_sum: schema mismatch");
  Representation out(v.schema());
  std::set<VertexId> verts;
  for (const auto& x : v.support()) verts.insert(x);
  for (const auto& x : u.support()) verts.insert(x);
  for (const VertexId& x : verts) out.set_dim(x, v.dim(x) + u.dim(x));

  std::set<ArrowId> arrows;
  for (const auto& [r, m] : v.mats()) arrows.insert(r);
  for (const auto& [r, m] : u.mats()) arrows.insert(r);
  for (const ArrowId& r : arrows) {
    const VertexId t = v.schema().tail(r), h = v.schema().head(r);
    Matrix m = Matrix::zero(out.dim(h), out.dim(t));
    m.set_block(0, 0, v.mat(r));
    m.set_block(v.dim(h), v.dim(t), u.mat(r));
    out.set_mat(r, std::move(m));
  }
  return out;
}

std::vector<RepMorphism> hom_basis(const Representation& v, const Representation& u) {
  if (!(v.schema() == u.schema())) throw std::domain_error("hom_basis: schema mismatch");

  // Variables: entries of comp(x) for x with both dims positive.
  std::vector<VertexId> vars;
  std::map<VertexId, std::size_t> offset;
  std::size_t nvars = 0;
  {
    std::set<VertexId> verts;
    for (const auto& x : v.support()) verts.insert(x);
    for (const VertexId& x : verts) {
      if (v.dim(x) > 0 && u.dim(x) > 0) {
        vars.push_back(x);
        offset[x] = nvars;
        nvars += static_cast<std::size_t>(v.dim(x)) * static_cast<std::size_t>(u.dim(x));
      }
    }
  }

  const std::set<ArrowId> arrows = binding_arrows(v, u);
  std::size_t neqs = 0;
  for (const ArrowId& r : arrows)
    neqs += static_cast<std::size_t>(u.dim(v.schema().head(r))) *
            static_cast<std::size_t>(v.dim(v.schema().tail(r)));

  Matrix sys(neqs, nvars);
  std::size_t row = 0;
  for (const ArrowId& r : arrows) {
    const VertexId t = v.schema().tail(r), h = v.schema().head(r);
    const Matrix ur = u.mat(r);  // dimU(h) x dimU(t)
    const Matrix vr = v.mat(r);  // dimV(h) x dimV(t)
    const std::size_t uh = ur.rows(), ut = ur.cols();
    const std::size_t vh = vr.rows(), vt = vr.cols();
    // Equation (i, j), i < dimU(h), j < dimV(t):
    //   sum_k ur(i,k) h_t(k,j) - sum_k h_h(i,k) vr(k,j) = 0
    for (std::size_t i = 0; i < uh; ++i)
      for (std::size_t j = 0; j < vt; ++j) {
        if (offset.count(t))
          for (std::size_t k = 0; k < ut; ++k) {
            if (ur.at(i, k) == 0) continue;
            sys.at(row, offset[t] + k * vt + j) += ur.at(i, k);
          }
        if (offset.count(h))
          for (std::size_t k = 0; k < vh; ++k) {
            if (vr.at(k, j) == 0) continue;
            sys.at(row, offset[h] + i * vh + k) -= vr.at(k, j);
          }
        ++row;
      }
  }

  const Matrix ker = kernel_basis(sys);
  std::vector<RepMorphism> basis;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    RepMorphism m{v, u, {}};
    for (const VertexId& x : vars) {
      const std::size_t rows = static_cast<std::size_t>(u.dim(x));
      const std::size_t cols = static_cast<std::size_t>(v.dim(x));
      Matrix comp(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          comp.at(i, j) = ker.at(offset[x] + i * cols + j, c);
      if (!comp.is_zero()) m.comps[x] = std::move(comp);
    }
    basis.push_back(std::move(m));
  }
  return basis;
}

namespace {

/// Subrepresentation spanned pointwise by the columns of incl(x), which must
/// be closed under the arrow maps of `ambient`.
std::pair<Representation, RepMorphism> subrep_from_columns(
    const Representation& ambient, const std::map<VertexId, Matrix>& incl_cols) {
  Representation sub(ambient.schema());
  for (const auto& [x, cols] : incl_cols) sub.set_dim(x, static_cast<int>(cols.cols()));

  RepMorphism incl{sub, ambient, {}};
  for (const auto& [x, cols] : incl_cols)
    if (cols.cols() > 0) incl.comps[x] = cols;

  for (const VertexId& x : sub.support())
    for (const ArrowId& r : ambient.schema().arrows_from(x)) {
      const VertexId h = ambient.schema().head(r);
      if (sub.dim(h) == 0) continue;
      const Matrix rhs = ambient.mat(r) * incl.comp(x);
      auto m = solve(incl.comp(h), rhs);
      if (!m) throw std::logic_error("subrep columns not closed under arrow maps");
      sub.set_mat(r, std::move(*m));
    }
  incl.source = sub;
  return {sub, incl};
}

}  // namespace

std::pair<Representation, RepMorphism> kernel_rep(const RepMorphism& s) {
  std::map<VertexId, Matrix> cols;
  for (const VertexId& x : s.source.support()) {
    Matrix k = kernel_basis(s.comp(x));
    if (k.cols() > 0) cols[x] = std::move(k);
  }
  return subrep_from_columns(s.source, cols);
}

std::pair<Representation, RepMorphism> image_rep(const RepMorphism& s) {
  std::map<VertexId, Matrix> cols;
  for (const VertexId& x : s.source.support()) {
    Matrix im = image_basis(s.comp(x));
    if (im.cols() > 0) cols[x] = std::move(im);
  }
  return subrep_from_columns(s.target, cols);
}

std::pair<Representation, RepMorphism> cokernel_rep(const RepMorphism& s) {
  const Representation& u = s.target;
  Representation coker(u.schema());
  RepMorphism proj{u, coker, {}};
  std::map<VertexId, Matrix> projections;
  for (const VertexId& x : u.support()) {
    // Rows span the annihilator of im s(x); kernel of the projection is the image.
    Matrix p = left_kernel_basis(image_basis(s.comp(x)));
    coker.set_dim(x, static_cast<int>(p.rows()));
    if (p.rows() > 0) projections[x] = std::move(p);
  }
  for (const VertexId& x : coker.support())
    for (const ArrowId& r : u.schema().arrows_from(x)) {
      const VertexId h = u.schema().head(r);
      if (coker.dim(h) == 0) continue;
      // C(r) proj(t) = proj(h) U(r); transpose to solve against full-rank columns.
      const Matrix pt = projections.at(x);
      const Matrix rhs = projections.count(h) ? projections.at(h) * u.mat(r)
                                              : Matrix::zero(0, u.dim(x));
      auto ct = solve(pt.transpose(), rhs.transpose());
      if (!ct) throw std::logic_error("cokernel arrow map inconsistent");
      coker.set_mat(r, ct->transpose());
    }
  proj.target = coker;
  proj.comps = std::move(projections);
  return {coker, proj};
}

Representation base_change(const Representation& v, const std::map<VertexId, Matrix>& p) {
  Representation out(v.schema());
  for (const VertexId& x : v.support()) out.set_dim(x, v.dim(x));
  auto p_at = [&](VertexId x) {
    auto it = p.find(x);
    return it == p.end() ? Matrix::identity(v.dim(x)) : it->second;
  };
  std::set<ArrowId> arrows;
  for (const auto& [r, m] : v.mats()) arrows.insert(r);
  for (const ArrowId& r : arrows) {
    const VertexId t = v.schema().tail(r), h = v.schema().head(r);
    auto pinv = inverse(p_at(t));
    if (!pinv) throw std::domain_error("base_change: singular matrix");
    out.set_mat(r, p_at(h) * v.mat(r) * *pinv);
  }
  return out;
}

Representation random_rep(const QuiverSchema& schema, const Window& w, int dim_max, Rng& rng) {
  Representation out(schema);
  const std::vector<VertexId> verts = vertices_in(schema, w);
  if (verts.empty()) throw std::domain_error("random_rep: empty window");
  for (const VertexId& x : verts) out.set_dim(x, static_cast<int>(rng.next_int(0, dim_max)));
  if (out.is_zero()) {
    const VertexId& x = verts[static_cast<std::size_t>(rng.next_int(0, verts.size() - 1))];
    out.set_dim(x, std::max(1, dim_max));
  }
  for (const VertexId& x : out.support())
    for (const ArrowId& r : schema.arrows_from(x)) {
      const VertexId h = schema.head(r);
      if (out.dim(h) == 0) continue;
      Matrix m(out.dim(h), out.dim(x));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rat_of(rng.next_int(-2, 2));
      out.set_mat(r, std::move(m));
    }
  return out;
}

std::map<VertexId, Matrix> random_base_change(const Representation& v, Rng& rng) {
  std::map<VertexId, Matrix> p;
  for (const VertexId& x : v.support()) {
    const std::size_t d = static_cast<std::size_t>(v.dim(x));
    // Product of an upper and a lower unitriangular integer matrix: invertible.
    Matrix up = Matrix::identity(d), lo = Matrix::identity(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        up.at(i, j) = rat_of(rng.next_int(-2, 2));
        lo.at(j, i) = rat_of(rng.next_int(-2, 2));
      }
    p[x] = up * lo;
  }
  return p;
}

RepMorphism random_morphism(const Representation& v, const Representation& u, Rng& rng) {
  const std::vector<RepMorphism> basis = hom_basis(v, u);
  RepMorphism out = zero_morphism(v, u);
  for (const RepMorphism& b : basis) out = add(out, scale(rat_of(rng.next_int(-3, 3)), b));
  return out;
}

}  // namespace quivrep
