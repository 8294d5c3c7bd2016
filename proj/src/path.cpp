#include "quivrep/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace quivrep {

Path::Path(QuiverSchema schema, VertexId base) : schema_(std::move(schema)) {
  base_ = schema_.normalize_vertex(base);
  if (!schema_.valid_vertex(base_)) throw std::domain_error("path base vertex not in schema");
}

Path::Path(QuiverSchema schema, VertexId base, std::vector<ArrowId> arrows)
    : schema_(std::move(schema)), arrows_(std::move(arrows)) {
  base_ = schema_.normalize_vertex(base);
  if (!schema_.valid_vertex(base_)) throw std::domain_error("path base vertex not in schema");
  VertexId at = base_;
  for (auto& r : arrows_) {
    r.base = schema_.normalize_vertex(r.base);
    if (!schema_.valid_arrow(r)) throw std::domain_error("path contains invalid arrow");
    if (schema_.tail(r) != at) throw std::domain_error("path arrows are not composable");
    at = schema_.head(r);
  }
}

VertexId Path::head() const {
  return arrows_.empty() ? base_ : schema_.head(arrows_.back());
}

Path Path::then(ArrowId next) const {
  std::vector<ArrowId> arr = arrows_;
  arr.push_back(next);
  return Path(schema_, base_, std::move(arr));
}

std::string Path::to_string() const {
  if (trivial()) return "e_" + schema_.vertex_str(base_);
  std::string s;
  for (auto it = arrows_.rbegin(); it != arrows_.rend(); ++it) {
    if (!s.empty()) s += " ";
    s += schema_.arrow_str(*it);
  }
  return s;
}

bool operator<(const Path& a, const Path& b) {
  if (a.base_ != b.base_) return a.base_ < b.base_;
  return a.arrows_ < b.arrows_;
}

std::optional<Path> compose(const Path& p2, const Path& p1) {
  if (!(p2.schema() == p1.schema())) throw std::domain_error("compose: mixed schemas");
  if (p1.head() != p2.tail()) return std::nullopt;
  std::vector<ArrowId> arr = p1.arrows();
  arr.insert(arr.end(), p2.arrows().begin(), p2.arrows().end());
  return Path(p1.schema(), p1.tail(), std::move(arr));
}

PathSum::PathSum(const Path& p, Rat coeff) : schema_(p.schema()) { add_term(p, coeff); }

void PathSum::add_term(const Path& p, const Rat& c) {
  if (!(p.schema() == schema_)) throw std::domain_error("path sum: mixed schemas");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PathSum& PathSum::operator+=(const PathSum& o) {
  if (!(o.schema_ == schema_)) throw std::domain_error("path sum: mixed schemas");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

PathSum& PathSum::operator-=(const PathSum& o) {
  if (!(o.schema_ == schema_)) throw std::domain_error("path sum: mixed schemas");
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

PathSum operator*(const Rat& c, PathSum a) {
  if (c == 0) return PathSum(a.schema_);
  for (auto& [p, x] : a.terms_) x *= c;
  return a;
}

std::string PathSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += rat_str(c) + "*";
    s += p.to_string();
  }
  return s;
}

PathSum pathsum_mul(const PathSum& a, const PathSum& b) {
  if (!(a.schema() == b.schema())) throw std::domain_error("pathsum_mul: mixed schemas");
  PathSum out(a.schema());
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms()) {
      auto prod = compose(pa, pb);
      if (prod) out.add_term(*prod, ca * cb);
    }
  return out;
}

std::optional<Path> rewrite_inversion_at(const Path& p, std::size_t i) {
  const QuiverSchema& q = p.schema();
  if (q.family() != Family::Qmn) throw std::domain_error("rewriting is defined on Qmn only");
  const auto& arr = p.arrows();
  if (i + 1 >= arr.size()) return std::nullopt;
  if (arr[i].kind != ArrowKind::rho1 || arr[i + 1].kind != ArrowKind::rho2) return std::nullopt;
  const std::int64_t k = arr[i].base.a;
  // rho2^{k+m} rho1^k  ->  rho1^{k+n} rho2^k
  std::vector<ArrowId> out = arr;
  out[i] = {ArrowKind::rho2, VertexId::of(k)};
  out[i + 1] = {ArrowKind::rho1, VertexId::of(k + q.n())};
  return Path(q, p.tail(), std::move(out));
}

Path normal_form_path(const Path& p) {
  const QuiverSchema& q = p.schema();
  if (q.family() != Family::Qmn) throw std::domain_error("normal form is defined on Qmn only");
  std::size_t n_rho2 = 0;
  for (const auto& r : p.arrows())
    if (r.kind == ArrowKind::rho2) ++n_rho2;
  std::vector<ArrowId> arr;
  arr.reserve(p.length());
  std::int64_t at = p.tail().a;
  for (std::size_t i = 0; i < n_rho2; ++i) {
    arr.push_back({ArrowKind::rho2, VertexId::of(at)});
    at += q.n();
  }
  for (std::size_t i = n_rho2; i < p.length(); ++i) {
    arr.push_back({ArrowKind::rho1, VertexId::of(at)});
    at += q.m();
  }
  return Path(q, p.tail(), std::move(arr));
}

PathSum normal_form(const PathSum& a) {
  if (a.schema().family() != Family::Qmn)
    throw std::domain_error("normal form is defined on Qmn only");
  PathSum out(a.schema());
  for (const auto& [p, c] : a.terms()) out.add_term(normal_form_path(p), c);
  return out;
}

namespace {

PathSum square_generator(const QuiverSchema& q, ArrowId a0, ArrowId a1, ArrowId b0, ArrowId b1) {
  PathSum g(q);
  g.add_term(Path(q, q.tail(a0), {a0, a1}), 1);
  g.add_term(Path(q, q.tail(b0), {b0, b1}), -1);
  return g;
}

}  // namespace

RelationSet relation_instances(const QuiverSchema& schema, RelFamily family, const Window& w) {
  RelationSet out{schema, family, {}};
  auto endpoints_ok = [&](const PathSum& g) {
    for (const auto& [p, c] : g.terms()) {
      (void)c;
      if (!w.contains(p.tail(), schema) || !w.contains(p.head(), schema)) return false;
    }
    return true;
  };

  switch (family) {
    case RelFamily::Rmn: {
      if (schema.family() != Family::Qmn)
        throw std::domain_error("Rmn relations require a Qmn schema");
      const std::int64_t m = schema.m(), n = schema.n();
      const std::int64_t pad = std::abs(m) + std::abs(n);
      for (std::int64_t k = w.lo.a - pad; k <= w.hi.a + pad; ++k) {
        // rho1^{k+n} rho2^k - rho2^{k+m} rho1^k
        PathSum g = square_generator(
            schema, {ArrowKind::rho2, VertexId::of(k)}, {ArrowKind::rho1, VertexId::of(k + n)},
            {ArrowKind::rho1, VertexId::of(k)}, {ArrowKind::rho2, VertexId::of(k + m)});
        if (endpoints_ok(g)) out.generators.push_back(g);
      }
      break;
    }
    case RelFamily::Rhat:
    case RelFamily::Rinf: {
      if (schema.family() != Family::Qhat)
        throw std::domain_error("Rhat/Rinf relations require a Qhat schema");
      if (family == RelFamily::Rhat && schema.s() == 0)
        throw std::domain_error("Rhat requires s > 0 (use Rinf for the infinite chain)");
      if (family == RelFamily::Rinf && schema.s() != 0)
        throw std::domain_error("Rinf requires s = 0");
      auto gen_at = [&](std::int64_t i) {
        // rhobar_{i+1} rho_i - rho_{i-1} rhobar_i
        VertexId vi = schema.normalize_vertex(VertexId::of(i));
        ArrowId f{ArrowKind::fwd, vi};
        ArrowId bnext{ArrowKind::bwd, schema.normalize_vertex(VertexId::of(i + 1))};
        ArrowId b{ArrowKind::bwd, vi};
        ArrowId fprev{ArrowKind::fwd, schema.normalize_vertex(VertexId::of(i - 1))};
        return square_generator(schema, f, bnext, b, fprev);
      };
      if (schema.s() > 0) {
        for (std::int64_t i = 0; i < schema.s(); ++i) out.generators.push_back(gen_at(i));
      } else {
        for (std::int64_t i = w.lo.a - 1; i <= w.hi.a + 1; ++i) {
          PathSum g = gen_at(i);
          if (endpoints_ok(g)) out.generators.push_back(g);
        }
      }
      break;
    }
    case RelFamily::RinfXinf: {
      if (schema.family() != Family::QinfXinf)
        throw std::domain_error("RinfXinf relations require the grid schema");
      for (std::int64_t i = w.lo.a - 1; i <= w.hi.a + 1; ++i)
        for (std::int64_t j = w.lo.b - 1; j <= w.hi.b + 1; ++j) {
          // rho1^{i,j+1} rho2^{ij} - rho2^{i+1,j} rho1^{ij}
          PathSum g = square_generator(
              schema, {ArrowKind::rho2, VertexId::of(i, j)},
              {ArrowKind::rho1, VertexId::of(i, j + 1)}, {ArrowKind::rho1, VertexId::of(i, j)},
              {ArrowKind::rho2, VertexId::of(i + 1, j)});
          if (endpoints_ok(g)) out.generators.push_back(g);
        }
      break;
    }
  }
  return out;
}

PathSum relation_canonical(const PathSum& g) {
  if (g.is_zero()) return g;
  const Rat& lead = g.terms().begin()->second;
  return (1 / lead) * g;
}

bool relation_sets_match(const RelationSet& a, const RelationSet& b) {
  if (!(a.schema == b.schema)) return false;
  std::vector<PathSum> ca, cb;
  for (const auto& g : a.generators) ca.push_back(relation_canonical(g));
  for (const auto& g : b.generators) cb.push_back(relation_canonical(g));
  auto cmp = [](const PathSum& x, const PathSum& y) { return x.to_string() < y.to_string(); };
  std::sort(ca.begin(), ca.end(), cmp);
  std::sort(cb.begin(), cb.end(), cmp);
  return ca == cb;
}

std::ostream& operator<<(std::ostream& os, const Path& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const PathSum& s) { return os << s.to_string(); }

}  // namespace quivrep
