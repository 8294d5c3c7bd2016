#include "quivrep/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "quivrep/morphism.hpp"
#include "quivrep/rng.hpp"

namespace quivrep {

namespace {
std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }
}

WindowSpec::WindowSpec(std::int64_t m_, std::int64_t n_, std::int64_t a_, std::int64_t b_)
    : m(m_), n(n_), a(a_), b(b_) {
  if (m == 0 || n == 0 || std::gcd(iabs(m), iabs(n)) != 1)
    throw std::domain_error("window spec requires nonzero m, n with gcd(m, n) = 1");
  if (a > b) std::swap(a, b);
  if (b - a > m) throw std::domain_error("window spec requires 0 <= b - a <= m");
}

bool verify_entry(const CatalogEntry& e) {
  if (e.expect_relations) {
    const auto violations = check_relations(e.rep, relations_for_support(e.rep, *e.expect_relations));
    if (!violations.empty()) return false;
  }
  const IndecResult r = is_indecomposable(e.rep);
  if (e.expect_indecomposable) return r.verdict == IndecVerdict::yes;
  return r.verdict == IndecVerdict::no;
}

std::vector<CatalogEntry> catalog_interval_modules(const WindowSpec& spec) {
  const QuiverSchema q = QuiverSchema::qmn(spec.m, spec.n);

  // Undirected graph of the windowed quiver.
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, ArrowId>>> adj;
  for (std::int64_t k = spec.a; k <= spec.b; ++k) adj[k];
  std::size_t edge_count = 0;
  for (std::int64_t k = spec.a; k <= spec.b; ++k)
    for (const ArrowKind kind : {ArrowKind::rho1, ArrowKind::rho2}) {
      const ArrowId r{kind, VertexId::of(k)};
      const std::int64_t h = q.head(r).a;
      if (h < spec.a || h > spec.b) continue;
      adj[k].push_back({h, r});
      adj[h].push_back({k, r});
      ++edge_count;
    }
  (void)edge_count;

  // Split into components and order each as a chain.
  std::set<std::int64_t> unseen;
  for (const auto& [v, nb] : adj) unseen.insert(v);
  std::vector<std::vector<std::int64_t>> chains;
  while (!unseen.empty()) {
    // Collect the component of the smallest unseen vertex.
    std::vector<std::int64_t> comp{*unseen.begin()};
    unseen.erase(unseen.begin());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const auto& [w, r] : adj[comp[i]]) {
        if (unseen.erase(w)) comp.push_back(w);
      }
    std::size_t comp_edges = 0;
    for (std::int64_t v : comp) comp_edges += adj[v].size();
    comp_edges /= 2;
    if (comp_edges + 1 != comp.size())
      throw std::domain_error("windowed quiver component is not a chain (cycle at vertex " +
                              std::to_string(comp.front()) + ")");
    for (std::int64_t v : comp)
      if (adj[v].size() > 2)
        throw std::domain_error("windowed quiver component is not a chain (branch at vertex " +
                                std::to_string(v) + ")");
    // Walk from an endpoint.
    std::int64_t start = comp.front();
    for (std::int64_t v : comp)
      if (adj[v].size() <= 1) {
        start = v;
        break;
      }
    std::vector<std::int64_t> chain{start};
    std::set<std::int64_t> used{start};
    while (chain.size() < comp.size()) {
      bool extended = false;
      for (const auto& [w, r] : adj[chain.back()])
        if (!used.count(w)) {
          chain.push_back(w);
          used.insert(w);
          extended = true;
          break;
        }
      if (!extended) break;
    }
    chains.push_back(std::move(chain));
  }
  std::sort(chains.begin(), chains.end());

  // Interval modules: contiguous runs of each chain, all maps identity.
  std::vector<CatalogEntry> out;
  for (const auto& chain : chains)
    for (std::size_t i = 0; i < chain.size(); ++i)
      for (std::size_t j = i; j < chain.size(); ++j) {
        Representation rep(q);
        std::string name = "I[";
        for (std::size_t t = i; t <= j; ++t) {
          rep.set_dim(VertexId::of(chain[t]), 1);
          if (t > i) name += ",";
          name += std::to_string(chain[t]);
        }
        name += "]";
        for (std::size_t t = i; t < j; ++t)
          for (const auto& [w, r] : adj[chain[t]])
            if (w == chain[t + 1]) rep.set_mat(r, Matrix::identity(1));
        out.push_back({name, std::move(rep), true, RelFamily::Rmn,
                       "interval module of the windowed chain"});
      }
  return out;
}

std::vector<CatalogEntry> catalog_lambda_family(std::int64_t m, const std::vector<Rat>& lambdas) {
  if (m < 1) throw std::domain_error("lambda family requires m >= 1");
  const QuiverSchema q = QuiverSchema::qmn(m, 1);
  std::vector<CatalogEntry> out;
  for (const Rat& lambda : lambdas) {
    if (lambda == 0) throw std::domain_error("lambda family requires nonzero lambda");
    Representation rep(q);
    for (std::int64_t k = 0; k <= m; ++k) rep.set_dim(VertexId::of(k), 1);
    for (std::int64_t k = 0; k < m; ++k)
      rep.set_mat({ArrowKind::rho2, VertexId::of(k)}, Matrix::identity(1));
    Matrix lam(1, 1);
    lam.at(0, 0) = lambda;
    rep.set_mat({ArrowKind::rho1, VertexId::of(0)}, std::move(lam));
    out.push_back({"Vlam(" + rat_str(lambda) + ")", std::move(rep), true, RelFamily::Rmn,
                   "cycle family member on the window {0..m}"});
  }
  return out;
}

CatalogEntry build_V_lambda(const Rat& lambda, bool repaired) {
  if (lambda == 0) throw std::domain_error("V_lambda requires nonzero lambda");
  const QuiverSchema q = QuiverSchema::qinfxinf();
  Representation rep(q);
  rep.set_dim(VertexId::of(-1, 1), 1);
  rep.set_dim(VertexId::of(0, 1), 1);
  rep.set_dim(VertexId::of(-1, 0), 1);
  rep.set_dim(VertexId::of(0, 0), 2);
  rep.set_dim(VertexId::of(1, 0), 1);
  rep.set_dim(VertexId::of(0, -1), 1);
  rep.set_dim(VertexId::of(1, -1), 1);

  auto one = Matrix::identity(1);
  Matrix col10(2, 1), col01(2, 1), row11(1, 2), row1l(1, 2), scalar(1, 1);
  col10.at(0, 0) = 1;
  col01.at(1, 0) = 1;
  row11.at(0, 0) = 1;
  row11.at(0, 1) = 1;
  row1l.at(0, 0) = 1;
  row1l.at(0, 1) = lambda;
  scalar.at(0, 0) = repaired ? lambda : Rat(1);

  rep.set_mat({ArrowKind::rho1, VertexId::of(-1, 1)}, one);       // (-1,1) -> (0,1): 1
  rep.set_mat({ArrowKind::rho2, VertexId::of(-1, 0)}, one);       // (-1,0) -> (-1,1): 1
  rep.set_mat({ArrowKind::rho2, VertexId::of(0, 0)}, row11);      // (0,0) -> (0,1): (1 1)
  rep.set_mat({ArrowKind::rho1, VertexId::of(-1, 0)}, col10);     // (-1,0) -> (0,0): (1 0)^T
  rep.set_mat({ArrowKind::rho1, VertexId::of(0, 0)}, row1l);      // (0,0) -> (1,0): (1 lambda)
  rep.set_mat({ArrowKind::rho2, VertexId::of(0, -1)}, col01);     // (0,-1) -> (0,0): (0 1)^T
  rep.set_mat({ArrowKind::rho2, VertexId::of(1, -1)}, scalar);    // (1,-1) -> (1,0)
  rep.set_mat({ArrowKind::rho1, VertexId::of(0, -1)}, one);       // (0,-1) -> (1,-1): 1

  CatalogEntry e;
  e.name = std::string(repaired ? "Vlambda-repaired(" : "Vlambda-printed(") + rat_str(lambda) + ")";
  e.rep = std::move(rep);
  e.expect_indecomposable = true;
  e.expect_relations = repaired ? std::optional<RelFamily>(RelFamily::RinfXinf) : std::nullopt;
  e.provenance = repaired ? "grid family member, lower square map set to lambda"
                          : "grid family member as printed (lower square fails when lambda != 1)";
  return e;
}

Representation cyclic_rep(std::int64_t s, const Rat& fwd, const Rat& bwd) {
  if (s < 1) throw std::domain_error("cyclic_rep requires s >= 1");
  const QuiverSchema q = QuiverSchema::qhat(s);
  Representation rep(q);
  for (std::int64_t k = 0; k < s; ++k) rep.set_dim(VertexId::of(k), 1);
  for (std::int64_t k = 0; k < s; ++k) {
    Matrix f(1, 1), b(1, 1);
    f.at(0, 0) = fwd;
    b.at(0, 0) = bwd;
    rep.set_mat({ArrowKind::fwd, VertexId::of(k)}, std::move(f));
    rep.set_mat({ArrowKind::bwd, VertexId::of(k)}, std::move(b));
  }
  return rep;
}

Representation shift_to_origin(const Representation& v) {
  if (!(v.schema().family() == Family::Qhat && v.schema().s() == 0))
    throw std::domain_error("shift_to_origin is defined on the infinite chain");
  if (v.is_zero()) return v;
  const std::int64_t lo = v.support().front().a;
  Representation out(v.schema());
  for (const VertexId& x : v.support()) out.set_dim(VertexId::of(x.a - lo), v.dim(x));
  for (const auto& [r, m] : v.mats()) out.set_mat({r.kind, VertexId::of(r.base.a - lo)}, m);
  return out;
}

// ---------------------------------------------------------------------------
// Bounded preprojective band enumeration
// ---------------------------------------------------------------------------

namespace {

/// Small integer matrix used only inside the enumeration.
struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<long> data;

  long at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  bool is_zero() const {
    for (long x : data)
      if (x != 0) return false;
    return true;
  }
  friend auto operator<=>(const IntMat&, const IntMat&) = default;
};

IntMat int_mul(const IntMat& a, const IntMat& b) {
  IntMat c{a.rows, b.cols, std::vector<long>(a.rows * b.cols, 0)};
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        c.data[i * b.cols + j] += a.at(i, k) * b.at(k, j);
    }
  return c;
}

std::vector<IntMat> all_int_mats(std::size_t rows, std::size_t cols,
                                 const std::vector<long>& entries) {
  std::vector<IntMat> out;
  const std::size_t cells = rows * cols;
  std::vector<std::size_t> odo(cells, 0);
  while (true) {
    IntMat m{rows, cols, {}};
    m.data.resize(cells);
    for (std::size_t i = 0; i < cells; ++i) m.data[i] = entries[odo[i]];
    out.push_back(std::move(m));
    std::size_t pos = 0;
    while (pos < cells && ++odo[pos] == entries.size()) odo[pos++] = 0;
    if (pos == cells) break;
    if (cells == 0) break;
  }
  return out;
}

Matrix to_matrix(const IntMat& m) {
  Matrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out.at(i, j) = rat_of(m.at(i, j));
  return out;
}

struct JunctionChoice {
  IntMat f;   // d_j -> d_{j+1}
  IntMat b;   // d_{j+1} -> d_j
  IntMat bf;  // b * f, shape d_j x d_j
  IntMat fb;  // f * b, shape d_{j+1} x d_{j+1}
};

/// Choices for one junction grouped by the product b*f, which the relation at
/// the left vertex pins to the previous junction's f*b.
using JunctionBuckets = std::map<IntMat, std::vector<JunctionChoice>>;

JunctionBuckets junction_buckets(std::size_t dl, std::size_t dr,
                                 const std::vector<long>& entries, bool drop_zero_junction) {
  JunctionBuckets buckets;
  const auto fs = all_int_mats(dr, dl, entries);
  const auto bs = all_int_mats(dl, dr, entries);
  for (const IntMat& f : fs)
    for (const IntMat& b : bs) {
      if (drop_zero_junction && f.is_zero() && b.is_zero()) continue;
      JunctionChoice c{f, b, int_mul(b, f), int_mul(f, b)};
      buckets[c.bf].push_back(std::move(c));
    }
  return buckets;
}

Representation build_band_candidate(const std::vector<int>& dims,
                                    const std::vector<JunctionChoice>& junctions) {
  const QuiverSchema q = QuiverSchema::qinf();
  Representation rep(q);
  for (std::size_t k = 0; k < dims.size(); ++k)
    rep.set_dim(VertexId::of(static_cast<std::int64_t>(k)), dims[k]);
  for (std::size_t j = 0; j < junctions.size(); ++j) {
    rep.set_mat({ArrowKind::fwd, VertexId::of(static_cast<std::int64_t>(j))},
                to_matrix(junctions[j].f));
    rep.set_mat({ArrowKind::bwd, VertexId::of(static_cast<std::int64_t>(j + 1))},
                to_matrix(junctions[j].b));
  }
  return rep;
}

}  // namespace

BandCatalog catalog_preprojective_band(const BandCatalogParams& params) {
  BandCatalog cat;
  cat.params = params;
  cat.bounds_note = "bounded search: widths <= " + std::to_string(params.max_width) +
                    ", dims <= " + std::to_string(params.dim_max) +
                    ", integer entries from a fixed set; not a completeness proof";
  if (params.max_width < 1 || params.dim_max < 1)
    throw std::domain_error("band catalog requires positive width and dimension bounds");

  std::uint64_t decompose_seed = params.seed;

  // Exact-duplicate cache: identical shifted leaves recur constantly and skip
  // the isomorphism matching entirely.
  std::set<std::string> seen_leaves;
  auto leaf_key = [](const Representation& r) {
    std::string key;
    for (const auto& [x, d] : r.dims())
      key += std::to_string(x.a) + ":" + std::to_string(d) + ";";
    key += "|";
    for (const auto& [a, m] : r.mats()) {
      key += (a.kind == ArrowKind::fwd ? "f" : "b") + std::to_string(a.base.a) + "=";
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) key += rat_str(m.at(i, j)) + ",";
      key += ";";
    }
    return key;
  };

  auto absorb_leaf = [&](const DecomposeLeaf& leaf) {
    if (!leaf.certified) return;  // counted by caller
    const Representation shifted = shift_to_origin(leaf.rep);
    if (!seen_leaves.insert(leaf_key(shifted)).second) return;
    for (const CatalogEntry& cls : cat.classes) {
      if (cls.rep.dims() != shifted.dims()) continue;
      if (iso_indecomposable(shifted, cls.rep)) return;
    }
    cat.classes.push_back({"band-" + std::to_string(cat.classes.size()), shifted, true,
                           RelFamily::Rinf, "bounded band enumeration"});
  };

  for (int width = 1; width <= params.max_width; ++width) {
    std::vector<int> dims(static_cast<std::size_t>(width), 1);
    while (true) {
      // Candidate enumeration for this dimension vector.
      if (width == 1) {
        ++cat.candidates_scanned;
        Representation rep(QuiverSchema::qinf());
        rep.set_dim(VertexId::of(0), dims[0]);
        ++cat.reps_decomposed;
        for (const DecomposeLeaf& leaf : decompose(rep, decompose_seed++)) absorb_leaf(leaf);
      } else {
        // Buckets per junction: bucket key is b*f, pinned by the previous f*b.
        std::vector<JunctionBuckets> buckets;
        for (int j = 0; j + 1 < width; ++j)
          buckets.push_back(junction_buckets(static_cast<std::size_t>(dims[j]),
                                             static_cast<std::size_t>(dims[j + 1]),
                                             params.entry_set,
                                             /*drop_zero_junction=*/true));
        std::vector<JunctionChoice> chosen;
        auto rec = [&](auto&& self, std::size_t j, const IntMat& need_bf) -> void {
          auto it = buckets[j].find(need_bf);
          if (it == buckets[j].end()) return;
          const bool last = j + 2 == static_cast<std::size_t>(width);
          for (const JunctionChoice& c : it->second) {
            if (last && !c.fb.is_zero()) continue;  // boundary relation at the top vertex
            chosen.push_back(c);
            if (last) {
              ++cat.candidates_scanned;
              Representation rep = build_band_candidate(dims, chosen);
              ++cat.reps_decomposed;
              for (const DecomposeLeaf& leaf : decompose(rep, decompose_seed++)) absorb_leaf(leaf);
            } else {
              self(self, j + 1, c.fb);
            }
            chosen.pop_back();
          }
        };
        IntMat zero0{static_cast<std::size_t>(dims[0]), static_cast<std::size_t>(dims[0]), {}};
        zero0.data.assign(static_cast<std::size_t>(dims[0] * dims[0]), 0);
        rec(rec, 0, zero0);  // boundary relation at the bottom vertex
      }

      // Next dimension vector.
      std::size_t pos = 0;
      while (pos < dims.size() && ++dims[pos] > params.dim_max) dims[pos++] = 1;
      if (pos == dims.size()) break;
    }
  }
  return cat;
}

// ---------------------------------------------------------------------------
// Band lifting
// ---------------------------------------------------------------------------

namespace {

}  // namespace

/// Cells are indexed into a 64-bit mask; each connected set is produced
/// exactly once, rooted at its smallest cell.
std::vector<std::vector<VertexId>> enumerate_band_supports(
    const std::vector<std::int64_t>& diags, const std::map<std::int64_t, int>& diag_dim,
    int extent_bound, std::size_t max_cells) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> cells;
  for (std::int64_t k : diags)
    for (int i = 0; i < extent_bound; ++i) cells.push_back(VertexId::of(i, i - k));
  std::sort(cells.begin(), cells.end());
  const std::size_t n = cells.size();
  if (n > 63) throw std::domain_error("band lift search space too large");

  // Adjacency masks: cells joined by a single grid arrow.
  std::vector<std::uint64_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t da = cells[j].a - cells[i].a, db = cells[j].b - cells[i].b;
      if ((da == 1 && db == 0) || (da == -1 && db == 0) || (da == 0 && db == 1) ||
          (da == 0 && db == -1))
        adj[i] |= (1ull << j);
    }

  auto emit_if_valid = [&](std::uint64_t mask) {
    std::map<std::int64_t, int> count;
    std::int64_t min_i = extent_bound;
    std::vector<VertexId> set;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) {
        ++count[cells[i].a - cells[i].b];
        min_i = std::min(min_i, cells[i].a);
        set.push_back(cells[i]);
      }
    if (min_i != 0) return;
    for (std::int64_t k : diags)
      if (!count.count(k)) return;
    out.push_back(std::move(set));
  };

  auto count_ok = [&](std::uint64_t mask, std::size_t v) {
    const std::int64_t diag = cells[v].a - cells[v].b;
    int c = 1;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask & (1ull << i)) && cells[i].a - cells[i].b == diag) ++c;
    return c <= diag_dim.at(diag);
  };

  auto popcount = [](std::uint64_t m) {
    int c = 0;
    while (m) {
      m &= m - 1;
      ++c;
    }
    return static_cast<std::size_t>(c);
  };

  auto rec = [&](auto&& self, std::uint64_t mask, std::uint64_t cand,
                 std::uint64_t banned) -> void {
    emit_if_valid(mask);
    if (popcount(mask) >= max_cells) return;
    while (cand) {
      const std::uint64_t vbit = cand & (~cand + 1);
      cand &= ~vbit;
      std::size_t v = 0;
      while (!(vbit & (1ull << v))) ++v;
      if (count_ok(mask, v)) {
        const std::uint64_t newmask = mask | vbit;
        const std::uint64_t newcand = (cand | (adj[v] & ~newmask)) & ~banned & ~newmask;
        self(self, newmask, newcand, banned);
      }
      banned |= vbit;
    }
  };

  for (std::size_t root = 0; root < n; ++root) {
    if (!count_ok(0, root)) continue;
    // Only cells after the root are eligible, so each set is rooted at its
    // smallest member.
    const std::uint64_t banned = (1ull << root) - 1;
    const std::uint64_t cand = adj[root] & ~banned & ~(1ull << root);
    rec(rec, 1ull << root, cand, banned);
  }
  return out;
}

namespace {

/// All ways to write total as an ordered sum of positive dims over the cells.
void enumerate_dims(const std::vector<VertexId>& cells, const std::map<std::int64_t, int>& diag_dim,
                    std::vector<std::map<VertexId, int>>& out) {
  std::map<std::int64_t, std::vector<VertexId>> by_diag;
  for (const VertexId& v : cells) by_diag[v.a - v.b].push_back(v);

  std::vector<std::map<VertexId, int>> partial{{}};
  for (const auto& [k, members] : by_diag) {
    const int total = diag_dim.at(k);
    const int parts = static_cast<int>(members.size());
    // Compositions of `total` into `parts` positive parts.
    std::vector<std::vector<int>> comps;
    std::vector<int> cur(static_cast<std::size_t>(parts), 1);
    int rem = total - parts;
    if (rem < 0) return;  // more cells than dimension; no assignment
    auto recurse = [&](auto&& self, int idx, int left) -> void {
      if (idx == parts) {
        if (left == 0) comps.push_back(cur);
        return;
      }
      for (int add = 0; add <= left; ++add) {
        cur[static_cast<std::size_t>(idx)] = 1 + add;
        self(self, idx + 1, left - add);
      }
    };
    recurse(recurse, 0, rem);
    std::vector<std::map<VertexId, int>> next;
    for (const auto& base : partial)
      for (const auto& comp : comps) {
        auto copy = base;
        for (int t = 0; t < parts; ++t) copy[members[static_cast<std::size_t>(t)]] = comp[static_cast<std::size_t>(t)];
        next.push_back(std::move(copy));
      }
    partial = std::move(next);
  }
  for (auto& p : partial) out.push_back(std::move(p));
}

}  // namespace

BandLiftResult lift_band_rep(const Representation& v, int extent_bound, std::size_t max_lifts) {
  if (!(v.schema().family() == Family::Qhat && v.schema().s() == 0))
    throw std::domain_error("lift_band_rep expects a representation of the infinite chain");
  if (v.is_zero()) throw std::domain_error("lift_band_rep: zero representation");
  if (is_indecomposable(v).verdict != IndecVerdict::yes)
    throw std::domain_error("lift_band_rep expects a certified indecomposable input");

  std::vector<std::int64_t> diags;
  std::map<std::int64_t, int> diag_dim;
  for (const VertexId& x : v.support()) {
    diags.push_back(x.a);
    diag_dim[x.a] = v.dim(x);
  }
  if (diags.back() - diags.front() + 1 > 5)
    throw std::domain_error("lift_band_rep: support width exceeds 5");

  BandLiftResult res;
  const QuiverSchema grid = QuiverSchema::qinfxinf();
  const QuiverSchema chain = v.schema();
  const QuiverMorphism f = QuiverMorphism::f();

  // Connected supports have an interval of first coordinates, so the total
  // dimension bounds the extent of the search box.
  const int extent =
      std::min<int>(extent_bound, static_cast<int>(v.total_dim()));

  // Ranks of the chain arrows between adjacent support diagonals; ranks are
  // base-change invariants, so any lift must reproduce them blockwise.
  std::vector<std::pair<ArrowId, std::size_t>> target_ranks;
  for (const std::int64_t k : diags) {
    if (diag_dim.count(k + 1))
      target_ranks.push_back({{ArrowKind::fwd, VertexId::of(k)}, rank(v.mat({ArrowKind::fwd, VertexId::of(k)}))});
    if (diag_dim.count(k - 1))
      target_ranks.push_back({{ArrowKind::bwd, VertexId::of(k)}, rank(v.mat({ArrowKind::bwd, VertexId::of(k)}))});
  }

  // Entry candidates: entries of V, their negatives, 0 and +-1.
  std::set<Rat> entry_set{Rat(0), Rat(1), Rat(-1)};
  for (const auto& [r, m] : v.mats())
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        entry_set.insert(m.at(i, j));
        entry_set.insert(-m.at(i, j));
      }
  const std::vector<Rat> entries(entry_set.begin(), entry_set.end());

  const std::vector<std::vector<VertexId>> supports =
      enumerate_band_supports(diags, diag_dim, extent, v.total_dim());
  res.supports_tried = supports.size();

  std::vector<Representation> lifts;

  for (const auto& cells : supports) {
    std::vector<std::map<VertexId, int>> assignments;
    enumerate_dims(cells, diag_dim, assignments);
    for (const auto& dims : assignments) {
      Representation base(grid);
      for (const auto& [x, d] : dims) base.set_dim(x, d);

      // Arrows inside the support, grouped under the chain arrow they land on.
      std::vector<ArrowId> arrows;
      for (const auto& [x, d] : dims)
        for (const ArrowId& r : grid.arrows_from(x))
          if (base.dim(grid.head(r)) > 0) arrows.push_back(r);
      std::sort(arrows.begin(), arrows.end());

      // Rank feasibility: the block over a chain arrow cannot exceed the sum
      // of min(tail dim, head dim) over the grid arrows lying above it.
      bool feasible = true;
      std::map<ArrowId, std::vector<std::size_t>> group;  // chain arrow -> arrow indices
      for (std::size_t i = 0; i < arrows.size(); ++i)
        group[f.map_arrow(arrows[i])].push_back(i);
      for (const auto& [tr, need] : target_ranks) {
        std::size_t bound = 0;
        if (group.count(tr))
          for (std::size_t i : group.at(tr))
            bound += static_cast<std::size_t>(std::min(base.dim(grid.tail(arrows[i])),
                                                       base.dim(grid.head(arrows[i]))));
        if (bound < need) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;

      // Chain arrows become checkable once their last grid arrow is assigned.
      std::map<std::size_t, std::vector<ArrowId>> rank_checks_at;
      for (const auto& [tr, need] : target_ranks) {
        if (!group.count(tr)) continue;  // zero block with zero target rank
        rank_checks_at[group.at(tr).back()].push_back(tr);
      }

      // Relation generators become checkable once every positive-dimensional
      // arrow they use is assigned.
      const RelationSet rels = relations_for_support(base, RelFamily::RinfXinf);
      std::vector<std::pair<std::size_t, const PathSum*>> rel_checks;  // (last index, generator)
      for (const PathSum& g : rels.generators) {
        std::size_t last = 0;
        bool relevant = true, any = false;
        for (const auto& [p, c] : g.terms()) {
          (void)c;
          for (const ArrowId& r : p.arrows()) {
            if (base.dim(grid.tail(r)) == 0 || base.dim(grid.head(r)) == 0) continue;
            const auto it = std::lower_bound(arrows.begin(), arrows.end(), r);
            if (it == arrows.end() || !(*it == r)) {
              relevant = false;
              break;
            }
            last = std::max(last, static_cast<std::size_t>(it - arrows.begin()));
            any = true;
          }
          if (!relevant) break;
        }
        if (relevant && any) rel_checks.push_back({last, &g});
      }

      // Assembles the block of the pushforward over one chain arrow.
      auto assemble = [&](const Representation& cand, ArrowId tr) {
        const std::int64_t kt = tr.base.a;
        std::vector<VertexId> tails, heads;
        for (const auto& [x, d] : dims) {
          (void)d;
          if (x.a - x.b == kt) tails.push_back(x);
          if (x.a - x.b == chain.head(tr).a) heads.push_back(x);
        }
        std::map<VertexId, std::size_t> toff, hoff;
        std::size_t tt = 0, hh = 0;
        for (const VertexId& x : tails) {
          toff[x] = tt;
          tt += static_cast<std::size_t>(cand.dim(x));
        }
        for (const VertexId& x : heads) {
          hoff[x] = hh;
          hh += static_cast<std::size_t>(cand.dim(x));
        }
        Matrix block(hh, tt);
        for (const VertexId& x : tails)
          for (const ArrowId& r : grid.arrows_from(x)) {
            if (!(f.map_arrow(r) == tr)) continue;
            const VertexId h = grid.head(r);
            if (!hoff.count(h)) continue;
            const Matrix m = cand.mat(r);
            if (!m.is_zero()) block.set_block(hoff.at(h), toff.at(x), m);
          }
        return block;
      };

      Representation candidate = base;
      auto assign = [&](auto&& self, std::size_t arrow_idx) -> void {
        if (lifts.size() >= max_lifts) return;
        if (arrow_idx == arrows.size()) {
          // Relations and blockwise ranks already verified; decide up to iso.
          const Representation image = pushforward_left(f, candidate);
          if (is_indecomposable(image).verdict == IndecVerdict::yes &&
              iso_indecomposable(image, v))
            lifts.push_back(candidate);
          return;
        }
        const ArrowId r = arrows[arrow_idx];
        const std::size_t rows = static_cast<std::size_t>(candidate.dim(grid.head(r)));
        const std::size_t cols = static_cast<std::size_t>(candidate.dim(grid.tail(r)));
        std::vector<std::size_t> odo(rows * cols, 0);
        while (true) {
          Matrix m(rows, cols);
          for (std::size_t c = 0; c < rows * cols; ++c)
            m.at(c / cols, c % cols) = entries[odo[c]];
          candidate.set_mat(r, m);
          bool ok = true;
          for (const auto& [last, gen] : rel_checks) {
            if (last != arrow_idx) continue;
            const Path& first = gen->terms().begin()->first;
            Matrix residual =
                Matrix::zero(candidate.dim(first.head()), candidate.dim(first.tail()));
            for (const auto& [p, c] : gen->terms()) residual += c * candidate.path_matrix(p);
            if (!residual.is_zero()) {
              ok = false;
              break;
            }
          }
          if (ok && rank_checks_at.count(arrow_idx))
            for (const ArrowId& tr : rank_checks_at.at(arrow_idx)) {
              std::size_t need = 0;
              for (const auto& [a, nr] : target_ranks)
                if (a == tr) need = nr;
              if (rank(assemble(candidate, tr)) != need) {
                ok = false;
                break;
              }
            }
          if (ok) self(self, arrow_idx + 1);
          if (lifts.size() >= max_lifts) return;
          std::size_t pos = 0;
          while (pos < rows * cols && ++odo[pos] == entries.size()) odo[pos++] = 0;
          if (pos == rows * cols) break;
        }
        candidate.set_mat(r, Matrix::zero(rows, cols));
      };
      assign(assign, 0);
      if (lifts.size() >= max_lifts) break;
    }
    if (lifts.size() >= max_lifts) break;
  }

  res.lifts_found = lifts.size();
  if (lifts.empty()) return res;

  std::vector<Representation> canon;
  for (const Representation& u : lifts) canon.push_back(orbit_canonical(u));
  res.lift = canon.front();
  for (std::size_t i = 1; i < canon.size(); ++i) {
    if (canon[i].dims() != canon[0].dims() || iso(canon[i], canon[0], 13) != IsoVerdict::yes) {
      res.all_translates_agree = false;
      break;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Window classification
// ---------------------------------------------------------------------------

ClassifyResult window_classify(const WindowSpec& spec, int dim_max, std::uint64_t seed,
                               std::size_t samples, const std::vector<Rat>& lambdas) {
  ClassifyResult res;
  res.boundary_case = spec.boundary_case();
  const QuiverSchema q = QuiverSchema::qmn(spec.m, spec.n);

  bool have_intervals = true;
  try {
    res.interval_classes = catalog_interval_modules(spec);
  } catch (const std::domain_error&) {
    have_intervals = false;  // cycle in the windowed quiver (n = 1 boundary case)
  }

  std::map<std::size_t, std::size_t> hits;
  Rng rng(seed);
  res.samples = samples;
  for (std::size_t t = 0; t < samples; ++t) {
    const Representation sample =
        random_rep(q, Window::range(spec.a, spec.b), dim_max, rng);
    for (const DecomposeLeaf& leaf : decompose(sample, rng.fork())) {
      if (!leaf.certified) {
        ++res.uncertified_leaves;
        continue;
      }
      bool matched = false;
      if (have_intervals)
        for (std::size_t c = 0; c < res.interval_classes.size(); ++c) {
          if (res.interval_classes[c].rep.dims() != leaf.rep.dims()) continue;
          if (iso_indecomposable(leaf.rep, res.interval_classes[c].rep)) {
            ++hits[c];
            matched = true;
            break;
          }
        }
      if (!matched) ++res.unmatched_leaves;
    }
  }
  for (const auto& [c, k] : hits) res.seen.push_back({c, k});

  if (spec.n == 1 && !lambdas.empty()) {
    res.lambda_classes = catalog_lambda_family(spec.m, lambdas);
    for (std::size_t i = 0; i < res.lambda_classes.size() && res.lambda_family_pairwise_noniso;
         ++i)
      for (std::size_t j = i + 1; j < res.lambda_classes.size(); ++j)
        if (iso_indecomposable(res.lambda_classes[i].rep, res.lambda_classes[j].rep)) {
          res.lambda_family_pairwise_noniso = false;
          break;
        }
  }
  return res;
}

}  // namespace quivrep
