#include "quivrep/json_io.hpp"

#include <stdexcept>

namespace quivrep {

Json schema_to_json(const QuiverSchema& q) {
  switch (q.family()) {
    case Family::Qmn: return {{"family", "Qmn"}, {"m", q.m()}, {"n", q.n()}};
    case Family::QinfXinf: return {{"family", "QinfXinf"}};
    case Family::Qhat:
      if (q.s() == 0) return {{"family", "Qinf"}};
      return {{"family", "Qhat"}, {"s", q.s()}};
    case Family::Awindow:
      return {{"family", "Awindow"}, {"m", q.m()}, {"n", q.n()}, {"a", q.window_lo()},
              {"b", q.window_hi()}};
  }
  throw std::logic_error("unreachable");
}

QuiverSchema schema_from_json(const Json& j) {
  const std::string fam = j.at("family").get<std::string>();
  if (fam == "Qmn") return QuiverSchema::qmn(j.at("m").get<std::int64_t>(), j.at("n").get<std::int64_t>());
  if (fam == "QinfXinf") return QuiverSchema::qinfxinf();
  if (fam == "Qinf") return QuiverSchema::qinf();
  if (fam == "Qhat") return QuiverSchema::qhat(j.at("s").get<std::int64_t>());
  if (fam == "Awindow")
    return QuiverSchema::awindow(j.at("m").get<std::int64_t>(), j.at("n").get<std::int64_t>(),
                                 j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>());
  throw std::invalid_argument("unknown quiver family: " + fam);
}

Json vertex_to_json(const QuiverSchema& q, VertexId v) {
  if (q.pair_vertices()) return Json::array({v.a, v.b});
  return v.a;
}

VertexId vertex_from_json(const QuiverSchema& q, const Json& j) {
  if (q.pair_vertices()) {
    if (!j.is_array() || j.size() != 2)
      throw std::invalid_argument("grid vertex must be a pair [i, j]");
    return VertexId::of(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  }
  return q.normalize_vertex(VertexId::of(j.get<std::int64_t>()));
}

namespace {

std::string arrow_kind_name(ArrowKind k) {
  switch (k) {
    case ArrowKind::rho1: return "rho1";
    case ArrowKind::rho2: return "rho2";
    case ArrowKind::fwd: return "rho";
    case ArrowKind::bwd: return "rhobar";
  }
  throw std::logic_error("unreachable");
}

ArrowKind arrow_kind_from_name(const std::string& s) {
  if (s == "rho1") return ArrowKind::rho1;
  if (s == "rho2") return ArrowKind::rho2;
  if (s == "rho") return ArrowKind::fwd;
  if (s == "rhobar") return ArrowKind::bwd;
  throw std::invalid_argument("unknown arrow kind: " + s);
}

}  // namespace

Json arrow_to_json(const QuiverSchema& q, ArrowId r) {
  return Json::array({arrow_kind_name(r.kind), vertex_to_json(q, r.base)});
}

ArrowId arrow_from_json(const QuiverSchema& q, const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("arrow must be [kind, base]");
  return {arrow_kind_from_name(j[0].get<std::string>()), vertex_from_json(q, j[1])};
}

Json path_to_json(const Path& p) {
  Json out = Json::array();
  if (p.trivial()) {
    out.push_back(Json::array({"e", vertex_to_json(p.schema(), p.tail())}));
    return out;
  }
  for (const ArrowId& r : p.arrows()) out.push_back(arrow_to_json(p.schema(), r));
  return out;
}

Path path_from_json(const QuiverSchema& q, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("path must be an arrow list");
  if (j.size() == 1 && j[0].is_array() && j[0].size() == 2 && j[0][0] == "e")
    return Path(q, vertex_from_json(q, j[0][1]));
  std::vector<ArrowId> arrows;
  for (const Json& a : j) arrows.push_back(arrow_from_json(q, a));
  if (arrows.empty()) throw std::invalid_argument("empty path needs an explicit base [['e', x]]");
  const VertexId base = q.tail(arrows.front());
  return Path(q, base, std::move(arrows));
}

Json pathsum_to_json(const PathSum& s) {
  Json out = Json::array();
  for (const auto& [p, c] : s.terms()) out.push_back(Json::array({path_to_json(p), rat_str(c)}));
  return out;
}

PathSum pathsum_from_json(const QuiverSchema& q, const Json& j) {
  PathSum s(q);
  for (const Json& t : j) s.add_term(path_from_json(q, t.at(0)), rat_parse(t.at(1).get<std::string>()));
  return s;
}

// Matrices are bare nested row arrays of "p/q" strings; stored matrices never
// have a zero dimension, so the shape is recovered from the rows.
Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be a nested row array");
  const std::size_t rows = j.size();
  if (rows == 0) return Matrix(0, 0);
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const Json& e = j[i][c];
      m.at(i, c) = e.is_string() ? rat_parse(e.get<std::string>()) : rat_of(e.get<long>());
    }
  }
  return m;
}

Json rep_to_json(const Representation& v) {
  Json dims = Json::array();
  for (const auto& [x, d] : v.dims()) dims.push_back(Json::array({vertex_to_json(v.schema(), x), d}));
  Json mats = Json::array();
  for (const auto& [r, m] : v.mats())
    mats.push_back(Json::array({arrow_to_json(v.schema(), r), matrix_to_json(m)}));
  return {{"schema", schema_to_json(v.schema())}, {"dims", dims}, {"mats", mats}};
}

Representation rep_from_json(const Json& j) {
  const QuiverSchema q = schema_from_json(j.at("schema"));
  Representation v(q);
  for (const Json& d : j.at("dims")) v.set_dim(vertex_from_json(q, d.at(0)), d.at(1).get<int>());
  for (const Json& m : j.at("mats"))
    v.set_mat(arrow_from_json(q, m.at(0)), matrix_from_json(m.at(1)));
  return v;
}

Json morphism_file_to_json(const RepMorphism& m) {
  Json comps = Json::array();
  for (const auto& [x, c] : m.comps)
    comps.push_back(Json::array({vertex_to_json(m.source.schema(), x), matrix_to_json(c)}));
  return {{"source", rep_to_json(m.source)}, {"target", rep_to_json(m.target)}, {"comps", comps}};
}

RepMorphism morphism_file_from_json(const Json& j) {
  RepMorphism m{rep_from_json(j.at("source")), rep_from_json(j.at("target")), {}};
  for (const Json& c : j.at("comps"))
    m.comps[vertex_from_json(m.source.schema(), c.at(0))] = matrix_from_json(c.at(1));
  return m;
}

Json quiver_morphism_to_json(const QuiverMorphism& phi) {
  switch (phi.kind()) {
    case QuiverMorphism::Kind::F: return {{"kind", "f"}};
    case QuiverMorphism::Kind::G: return {{"kind", "g"}, {"m", phi.m()}, {"n", phi.n()}};
    case QuiverMorphism::Kind::Table: {
      Json verts = Json::array(), arrows = Json::array();
      for (const auto& [v, w] : phi.vertex_table())
        verts.push_back(Json::array(
            {vertex_to_json(phi.source(), v), vertex_to_json(phi.target(), w)}));
      for (const auto& [r, r2] : phi.arrow_table())
        arrows.push_back(
            Json::array({arrow_to_json(phi.source(), r), arrow_to_json(phi.target(), r2)}));
      return {{"kind", "table"},
              {"source", schema_to_json(phi.source())},
              {"target", schema_to_json(phi.target())},
              {"vertices", verts},
              {"arrows", arrows}};
    }
  }
  throw std::logic_error("unreachable");
}

QuiverMorphism quiver_morphism_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "f") return QuiverMorphism::f();
  if (kind == "g")
    return QuiverMorphism::g(j.at("m").get<std::int64_t>(), j.at("n").get<std::int64_t>());
  if (kind == "table") {
    const QuiverSchema src = schema_from_json(j.at("source"));
    const QuiverSchema tgt = schema_from_json(j.at("target"));
    std::map<VertexId, VertexId> vmap;
    std::map<ArrowId, ArrowId> amap;
    for (const Json& e : j.at("vertices"))
      vmap[vertex_from_json(src, e.at(0))] = vertex_from_json(tgt, e.at(1));
    for (const Json& e : j.at("arrows"))
      amap[arrow_from_json(src, e.at(0))] = arrow_from_json(tgt, e.at(1));
    return QuiverMorphism::table(src, tgt, std::move(vmap), std::move(amap));
  }
  throw std::invalid_argument("unknown morphism kind: " + kind);
}

Json uelement_to_json(const UElement& u) {
  Json out = Json::array();
  for (const auto& [m, c] : u.terms()) {
    Json idx = m.idx.is_pair ? Json(Json::array({m.idx.a, m.idx.b})) : Json(m.idx.a);
    out.push_back(Json::array({m.r, idx, m.s, rat_str(c)}));
  }
  return out;
}

UElement uelement_from_json(const Json& j) {
  UElement out;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 4)
      throw std::invalid_argument("UElement term must be [r, index, s, coeff]");
    UMonomial m;
    m.r = t[0].get<std::int64_t>();
    m.s = t[2].get<std::int64_t>();
    if (t[1].is_array())
      m.idx = UIndex::pair(t[1][0].get<std::int64_t>(), t[1][1].get<std::int64_t>());
    else
      m.idx = UIndex::single(t[1].get<std::int64_t>());
    const Json& c = t[3];
    const Rat coeff = c.is_string() ? rat_parse(c.get<std::string>()) : rat_of(c.get<long>());
    if (out.is_zero() && out.terms().empty()) out = UElement(m.idx.is_pair);
    out.add_term(m, coeff);
  }
  return out;
}

}  // namespace quivrep
