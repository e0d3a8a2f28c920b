#include "coxbound/export.hpp"

#include <sstream>

namespace coxbound {
namespace {

Json point_json(const RPoint& p) { return Json::array({p.x.get_str(), p.y.get_str()}); }

Json peripheral_json(const PeripheralRef& p) {
  if (p.outer) return Json{{"kind", "outer"}};
  return Json{{"kind", "hole"}, {"level", p.square.level}, {"x", p.square.x}, {"y", p.square.y}};
}

Json star_json(const CarpetStar& star) {
  Json legs = Json::array();
  for (const auto& leg : star.legs) {
    Json pts = Json::array();
    for (const auto& p : leg) pts.push_back(point_json(p));
    legs.push_back(std::move(pts));
  }
  return Json{{"center", point_json(star.center)}, {"legs", std::move(legs)}};
}

}  // namespace

std::string subset_name(const CoxeterSystem& sys, GeneratorSet subset) {
  std::string out;
  for (Gen g : subset.members()) out += (out.empty() ? "" : " ") + sys.name(g);
  return out;
}

Json report_json(const ClassificationReport& r) {
  Json triples = Json::array();
  for (auto t : r.euclidean_triples) triples.push_back(subset_name(r.system, t));
  Json census = Json::array();
  for (const auto& e : r.triangle_census) {
    Json labels = Json::array();
    for (auto m : e.type.labels) labels.push_back(m.to_string());
    census.push_back(Json{{"triple", subset_name(r.system, e.triple)},
                          {"labels", std::move(labels)},
                          {"reciprocal_sum", e.type.reciprocal_sum.get_str()},
                          {"type", to_string(e.type.kind)}});
  }
  return Json{{"system", r.system.to_presentation()},
              {"n", r.n},
              {"boundary", to_string(r.boundary.kind)},
              {"boundary_note", r.boundary.detail},
              {"serre_fa", r.serre_fa},
              {"euclidean_triples", std::move(triples)},
              {"hyperbolic", r.hyperbolic},
              {"isolated_flats", r.isolated_flats},
              {"triangle_census", std::move(census)},
              {"citations", r.citations}};
}

Json nerve_json(const CoxeterSystem& sys, const NerveComplex& nerve) {
  Json edges = Json::array();
  for (const auto& e : nerve.edges) {
    edges.push_back(Json{{"s", sys.name(e.s)},
                         {"t", sys.name(e.t)},
                         {"label", e.label},
                         {"length_over_pi", e.length_over_pi.get_str()}});
  }
  Json simplices = Json::array();
  for (auto s : nerve.simplices) simplices.push_back(subset_name(sys, s));
  const auto complete = is_complete_1d_nerve(nerve);
  Json out{{"vertices", nerve.vertices},
           {"edges", std::move(edges)},
           {"simplices", std::move(simplices)},
           {"dimension", nerve.dimension},
           {"max_dim", nerve.max_dim},
           {"complete_graph", complete.has_value()}};
  if (nerve.dimension <= 1) {
    out["planar"] = is_planar(nerve);
  } else {
    out["planar"] = nullptr;
  }
  return out;
}

Json davis_ball_json(const DavisBall& ball) {
  const auto& sys = ball.system;
  const auto& cb = ball.cayley;
  Json vertices = Json::array();
  for (std::size_t v = 0; v < cb.vertices.size(); ++v) {
    vertices.push_back(Json{{"word", format_word(sys, cb.vertices[v].word)}, {"length", cb.lengths[v]}});
  }
  Json edges = Json::array();
  for (const auto& e : cb.edges) edges.push_back(Json::array({e.from, e.to, sys.name(e.label)}));
  Json faces = Json::array();
  for (const auto& f : ball.faces) {
    faces.push_back(Json{{"generators", Json::array({sys.name(f.s), sys.name(f.t)})},
                         {"m", f.m},
                         {"boundary", f.boundary}});
  }
  const NerveComplex nerve = build_nerve(sys, 1);
  std::size_t interior = 0, isomorphic = 0;
  for (std::size_t v = 0; v < cb.vertices.size(); ++v) {
    if (static_cast<int>(cb.lengths[v]) > ball.radius - ball.max_finite_label()) continue;
    ++interior;
    if (link_isomorphic_to_nerve(vertex_link(ball, static_cast<std::int32_t>(v)), nerve)) ++isomorphic;
  }
  return Json{{"system", sys.to_presentation()},
              {"radius", ball.radius},
              {"counts", Json{{"vertices", ball.vertex_count()},
                              {"edges", ball.edge_count()},
                              {"faces", ball.face_count()},
                              {"euler_characteristic", euler_characteristic(ball)}}},
              {"sphere_sizes", cb.sphere_sizes},
              {"links", Json{{"interior_vertices", interior}, {"isomorphic_to_nerve", isomorphic}}},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"faces", std::move(faces)}};
}

Json carpet_json(const CarpetApprox& c, std::span<const MarkedPoint> marked, const CarpetStar* star) {
  Json removed = Json::array();
  for (const auto& sq : c.removed) removed.push_back(Json{{"level", sq.level}, {"x", sq.x}, {"y", sq.y}});
  Json out{{"level", c.level}, {"kept_count", c.kept.size()}, {"removed", std::move(removed)}};
  if (star) {
    Json marks = Json::array();
    for (const auto& m : marked) {
      marks.push_back(Json{{"peripheral", peripheral_json(m.peripheral)}, {"point", point_json(m.point)}});
    }
    const StarCheck check = verify_carpet_star(c, marked, *star);
    out["marked"] = std::move(marks);
    out["star"] = star_json(*star);
    out["verified"] = check.ok;
    if (!check.ok) out["failure"] = check.failure;
  }
  return out;
}

Json k5_json(const K5Scaffold& s, const K5Verdict& v) {
  Json carpets = Json::array();
  for (const auto& k : s.carpets) {
    Json marks = Json::array();
    for (std::size_t l = 0; l < k.marked.size(); ++l) {
      marks.push_back(Json{{"partner", k.partners[l]},
                           {"peripheral", peripheral_json(k.marked[l].peripheral)},
                           {"point", point_json(k.marked[l].point)}});
    }
    carpets.push_back(Json{{"index", k.index}, {"marked", std::move(marks)}, {"star", star_json(k.star)}});
  }
  Json ids = Json::array();
  for (const auto& id : s.identifications) {
    ids.push_back(Json{{"i", id.i},
                       {"j", id.j},
                       {"circle_i", peripheral_json(id.circle_i)},
                       {"circle_j", peripheral_json(id.circle_j)},
                       {"theta", id.theta.get_str()},
                       {"p_ij", point_json(id.point_i)},
                       {"p_ji", point_json(id.point_j)}});
  }
  Json edges = Json::array();
  for (const auto& [a, b] : s.edges) edges.push_back(Json::array({a, b}));
  Json adjacency = Json::array();
  for (const auto& row : v.adjacency) adjacency.push_back(row);
  return Json{{"level", s.level},
              {"graph", Json{{"vertices", 5}, {"edges", std::move(edges)}, {"adjacency", std::move(adjacency)}}},
              {"verified", v.ok},
              {"failures", v.failures},
              {"identifications", std::move(ids)},
              {"carpets", std::move(carpets)}};
}

Json sweep_json(const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"n", r.n},
                       {"signature", r.signature},
                       {"boundary", to_string(r.boundary)},
                       {"boundary_note", r.boundary_note},
                       {"hyperbolic", r.hyperbolic}});
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "n,signature,boundary,boundary_note,hyperbolic\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.signature << ',' << to_string(r.boundary) << ',' << r.boundary_note << ','
       << (r.hyperbolic ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace coxbound
