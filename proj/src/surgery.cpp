#include "gorquiv/surgery.hpp"

#include <algorithm>

#include "gorquiv/error.hpp"

namespace gorquiv {

namespace {

std::string fresh_id(const Quiver& q, std::string base) {
  while (q.find_vertex(base)) {
    base += '\'';
  }
  return base;
}

// Rebuilds the presentation with vertex ids renamed by `vertex_of` (applied
// to old vertex index, giving the new id) and arrow endpoints given by
// `ends`. Relations are carried over by arrow ids.
MonomialPresentation rebuild(
    const MonomialPresentation& pres, const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& ends) {
  const Quiver& q = pres.quiver();
  Quiver out;
  for (const auto& v : vertices) {
    out.add_vertex(v);
  }
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    out.add_arrow(q.arrow(a).id, ends[a].first, ends[a].second);
  }
  std::vector<Path> gens;
  for (const auto& r : pres.minimal_relations()) {
    gens.push_back(out.make_path(q.arrow_ids(r)));
  }
  return MonomialPresentation(pres.name(), std::move(out), std::move(gens));
}

}  // namespace

std::vector<CuttableVertex> cuttable_vertices(const MonomialPresentation& pres) {
  const Quiver& q = pres.quiver();
  std::vector<CuttableVertex> out;
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    for (const auto& l : degree_four_labelings(pres, v)) {
      if (q.arrow(l.a1).id < q.arrow(l.a2).id) {
        out.push_back({v,
                       {q.arrow(l.a1).id, q.arrow(l.a2).id, q.arrow(l.b1).id,
                        q.arrow(l.b2).id}});
      }
    }
  }
  return out;
}

CutResult cut(const MonomialPresentation& pres, VertexIndex v,
              const CutLabeling& labeling) {
  const Quiver& q = pres.quiver();
  bool valid = false;
  for (const auto& l : degree_four_labelings(pres, v)) {
    valid = valid || CutLabeling{q.arrow(l.a1).id, q.arrow(l.a2).id,
                                 q.arrow(l.b1).id, q.arrow(l.b2).id} == labeling;
  }
  if (!valid) {
    throw PreconditionError("vertex '" + q.vertex_id(v) +
                            "' cannot be cut with the given labeling");
  }
  const std::string id = q.vertex_id(v);
  const std::string v1 = fresh_id(q, id + "_1");
  std::string v2 = fresh_id(q, id + "_2");
  if (v2 == v1) {
    v2 += '\'';
  }

  std::vector<std::string> vertices;
  CutTrace trace;
  for (VertexIndex w = 0; w < q.num_vertices(); ++w) {
    if (w == v) {
      vertices.push_back(v1);
      vertices.push_back(v2);
      trace.origin[v1] = id;
      trace.origin[v2] = id;
    } else {
      vertices.push_back(q.vertex_id(w));
      trace.origin[q.vertex_id(w)] = q.vertex_id(w);
    }
  }
  std::vector<std::pair<std::string, std::string>> ends;
  for (const auto& a : q.arrows()) {
    std::string s = q.vertex_id(a.source);
    std::string t = q.vertex_id(a.target);
    if (a.id == labeling.a1) {
      t = v1;
    }
    if (a.id == labeling.a2) {
      t = v2;
    }
    if (a.id == labeling.b2) {
      s = v1;
    }
    if (a.id == labeling.b1) {
      s = v2;
    }
    ends.emplace_back(s, t);
  }
  trace.events.push_back({id, v1, v2, labeling});
  return {rebuild(pres, vertices, ends), std::move(trace)};
}

CutResult cut(const MonomialPresentation& pres, VertexIndex v) {
  for (const auto& c : cuttable_vertices(pres)) {
    if (c.vertex == v) {
      return cut(pres, v, c.labeling);
    }
  }
  throw PreconditionError("vertex '" + pres.quiver().vertex_id(v) +
                          "' is not cuttable");
}

MonomialPresentation glue(const MonomialPresentation& pres, VertexIndex v1,
                          VertexIndex v2, const std::string& name) {
  const Quiver& q = pres.quiver();
  if (v1 == v2) {
    throw PreconditionError("glue needs two distinct vertices");
  }
  if (q.in_degree(v1) + q.in_degree(v2) > 2 ||
      q.out_degree(v1) + q.out_degree(v2) > 2) {
    throw PreconditionError("glued vertex would have more than two arrows on "
                            "one side");
  }
  for (VertexIndex w = 0; w < q.num_vertices(); ++w) {
    if (w != v1 && w != v2 && q.vertex_id(w) == name) {
      throw PreconditionError("vertex id '" + name + "' already in use");
    }
  }
  std::vector<std::string> vertices;
  for (VertexIndex w = 0; w < q.num_vertices(); ++w) {
    if (w == v1) {
      vertices.push_back(name);
    } else if (w != v2) {
      vertices.push_back(q.vertex_id(w));
    }
  }
  auto rename = [&](VertexIndex w) {
    return w == v1 || w == v2 ? name : q.vertex_id(w);
  };
  std::vector<std::pair<std::string, std::string>> ends;
  for (const auto& a : q.arrows()) {
    ends.emplace_back(rename(a.source), rename(a.target));
  }
  return rebuild(pres, vertices, ends);
}

std::optional<Reduction> reduce_to_nakayama(const MonomialPresentation& pres) {
  if (!two_gorenstein_criterion(pres).pass) {
    return std::nullopt;
  }
  MonomialPresentation current = pres;
  CutTrace trace;
  for (const auto& v : pres.quiver().vertex_ids()) {
    trace.origin[v] = v;
  }
  for (;;) {
    const Quiver& q = current.quiver();
    std::optional<VertexIndex> pick;
    for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
      if (q.in_degree(v) == 2 && q.out_degree(v) == 2 &&
          (!pick || q.vertex_id(v) < q.vertex_id(*pick))) {
        pick = v;
      }
    }
    if (!pick) {
      break;
    }
    auto cands = cuttable_vertices(current);
    auto it = std::find_if(cands.begin(), cands.end(),
                           [&](const auto& c) { return c.vertex == *pick; });
    if (it == cands.end()) {
      throw InternalError("degree-4 vertex without a cut labeling after "
                          "cutting a 2-Gorenstein algebra");
    }
    CutResult r = cut(current, *pick, it->labeling);
    std::map<std::string, std::string> origin;
    for (const auto& [now, before] : r.trace.origin) {
      origin[now] = trace.origin.at(before);
    }
    trace.origin = std::move(origin);
    trace.events.push_back(r.trace.events.front());
    current = std::move(r.presentation);
  }
  Reduction red{current, trace, connected_components(current), {}};
  for (const auto& comp : red.components) {
    auto ks = kupisch_from_presentation(comp);
    if (!ks) {
      throw InternalError("component '" + comp.name() +
                          "' of a reduction is not Nakayama");
    }
    red.series.push_back(*ks);
  }
  return red;
}

nlohmann::json to_json(const CutTrace& trace) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& e : trace.events) {
    events.push_back({{"vertex", e.vertex},
                      {"v1", e.v1},
                      {"v2", e.v2},
                      {"labeling",
                       {{"a1", e.labeling.a1},
                        {"a2", e.labeling.a2},
                        {"b1", e.labeling.b1},
                        {"b2", e.labeling.b2}}}});
  }
  return {{"events", events}, {"origin", trace.origin}};
}

}  // namespace gorquiv
