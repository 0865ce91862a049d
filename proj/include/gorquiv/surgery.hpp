// Cutting degree-4 vertices, the inverse gluing and the reduction of
// 2-Gorenstein monomial algebras to disjoint unions of Nakayama algebras.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gorquiv/analysis.hpp"
#include "gorquiv/nakayama.hpp"
#include "gorquiv/presentation.hpp"

namespace gorquiv {

struct CutLabeling {
  std::string a1;
  std::string a2;
  std::string b1;
  std::string b2;

  friend bool operator==(const CutLabeling&, const CutLabeling&) = default;
};

struct CutEvent {
  std::string vertex;  // the vertex that was split
  std::string v1;      // t(a1) = v1 = s(b2)
  std::string v2;      // t(a2) = v2 = s(b1)
  CutLabeling labeling;
};

struct CutTrace {
  std::vector<CutEvent> events;
  // Vertex id in the final presentation -> vertex id in the original.
  std::map<std::string, std::string> origin;
};

struct CutResult {
  MonomialPresentation presentation;
  CutTrace trace;
};

struct CuttableVertex {
  VertexIndex vertex;
  CutLabeling labeling;
};

// Degree-4 vertices with a valid labeling. Of the two mirror-image forms
// of a labeling only the one with a1 < a2 (by id) is listed; vertices are in
// declaration order and labelings at one vertex in lexicographic order.
std::vector<CuttableVertex> cuttable_vertices(const MonomialPresentation& pres);

// Throws PreconditionError if the labeling is not valid at v.
CutResult cut(const MonomialPresentation& pres, VertexIndex v,
              const CutLabeling& labeling);
// Uses the first listed labeling at v.
CutResult cut(const MonomialPresentation& pres, VertexIndex v);

// Merges v1 and v2 into a vertex called `name`. Throws PreconditionError on
// v1 == v2 or if the merged vertex has more than two arrows on a side, and
// ValidationError if the result is infinite-dimensional.
MonomialPresentation glue(const MonomialPresentation& pres, VertexIndex v1,
                          VertexIndex v2, const std::string& name);

struct Reduction {
  MonomialPresentation result;
  CutTrace trace;
  std::vector<MonomialPresentation> components;
  std::vector<KupischExtraction> series;  // one per component
};

// nullopt when the 2-Gorenstein criterion fails. Cuts the degree-4 vertex
// with the smallest id until none is left.
std::optional<Reduction> reduce_to_nakayama(const MonomialPresentation& pres);

nlohmann::json to_json(const CutTrace& trace);

}  // namespace gorquiv
