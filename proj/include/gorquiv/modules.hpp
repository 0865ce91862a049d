// Right modules over a monomial algebra as explicit representations, and the
// path-module combinatorics used to name syzygies.
//
// An arrow a: u -> v acts as a linear map M_u -> M_v, stored as a
// dims[v] x dims[u] matrix. A path a_1 ... a_m acts by M_{a_m} ... M_{a_1}.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "gorquiv/linalg.hpp"
#include "gorquiv/presentation.hpp"

namespace gorquiv {

struct Representation {
  std::vector<std::size_t> dims;  // per vertex
  std::vector<Matrix> maps;       // per arrow

  std::size_t dimension() const;
  bool is_zero() const { return dimension() == 0; }
};

Representation zero_representation(const Quiver& q);

// Throws ValidationError if shapes are wrong or a minimal relation does not
// act as zero.
void check_representation(const MonomialPresentation& pres,
                          const Representation& rep);

// The linear map of a path, dims[t(p)] x dims[s(p)].
Matrix path_action(const Representation& rep, const Quiver& q, const Path& p);

Representation projective(const MonomialPresentation& pres, VertexIndex x);
Representation injective(const MonomialPresentation& pres, VertexIndex x);
Representation simple(const MonomialPresentation& pres, VertexIndex x);

enum class PathModuleKind { uniserial_quotient, cyclic_submodule };

struct PathModule {
  PathModuleKind kind;
  Path path;
};

// M(p) (basis: left subpaths of p) or pA (basis: q with pq nonzero).
// Throws ValidationError if p is zero.
Representation path_module(const MonomialPresentation& pres,
                           const PathModule& pm);

// Multiplicity of each simple in the top / socle.
std::vector<std::size_t> top(const Representation& rep, const Quiver& q);
std::vector<std::size_t> socle(const Representation& rep, const Quiver& q);

// Expands a multiplicity vector into a sorted multiset of vertices.
std::vector<VertexIndex> as_multiset(const std::vector<std::size_t>& mult);

struct Morphism {
  std::vector<Matrix> components;  // per vertex, target x source
};

struct ProjectiveCover {
  Representation cover;              // ⊕ P(v) in `summands` order
  std::vector<VertexIndex> summands;  // top vertex of each P(v)
  Morphism map;                       // cover -> rep
};

ProjectiveCover projective_cover(const MonomialPresentation& pres,
                                 const Representation& rep);

// Kernel of f: source -> target with its induced action. Throws
// PreconditionError if f does not commute with the arrow maps.
struct Kernel {
  Representation module;
  Morphism inclusion;  // module -> source
};
Kernel kernel(const Quiver& q, const Representation& source,
              const Representation& target, const Morphism& f);

// Ω(rep): the kernel of the projective cover.
Representation syzygy(const MonomialPresentation& pres,
                      const Representation& rep);

// Sorted tops of the summands if rep is projective, otherwise nullopt.
std::optional<std::vector<VertexIndex>> decompose_projective(
    const MonomialPresentation& pres, const Representation& rep);

// Dimension vector of P(x).
std::vector<std::size_t> projective_dims(const MonomialPresentation& pres,
                                         VertexIndex x);

// Two nonzero paths p, p' ending at the same vertex give isomorphic pA and
// p'A iff they have the same set of continuations {q : pq nonzero}. The
// classes are the possible path-module summands of syzygies.
struct PathClass {
  Path representative;  // least path of length >= 1, else e_v
  VertexIndex vertex;   // t(p), the top of pA
  std::vector<PathBasis::Index> extensions;  // sorted basis indices of q
  // Minimal nonzero q from t(p) with pq zero, as class ids: Ω(pA) = ⊕ qA.
  std::vector<std::size_t> step;
  std::vector<Path> step_paths;
  std::vector<std::size_t> dims;  // dimension vector of pA
};

class PathClasses {
 public:
  explicit PathClasses(const MonomialPresentation& pres);

  std::size_t size() const { return classes_.size(); }
  const PathClass& operator[](std::size_t c) const { return classes_[c]; }
  std::size_t class_of(PathBasis::Index p) const { return of_path_[p]; }
  std::size_t class_of(const Path& p) const;
  // Classes of pA with top at v, ordered by number of extensions.
  const std::vector<std::size_t>& at_vertex(VertexIndex v) const {
    return by_vertex_[v];
  }
  // True if ext(c) ⊊ ext(d).
  bool strictly_below(std::size_t c, std::size_t d) const;

 private:
  const MonomialPresentation* pres_;
  std::vector<PathClass> classes_;
  std::vector<std::size_t> of_path_;
  std::vector<std::vector<std::size_t>> by_vertex_;
};

// Summand multiplicities by class id. Counts saturate at UINT64_MAX.
using ClassMultiset = std::map<std::size_t, std::uint64_t>;

// Decomposes rep ≅ ⊕ p_i A. Returns nullopt if rep is not of that form.
std::optional<ClassMultiset> identify_path_summands(
    const MonomialPresentation& pres, const PathClasses& classes,
    const Representation& rep);

// Convenience wrapper returning representatives with repetition.
std::optional<std::vector<Path>> identify_path_summands(
    const MonomialPresentation& pres, const Representation& rep);

// {dims: {vertex: n}, arrows: {id: [[ "p/q", ...], ...]}}
nlohmann::json representation_to_json(const Representation& rep,
                                      const Quiver& q);

}  // namespace gorquiv
