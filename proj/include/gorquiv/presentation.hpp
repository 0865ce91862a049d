// Quivers, paths and monomial presentations A = kQ/I.
//
// Paths compose left to right: for x --a--> y --b--> z the path is "a b".

#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gorquiv/automaton.hpp"

namespace gorquiv {

using VertexIndex = std::size_t;
using ArrowIndex = std::size_t;

struct Arrow {
  std::string id;
  VertexIndex source;
  VertexIndex target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Path {
  VertexIndex source = 0;
  VertexIndex target = 0;
  std::vector<ArrowIndex> arrows;

  std::size_t length() const { return arrows.size(); }
  bool is_trivial() const { return arrows.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

class Quiver {
 public:
  VertexIndex add_vertex(std::string id);
  ArrowIndex add_arrow(std::string id, VertexIndex source, VertexIndex target);
  ArrowIndex add_arrow(std::string id, std::string_view source,
                       std::string_view target);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }

  const std::string& vertex_id(VertexIndex v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_ids() const { return vertices_; }
  const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<ArrowIndex> find_arrow(std::string_view id) const;
  VertexIndex vertex(std::string_view id) const;  // throws on unknown id
  ArrowIndex arrow_index(std::string_view id) const;

  // A loop contributes one to each.
  std::size_t in_degree(VertexIndex v) const { return in_.at(v).size(); }
  std::size_t out_degree(VertexIndex v) const { return out_.at(v).size(); }
  const std::vector<ArrowIndex>& arrows_into(VertexIndex v) const {
    return in_.at(v);
  }
  const std::vector<ArrowIndex>& arrows_out_of(VertexIndex v) const {
    return out_.at(v);
  }

  Path trivial_path(VertexIndex v) const;
  // Throws ValidationError if consecutive arrows do not compose.
  Path make_path(const std::vector<ArrowIndex>& arrows) const;
  Path make_path(const std::vector<std::string>& arrow_ids) const;

  std::string format(const Path& p) const;  // "a b c" or "e_x"
  std::vector<std::string> arrow_ids(const Path& p) const;

  // Lexicographic order on arrow-id sequences; trivial paths ordered by
  // vertex id and placed before nontrivial paths that start at the same
  // place.
  bool path_less(const Path& a, const Path& b) const;

  // Same vertex set and arrows, arrows reversed.
  Quiver opposite() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, VertexIndex, std::less<>> vertex_lookup_;
  std::map<std::string, ArrowIndex, std::less<>> arrow_lookup_;
  std::vector<std::vector<ArrowIndex>> in_;
  std::vector<std::vector<ArrowIndex>> out_;
};

// The nonzero paths of a monomial algebra, indexed. Closed under taking
// subpaths; right and left multiplication by an arrow are table lookups.
class PathBasis {
 public:
  using Index = std::size_t;
  static constexpr Index kZero = std::numeric_limits<Index>::max();

  std::size_t size() const { return paths_.size(); }
  const Path& path(Index i) const { return paths_[i]; }
  const std::vector<Path>& paths() const { return paths_; }

  Index trivial(VertexIndex v) const { return trivial_[v]; }
  // Index of p*a, or kZero.
  Index right(Index p, ArrowIndex a) const { return right_[p * arrows_ + a]; }
  // Index of a*p, or kZero.
  Index left(Index p, ArrowIndex a) const { return left_[p * arrows_ + a]; }
  std::optional<Index> find(const Path& p) const;

  const std::vector<Index>& starting_at(VertexIndex v) const { return from_[v]; }
  const std::vector<Index>& ending_at(VertexIndex v) const { return to_[v]; }

 private:
  friend class MonomialPresentation;
  std::size_t arrows_ = 0;
  std::vector<Path> paths_;
  std::vector<Index> trivial_;
  std::vector<Index> right_;
  std::vector<Index> left_;
  std::vector<std::vector<Index>> from_;
  std::vector<std::vector<Index>> to_;
  std::map<std::vector<ArrowIndex>, Index> lookup_;  // nontrivial paths
};

enum class Side { left, right };

class MonomialPresentation {
 public:
  // Validates and normalizes. Throws ValidationError if a generator has
  // length < 2 or the algebra is infinite-dimensional.
  MonomialPresentation(std::string name, Quiver quiver,
                       std::vector<Path> generators);

  const std::string& name() const { return name_; }
  const Quiver& quiver() const { return quiver_; }
  // As given, for serialization.
  const std::vector<Path>& generators() const { return generators_; }
  // No element contains another as a factor; sorted by Quiver::path_less.
  const std::vector<Path>& minimal_relations() const { return relations_; }
  const PathBasis& basis() const { return basis_; }
  const FactorAutomaton& automaton() const { return automaton_; }

  std::size_t dimension() const { return basis_.size(); }
  std::size_t num_vertices() const { return quiver_.num_vertices(); }

  bool is_zero(const Path& p) const;
  // Left-maximal paths ending at x (side == left) or right-maximal paths
  // starting at x (side == right).
  std::vector<Path> maximal_paths(VertexIndex x, Side side) const;

  MonomialPresentation opposite() const;

 private:
  std::string name_;
  Quiver quiver_;
  std::vector<Path> generators_;
  std::vector<Path> relations_;
  FactorAutomaton automaton_;
  PathBasis basis_;
};

// Minimal elements under the contiguous-factor order (duplicates removed).
std::vector<Path> minimal_relations(const Quiver& q,
                                    const std::vector<Path>& generators);

// Whether kQ/(generators) is finite-dimensional, without building a basis.
bool is_finite_dimensional(const Quiver& q, const std::vector<Path>& generators);

// True if `big` contains `small` as a contiguous factor.
bool contains_factor(const Path& big, const Path& small);

Path reversed(const Path& p);

// Same vertex ids, same arrows (by id, endpoint ids) and same minimal
// relations, irrespective of declaration order and name.
bool same_labeled_structure(const MonomialPresentation& a,
                            const MonomialPresentation& b);

// Weakly connected components, ordered by their first declared vertex. Ids
// are kept; component k is named "<name>.<k>".
std::vector<MonomialPresentation> connected_components(
    const MonomialPresentation& pres);

}  // namespace gorquiv
