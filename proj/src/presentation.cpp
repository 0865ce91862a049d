#include "gorquiv/presentation.hpp"

#include <algorithm>
#include <set>
#include <stack>
#include <utility>

#include "gorquiv/error.hpp"

namespace gorquiv {

VertexIndex Quiver::add_vertex(std::string id) {
  if (id.empty()) {
    throw ValidationError("empty vertex id");
  }
  if (vertex_lookup_.count(id) != 0) {
    throw ValidationError("duplicate vertex id '" + id + "'");
  }
  VertexIndex v = vertices_.size();
  vertex_lookup_.emplace(id, v);
  vertices_.push_back(std::move(id));
  in_.emplace_back();
  out_.emplace_back();
  return v;
}

ArrowIndex Quiver::add_arrow(std::string id, VertexIndex source,
                             VertexIndex target) {
  if (id.empty()) {
    throw ValidationError("empty arrow id");
  }
  if (arrow_lookup_.count(id) != 0) {
    throw ValidationError("duplicate arrow id '" + id + "'");
  }
  if (source >= vertices_.size() || target >= vertices_.size()) {
    throw ValidationError("arrow '" + id + "' has an undeclared endpoint");
  }
  ArrowIndex a = arrows_.size();
  arrow_lookup_.emplace(id, a);
  arrows_.push_back(Arrow{std::move(id), source, target});
  out_[source].push_back(a);
  in_[target].push_back(a);
  return a;
}

ArrowIndex Quiver::add_arrow(std::string id, std::string_view source,
                             std::string_view target) {
  return add_arrow(std::move(id), vertex(source), vertex(target));
}

std::optional<VertexIndex> Quiver::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<ArrowIndex> Quiver::find_arrow(std::string_view id) const {
  auto it = arrow_lookup_.find(id);
  if (it == arrow_lookup_.end()) {
    return std::nullopt;
  }
  return it->second;
}

VertexIndex Quiver::vertex(std::string_view id) const {
  auto v = find_vertex(id);
  if (!v) {
    throw ValidationError("unknown vertex '" + std::string(id) + "'");
  }
  return *v;
}

ArrowIndex Quiver::arrow_index(std::string_view id) const {
  auto a = find_arrow(id);
  if (!a) {
    throw ValidationError("unknown arrow '" + std::string(id) + "'");
  }
  return *a;
}

Path Quiver::trivial_path(VertexIndex v) const {
  if (v >= vertices_.size()) {
    throw ValidationError("vertex index out of range");
  }
  return Path{v, v, {}};
}

Path Quiver::make_path(const std::vector<ArrowIndex>& arrows) const {
  if (arrows.empty()) {
    throw ValidationError("a nontrivial path needs at least one arrow");
  }
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i] >= arrows_.size()) {
      throw ValidationError("arrow index out of range");
    }
    if (i > 0 && arrows_[arrows[i - 1]].target != arrows_[arrows[i]].source) {
      throw ValidationError("arrows '" + arrows_[arrows[i - 1]].id + "' and '" +
                            arrows_[arrows[i]].id + "' do not compose");
    }
  }
  return Path{arrows_[arrows.front()].source, arrows_[arrows.back()].target,
              arrows};
}

Path Quiver::make_path(const std::vector<std::string>& arrow_ids) const {
  std::vector<ArrowIndex> idx;
  idx.reserve(arrow_ids.size());
  for (const auto& id : arrow_ids) {
    idx.push_back(arrow_index(id));
  }
  return make_path(idx);
}

std::string Quiver::format(const Path& p) const {
  if (p.is_trivial()) {
    return "e_" + vertices_.at(p.source);
  }
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i > 0) {
      s += ' ';
    }
    s += arrows_.at(p.arrows[i]).id;
  }
  return s;
}

std::vector<std::string> Quiver::arrow_ids(const Path& p) const {
  std::vector<std::string> ids;
  for (ArrowIndex a : p.arrows) {
    ids.push_back(arrows_.at(a).id);
  }
  return ids;
}

bool Quiver::path_less(const Path& a, const Path& b) const {
  std::size_t n = std::min(a.arrows.size(), b.arrows.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& x = arrows_[a.arrows[i]].id;
    const std::string& y = arrows_[b.arrows[i]].id;
    if (x != y) {
      return x < y;
    }
  }
  if (a.arrows.size() != b.arrows.size()) {
    return a.arrows.size() < b.arrows.size();
  }
  // Equal arrow sequences: only trivial paths can differ.
  if (a.source != b.source) {
    return vertices_[a.source] < vertices_[b.source];
  }
  return false;
}

Quiver Quiver::opposite() const {
  Quiver op;
  for (const auto& v : vertices_) {
    op.add_vertex(v);
  }
  for (const auto& a : arrows_) {
    op.add_arrow(a.id, a.target, a.source);
  }
  return op;
}

bool contains_factor(const Path& big, const Path& small) {
  if (small.arrows.empty()) {
    return false;
  }
  return std::search(big.arrows.begin(), big.arrows.end(), small.arrows.begin(),
                     small.arrows.end()) != big.arrows.end();
}

Path reversed(const Path& p) {
  Path r{p.target, p.source, p.arrows};
  std::reverse(r.arrows.begin(), r.arrows.end());
  return r;
}

std::vector<Path> minimal_relations(const Quiver& q,
                                    const std::vector<Path>& generators) {
  std::vector<Path> unique;
  for (const auto& g : generators) {
    if (std::find(unique.begin(), unique.end(), g) == unique.end()) {
      unique.push_back(g);
    }
  }
  std::vector<Path> minimal;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < unique.size() && !redundant; ++j) {
      redundant = i != j && contains_factor(unique[i], unique[j]);
    }
    if (!redundant) {
      minimal.push_back(unique[i]);
    }
  }
  std::sort(minimal.begin(), minimal.end(),
            [&q](const Path& a, const Path& b) { return q.path_less(a, b); });
  return minimal;
}

namespace {

std::vector<std::vector<std::size_t>> words_of(const std::vector<Path>& ps) {
  std::vector<std::vector<std::size_t>> w;
  for (const auto& p : ps) {
    w.push_back(p.arrows);
  }
  return w;
}

// Detects an oriented cycle in the graph of (vertex, automaton state) pairs
// reachable without completing a relation. Such a cycle exists iff there are
// arbitrarily long nonzero paths.
bool has_unbounded_paths(const Quiver& q, const FactorAutomaton& aut) {
  const std::size_t ns = aut.num_states();
  auto node = [ns](VertexIndex v, std::size_t s) { return v * ns + s; };
  std::vector<char> color(q.num_vertices() * ns, 0);
  struct Frame {
    VertexIndex v;
    std::size_t s;
    std::size_t next_arrow;
  };
  for (VertexIndex start = 0; start < q.num_vertices(); ++start) {
    if (color[node(start, aut.root())] != 0) {
      continue;
    }
    std::stack<Frame> st;
    st.push({start, aut.root(), 0});
    color[node(start, aut.root())] = 1;
    while (!st.empty()) {
      Frame& f = st.top();
      const auto& outs = q.arrows_out_of(f.v);
      if (f.next_arrow == outs.size()) {
        color[node(f.v, f.s)] = 2;
        st.pop();
        continue;
      }
      ArrowIndex a = outs[f.next_arrow++];
      std::size_t s2 = aut.next(f.s, a);
      if (aut.accepting(s2)) {
        continue;
      }
      VertexIndex v2 = q.arrow(a).target;
      char& c = color[node(v2, s2)];
      if (c == 1) {
        return true;
      }
      if (c == 0) {
        c = 1;
        st.push({v2, s2, 0});
      }
    }
  }
  return false;
}

}  // namespace

MonomialPresentation::MonomialPresentation(std::string name, Quiver quiver,
                                           std::vector<Path> generators)
    : name_(std::move(name)),
      quiver_(std::move(quiver)),
      generators_(std::move(generators)),
      relations_(),
      automaton_(quiver_.num_arrows(), {}) {
  for (const auto& g : generators_) {
    if (g.length() < 2) {
      throw ValidationError("relation '" + quiver_.format(g) +
                            "' has length < 2 (ideal must lie in J^2)");
    }
    // Re-check composability for paths built by hand.
    quiver_.make_path(g.arrows);
  }
  relations_ = gorquiv::minimal_relations(quiver_, generators_);
  automaton_ = FactorAutomaton(quiver_.num_arrows(), words_of(relations_));
  if (has_unbounded_paths(quiver_, automaton_)) {
    throw ValidationError("algebra '" + name_ + "' is infinite-dimensional");
  }

  // Depth-first enumeration of nonzero paths from every vertex.
  const std::size_t na = quiver_.num_arrows();
  basis_.arrows_ = na;
  basis_.trivial_.resize(quiver_.num_vertices());
  basis_.from_.resize(quiver_.num_vertices());
  basis_.to_.resize(quiver_.num_vertices());
  std::vector<std::size_t> states;
  for (VertexIndex v = 0; v < quiver_.num_vertices(); ++v) {
    std::stack<std::size_t> todo;
    basis_.trivial_[v] = basis_.paths_.size();
    basis_.paths_.push_back(quiver_.trivial_path(v));
    states.push_back(automaton_.root());
    basis_.right_.resize(basis_.paths_.size() * na, PathBasis::kZero);
    todo.push(basis_.trivial_[v]);
    while (!todo.empty()) {
      std::size_t p = todo.top();
      todo.pop();
      VertexIndex end = basis_.paths_[p].target;
      for (ArrowIndex a : quiver_.arrows_out_of(end)) {
        std::size_t s2 = automaton_.next(states[p], a);
        if (automaton_.accepting(s2)) {
          continue;
        }
        Path ext = basis_.paths_[p];
        ext.arrows.push_back(a);
        ext.target = quiver_.arrow(a).target;
        std::size_t idx = basis_.paths_.size();
        basis_.paths_.push_back(std::move(ext));
        states.push_back(s2);
        basis_.right_.resize(basis_.paths_.size() * na, PathBasis::kZero);
        basis_.right_[p * na + a] = idx;
        todo.push(idx);
      }
    }
  }
  for (std::size_t i = 0; i < basis_.paths_.size(); ++i) {
    const Path& p = basis_.paths_[i];
    basis_.from_[p.source].push_back(i);
    basis_.to_[p.target].push_back(i);
    if (!p.is_trivial()) {
      basis_.lookup_.emplace(p.arrows, i);
    }
  }
  basis_.left_.assign(basis_.paths_.size() * na, PathBasis::kZero);
  for (std::size_t i = 0; i < basis_.paths_.size(); ++i) {
    const Path& p = basis_.paths_[i];
    for (ArrowIndex a : quiver_.arrows_into(p.source)) {
      std::vector<ArrowIndex> w;
      w.reserve(p.arrows.size() + 1);
      w.push_back(a);
      w.insert(w.end(), p.arrows.begin(), p.arrows.end());
      auto it = basis_.lookup_.find(w);
      if (it != basis_.lookup_.end()) {
        basis_.left_[i * na + a] = it->second;
      }
    }
  }
}

std::optional<PathBasis::Index> PathBasis::find(const Path& p) const {
  if (p.is_trivial()) {
    if (p.source >= trivial_.size()) {
      return std::nullopt;
    }
    return trivial_[p.source];
  }
  auto it = lookup_.find(p.arrows);
  if (it == lookup_.end()) {
    return std::nullopt;
  }
  return it->second;
}

bool MonomialPresentation::is_zero(const Path& p) const {
  if (!p.is_trivial()) {
    quiver_.make_path(p.arrows);
  } else if (p.source >= quiver_.num_vertices()) {
    throw ValidationError("vertex index out of range");
  }
  return automaton_.contains_pattern(p.arrows);
}

std::vector<Path> MonomialPresentation::maximal_paths(VertexIndex x,
                                                      Side side) const {
  if (x >= quiver_.num_vertices()) {
    throw ValidationError("vertex index out of range");
  }
  std::vector<Path> out;
  if (side == Side::left) {
    for (auto i : basis_.ending_at(x)) {
      bool maximal = true;
      for (ArrowIndex a : quiver_.arrows_into(basis_.path(i).source)) {
        maximal = maximal && basis_.left(i, a) == PathBasis::kZero;
      }
      if (maximal) {
        out.push_back(basis_.path(i));
      }
    }
  } else {
    for (auto i : basis_.starting_at(x)) {
      bool maximal = true;
      for (ArrowIndex a : quiver_.arrows_out_of(basis_.path(i).target)) {
        maximal = maximal && basis_.right(i, a) == PathBasis::kZero;
      }
      if (maximal) {
        out.push_back(basis_.path(i));
      }
    }
  }
  std::sort(out.begin(), out.end(), [this](const Path& a, const Path& b) {
    return quiver_.path_less(a, b);
  });
  return out;
}

MonomialPresentation MonomialPresentation::opposite() const {
  Quiver op = quiver_.opposite();
  std::vector<Path> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) {
    gens.push_back(reversed(g));
  }
  return MonomialPresentation(name_, std::move(op), std::move(gens));
}

bool same_labeled_structure(const MonomialPresentation& a,
                            const MonomialPresentation& b) {
  const Quiver& qa = a.quiver();
  const Quiver& qb = b.quiver();
  std::set<std::string> va(qa.vertex_ids().begin(), qa.vertex_ids().end());
  std::set<std::string> vb(qb.vertex_ids().begin(), qb.vertex_ids().end());
  if (va != vb) {
    return false;
  }
  using ArrowKey = std::tuple<std::string, std::string, std::string>;
  std::set<ArrowKey> aa;
  std::set<ArrowKey> ab;
  for (const auto& x : qa.arrows()) {
    aa.emplace(x.id, qa.vertex_id(x.source), qa.vertex_id(x.target));
  }
  for (const auto& x : qb.arrows()) {
    ab.emplace(x.id, qb.vertex_id(x.source), qb.vertex_id(x.target));
  }
  if (aa != ab) {
    return false;
  }
  std::set<std::vector<std::string>> ra;
  std::set<std::vector<std::string>> rb;
  for (const auto& r : a.minimal_relations()) {
    ra.insert(qa.arrow_ids(r));
  }
  for (const auto& r : b.minimal_relations()) {
    rb.insert(qb.arrow_ids(r));
  }
  return ra == rb;
}

bool is_finite_dimensional(const Quiver& q,
                           const std::vector<Path>& generators) {
  FactorAutomaton aut(q.num_arrows(), words_of(generators));
  return !has_unbounded_paths(q, aut);
}

std::vector<MonomialPresentation> connected_components(
    const MonomialPresentation& pres) {
  const Quiver& q = pres.quiver();
  const std::size_t n = q.num_vertices();
  std::vector<std::size_t> comp(n, n);
  std::size_t count = 0;
  for (VertexIndex s = 0; s < n; ++s) {
    if (comp[s] != n) {
      continue;
    }
    std::vector<VertexIndex> todo{s};
    comp[s] = count;
    while (!todo.empty()) {
      VertexIndex v = todo.back();
      todo.pop_back();
      auto visit = [&](VertexIndex w) {
        if (comp[w] == n) {
          comp[w] = count;
          todo.push_back(w);
        }
      };
      for (ArrowIndex a : q.arrows_out_of(v)) {
        visit(q.arrow(a).target);
      }
      for (ArrowIndex a : q.arrows_into(v)) {
        visit(q.arrow(a).source);
      }
    }
    ++count;
  }
  std::vector<MonomialPresentation> out;
  for (std::size_t k = 0; k < count; ++k) {
    Quiver sub;
    for (VertexIndex v = 0; v < n; ++v) {
      if (comp[v] == k) {
        sub.add_vertex(q.vertex_id(v));
      }
    }
    for (const auto& a : q.arrows()) {
      if (comp[a.source] == k) {
        sub.add_arrow(a.id, q.vertex_id(a.source), q.vertex_id(a.target));
      }
    }
    std::vector<Path> gens;
    for (const auto& r : pres.minimal_relations()) {
      if (comp[r.source] == k) {
        gens.push_back(sub.make_path(q.arrow_ids(r)));
      }
    }
    std::string name =
        count == 1 ? pres.name() : pres.name() + "." + std::to_string(k + 1);
    out.emplace_back(name, std::move(sub), std::move(gens));
  }
  return out;
}

}  // namespace gorquiv
