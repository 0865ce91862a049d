#include "gorquiv/modules.hpp"

#include <algorithm>
#include <limits>
#include <stack>

#include "gorquiv/error.hpp"

namespace gorquiv {

namespace {

// Builds a representation from a combinatorial basis: element e lives at
// vertex[e] and arrow a sends it to act(e, a) (or to zero if npos).
template <class Act>
Representation from_basis(const Quiver& q,
                          const std::vector<VertexIndex>& vertex, Act act) {
  constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  Representation rep;
  rep.dims.assign(q.num_vertices(), 0);
  std::vector<std::size_t> pos(vertex.size());
  for (std::size_t e = 0; e < vertex.size(); ++e) {
    pos[e] = rep.dims[vertex[e]]++;
  }
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    rep.maps.emplace_back(rep.dims[ar.target], rep.dims[ar.source]);
  }
  for (std::size_t e = 0; e < vertex.size(); ++e) {
    for (ArrowIndex a : q.arrows_out_of(vertex[e])) {
      std::size_t f = act(e, a);
      if (f != npos) {
        rep.maps[a](pos[f], pos[e]) = 1;
      }
    }
  }
  return rep;
}

constexpr std::size_t kNpos = std::numeric_limits<std::size_t>::max();

void check_vertex(const MonomialPresentation& pres, VertexIndex x) {
  if (x >= pres.num_vertices()) {
    throw ValidationError("vertex index out of range");
  }
}

// Columns spanning the radical at v: the images of all arrows into v.
Matrix radical_span(const Representation& rep, const Quiver& q,
                    VertexIndex v) {
  Matrix r(rep.dims[v], 0);
  for (ArrowIndex a : q.arrows_into(v)) {
    r = hconcat(r, rep.maps[a]);
  }
  return r;
}

std::vector<PathBasis::Index> right_closure(const PathBasis& basis,
                                            const Quiver& q,
                                            PathBasis::Index p) {
  std::vector<PathBasis::Index> out{p};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (ArrowIndex a : q.arrows_out_of(basis.path(out[k]).target)) {
      auto r = basis.right(out[k], a);
      if (r != PathBasis::kZero) {
        out.push_back(r);
      }
    }
  }
  return out;
}

Kernel kernel_unchecked(const Quiver& q, const Representation& source,
                        const Morphism& f) {
  Kernel k;
  std::vector<NullSpace> ns;
  ns.reserve(q.num_vertices());
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    ns.push_back(null_space(f.components[v]));
    k.module.dims.push_back(ns.back().free.size());
  }
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix img = source.maps[a] * ns[ar.source].basis;
    k.module.maps.push_back(null_space_coordinates(ns[ar.target], img));
  }
  for (auto& n : ns) {
    k.inclusion.components.push_back(std::move(n.basis));
  }
  return k;
}

}  // namespace

std::size_t Representation::dimension() const {
  std::size_t d = 0;
  for (auto x : dims) {
    d += x;
  }
  return d;
}

Representation zero_representation(const Quiver& q) {
  Representation rep;
  rep.dims.assign(q.num_vertices(), 0);
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    rep.maps.emplace_back(0, 0);
  }
  return rep;
}

Matrix path_action(const Representation& rep, const Quiver& q, const Path& p) {
  Matrix m = Matrix::identity(rep.dims[p.source]);
  for (ArrowIndex a : p.arrows) {
    m = rep.maps[a] * m;
  }
  (void)q;
  return m;
}

void check_representation(const MonomialPresentation& pres,
                          const Representation& rep) {
  const Quiver& q = pres.quiver();
  if (rep.dims.size() != q.num_vertices() ||
      rep.maps.size() != q.num_arrows()) {
    throw ValidationError("representation does not match the quiver");
  }
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (rep.maps[a].rows() != rep.dims[ar.target] ||
        rep.maps[a].cols() != rep.dims[ar.source]) {
      throw ValidationError("arrow '" + ar.id + "' has a map of wrong shape");
    }
  }
  for (const auto& r : pres.minimal_relations()) {
    if (!path_action(rep, q, r).is_zero()) {
      throw ValidationError("relation '" + q.format(r) + "' does not vanish");
    }
  }
}

Representation projective(const MonomialPresentation& pres, VertexIndex x) {
  check_vertex(pres, x);
  const PathBasis& b = pres.basis();
  const auto& elems = b.starting_at(x);
  std::vector<VertexIndex> vertex;
  std::vector<std::size_t> local(b.size(), kNpos);
  for (std::size_t e = 0; e < elems.size(); ++e) {
    local[elems[e]] = e;
    vertex.push_back(b.path(elems[e]).target);
  }
  return from_basis(pres.quiver(), vertex, [&](std::size_t e, ArrowIndex a) {
    auto r = b.right(elems[e], a);
    return r == PathBasis::kZero ? kNpos : local[r];
  });
}

Representation injective(const MonomialPresentation& pres, VertexIndex x) {
  check_vertex(pres, x);
  const PathBasis& b = pres.basis();
  const auto& elems = b.ending_at(x);
  std::vector<VertexIndex> vertex;
  std::vector<std::size_t> local(b.size(), kNpos);
  for (std::size_t e = 0; e < elems.size(); ++e) {
    local[elems[e]] = e;
    vertex.push_back(b.path(elems[e]).source);
  }
  // p' . a = q' when p = a q.
  return from_basis(pres.quiver(), vertex, [&](std::size_t e, ArrowIndex a) {
    const Path& p = b.path(elems[e]);
    if (p.is_trivial() || p.arrows.front() != a) {
      return kNpos;
    }
    Path rest{pres.quiver().arrow(a).target, p.target,
              {p.arrows.begin() + 1, p.arrows.end()}};
    auto idx = b.find(rest);
    return idx ? local[*idx] : kNpos;
  });
}

Representation simple(const MonomialPresentation& pres, VertexIndex x) {
  check_vertex(pres, x);
  return from_basis(pres.quiver(), {x},
                    [](std::size_t, ArrowIndex) { return kNpos; });
}

Representation path_module(const MonomialPresentation& pres,
                           const PathModule& pm) {
  const Quiver& q = pres.quiver();
  const PathBasis& b = pres.basis();
  auto idx = b.find(pm.path);
  if (!idx) {
    throw ValidationError("path '" + q.format(pm.path) + "' is zero");
  }
  if (pm.kind == PathModuleKind::uniserial_quotient) {
    const Path& p = pm.path;
    std::vector<VertexIndex> vertex{p.source};
    for (ArrowIndex a : p.arrows) {
      vertex.push_back(q.arrow(a).target);
    }
    return from_basis(q, vertex, [&](std::size_t k, ArrowIndex a) {
      return k < p.arrows.size() && p.arrows[k] == a ? k + 1 : kNpos;
    });
  }
  auto elems = right_closure(b, q, *idx);
  std::vector<VertexIndex> vertex;
  std::vector<std::size_t> local(b.size(), kNpos);
  for (std::size_t e = 0; e < elems.size(); ++e) {
    local[elems[e]] = e;
    vertex.push_back(b.path(elems[e]).target);
  }
  return from_basis(q, vertex, [&](std::size_t e, ArrowIndex a) {
    auto r = b.right(elems[e], a);
    return r == PathBasis::kZero ? kNpos : local[r];
  });
}

std::vector<std::size_t> top(const Representation& rep, const Quiver& q) {
  std::vector<std::size_t> t(q.num_vertices(), 0);
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    if (rep.dims[v] != 0) {
      t[v] = rep.dims[v] - rank(radical_span(rep, q, v));
    }
  }
  return t;
}

std::vector<std::size_t> socle(const Representation& rep, const Quiver& q) {
  std::vector<std::size_t> s(q.num_vertices(), 0);
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    if (rep.dims[v] == 0) {
      continue;
    }
    Matrix m(0, rep.dims[v]);
    for (ArrowIndex a : q.arrows_out_of(v)) {
      m = vconcat(m, rep.maps[a]);
    }
    s[v] = rep.dims[v] - rank(m);
  }
  return s;
}

std::vector<VertexIndex> as_multiset(const std::vector<std::size_t>& mult) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < mult.size(); ++v) {
    out.insert(out.end(), mult[v], v);
  }
  return out;
}

ProjectiveCover projective_cover(const MonomialPresentation& pres,
                                 const Representation& rep) {
  const Quiver& q = pres.quiver();
  const PathBasis& b = pres.basis();
  ProjectiveCover pc;

  // Top generators: unit vectors completing the radical to all of M_v.
  struct Generator {
    VertexIndex v;
    std::size_t unit;
  };
  std::vector<Generator> gens;
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    if (rep.dims[v] == 0) {
      continue;
    }
    Matrix r = radical_span(rep, q, v);
    auto piv = independent_columns(hconcat(r, Matrix::identity(rep.dims[v])));
    for (std::size_t c : piv) {
      if (c >= r.cols()) {
        gens.push_back({v, c - r.cols()});
      }
    }
  }

  // Basis of the cover: (generator, path from its vertex).
  std::vector<VertexIndex> vertex;
  std::vector<std::size_t> owner;
  std::vector<PathBasis::Index> path_of;
  std::vector<std::vector<std::size_t>> local(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    pc.summands.push_back(gens[g].v);
    local[g].assign(b.size(), kNpos);
    for (auto p : b.starting_at(gens[g].v)) {
      local[g][p] = vertex.size();
      vertex.push_back(b.path(p).target);
      owner.push_back(g);
      path_of.push_back(p);
    }
  }
  pc.cover = from_basis(q, vertex, [&](std::size_t e, ArrowIndex a) {
    auto r = b.right(path_of[e], a);
    return r == PathBasis::kZero ? kNpos : local[owner[e]][r];
  });

  // The map sends (g, p) to g . p.
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    pc.map.components.emplace_back(rep.dims[v], pc.cover.dims[v]);
  }
  std::vector<std::size_t> filled(q.num_vertices(), 0);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::vector<Matrix> image(b.size());
    Matrix start(rep.dims[gens[g].v], 1);
    start(gens[g].unit, 0) = 1;
    image[b.trivial(gens[g].v)] = start;
    // starting_at lists parents before children.
    for (auto p : b.starting_at(gens[g].v)) {
      const Path& path = b.path(p);
      Matrix& col = pc.map.components[path.target];
      std::size_t c = filled[path.target]++;
      for (std::size_t r = 0; r < col.rows(); ++r) {
        col(r, c) = image[p](r, 0);
      }
      for (ArrowIndex a : q.arrows_out_of(path.target)) {
        auto child = b.right(p, a);
        if (child != PathBasis::kZero) {
          image[child] = rep.maps[a] * image[p];
        }
      }
    }
  }
  return pc;
}

Kernel kernel(const Quiver& q, const Representation& source,
              const Representation& target, const Morphism& f) {
  if (f.components.size() != q.num_vertices()) {
    throw PreconditionError("morphism does not match the quiver");
  }
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    if (f.components[v].rows() != target.dims[v] ||
        f.components[v].cols() != source.dims[v]) {
      throw PreconditionError("morphism component has wrong shape");
    }
  }
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (!(target.maps[a] * f.components[ar.source] ==
          f.components[ar.target] * source.maps[a])) {
      throw PreconditionError("map does not commute with arrow '" + ar.id +
                              "'");
    }
  }
  return kernel_unchecked(q, source, f);
}

Representation syzygy(const MonomialPresentation& pres,
                      const Representation& rep) {
  ProjectiveCover pc = projective_cover(pres, rep);
  return kernel_unchecked(pres.quiver(), pc.cover, pc.map).module;
}

std::vector<std::size_t> projective_dims(const MonomialPresentation& pres,
                                         VertexIndex x) {
  std::vector<std::size_t> d(pres.num_vertices(), 0);
  for (auto p : pres.basis().starting_at(x)) {
    ++d[pres.basis().path(p).target];
  }
  return d;
}

std::optional<std::vector<VertexIndex>> decompose_projective(
    const MonomialPresentation& pres, const Representation& rep) {
  auto t = top(rep, pres.quiver());
  std::vector<std::size_t> expected(pres.num_vertices(), 0);
  for (VertexIndex v = 0; v < t.size(); ++v) {
    if (t[v] == 0) {
      continue;
    }
    auto d = projective_dims(pres, v);
    for (VertexIndex w = 0; w < d.size(); ++w) {
      expected[w] += t[v] * d[w];
    }
  }
  // A surjection from ⊕P(top) is an isomorphism iff the dimensions agree.
  if (expected != rep.dims) {
    return std::nullopt;
  }
  return as_multiset(t);
}

PathClasses::PathClasses(const MonomialPresentation& pres) : pres_(&pres) {
  const Quiver& q = pres.quiver();
  const PathBasis& b = pres.basis();
  std::map<std::pair<VertexIndex, std::vector<PathBasis::Index>>, std::size_t>
      key_to_class;
  std::vector<std::vector<PathBasis::Index>> boundary;
  of_path_.assign(b.size(), 0);
  by_vertex_.resize(q.num_vertices());

  for (PathBasis::Index p = 0; p < b.size(); ++p) {
    const Path& path = b.path(p);
    VertexIndex v = path.target;
    // Walk q and pq in lockstep.
    std::vector<PathBasis::Index> ext;
    std::vector<PathBasis::Index> bound;
    std::stack<std::pair<PathBasis::Index, PathBasis::Index>> todo;
    todo.push({b.trivial(v), p});
    while (!todo.empty()) {
      auto [qi, pq] = todo.top();
      todo.pop();
      ext.push_back(qi);
      for (ArrowIndex a : q.arrows_out_of(b.path(qi).target)) {
        auto q2 = b.right(qi, a);
        auto pq2 = b.right(pq, a);
        if (pq2 != PathBasis::kZero) {
          todo.push({q2, pq2});
        } else if (q2 != PathBasis::kZero) {
          bound.push_back(q2);
        }
      }
    }
    std::sort(ext.begin(), ext.end());
    auto key = std::make_pair(v, ext);
    auto it = key_to_class.find(key);
    std::size_t c;
    if (it == key_to_class.end()) {
      c = classes_.size();
      key_to_class.emplace(std::move(key), c);
      PathClass pc;
      pc.representative = path;
      pc.vertex = v;
      pc.extensions = ext;
      pc.dims.assign(q.num_vertices(), 0);
      for (auto e : ext) {
        ++pc.dims[b.path(e).target];
      }
      classes_.push_back(std::move(pc));
      std::sort(bound.begin(), bound.end());
      boundary.push_back(std::move(bound));
    } else {
      c = it->second;
      Path& rep = classes_[c].representative;
      if (!path.is_trivial() &&
          (rep.is_trivial() || q.path_less(path, rep))) {
        rep = path;
      }
    }
    of_path_[p] = c;
  }

  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (auto qi : boundary[c]) {
      classes_[c].step.push_back(of_path_[qi]);
      classes_[c].step_paths.push_back(b.path(qi));
    }
    by_vertex_[classes_[c].vertex].push_back(c);
  }
  for (auto& list : by_vertex_) {
    std::stable_sort(list.begin(), list.end(), [this](auto x, auto y) {
      return classes_[x].extensions.size() < classes_[y].extensions.size();
    });
  }
}

std::size_t PathClasses::class_of(const Path& p) const {
  auto idx = pres_->basis().find(p);
  if (!idx) {
    throw ValidationError("path '" + pres_->quiver().format(p) + "' is zero");
  }
  return of_path_[*idx];
}

bool PathClasses::strictly_below(std::size_t c, std::size_t d) const {
  const auto& x = classes_[c].extensions;
  const auto& y = classes_[d].extensions;
  return classes_[c].vertex == classes_[d].vertex && x.size() < y.size() &&
         std::includes(y.begin(), y.end(), x.begin(), x.end());
}

std::optional<ClassMultiset> identify_path_summands(
    const MonomialPresentation& pres, const PathClasses& classes,
    const Representation& rep) {
  const Quiver& q = pres.quiver();
  auto t = top(rep, q);
  ClassMultiset out;
  std::size_t total_top = 0;
  std::size_t total_found = 0;
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    total_top += t[v];
    if (t[v] == 0) {
      continue;
    }
    // Functionals vanishing on the radical: rank(quot * h) is the rank of h
    // modulo the radical.
    const Matrix quot =
        null_space(radical_span(rep, q, v).transpose()).basis.transpose();
    std::map<std::size_t, long long> mult;
    // Step paths share prefixes; memoize their actions.
    std::map<std::vector<ArrowIndex>, Matrix> actions;
    const Matrix unit = Matrix::identity(rep.dims[v]);
    auto action = [&](const Path& p) -> const Matrix& {
      std::vector<ArrowIndex> key;
      const Matrix* m = &unit;
      for (ArrowIndex a : p.arrows) {
        key.push_back(a);
        auto it = actions.find(key);
        if (it == actions.end()) {
          Matrix next = rep.maps[a] * *m;
          it = actions.emplace(key, std::move(next)).first;
        }
        m = &it->second;
      }
      return *m;
    };
    for (std::size_t c : classes.at_vertex(v)) {
      // Elements of M_v killed by everything outside ext(c).
      Matrix h;
      if (classes[c].step_paths.empty()) {
        h = Matrix::identity(rep.dims[v]);
      } else {
        std::vector<const Matrix*> blocks;
        std::size_t rows = 0;
        for (const auto& qp : classes[c].step_paths) {
          blocks.push_back(&action(qp));
          rows += blocks.back()->rows();
        }
        Matrix phi(rows, rep.dims[v]);
        std::size_t at = 0;
        for (const Matrix* m : blocks) {
          for (std::size_t i = 0; i < m->rows(); ++i, ++at) {
            for (std::size_t j = 0; j < m->cols(); ++j) {
              phi(at, j) = (*m)(i, j);
            }
          }
        }
        h = null_space(phi).basis;
      }
      long long n = static_cast<long long>(rank(quot * h));
      for (auto& [d, m] : mult) {
        if (classes.strictly_below(d, c)) {
          n -= m;
        }
      }
      if (n < 0) {
        return std::nullopt;
      }
      mult[c] = n;
    }
    for (auto [c, m] : mult) {
      if (m > 0) {
        out[c] = static_cast<std::uint64_t>(m);
        total_found += static_cast<std::size_t>(m);
      }
    }
  }
  if (total_found != total_top) {
    return std::nullopt;
  }
  std::vector<std::size_t> dims(q.num_vertices(), 0);
  for (auto [c, m] : out) {
    for (VertexIndex w = 0; w < dims.size(); ++w) {
      dims[w] += m * classes[c].dims[w];
    }
  }
  if (dims != rep.dims) {
    return std::nullopt;
  }
  return out;
}

std::optional<std::vector<Path>> identify_path_summands(
    const MonomialPresentation& pres, const Representation& rep) {
  PathClasses classes(pres);
  auto found = identify_path_summands(pres, classes, rep);
  if (!found) {
    return std::nullopt;
  }
  std::vector<Path> out;
  for (auto [c, m] : *found) {
    out.insert(out.end(), m, classes[c].representative);
  }
  std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
    return pres.quiver().path_less(a, b);
  });
  return out;
}

nlohmann::json representation_to_json(const Representation& rep,
                                      const Quiver& q) {
  nlohmann::json j;
  j["dims"] = nlohmann::json::object();
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    j["dims"][q.vertex_id(v)] = rep.dims[v];
  }
  j["arrows"] = nlohmann::json::object();
  for (ArrowIndex a = 0; a < q.num_arrows(); ++a) {
    nlohmann::json rows = nlohmann::json::array();
    const Matrix& m = rep.maps[a];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        row.push_back(to_string(m(r, c)));
      }
      rows.push_back(std::move(row));
    }
    j["arrows"][q.arrow(a).id] = std::move(rows);
  }
  return j;
}

}  // namespace gorquiv
