#include "gorquiv/resolve.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>

#include "gorquiv/error.hpp"

namespace gorquiv {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  return b != 0 && a > kSaturated / b ? kSaturated : a * b;
}

std::vector<std::uint64_t> widen(const std::vector<std::size_t>& v) {
  return {v.begin(), v.end()};
}

std::set<std::size_t> support_of(const ClassMultiset& m) {
  std::set<std::size_t> s;
  for (auto [c, k] : m) {
    if (k != 0) {
      s.insert(c);
    }
  }
  return s;
}

std::vector<std::uint64_t> term_of(const PathClasses& classes,
                                   const ClassMultiset& state,
                                   std::size_t num_vertices) {
  std::vector<std::uint64_t> t(num_vertices, 0);
  for (auto [c, k] : state) {
    auto& slot = t[classes[c].vertex];
    slot = sat_add(slot, k);
  }
  return t;
}

}  // namespace

std::vector<VertexIndex> ResolutionTrace::support(std::size_t i) const {
  const auto& t = terms.at(stored_index(i));
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < t.size(); ++v) {
    if (t[v] != 0) {
      out.push_back(v);
    }
  }
  return out;
}

std::size_t ResolutionTrace::stored_index(std::size_t i) const {
  if (i < terms.size()) {
    return i;
  }
  if (dimension.is_finite() || period == 0) {
    throw PreconditionError("resolution term index beyond the end");
  }
  return preperiod + (i - preperiod) % period;
}

std::uint64_t ResolutionTrace::term_size(std::size_t i) const {
  std::uint64_t s = 0;
  for (auto k : terms.at(stored_index(i))) {
    s = sat_add(s, k);
  }
  return s;
}

Resolver::Resolver(const MonomialPresentation& pres)
    : pres_(&pres), classes_(pres) {}

std::size_t Resolver::step_guard() const {
  std::size_t n = pres_->dimension();
  return 10 * n * n + 10;
}

ResolutionTrace Resolver::run_states(ResolutionTrace trace, std::size_t r,
                                     ClassMultiset state) const {
  // The support of the next state depends only on the current support, so a
  // repeated support means the resolution never ends.
  std::map<std::set<std::size_t>, std::size_t> seen;
  const std::size_t n = pres_->num_vertices();
  const std::size_t guard = step_guard();
  for (std::size_t steps = 0;; ++steps) {
    if (steps > guard) {
      throw ResourceLimitError("syzygy iteration exceeded " +
                               std::to_string(guard) + " steps");
    }
    auto sup = support_of(state);
    auto [it, fresh] = seen.emplace(sup, r);
    if (!fresh) {
      trace.dimension = Dim::infinity();
      trace.preperiod = it->second;
      trace.period = r - it->second;
      return trace;
    }
    trace.terms.push_back(term_of(classes_, state, n));
    trace.states.resize(r + 1);
    trace.states[r] = state;
    ClassMultiset next;
    for (auto [c, k] : state) {
      for (auto d : classes_[c].step) {
        auto& slot = next[d];
        slot = sat_add(slot, k);
      }
    }
    if (next.empty()) {
      trace.dimension = r;
      return trace;
    }
    state = std::move(next);
    ++r;
  }
}

ResolutionTrace Resolver::resolve_injective(VertexIndex x) const {
  const Quiver& q = pres_->quiver();
  ResolutionTrace trace;
  Representation m = injective(*pres_, x);
  for (std::size_t r = 0; r < 2; ++r) {
    trace.terms.push_back(widen(top(m, q)));
    Representation k = syzygy(*pres_, m);
    if (k.is_zero()) {
      trace.dimension = r;
      trace.states.resize(r + 1);
      return trace;
    }
    m = std::move(k);
  }
  auto state = identify_path_summands(*pres_, classes_, m);
  if (!state) {
    throw InternalError("second syzygy of I(" + q.vertex_id(x) +
                        ") is not a sum of path modules");
  }
  return run_states(std::move(trace), 2, std::move(*state));
}

ResolutionTrace Resolver::resolve_simple(VertexIndex x) const {
  const Quiver& q = pres_->quiver();
  ResolutionTrace trace;
  std::vector<std::uint64_t> t0(q.num_vertices(), 0);
  t0[x] = 1;
  trace.terms.push_back(t0);
  // rad P(x) = ⊕ aA over arrows a out of x.
  ClassMultiset state;
  for (ArrowIndex a : q.arrows_out_of(x)) {
    ++state[classes_.class_of(q.make_path(std::vector<ArrowIndex>{a}))];
  }
  if (state.empty()) {
    trace.dimension = 0;
    return trace;
  }
  return run_states(std::move(trace), 1, std::move(state));
}

ResolutionTrace Resolver::resolve_injective_linear(
    VertexIndex x, std::size_t max_dimension) const {
  const Quiver& q = pres_->quiver();
  const std::size_t n = q.num_vertices();
  ResolutionTrace trace;
  std::map<std::set<std::size_t>, std::size_t> seen;
  Representation m = injective(*pres_, x);
  const std::size_t guard = step_guard();
  // Per-class top and syzygy, both computed from path_module(c) by linear
  // algebra. Used once Ω^r is too large to handle as a whole.
  std::map<std::size_t, std::pair<std::vector<std::size_t>, ClassMultiset>>
      by_class;
  auto class_step = [&](std::size_t c) -> const auto& {
    auto it = by_class.find(c);
    if (it != by_class.end()) {
      return it->second;
    }
    Representation pa = path_module(
        *pres_, {PathModuleKind::cyclic_submodule, classes_[c].representative});
    auto t = top(pa, q);
    Representation k = syzygy(*pres_, pa);
    ClassMultiset next;
    if (!k.is_zero()) {
      auto named = identify_path_summands(*pres_, classes_, k);
      if (!named) {
        throw InternalError("syzygy of a path module is not a sum of path "
                            "modules");
      }
      next = std::move(*named);
    }
    return by_class.emplace(c, std::pair{std::move(t), std::move(next)})
        .first->second;
  };
  std::optional<ClassMultiset> split;
  for (std::size_t r = 0;; ++r) {
    if (r > guard) {
      throw ResourceLimitError("linear resolution exceeded " +
                               std::to_string(guard) + " steps");
    }
    if (!split && m.dimension() > max_dimension && r < 2) {
      throw ResourceLimitError("syzygy dimension " +
                               std::to_string(m.dimension()) +
                               " exceeds the limit");
    }
    trace.states.resize(r + 1);
    if (r >= 2) {
      if (!split) {
        auto state = identify_path_summands(*pres_, classes_, m);
        if (!state) {
          throw InternalError("syzygy " + std::to_string(r) + " of I(" +
                              q.vertex_id(x) +
                              ") is not a sum of path modules");
        }
        if (m.dimension() > max_dimension) {
          split = std::move(*state);
          m = zero_representation(q);
        } else {
          trace.states[r] = std::move(*state);
        }
      }
      if (split) {
        trace.states[r] = *split;
      }
      auto [it, fresh] = seen.emplace(support_of(trace.states[r]), r);
      if (!fresh) {
        trace.dimension = Dim::infinity();
        trace.preperiod = it->second;
        trace.period = r - it->second;
        trace.states.resize(r);
        return trace;
      }
    }
    if (split) {
      // Ω is additive, so Ω^r = ⊕ k·pA resolves summand by summand.
      std::vector<std::uint64_t> term(n, 0);
      ClassMultiset next;
      for (auto [c, k] : *split) {
        const auto& [t, syz] = class_step(c);
        for (VertexIndex v = 0; v < n; ++v) {
          term[v] = sat_add(term[v], sat_mul(k, t[v]));
        }
        for (auto [d, j] : syz) {
          auto& slot = next[d];
          slot = sat_add(slot, sat_mul(k, j));
        }
      }
      trace.terms.push_back(std::move(term));
      if (next.empty()) {
        trace.dimension = r;
        return trace;
      }
      split = std::move(next);
      continue;
    }
    trace.terms.push_back(widen(top(m, q)));
    Representation k = syzygy(*pres_, m);
    if (k.is_zero()) {
      trace.dimension = r;
      return trace;
    }
    m = std::move(k);
  }
}

std::vector<Path> combinatorial_syzygy_step(const MonomialPresentation& pres,
                                            const Path& p) {
  if (!pres.basis().find(p)) {
    throw ValidationError("path '" + pres.quiver().format(p) + "' is zero");
  }
  PathClasses classes(pres);
  auto out = classes[classes.class_of(p)].step_paths;
  std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
    return pres.quiver().path_less(a, b);
  });
  return out;
}

Representation first_syzygy_injective(const MonomialPresentation& pres,
                                      VertexIndex x) {
  return syzygy(pres, injective(pres, x));
}

bool first_syzygy_generators_span(const MonomialPresentation& pres,
                                  VertexIndex x) {
  const Quiver& q = pres.quiver();
  const PathBasis& b = pres.basis();
  auto maxl = pres.maximal_paths(x, Side::left);

  // Basis of P_0 = ⊕_i P(s(p_i)): pairs (i, q).
  std::map<std::pair<std::size_t, PathBasis::Index>, std::size_t> index;
  std::vector<std::pair<std::size_t, PathBasis::Index>> elems;
  for (std::size_t i = 0; i < maxl.size(); ++i) {
    for (auto qi : b.starting_at(maxl[i].source)) {
      index[{i, qi}] = elems.size();
      elems.push_back({i, qi});
    }
  }
  // d_0(i, q) = r' when p_i = q r, else 0.
  auto image = [&](std::size_t e) -> std::optional<PathBasis::Index> {
    const Path& p = maxl[elems[e].first];
    const Path& qp = b.path(elems[e].second);
    if (qp.length() > p.length() ||
        !std::equal(qp.arrows.begin(), qp.arrows.end(), p.arrows.begin())) {
      return std::nullopt;
    }
    Path rest{qp.target, p.target, {p.arrows.begin() + qp.length(),
                                    p.arrows.end()}};
    return b.find(rest);
  };

  // Kernel dimension per vertex: images are distinct basis vectors of I(x)
  // or zero.
  std::vector<std::size_t> total(q.num_vertices(), 0);
  std::vector<std::set<PathBasis::Index>> hit(q.num_vertices());
  for (std::size_t e = 0; e < elems.size(); ++e) {
    VertexIndex v = b.path(elems[e].second).target;
    ++total[v];
    if (auto im = image(e)) {
      hit[v].insert(*im);
    }
  }

  using Sparse = std::map<std::size_t, Rational>;
  std::vector<Sparse> gens;
  for (std::size_t i = 0; i < maxl.size(); ++i) {
    for (std::size_t j = 0; j < maxl.size(); ++j) {
      if (i == j) {
        continue;
      }
      const auto& p = maxl[i].arrows;
      const auto& t = maxl[j].arrows;
      std::size_t s = 0;
      while (s < p.size() && s < t.size() &&
             p[p.size() - 1 - s] == t[t.size() - 1 - s]) {
        ++s;
      }
      auto left = [&](const Path& w) {
        if (w.length() == s) {
          return b.trivial(w.source);
        }
        std::vector<ArrowIndex> arrows(w.arrows.begin(),
                                       w.arrows.end() - static_cast<long>(s));
        return *b.find(q.make_path(arrows));
      };
      Sparse g;
      g[index.at({j, left(maxl[j])})] += Rational(1);
      g[index.at({i, left(maxl[i])})] -= Rational(1);
      gens.push_back(g);
    }
    for (ArrowIndex a : q.arrows_out_of(maxl[i].target)) {
      auto pa = b.right(*b.find(maxl[i]), a);
      if (pa != PathBasis::kZero) {
        // p a as an element of the summand P(s(p_i)).
        gens.push_back({{index.at({i, pa}), Rational(1)}});
      }
    }
  }

  // Close under the right action.
  std::vector<Sparse> span;
  std::vector<Sparse> todo = gens;
  while (!todo.empty()) {
    Sparse v = std::move(todo.back());
    todo.pop_back();
    std::erase_if(v, [](const auto& kv) { return is_zero(kv.second); });
    if (v.empty()) {
      continue;
    }
    VertexIndex w = b.path(elems[v.begin()->first].second).target;
    for (ArrowIndex a : q.arrows_out_of(w)) {
      Sparse u;
      for (const auto& [e, c] : v) {
        auto r = b.right(elems[e].second, a);
        if (r != PathBasis::kZero) {
          u[index.at({elems[e].first, r})] += c;
        }
      }
      todo.push_back(std::move(u));
    }
    span.push_back(std::move(v));
  }

  // Every generated vector lies in the kernel, and they span it.
  std::vector<std::vector<const Sparse*>> by_vertex(q.num_vertices());
  for (const auto& v : span) {
    std::map<PathBasis::Index, Rational> d0;
    for (const auto& [e, c] : v) {
      if (auto im = image(e)) {
        d0[*im] += c;
      }
    }
    for (const auto& [k, c] : d0) {
      if (!is_zero(c)) {
        return false;
      }
    }
    by_vertex[b.path(elems[v.begin()->first].second).target].push_back(&v);
  }
  for (VertexIndex w = 0; w < q.num_vertices(); ++w) {
    std::size_t kernel_dim = total[w] - hit[w].size();
    std::vector<std::size_t> cols;
    std::map<std::size_t, std::size_t> row_of;
    for (const Sparse* v : by_vertex[w]) {
      for (const auto& kv : *v) {
        row_of.emplace(kv.first, row_of.size());
      }
    }
    Matrix m(row_of.size(), by_vertex[w].size());
    for (std::size_t c = 0; c < by_vertex[w].size(); ++c) {
      for (const auto& [e, val] : *by_vertex[w][c]) {
        m(row_of[e], c) = val;
      }
    }
    if (rank(m) != kernel_dim) {
      return false;
    }
  }
  return true;
}

ResolutionTrace pdim_injective(const MonomialPresentation& pres,
                               VertexIndex x) {
  return Resolver(pres).resolve_injective(x);
}

ResolutionTrace idim_projective(const MonomialPresentation& pres,
                                VertexIndex x) {
  MonomialPresentation op = pres.opposite();
  return Resolver(op).resolve_injective(x);
}

Dim dominant_dimension(const Resolver& a, const Resolver& op) {
  const std::size_t n = a.presentation().num_vertices();
  std::vector<bool> proj_inj(n);
  for (VertexIndex v = 0; v < n; ++v) {
    proj_inj[v] = a.resolve_injective(v).dimension == Dim(0);
  }
  Dim result = Dim::infinity();
  for (VertexIndex x = 0; x < n; ++x) {
    ResolutionTrace t = op.resolve_injective(x);
    for (std::size_t i = 0; i < t.terms.size(); ++i) {
      bool all = true;
      for (auto v : t.support(i)) {
        all = all && proj_inj[v];
      }
      if (!all) {
        result = min(result, Dim(i));
        break;
      }
    }
  }
  return result;
}

Dim dominant_dimension(const MonomialPresentation& pres) {
  MonomialPresentation op = pres.opposite();
  return dominant_dimension(Resolver(pres), Resolver(op));
}

}  // namespace gorquiv
