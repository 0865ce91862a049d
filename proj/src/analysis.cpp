#include "gorquiv/analysis.hpp"

#include <algorithm>
#include <set>

#include "gorquiv/error.hpp"
#include "gorquiv/nakayama.hpp"

namespace gorquiv {

std::optional<VertexIndex> ARMapResult::target(VertexIndex x) const {
  const ARAssignment& a = assignments.at(x);
  if (a.status != ARStatus::ok) {
    return std::nullopt;
  }
  return a.target;
}

namespace {

std::vector<std::vector<VertexIndex>> cycles_of(
    const std::vector<VertexIndex>& perm) {
  std::vector<std::vector<VertexIndex>> out;
  std::vector<bool> seen(perm.size(), false);
  for (VertexIndex s = 0; s < perm.size(); ++s) {
    if (seen[s]) {
      continue;
    }
    std::vector<VertexIndex> cyc;
    for (VertexIndex v = s; !seen[v]; v = perm[v]) {
      seen[v] = true;
      cyc.push_back(v);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string format_cycles(const Quiver& q,
                          const std::vector<std::vector<VertexIndex>>& cycles) {
  std::string s;
  for (const auto& cyc : cycles) {
    s += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      s += (k ? " " : "") + q.vertex_id(cyc[k]);
    }
    s += ')';
  }
  return s;
}

}  // namespace

std::string cycle_notation(const Quiver& q, const ARMapResult& ar) {
  if (!ar.bijective) {
    return "undefined";
  }
  return format_cycles(q, ar.cycles);
}

std::string cycle_notation(const Quiver& q,
                           const std::vector<VertexIndex>& permutation) {
  return format_cycles(q, cycles_of(permutation));
}

Analysis::Analysis(MonomialPresentation pres)
    : pres_(std::make_unique<MonomialPresentation>(std::move(pres))),
      op_(std::make_unique<MonomialPresentation>(pres_->opposite())),
      resolver_(std::make_unique<Resolver>(*pres_)),
      op_resolver_(std::make_unique<Resolver>(*op_)) {
  const std::size_t n = pres_->num_vertices();
  for (VertexIndex x = 0; x < n; ++x) {
    inj_.push_back(resolver_->resolve_injective(x));
    proj_.push_back(op_resolver_->resolve_injective(x));
  }
  // The coresolution of P(x) has I(v) in degree i for v in the support of
  // the i-th term over the opposite algebra. A is n-Gorenstein iff every
  // such I(v) with i < n has pdim <= i. Later occurrences of a periodic term
  // are easier to satisfy, so the stored terms decide everything.
  gor_level_ = Dim::infinity();
  for (VertexIndex x = 0; x < n; ++x) {
    const ResolutionTrace& t = proj_[x];
    for (std::size_t i = 0; i < t.terms.size() && Dim(i) < gor_level_; ++i) {
      for (VertexIndex v : t.support(i)) {
        if (inj_[v].dimension > Dim(i)) {
          gor_level_ = Dim(i);
          break;
        }
      }
    }
  }
}

bool Analysis::is_n_gorenstein(std::size_t n) const {
  if (n == 0) {
    throw PreconditionError("is_n_gorenstein needs n >= 1");
  }
  for (VertexIndex x = 0; x < pres_->num_vertices(); ++x) {
    const ResolutionTrace& t = inj_[x];
    for (std::size_t i = 0; i < n; ++i) {
      if (t.dimension.is_finite() && i > t.dimension.value()) {
        break;
      }
      for (VertexIndex v : t.support(i)) {
        if (proj_[v].dimension > Dim(i)) {
          return false;
        }
      }
    }
  }
  return true;
}

Dim Analysis::global_dimension() const {
  if (!gldim_) {
    Dim g = 0;
    for (VertexIndex x = 0; x < pres_->num_vertices(); ++x) {
      g = max(g, resolver_->resolve_simple(x).dimension);
    }
    gldim_ = g;
  }
  return *gldim_;
}

Dim Analysis::dominant_dimension() const {
  if (!domdim_) {
    const std::size_t n = pres_->num_vertices();
    Dim result = Dim::infinity();
    for (VertexIndex x = 0; x < n; ++x) {
      const ResolutionTrace& t = proj_[x];
      for (std::size_t i = 0; i < t.terms.size(); ++i) {
        bool all = true;
        for (VertexIndex v : t.support(i)) {
          all = all && inj_[v].dimension == Dim(0);
        }
        if (!all) {
          result = min(result, Dim(i));
          break;
        }
      }
    }
    domdim_ = result;
  }
  return *domdim_;
}

GorensteinProfile Analysis::profile() const {
  GorensteinProfile p;
  p.gor_level = gor_level_;
  p.idim_right = 0;
  p.idim_left = 0;
  for (VertexIndex x = 0; x < pres_->num_vertices(); ++x) {
    p.idim_right = max(p.idim_right, idim_projective(x));
    p.idim_left = max(p.idim_left, pdim_injective(x));
  }
  p.global_dimension = global_dimension();
  p.dominant_dimension = dominant_dimension();
  p.is_1_gorenstein = gor_level_ >= Dim(1);
  p.is_auslander_gorenstein = gor_level_.is_infinite() && p.idim_right.is_finite();
  p.is_iwanaga_gorenstein = p.idim_right.is_finite() && p.idim_left.is_finite();
  p.is_auslander_regular =
      gor_level_.is_infinite() && p.global_dimension.is_finite();
  return p;
}

ARMapResult Analysis::ar_map() const {
  ARMapResult r;
  const std::size_t n = pres_->num_vertices();
  r.well_defined = true;
  for (VertexIndex x = 0; x < n; ++x) {
    const ResolutionTrace& t = inj_[x];
    ARAssignment a;
    if (t.dimension.is_infinite()) {
      a.status = ARStatus::infinite_pdim;
    } else if (t.term_size(t.dimension.value()) != 1) {
      a.status = ARStatus::last_term_decomposable;
    } else {
      a.target = t.support(t.dimension.value()).front();
    }
    r.well_defined = r.well_defined && a.status == ARStatus::ok;
    r.assignments.push_back(a);
  }
  if (r.well_defined) {
    std::vector<VertexIndex> perm;
    std::set<VertexIndex> image;
    for (const auto& a : r.assignments) {
      perm.push_back(a.target);
      image.insert(a.target);
    }
    r.bijective = image.size() == n;
    if (r.bijective) {
      r.cycles = cycles_of(perm);
    }
  }
  return r;
}

bool is_n_gorenstein(const MonomialPresentation& pres, std::size_t n) {
  return Analysis(pres).is_n_gorenstein(n);
}

GorensteinProfile gorenstein_profile(const MonomialPresentation& pres) {
  return Analysis(pres).profile();
}

ARMapResult ar_map(const MonomialPresentation& pres) {
  return Analysis(pres).ar_map();
}

namespace {

bool in_ideal(const MonomialPresentation& pres, ArrowIndex a, ArrowIndex b) {
  return pres.is_zero(pres.quiver().make_path(std::vector<ArrowIndex>{a, b}));
}

// Counts how many of the composable pairs at each vertex lie in I and
// checks `ok(count)` for every pair of distinct arrows sharing an end.
template <typename Ok>
bool pair_condition(const MonomialPresentation& pres, Ok ok) {
  const Quiver& q = pres.quiver();
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    const auto& in = q.arrows_into(v);
    const auto& out = q.arrows_out_of(v);
    for (ArrowIndex b : out) {
      if (in.size() == 2 &&
          !ok(int(in_ideal(pres, in[0], b)) + int(in_ideal(pres, in[1], b)))) {
        return false;
      }
    }
    for (ArrowIndex a : in) {
      if (out.size() == 2 &&
          !ok(int(in_ideal(pres, a, out[0])) + int(in_ideal(pres, a, out[1])))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_biserial(const MonomialPresentation& pres) {
  const Quiver& q = pres.quiver();
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    if (q.in_degree(v) > 2 || q.out_degree(v) > 2) {
      return false;
    }
  }
  return true;
}

bool is_gentle(const MonomialPresentation& pres) {
  if (!is_biserial(pres)) {
    return false;
  }
  for (const auto& r : pres.minimal_relations()) {
    if (r.length() != 2) {
      return false;
    }
  }
  return pair_condition(pres, [](int k) { return k == 1; });
}

bool is_string_algebra(const MonomialPresentation& pres) {
  return is_biserial(pres) && pair_condition(pres, [](int k) { return k >= 1; });
}

bool gentle_ag_criterion(const MonomialPresentation& pres) {
  if (!is_gentle(pres)) {
    throw PreconditionError("gentle_ag_criterion needs a gentle algebra");
  }
  const Quiver& q = pres.quiver();
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    if ((q.in_degree(v) == 2) != (q.out_degree(v) == 2)) {
      return false;
    }
  }
  return true;
}

std::vector<VertexIndex> gentle_ar_formula(const MonomialPresentation& pres) {
  if (!gentle_ag_criterion(pres)) {
    throw PreconditionError(
        "gentle_ar_formula needs in-degree 2 iff out-degree 2");
  }
  const Quiver& q = pres.quiver();
  std::vector<VertexIndex> psi(q.num_vertices());
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    const std::size_t din = q.in_degree(v);
    const std::size_t dout = q.out_degree(v);
    if (din + dout == 4 || din + dout == 0) {
      psi[v] = v;
      continue;
    }
    bool continues = false;  // alpha beta nonzero for some beta
    if (din == 1) {
      for (ArrowIndex b : q.arrows_out_of(v)) {
        continues = continues || !in_ideal(pres, q.arrows_into(v)[0], b);
      }
    }
    if (din == 1 && !continues) {
      auto left = pres.maximal_paths(v, Side::left);
      if (left.size() != 1) {
        throw InternalError("gentle vertex without a unique left-maximal path");
      }
      psi[v] = left.front().source;
      continue;
    }
    // Maximal critical path starting at v, through the unique outgoing
    // arrow. Each step is forced; a critical cycle would never end.
    ArrowIndex last = q.arrows_out_of(v).front();
    std::size_t steps = 0;
    for (;;) {
      std::optional<ArrowIndex> next;
      for (ArrowIndex c : q.arrows_out_of(q.arrow(last).target)) {
        if (in_ideal(pres, last, c)) {
          next = c;
        }
      }
      if (!next) {
        break;
      }
      last = *next;
      if (++steps > q.num_arrows()) {
        throw InternalError("critical path does not terminate");
      }
    }
    psi[v] = q.arrow(last).target;
  }
  return psi;
}

std::vector<DegreeFourLabeling> degree_four_labelings(
    const MonomialPresentation& pres, VertexIndex v) {
  const Quiver& q = pres.quiver();
  std::vector<DegreeFourLabeling> out;
  if (q.in_degree(v) != 2 || q.out_degree(v) != 2) {
    return out;
  }
  auto in_relation = [&](ArrowIndex a, ArrowIndex b) {
    for (const auto& r : pres.minimal_relations()) {
      for (std::size_t k = 0; k + 1 < r.arrows.size(); ++k) {
        if (r.arrows[k] == a && r.arrows[k + 1] == b) {
          return true;
        }
      }
    }
    return false;
  };
  const auto& in = q.arrows_into(v);
  const auto& o = q.arrows_out_of(v);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      DegreeFourLabeling l{in[i], in[1 - i], o[j], o[1 - j]};
      if (in_ideal(pres, l.a1, l.b2) && in_ideal(pres, l.a2, l.b1) &&
          !in_relation(l.a1, l.b1) && !in_relation(l.a2, l.b2)) {
        out.push_back(l);
      }
    }
  }
  auto key = [&q](const DegreeFourLabeling& l) {
    return std::vector<std::string>{q.arrow(l.a1).id, q.arrow(l.a2).id,
                                    q.arrow(l.b1).id, q.arrow(l.b2).id};
  };
  std::sort(out.begin(), out.end(),
            [&](const auto& x, const auto& y) { return key(x) < key(y); });
  return out;
}

TwoGorensteinReport two_gorenstein_criterion(const MonomialPresentation& pres) {
  const Quiver& q = pres.quiver();
  TwoGorensteinReport rep;
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    const std::size_t din = q.in_degree(v);
    const std::size_t dout = q.out_degree(v);
    if (din > 2 || dout > 2) {
      rep.failures.push_back({1, q.vertex_id(v)});
      continue;
    }
    if ((din == 2) != (dout == 2)) {
      rep.failures.push_back({2, q.vertex_id(v)});
      continue;
    }
    if (din == 2 && degree_four_labelings(pres, v).empty()) {
      rep.failures.push_back({3, q.vertex_id(v)});
    }
  }
  std::set<ArrowIndex> used;
  std::set<ArrowIndex> ends;
  for (const auto& r : pres.minimal_relations()) {
    used.insert(r.arrows.begin(), r.arrows.end());
    ends.insert(r.arrows.front());
    ends.insert(r.arrows.back());
  }
  for (ArrowIndex a : used) {
    if (ends.count(a) == 0) {
      rep.failures.push_back({4, q.arrow(a).id});
    }
  }
  rep.pass = rep.failures.empty();
  return rep;
}

std::size_t top_dimension_injective(const MonomialPresentation& pres,
                                    VertexIndex x) {
  return pres.maximal_paths(x, Side::left).size();
}

std::size_t socle_dimension_projective(const MonomialPresentation& pres,
                                       VertexIndex x) {
  return pres.maximal_paths(x, Side::right).size();
}

nlohmann::json to_json(Dim d) {
  if (d.is_infinite()) {
    return "infinity";
  }
  return d.value();
}

nlohmann::json analysis_report(const Analysis& an) {
  const MonomialPresentation& pres = an.presentation();
  const Quiver& q = pres.quiver();
  GorensteinProfile p = an.profile();
  TwoGorensteinReport tg = two_gorenstein_criterion(pres);
  ARMapResult ar = an.ar_map();

  nlohmann::json j;
  j["name"] = pres.name();
  j["dimension"] = pres.dimension();
  j["gor_level"] = to_json(p.gor_level);
  j["idim_right"] = to_json(p.idim_right);
  j["idim_left"] = to_json(p.idim_left);
  j["global_dimension"] = to_json(p.global_dimension);
  j["auslander_gorenstein"] = p.is_auslander_gorenstein;
  j["iwanaga_gorenstein"] = p.is_iwanaga_gorenstein;
  j["auslander_regular"] = p.is_auslander_regular;
  j["dominant_dimension"] = to_json(p.dominant_dimension);
  j["gentle"] = is_gentle(pres);
  j["string"] = is_string_algebra(pres);
  j["nakayama"] = is_nakayama(pres);

  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : tg.failures) {
    fails.push_back({{"condition", f.condition}, {"at", f.where}});
  }
  j["two_gorenstein_criterion"] = {{"pass", tg.pass}, {"failures", fails}};

  nlohmann::json per_vertex = nlohmann::json::object();
  for (VertexIndex x = 0; x < q.num_vertices(); ++x) {
    nlohmann::json v;
    v["pdim_injective"] = to_json(an.pdim_injective(x));
    v["idim_projective"] = to_json(an.idim_projective(x));
    const ARAssignment& a = ar.assignments[x];
    switch (a.status) {
      case ARStatus::ok:
        v["psi"] = q.vertex_id(a.target);
        break;
      case ARStatus::infinite_pdim:
        v["psi"] = "infinite-pdim";
        break;
      case ARStatus::last_term_decomposable:
        v["psi"] = "last-term-decomposable";
        break;
    }
    per_vertex[q.vertex_id(x)] = v;
  }
  j["vertices"] = per_vertex;

  nlohmann::json cycles = nullptr;
  if (ar.bijective) {
    cycles = nlohmann::json::array();
    for (const auto& cyc : ar.cycles) {
      nlohmann::json c = nlohmann::json::array();
      for (VertexIndex v : cyc) {
        c.push_back(q.vertex_id(v));
      }
      cycles.push_back(c);
    }
  }
  j["ar_map"] = {{"well_defined", ar.well_defined},
                 {"bijective", ar.bijective},
                 {"cycles", cycles},
                 {"notation", cycle_notation(q, ar)}};
  return j;
}

}  // namespace gorquiv
