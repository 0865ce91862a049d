#include "gorquiv/nakayama.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "gorquiv/error.hpp"

namespace gorquiv {

std::string to_string(const KupischSeries& ks) {
  std::ostringstream os;
  os << '[';
  for (std::size_t j = 0; j < ks.c.size(); ++j) {
    os << (j ? "," : "") << ks.c[j];
  }
  os << "] " << (ks.shape == KupischShape::cyclic ? "cyclic" : "linear");
  return os.str();
}

KupischSeries parse_kupisch(const std::string& text) {
  KupischSeries ks;
  std::string cleaned;
  for (char ch : text) {
    cleaned += (ch == '[' || ch == ']' || ch == ',' || ch == ';') ? ' ' : ch;
  }
  std::istringstream in(cleaned);
  std::string tok;
  bool shape_seen = false;
  while (in >> tok) {
    if (shape_seen) {
      throw ValidationError("kupisch series: shape must come last");
    }
    if (tok == "cyclic" || tok == "linear") {
      ks.shape = tok == "cyclic" ? KupischShape::cyclic : KupischShape::linear;
      shape_seen = true;
      continue;
    }
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok[0] == '-' || tok[0] == '+') {
      throw ValidationError("kupisch series: bad entry '" + tok + "'");
    }
    ks.c.push_back(v);
  }
  validate(ks);
  return ks;
}

bool is_valid(const KupischSeries& ks) {
  const std::size_t n = ks.size();
  if (n == 0) {
    return false;
  }
  if (ks.shape == KupischShape::linear) {
    if (ks.c[n - 1] != 1) {
      return false;
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (ks.c[j] < 2 || ks.c[j + 1] + 1 < ks.c[j]) {
        return false;
      }
    }
    return true;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (ks.c[j] < 2 || ks.c[(j + 1) % n] + 1 < ks.c[j]) {
      return false;
    }
  }
  return true;
}

void validate(const KupischSeries& ks) {
  if (!is_valid(ks)) {
    throw ValidationError("invalid Kupisch series " + to_string(ks));
  }
}

MonomialPresentation presentation_from_kupisch(const KupischSeries& ks) {
  validate(ks);
  const std::size_t n = ks.size();
  const bool cyclic = ks.shape == KupischShape::cyclic;
  Quiver q;
  for (std::size_t j = 1; j <= n; ++j) {
    q.add_vertex(std::to_string(j));
  }
  const std::size_t arrows = cyclic ? n : n - 1;
  for (std::size_t j = 0; j < arrows; ++j) {
    q.add_arrow("a" + std::to_string(j + 1), j, (j + 1) % n);
  }
  std::vector<Path> gens;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t len = ks.c[j];
    if (!cyclic && j + len > n - 1) {
      continue;  // the path would leave the line
    }
    std::vector<ArrowIndex> word;
    for (std::size_t k = 0; k < len; ++k) {
      word.push_back((j + k) % n);
    }
    gens.push_back(q.make_path(word));
  }
  gens = minimal_relations(q, gens);
  return MonomialPresentation(to_string(ks), std::move(q), std::move(gens));
}

std::optional<KupischExtraction> kupisch_from_presentation(
    const MonomialPresentation& pres) {
  const Quiver& q = pres.quiver();
  const std::size_t n = q.num_vertices();
  if (n == 0) {
    return std::nullopt;
  }
  std::optional<VertexIndex> start;
  for (VertexIndex v = 0; v < n; ++v) {
    if (q.in_degree(v) > 1 || q.out_degree(v) > 1) {
      return std::nullopt;
    }
    if (q.in_degree(v) == 0) {
      if (start) {
        return std::nullopt;
      }
      start = v;
    }
  }
  KupischExtraction out;
  out.series.shape = start ? KupischShape::linear : KupischShape::cyclic;
  VertexIndex v = start.value_or(0);
  std::vector<bool> seen(n, false);
  while (!seen[v]) {
    seen[v] = true;
    out.order.push_back(v);
    out.series.c.push_back(pres.basis().starting_at(v).size());
    if (q.out_degree(v) == 0) {
      break;
    }
    v = q.arrow(q.arrows_out_of(v).front()).target;
  }
  if (out.order.size() != n) {
    return std::nullopt;  // disconnected
  }
  return out;
}

bool is_nakayama(const MonomialPresentation& pres) {
  if (pres.num_vertices() == 0) {
    return true;
  }
  for (const auto& comp : connected_components(pres)) {
    if (!kupisch_from_presentation(comp)) {
      return false;
    }
  }
  return true;
}

IntervalMaps::IntervalMaps(const KupischSeries& ks) : ks_(ks) {
  auto pres = presentation_from_kupisch(ks_);
  for (VertexIndex v = 0; v < ks_.size(); ++v) {
    d_.push_back(pres.basis().ending_at(v).size());
  }
}

std::size_t IntervalMaps::index(long long j) const {
  const long long n = static_cast<long long>(ks_.size());
  long long r = (j - 1) % n;
  if (r < 0) {
    r += n;
  }
  return static_cast<std::size_t>(r);
}

void IntervalMaps::check_range(long long j) const {
  if (ks_.shape == KupischShape::linear &&
      (j < 1 || j > static_cast<long long>(ks_.size()))) {
    throw ValidationError("vertex " + std::to_string(j) +
                          " outside the linear range");
  }
}

long long IntervalMaps::f(long long j) const {
  check_range(j);
  return f_ext(j);
}

long long IntervalMaps::g(long long j) const {
  check_range(j);
  return g_ext(j);
}

long long IntervalMaps::f_ext(long long j) const {
  if (ks_.shape == KupischShape::linear &&
      (j < 1 || j > static_cast<long long>(ks_.size()))) {
    return j;
  }
  return j + static_cast<long long>(ks_.c[index(j)]);
}

long long IntervalMaps::g_ext(long long j) const {
  if (ks_.shape == KupischShape::linear &&
      (j < 1 || j > static_cast<long long>(ks_.size()))) {
    return j;
  }
  return j - static_cast<long long>(d_[index(j)]);
}

namespace {

// Walks a pair (x, y) through a map h until `stop(k, x, y)` reports a
// dimension. A repeated state means the infimum is over the empty set.
template <typename Step, typename Stop, typename Key>
Dim iterate_pair(long long x, long long y, std::size_t n, Step step,
                 Stop stop, Key key) {
  std::map<std::pair<long long, long long>, std::size_t> seen;
  const std::size_t guard = 4 * n * n + 16;
  for (std::size_t k = 0; k <= guard; ++k) {
    if (auto d = stop(k, x, y)) {
      return *d;
    }
    if (!seen.emplace(key(x, y), k).second) {
      return Dim::infinity();
    }
    x = step(x);
    y = step(y);
  }
  throw ResourceLimitError("closed form did not settle within 4N^2 steps");
}

}  // namespace

Dim IntervalMaps::idim_projective(std::size_t i) const {
  check_range(static_cast<long long>(i));
  const long long n = static_cast<long long>(ks_.size());
  const long long a = static_cast<long long>(i + ks_.c[i - 1]) - 1;
  auto g = [this](long long t) { return g_ext(t); };
  auto stop = [&](std::size_t k, long long x, long long y) -> std::optional<Dim> {
    if (x <= g(y)) {
      return Dim(2 * k);
    }
    if (g(y) <= g(x)) {
      return Dim(2 * k + 1);
    }
    return std::nullopt;
  };
  auto key = [&](long long x, long long y) {
    if (ks_.shape == KupischShape::cyclic) {
      long long r = x % n;
      return std::make_pair(r < 0 ? r + n : r, y - x);
    }
    return std::make_pair(x, y);
  };
  return iterate_pair(static_cast<long long>(i) - 1, a, ks_.size(), g, stop,
                      key);
}

Dim IntervalMaps::pdim_injective(std::size_t j) const {
  check_range(static_cast<long long>(j));
  const long long n = static_cast<long long>(ks_.size());
  const long long jj = static_cast<long long>(j);
  auto f = [this](long long t) { return f_ext(t); };
  auto stop = [&](std::size_t k, long long c, long long d) -> std::optional<Dim> {
    if (f(c) <= d) {
      return Dim(2 * k);
    }
    if (f(d) <= f(c)) {
      return Dim(2 * k + 1);
    }
    return std::nullopt;
  };
  auto key = [&](long long c, long long d) {
    if (ks_.shape == KupischShape::cyclic) {
      long long r = c % n;
      return std::make_pair(r < 0 ? r + n : r, d - c);
    }
    return std::make_pair(c, d);
  };
  return iterate_pair(g_ext(jj) + 1, jj + 1, ks_.size(), f, stop, key);
}

long long f_map(const KupischSeries& ks, long long j) {
  return IntervalMaps(ks).f(j);
}

long long g_map(const KupischSeries& ks, long long j) {
  return IntervalMaps(ks).g(j);
}

Dim idim_projective_closed_form(const KupischSeries& ks, std::size_t i) {
  return IntervalMaps(ks).idim_projective(i);
}

Dim pdim_injective_closed_form(const KupischSeries& ks, std::size_t j) {
  return IntervalMaps(ks).pdim_injective(j);
}

}  // namespace gorquiv
