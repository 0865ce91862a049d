// Nakayama algebras as Kupisch series, the f/g interval maps and closed
// forms for idim P(i) and pdim I(j).
//
// Vertices are 1..N. For cyclic algebras the maps act on all of Z with
// indices read mod N; for linear algebras indices outside [1, N] are fixed
// points of f and g.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorquiv/dimension.hpp"
#include "gorquiv/presentation.hpp"

namespace gorquiv {

enum class KupischShape { linear, cyclic };

struct KupischSeries {
  KupischShape shape = KupischShape::linear;
  std::vector<std::size_t> c;  // c[j-1] = dim P(j)

  std::size_t size() const { return c.size(); }
  friend bool operator==(const KupischSeries&, const KupischSeries&) = default;
};

std::string to_string(const KupischSeries& ks);  // "[2,3,3] cyclic"
// Accepts "c1,c2,...[,cyclic|linear]"; linear is the default.
KupischSeries parse_kupisch(const std::string& text);

bool is_valid(const KupischSeries& ks);
void validate(const KupischSeries& ks);  // throws ValidationError

// Vertices "1".."N", arrows "a1".."aN" with a_j: j -> j+1 (a_N: N -> 1 when
// cyclic), relations the paths of length c_j from j.
MonomialPresentation presentation_from_kupisch(const KupischSeries& ks);

struct KupischExtraction {
  KupischSeries series;
  std::vector<VertexIndex> order;  // vertex of the presentation at 1..N
};

// nullopt if the quiver is not a connected oriented line or cycle. A cycle
// is read starting from the first declared vertex.
std::optional<KupischExtraction> kupisch_from_presentation(
    const MonomialPresentation& pres);

// Every weakly connected component is Nakayama.
bool is_nakayama(const MonomialPresentation& pres);

class IntervalMaps {
 public:
  explicit IntervalMaps(const KupischSeries& ks);

  const KupischSeries& series() const { return ks_; }
  const std::vector<std::size_t>& co_kupisch() const { return d_; }

  // Public entry points: linear shape requires j in [1, N].
  long long f(long long j) const;
  long long g(long long j) const;

  Dim idim_projective(std::size_t i) const;
  Dim pdim_injective(std::size_t j) const;

  // Extended maps used by the closed forms.
  long long f_ext(long long j) const;
  long long g_ext(long long j) const;

 private:
  std::size_t index(long long j) const;  // 0-based, mod N
  void check_range(long long j) const;

  KupischSeries ks_;
  std::vector<std::size_t> d_;
};

long long f_map(const KupischSeries& ks, long long j);
long long g_map(const KupischSeries& ks, long long j);
Dim idim_projective_closed_form(const KupischSeries& ks, std::size_t i);
Dim pdim_injective_closed_form(const KupischSeries& ks, std::size_t j);

}  // namespace gorquiv
