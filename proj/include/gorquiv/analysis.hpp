// Gorenstein profile, the Auslander-Reiten map and the combinatorial
// classification criteria (gentle, string, degree conditions, 2-Gorenstein).

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gorquiv/dimension.hpp"
#include "gorquiv/presentation.hpp"
#include "gorquiv/resolve.hpp"

namespace gorquiv {

struct GorensteinProfile {
  Dim gor_level;   // sup{n : A is n-Gorenstein}
  Dim idim_right;  // idim A_A = max idim P(x)
  Dim idim_left;   // idim of A as a left module = max pdim I(x)
  Dim global_dimension;
  Dim dominant_dimension;
  bool is_1_gorenstein = false;
  bool is_auslander_gorenstein = false;
  bool is_iwanaga_gorenstein = false;
  bool is_auslander_regular = false;
};

enum class ARStatus { ok, infinite_pdim, last_term_decomposable };

struct ARAssignment {
  ARStatus status = ARStatus::ok;
  VertexIndex target = 0;  // meaningful when status == ok
};

struct ARMapResult {
  std::vector<ARAssignment> assignments;  // per vertex
  bool well_defined = false;
  bool bijective = false;
  // Cycle decomposition when bijective, each cycle starting at its least
  // vertex index, cycles ordered by that index.
  std::vector<std::vector<VertexIndex>> cycles;

  std::optional<VertexIndex> target(VertexIndex x) const;
};

std::string cycle_notation(const Quiver& q, const ARMapResult& ar);
std::string cycle_notation(const Quiver& q,
                           const std::vector<VertexIndex>& permutation);

// All resolution data of one presentation, computed once. The traces of both
// sides are built eagerly; the global dimension is computed on first use, so
// an Analysis must not be shared between threads.
class Analysis {
 public:
  explicit Analysis(MonomialPresentation pres);

  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  const MonomialPresentation& presentation() const { return *pres_; }
  const MonomialPresentation& opposite() const { return *op_; }
  const Resolver& resolver() const { return *resolver_; }
  const Resolver& op_resolver() const { return *op_resolver_; }

  // Minimal projective resolution of I(x).
  const ResolutionTrace& injective_resolution(VertexIndex x) const {
    return inj_.at(x);
  }
  // Minimal injective coresolution of P(x), as the projective resolution of
  // the injective I(x) over the opposite algebra.
  const ResolutionTrace& projective_coresolution(VertexIndex x) const {
    return proj_.at(x);
  }

  Dim pdim_injective(VertexIndex x) const { return inj_.at(x).dimension; }
  Dim idim_projective(VertexIndex x) const { return proj_.at(x).dimension; }

  // Walks the projective resolutions of the injectives to depth n-1 and
  // checks idim of every summand. Independent of gor_level().
  bool is_n_gorenstein(std::size_t n) const;
  // From the coresolutions of the projectives.
  Dim gor_level() const { return gor_level_; }
  Dim global_dimension() const;
  Dim dominant_dimension() const;

  GorensteinProfile profile() const;
  ARMapResult ar_map() const;

 private:
  std::unique_ptr<MonomialPresentation> pres_;
  std::unique_ptr<MonomialPresentation> op_;
  std::unique_ptr<Resolver> resolver_;
  std::unique_ptr<Resolver> op_resolver_;
  std::vector<ResolutionTrace> inj_;
  std::vector<ResolutionTrace> proj_;
  Dim gor_level_;
  mutable std::optional<Dim> gldim_;
  mutable std::optional<Dim> domdim_;
};

bool is_n_gorenstein(const MonomialPresentation& pres, std::size_t n);
GorensteinProfile gorenstein_profile(const MonomialPresentation& pres);
ARMapResult ar_map(const MonomialPresentation& pres);

bool is_biserial(const MonomialPresentation& pres);
bool is_gentle(const MonomialPresentation& pres);
bool is_string_algebra(const MonomialPresentation& pres);

// in-degree 2 iff out-degree 2 at every vertex. Throws PreconditionError on
// non-gentle input.
bool gentle_ag_criterion(const MonomialPresentation& pres);

// The AR permutation of a gentle algebra satisfying the degree criterion,
// read off the quiver. Throws PreconditionError otherwise.
std::vector<VertexIndex> gentle_ar_formula(const MonomialPresentation& pres);

// Labeling of a vertex with two incoming and two outgoing arrows such that
// a1 b2 and a2 b1 are relations and neither a1 b1 nor a2 b2 occurs in a
// minimal relation. A loop can be both a2 and b1.
struct DegreeFourLabeling {
  ArrowIndex a1;
  ArrowIndex a2;
  ArrowIndex b1;
  ArrowIndex b2;

  friend bool operator==(const DegreeFourLabeling&,
                         const DegreeFourLabeling&) = default;
};

// Every valid labeling at v, ordered by the arrow ids (a1, a2, b1, b2).
std::vector<DegreeFourLabeling> degree_four_labelings(
    const MonomialPresentation& pres, VertexIndex v);

struct CriterionFailure {
  int condition;      // 1..4
  std::string where;  // vertex id for conditions 1-3, arrow id for 4
};

struct TwoGorensteinReport {
  bool pass = false;
  std::vector<CriterionFailure> failures;
};

TwoGorensteinReport two_gorenstein_criterion(const MonomialPresentation& pres);

// Number of left-maximal paths ending at x (dim top I(x)) and of
// right-maximal paths starting at x (dim soc P(x)).
std::size_t top_dimension_injective(const MonomialPresentation& pres,
                                    VertexIndex x);
std::size_t socle_dimension_projective(const MonomialPresentation& pres,
                                       VertexIndex x);

nlohmann::json to_json(Dim d);
nlohmann::json analysis_report(const Analysis& an);

}  // namespace gorquiv
