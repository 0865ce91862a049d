// Minimal projective resolutions of injective and simple modules.
//
// Two engines compute the same traces:
//   * the hybrid engine does Ω¹ and Ω² by linear algebra, names Ω² as a sum
//     of path modules pA and then iterates the combinatorial syzygy rule;
//   * the linear engine does cover + kernel at every step and only uses the
//     path-module naming to notice when the sequence of syzygies cycles.

#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "gorquiv/dimension.hpp"
#include "gorquiv/modules.hpp"
#include "gorquiv/presentation.hpp"

namespace gorquiv {

struct ResolutionTrace {
  // terms[i][v] = multiplicity of P(v) in P_i (saturating). For infinite
  // resolutions the terms up to preperiod + period - 1 are kept; the support
  // of P_i repeats with `period` from index `preperiod` on.
  std::vector<std::vector<std::uint64_t>> terms;
  Dim dimension;
  std::size_t preperiod = 0;
  std::size_t period = 0;
  // states[i] describes Ω^i as ⊕ pA for i >= 2 (empty for i < 2).
  std::vector<ClassMultiset> states;

  // Vertices with nonzero multiplicity in P_i.
  std::vector<VertexIndex> support(std::size_t i) const;
  // Index of the term that P_i coincides with in the stored prefix.
  std::size_t stored_index(std::size_t i) const;
  std::uint64_t term_size(std::size_t i) const;
};

// The resolution engines of one presentation, sharing the path classes.
class Resolver {
 public:
  explicit Resolver(const MonomialPresentation& pres);

  const MonomialPresentation& presentation() const { return *pres_; }
  const PathClasses& classes() const { return classes_; }

  ResolutionTrace resolve_injective(VertexIndex x) const;
  ResolutionTrace resolve_simple(VertexIndex x) const;

  // Pure linear algebra. Once some Ω^r with r >= 2 exceeds `max_dimension`
  // it is named as ⊕ pA and each path module is resolved on its own. Throws
  // ResourceLimitError when Ω¹ or Ω⁰ is that large or the step guard trips.
  ResolutionTrace resolve_injective_linear(VertexIndex x,
                                           std::size_t max_dimension) const;

  std::size_t step_guard() const;

 private:
  ResolutionTrace run_states(ResolutionTrace trace, std::size_t r,
                             ClassMultiset state) const;

  const MonomialPresentation* pres_;
  PathClasses classes_;
};

// Minimal nonzero q from t(p) with pq zero, sorted: Ω(pA) = ⊕ qA.
std::vector<Path> combinatorial_syzygy_step(const MonomialPresentation& pres,
                                            const Path& p);

// Ω(I(x)) by exact linear algebra.
Representation first_syzygy_injective(const MonomialPresentation& pres,
                                      VertexIndex x);

// Whether the explicit generators {r_{t,p} - r_{p,t}} ∪ {pa} for maximal
// paths p, t ending at x span the kernel of ⊕_{p} P(s(p)) -> I(x) as a
// submodule.
bool first_syzygy_generators_span(const MonomialPresentation& pres,
                                  VertexIndex x);

ResolutionTrace pdim_injective(const MonomialPresentation& pres, VertexIndex x);
// Injective coresolution of P(x), read as a projective resolution over A^op.
ResolutionTrace idim_projective(const MonomialPresentation& pres,
                                VertexIndex x);

// Number of leading projective-injective terms in the minimal injective
// coresolution of A_A. `op` must resolve the opposite presentation.
Dim dominant_dimension(const Resolver& a, const Resolver& op);
Dim dominant_dimension(const MonomialPresentation& pres);

}  // namespace gorquiv
