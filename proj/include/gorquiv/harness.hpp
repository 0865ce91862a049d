// Enumeration of small algebras and exhaustive property verification.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gorquiv/analysis.hpp"
#include "gorquiv/nakayama.hpp"
#include "gorquiv/presentation.hpp"
#include "gorquiv/surgery.hpp"

namespace gorquiv {

constexpr std::uint64_t kEnumerationBudget = 10'000'000;

// Every valid linear and cyclic series with N <= n_max, cyclic entries
// capped at 2N. Ordered by N, linear before cyclic, then lexicographically.
std::vector<KupischSeries> enumerate_nakayama(std::size_t n_max);

enum class ShapeFilter { any, nakayama, gentle };

struct EnumerationBounds {
  std::size_t max_vertices = 3;
  std::size_t max_arrows = 4;
  std::size_t max_relation_length = 3;
  std::size_t max_relations = 4;
  ShapeFilter filter = ShapeFilter::any;
};

void validate(const EnumerationBounds& b);  // throws ValidationError

// Number of (quiver, antichain) candidates the enumerator inspects. Counting
// stops a little past the budget, so large values are lower bounds.
std::uint64_t estimate_monomial(const EnumerationBounds& b);

// Labeled quivers on vertices "1".."n" (arrows are multisets of vertex
// pairs, ids "a", "b", ... in pair order) with every antichain of paths of
// length 2..max_relation_length as relations. Only finite-dimensional
// algebras passing the filter are visited, in a deterministic order. Throws
// ResourceLimitError when the estimate exceeds the budget and !force.
void enumerate_monomial(
    const EnumerationBounds& b,
    const std::function<void(const MonomialPresentation&)>& visit,
    bool force = false);

std::vector<MonomialPresentation> enumerate_monomial_list(
    const EnumerationBounds& b, bool force = false);

struct PropertyInfo {
  std::string id;
  std::string statement;
  bool nakayama_only;  // needs the Kupisch series
};

const std::vector<PropertyInfo>& properties();
const PropertyInfo& property(const std::string& id);  // throws ValidationError

struct Counterexample {
  std::string presentation;  // DSL source
  std::string detail;
};

struct VerificationReport {
  std::string id;
  std::uint64_t instances = 0;
  std::vector<Counterexample> counterexamples;
  std::uint64_t violations = 0;  // may exceed the stored counterexamples
  double seconds = 0;

  bool pass() const { return violations == 0; }
};

nlohmann::json to_json(const VerificationReport& r);

struct VerificationOptions {
  // The Nakayama census is used when nakayama_n is set, otherwise the
  // monomial enumeration.
  std::optional<std::size_t> nakayama_n;
  EnumerationBounds bounds;
  bool force = false;
  unsigned threads = 0;  // 0 = hardware concurrency
  std::size_t max_counterexamples = 10;
  // Above this size the linear-algebra oracle resolves Ω^r summand by
  // summand instead of as a whole.
  std::size_t oracle_max_dimension = 1024;
};

// One pass over the enumerated class, evaluating every listed property on
// each algebra. Reports come back in the order of `ids`.
std::vector<VerificationReport> verify_properties(
    const std::vector<std::string>& ids, const VerificationOptions& opt);

VerificationReport verify_theorem(const std::string& id,
                                  const VerificationOptions& opt);

// Checks a single algebra; nullopt when the property holds or does not
// apply. `applies` reports whether the algebra was in scope.
std::optional<std::string> check_property(
    const std::string& id, const MonomialPresentation& pres,
    const std::optional<KupischSeries>& ks, bool* applies = nullptr,
    std::size_t oracle_max_dimension = 1024);

// Coresolution terms of P_A(x) and P_B(x) for a cut, matched up to the
// vertex correspondence around the cut vertex. Returns the first mismatch.
std::optional<std::string> cut_resolution_mismatch(
    const Analysis& a, const Analysis& b, VertexIndex v,
    const CutEvent& event);

}  // namespace gorquiv
