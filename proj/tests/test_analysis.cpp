#include <doctest.h>

#include "gorquiv/analysis.hpp"
#include "gorquiv/error.hpp"
#include "gorquiv/harness.hpp"
#include "gorquiv/nakayama.hpp"
#include "support.hpp"

using namespace gorquiv;
using testing::fixture;
using testing::vx;

namespace {

std::string psi(const MonomialPresentation& p) {
  Analysis an(p);
  auto ar = an.ar_map();
  REQUIRE(ar.bijective);
  return cycle_notation(p.quiver(), ar);
}

// gor_level straight from the definition, using only the linear engine: the
// largest n with pdim I^i <= i for every term I^i, i < n, of the minimal
// injective coresolution of A. That coresolution is read over the opposite
// algebra, where I(v) becomes the projective at v.
Dim oracle_gor_level(const MonomialPresentation& p) {
  auto op = p.opposite();
  Resolver r(p);
  Resolver ro(op);
  const std::size_t n = p.num_vertices();
  std::vector<Dim> pdim_i(n);
  std::vector<ResolutionTrace> cores(n);
  for (VertexIndex v = 0; v < n; ++v) {
    pdim_i[v] = r.resolve_injective_linear(v, 4096).dimension;
    cores[v] = ro.resolve_injective_linear(v, 4096);
  }
  Dim level = Dim::infinity();
  for (VertexIndex x = 0; x < n; ++x) {
    const auto& t = cores[x];
    std::size_t len = t.dimension.is_finite() ? t.dimension.value() + 1
                                              : t.preperiod + 2 * t.period + 4;
    for (std::size_t i = 0; i < len; ++i) {
      for (VertexIndex v : t.support(i)) {
        if (pdim_i[v] > Dim(i)) {
          level = min(level, Dim(i));
        }
      }
    }
  }
  return level;
}

}  // namespace

TEST_CASE("G1 profile and AR map") {
  auto p = fixture("G1");
  Analysis an(p);
  CHECK(an.pdim_injective(vx(p, "3")) == Dim(0));
  CHECK(an.pdim_injective(vx(p, "2")) == Dim(1));
  CHECK(an.pdim_injective(vx(p, "1")) == Dim(2));
  auto prof = an.profile();
  CHECK(prof.gor_level.is_infinite());
  CHECK(prof.is_auslander_gorenstein);
  CHECK(prof.idim_right == Dim(2));
  CHECK(prof.idim_left == Dim(2));
  CHECK(prof.dominant_dimension == Dim(1));
  CHECK(psi(p) == "(1 3)(2)");
  CHECK(is_gentle(p));
  CHECK(gentle_ag_criterion(p));
  CHECK(cycle_notation(p.quiver(), gentle_ar_formula(p)) == "(1 3)(2)");
}

TEST_CASE("A1 fails the 2-Gorenstein criterion at arrow c") {
  auto p = fixture("A1");
  Analysis an(p);
  CHECK(an.gor_level() == Dim(1));
  CHECK_FALSE(an.is_n_gorenstein(2));
  auto tg = two_gorenstein_criterion(p);
  CHECK_FALSE(tg.pass);
  REQUIRE(tg.failures.size() == 1);
  CHECK(tg.failures[0].condition == 4);
  CHECK(tg.failures[0].where == "c");
}

TEST_CASE("A2 passes and is Auslander-Gorenstein") {
  auto p = fixture("A2");
  Analysis an(p);
  CHECK(two_gorenstein_criterion(p).pass);
  CHECK(an.is_n_gorenstein(2));
  CHECK(an.pdim_injective(vx(p, "2")) == Dim(0));
  CHECK(an.pdim_injective(vx(p, "v")) == Dim(1));
  CHECK(an.pdim_injective(vx(p, "1")) == Dim(3));
  CHECK(an.profile().is_auslander_gorenstein);
  CHECK(is_gentle(p));
  // Read off the computed resolutions; see the notes on this example.
  CHECK(psi(p) == "(1)(2)(v)");
}

TEST_CASE("B profile") {
  auto p = fixture("B");
  Analysis an(p);
  CHECK(an.profile().is_auslander_gorenstein);
  CHECK(an.pdim_injective(vx(p, "1")) == Dim(3));
  CHECK(psi(p) == "(1)(2 v_1)(v_2)");
  CHECK(an.dominant_dimension() == Dim(3));
}

TEST_CASE("G9 permutation from resolutions and from the quiver") {
  auto p = fixture("G9");
  CHECK(is_gentle(p));
  CHECK(gentle_ag_criterion(p));
  CHECK(psi(p) == "(1 4 2)(3)(5)(6)(7 8 9)");
  CHECK(cycle_notation(p.quiver(), gentle_ar_formula(p)) ==
        "(1 4 2)(3)(5)(6)(7 8 9)");
}

TEST_CASE("cyclic [2,3,...,3] with 3(n+1) vertices is exactly (2n+1)-Gorenstein") {
  for (std::size_t n = 1; n <= 3; ++n) {
    KupischSeries ks{KupischShape::cyclic, std::vector<std::size_t>(3 * (n + 1), 3)};
    ks.c[0] = 2;
    auto p = presentation_from_kupisch(ks);
    Analysis an(p);
    CAPTURE(n);
    CHECK(an.gor_level() == Dim(2 * n + 1));
    CHECK(an.idim_projective(vx(p, "1")).is_infinite());
    CHECK(an.pdim_injective(vx(p, "3")).is_infinite());
    CHECK(an.is_n_gorenstein(2 * n + 1));
    CHECK_FALSE(an.is_n_gorenstein(2 * n + 2));
    CHECK_FALSE(an.profile().is_auslander_gorenstein);
  }
}

TEST_CASE("gentle and string recognition") {
  // Three arrows into one vertex: not biserial.
  auto p = parse_presentation(
      "vertices 1 2 3 4\narrow a: 1 -> 4\narrow b: 2 -> 4\narrow c: 3 -> 4\n");
  CHECK_FALSE(is_biserial(p));
  CHECK_FALSE(is_string_algebra(p));
  CHECK_THROWS_AS(gentle_ag_criterion(p), PreconditionError);
  // A relation of length 3 is allowed for string but not for gentle.
  auto s = parse_presentation(
      "vertices 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\n"
      "relation a b c\n");
  CHECK(is_string_algebra(s));
  CHECK_FALSE(is_gentle(s));
}

TEST_CASE("degree-4 labelings at the loop vertex of G1") {
  auto p = fixture("G1");
  // The labeling and its mirror image with a1, a2 swapped.
  auto ls = degree_four_labelings(p, vx(p, "2"));
  REQUIRE(ls.size() == 2);
  const Quiver& q = p.quiver();
  CHECK(q.arrow(ls[0].a1).id == "a");
  CHECK(q.arrow(ls[0].a2).id == "c");
  CHECK(q.arrow(ls[0].b1).id == "c");
  CHECK(q.arrow(ls[0].b2).id == "b");
  CHECK(q.arrow(ls[1].a1).id == "c");
  CHECK(q.arrow(ls[1].b2).id == "c");
}

TEST_CASE("top of injectives and socle of projectives count maximal paths") {
  auto p = fixture("G9");
  for (VertexIndex x = 0; x < p.num_vertices(); ++x) {
    CHECK(top_dimension_injective(p, x) == p.maximal_paths(x, Side::left).size());
    CHECK(socle_dimension_projective(p, x) ==
          p.maximal_paths(x, Side::right).size());
  }
}

TEST_CASE("report keys") {
  Analysis an(fixture("G1"));
  auto j = analysis_report(an);
  for (const char* key :
       {"gor_level", "idim_right", "idim_left", "auslander_gorenstein",
        "iwanaga_gorenstein", "dominant_dimension", "gentle", "string",
        "nakayama", "two_gorenstein_criterion", "ar_map"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["gor_level"] == "infinity");
  CHECK(j["ar_map"]["bijective"] == true);
}

TEST_CASE("gor_level agrees with a linear-engine oracle on small algebras") {
  EnumerationBounds b;
  b.max_vertices = 2;
  b.max_arrows = 2;
  std::size_t checked = 0;
  enumerate_monomial(b, [&](const MonomialPresentation& p) {
    Analysis an(p);
    Dim expect = oracle_gor_level(p);
    CAPTURE(p.name());
    CHECK(an.gor_level() == expect);
    for (std::size_t n = 1; n <= 4; ++n) {
      CHECK(an.is_n_gorenstein(n) == (expect >= Dim(n)));
    }
    ++checked;
  });
  CHECK(checked > 50);
}
