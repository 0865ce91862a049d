#include <doctest.h>

#include "gorquiv/analysis.hpp"
#include "gorquiv/error.hpp"
#include "gorquiv/surgery.hpp"
#include "support.hpp"

using namespace gorquiv;
using testing::fixture;
using testing::vx;

TEST_CASE("cutting A2 at v gives B") {
  auto a = fixture("A2");
  auto r = cut(a, vx(a, "v"));
  CHECK(same_labeled_structure(r.presentation, fixture("B")));
  REQUIRE(r.trace.events.size() == 1);
  CHECK(r.trace.events[0].v1 == "v_1");
  CHECK(r.trace.events[0].v2 == "v_2");
  CHECK(r.trace.origin.at("v_2") == "v");
  CHECK(r.trace.origin.at("1") == "1");
  // Cutting keeps the algebra Auslander-Gorenstein and the pdim at 1.
  Analysis aa(a);
  Analysis ab(r.presentation);
  CHECK(ab.profile().is_auslander_gorenstein);
  CHECK(aa.pdim_injective(vx(a, "1")) ==
        ab.pdim_injective(vx(r.presentation, "1")));
}

TEST_CASE("cut then glue restores the presentation") {
  for (const char* name : {"G1", "A2", "G9"}) {
    auto p = fixture(name);
    for (const auto& c : cuttable_vertices(p)) {
      CAPTURE(name);
      CAPTURE(p.quiver().vertex_id(c.vertex));
      auto r = cut(p, c.vertex, c.labeling);
      const auto& ev = r.trace.events[0];
      auto g = glue(r.presentation, vx(r.presentation, ev.v1),
                    vx(r.presentation, ev.v2), ev.vertex);
      CHECK(same_labeled_structure(g, p));
      CHECK(r.presentation.num_vertices() == p.num_vertices() + 1);
    }
  }
}

TEST_CASE("cut preconditions") {
  auto g1 = fixture("G1");
  CHECK_THROWS_AS(cut(g1, vx(g1, "1")), PreconditionError);
  CHECK_THROWS_AS(cut(g1, vx(g1, "2"), CutLabeling{"a", "c", "b", "c"}),
                  PreconditionError);
  CHECK_THROWS_AS(glue(g1, vx(g1, "1"), vx(g1, "1"), "x"), PreconditionError);
  // Merging 2 with 3 would give three incoming arrows.
  CHECK_THROWS_AS(glue(g1, vx(g1, "2"), vx(g1, "3"), "x"), PreconditionError);
}

TEST_CASE("fresh vertex names avoid collisions") {
  auto p = parse_presentation(
      "vertices 1 2 v v_1\narrow a1: 2 -> v\narrow a2: v -> v\n"
      "arrow b2: v -> 1\narrow c: 1 -> 2\narrow d: v_1 -> 1\n"
      "relation a1 b2\nrelation a2 a2\nrelation c a1\n");
  auto r = cut(p, vx(p, "v"));
  CHECK(r.trace.events[0].v1 == "v_1'");
  CHECK(r.trace.events[0].v2 == "v_2");
}

TEST_CASE("cuttable vertices of G9") {
  auto p = fixture("G9");
  std::vector<std::string> ids;
  for (const auto& c : cuttable_vertices(p)) {
    ids.push_back(p.quiver().vertex_id(c.vertex));
    CHECK(c.labeling.a1 < c.labeling.a2);
  }
  CHECK(ids == std::vector<std::string>{"3", "5", "6"});
}

TEST_CASE("reduction to Nakayama components") {
  CHECK_FALSE(reduce_to_nakayama(fixture("A1")));

  auto red = reduce_to_nakayama(fixture("A2"));
  REQUIRE(red);
  std::vector<std::string> series;
  for (const auto& s : red->series) {
    series.push_back(to_string(s.series));
  }
  CHECK(series == std::vector<std::string>{"[2,2,3] cyclic", "[2] cyclic"});

  auto g1 = reduce_to_nakayama(fixture("G1"));
  REQUIRE(g1);
  CHECK(g1->components.size() == 2);
  CHECK(to_string(g1->series[0].series) == "[2,2,1] linear");

  auto g9 = reduce_to_nakayama(fixture("G9"));
  REQUIRE(g9);
  CHECK(g9->trace.events.size() == 3);
  for (const auto& c : g9->components) {
    CHECK(is_nakayama(c));
  }
  // Every final vertex traces back to an original one.
  for (const auto& id : g9->result.quiver().vertex_ids()) {
    CHECK(fixture("G9").quiver().find_vertex(g9->trace.origin.at(id)));
  }
  auto j = to_json(g9->trace);
  CHECK(j["events"].size() == 3);
}
