#include <doctest.h>

#include <random>

#include "gorquiv/automaton.hpp"
#include "gorquiv/dsl.hpp"
#include "gorquiv/error.hpp"
#include "gorquiv/presentation.hpp"
#include "support.hpp"

using namespace gorquiv;
using testing::fixture;

TEST_CASE("fixture dimensions agree with brute-force path counts") {
  for (const char* name : {"G1", "A1", "A2", "B", "G9"}) {
    auto p = fixture(name);
    CAPTURE(name);
    CHECK(p.dimension() ==
          testing::count_nonzero_paths(p.quiver(), testing::relation_words(p), 12));
  }
  // dim P(1) + dim P(2) + dim P(v) = 2 + 5 + 6.
  CHECK(fixture("A2").dimension() == 13);
  CHECK(fixture("G1").dimension() == 9);
}

TEST_CASE("projective dimensions of A2") {
  auto p = fixture("A2");
  const auto& b = p.basis();
  CHECK(b.starting_at(testing::vx(p, "1")).size() == 2);
  CHECK(b.starting_at(testing::vx(p, "2")).size() == 5);
  CHECK(b.starting_at(testing::vx(p, "v")).size() == 6);
}

TEST_CASE("parser errors carry a position") {
  try {
    parse_presentation("algebra X\nvertices 1\nbogus 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(parse_presentation("vertices 1\narrow a: 1 -> 2\n"),
                  ValidationError);
  CHECK_THROWS_AS(
      parse_presentation("vertices 1 2\narrow a: 1 -> 2\nrelation a\n"),
      ValidationError);
  CHECK_THROWS_AS(parse_presentation("vertices 1 2\narrow a: 1 -> 2\n"
                                     "arrow b: 1 -> 2\nrelation a b\n"),
                  ValidationError);
  // A loop without relations is infinite-dimensional.
  CHECK_THROWS_AS(parse_presentation("vertices 1\narrow a: 1 -> 1\n"),
                  ValidationError);
}

TEST_CASE("serialization round-trips through text and JSON") {
  for (const char* name : {"G1", "A1", "A2", "B", "G9"}) {
    auto p = fixture(name);
    auto q = parse_presentation(serialize(p));
    CHECK(same_labeled_structure(p, q));
    CHECK(q.name() == p.name());
    auto r = presentation_from_json(to_json(p));
    CHECK(same_labeled_structure(p, r));
  }
  auto dot = to_dot(fixture("G1"));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("// relation: a b") != std::string::npos);
}

TEST_CASE("relations are minimalized") {
  auto p = parse_presentation(
      "vertices 1\narrow a: 1 -> 1\nrelation a a a\nrelation a a\n");
  REQUIRE(p.minimal_relations().size() == 1);
  CHECK(p.minimal_relations()[0].length() == 2);
  CHECK(p.generators().size() == 2);
  CHECK(p.dimension() == 2);
}

TEST_CASE("the opposite is an involution and preserves dimension") {
  for (const char* name : {"G1", "A1", "A2", "B", "G9"}) {
    auto p = fixture(name);
    auto op = p.opposite();
    CHECK(op.dimension() == p.dimension());
    CHECK(same_labeled_structure(op.opposite(), p));
    for (VertexIndex v = 0; v < p.num_vertices(); ++v) {
      CHECK(p.basis().starting_at(v).size() == op.basis().ending_at(v).size());
    }
  }
}

TEST_CASE("maximal paths of G1") {
  auto p = fixture("G1");
  const auto& q = p.quiver();
  auto left = p.maximal_paths(q.vertex("3"), Side::left);
  REQUIRE(left.size() == 1);
  CHECK(q.format(left[0]) == "a c b");
  auto right = p.maximal_paths(q.vertex("1"), Side::right);
  REQUIRE(right.size() == 1);
  CHECK(q.format(right[0]) == "a c b");
  // Neither a nor a c extends to the left.
  auto at2 = p.maximal_paths(q.vertex("2"), Side::left);
  REQUIRE(at2.size() == 2);
  CHECK(q.format(at2[0]) == "a");
  CHECK(q.format(at2[1]) == "a c");
}

TEST_CASE("factor automaton agrees with naive search on random words") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> letter(0, 2);
  std::uniform_int_distribution<std::size_t> len(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<std::size_t>> pats(3);
    for (auto& pt : pats) {
      pt.resize(len(rng));
      for (auto& x : pt) {
        x = letter(rng);
      }
    }
    FactorAutomaton fa(3, pats);
    for (int w = 0; w < 40; ++w) {
      std::vector<std::size_t> word(len(rng) * 3);
      for (auto& x : word) {
        x = letter(rng);
      }
      CHECK(fa.contains_pattern(word) == testing::word_is_zero(word, pats));
    }
  }
}

TEST_CASE("finite-dimensionality test matches a length bound") {
  // One vertex, two loops: infinite iff some nonzero path is longer than the
  // number of words of length <= 2.
  Quiver q;
  q.add_vertex("1");
  q.add_arrow("a", "1", "1");
  q.add_arrow("b", "1", "1");
  std::vector<std::vector<std::string>> pool = {
      {"a", "a"}, {"a", "b"}, {"b", "a"}, {"b", "b"}, {"a", "b", "a"}};
  for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
    std::vector<Path> gens;
    std::vector<std::vector<std::size_t>> words;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask >> i & 1) {
        gens.push_back(q.make_path(pool[i]));
        words.push_back(gens.back().arrows);
      }
    }
    const std::size_t bound = 7;  // words of length <= 2 over two letters
    bool finite = testing::finite_by_length(q, words, bound);
    CHECK(is_finite_dimensional(q, gens) == finite);
  }
}

TEST_CASE("connected components keep ids and split relations") {
  auto p = parse_presentation(
      "algebra X\nvertices 1 2 3\narrow a: 1 -> 2\narrow b: 3 -> 3\n"
      "relation b b\n");
  auto comps = connected_components(p);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].name() == "X.1");
  CHECK(comps[0].quiver().vertex_ids() == std::vector<std::string>{"1", "2"});
  CHECK(comps[1].minimal_relations().size() == 1);
  CHECK(comps[0].dimension() + comps[1].dimension() == p.dimension());
}
