#include <doctest.h>

#include "gorquiv/analysis.hpp"
#include "gorquiv/error.hpp"
#include "gorquiv/harness.hpp"
#include "gorquiv/nakayama.hpp"
#include "gorquiv/resolve.hpp"
#include "support.hpp"

using namespace gorquiv;

namespace {

KupischSeries cyc(std::vector<std::size_t> c) {
  return {KupischShape::cyclic, std::move(c)};
}

std::uint64_t catalan(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t k = 0; k < n; ++k) {
    c = c * 2 * (2 * k + 1) / (k + 2);
  }
  return c;
}

// Cyclic series with entries in [2, 2N] satisfying c_{j+1} >= c_j - 1
// cyclically, by exhausting all sequences.
std::size_t naive_cyclic_count(std::size_t n) {
  std::vector<std::size_t> c(n, 2);
  std::size_t count = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j) {
      ok = ok && c[(j + 1) % n] + 1 >= c[j];
    }
    count += ok ? 1 : 0;
    std::size_t k = 0;
    while (k < n && c[k] == 2 * n) {
      c[k++] = 2;
    }
    if (k == n) {
      return count;
    }
    ++c[k];
  }
}

}  // namespace

TEST_CASE("Kupisch series parse and print") {
  auto ks = parse_kupisch("[2,3,3],cyclic");
  CHECK(ks == cyc({2, 3, 3}));
  CHECK(to_string(ks) == "[2,3,3] cyclic");
  CHECK(parse_kupisch("3,2,1").shape == KupischShape::linear);
  CHECK(is_valid(parse_kupisch("3,2,1")));
  CHECK_FALSE(is_valid({KupischShape::linear, {1, 1}}));
  CHECK_FALSE(is_valid({KupischShape::linear, {2, 2}}));  // must end with 1
  CHECK_THROWS_AS(parse_kupisch("1,1"), ValidationError);
  CHECK_FALSE(is_valid(cyc({1, 2})));
  CHECK_FALSE(is_valid(cyc({4, 2})));
  CHECK_THROWS_AS(validate(cyc({4, 2})), ValidationError);
}

TEST_CASE("census sizes match independent counts") {
  auto all = enumerate_nakayama(6);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t lin = 0;
    std::size_t cy = 0;
    for (const auto& ks : all) {
      if (ks.size() == n) {
        (ks.shape == KupischShape::linear ? lin : cy) += 1;
      }
    }
    CAPTURE(n);
    CHECK(lin == catalan(n - 1));
    CHECK(cy == naive_cyclic_count(n));
  }
  // Frozen regression numbers.
  CHECK(naive_cyclic_count(6) == 3958);
}

TEST_CASE("presentations realise the series and extraction inverts them") {
  for (const auto& ks : enumerate_nakayama(5)) {
    CAPTURE(to_string(ks));
    auto p = presentation_from_kupisch(ks);
    for (std::size_t j = 0; j < ks.size(); ++j) {
      CHECK(p.basis().starting_at(j).size() == ks.c[j]);
    }
    auto back = kupisch_from_presentation(p);
    REQUIRE(back);
    CHECK(back->series == ks);
    CHECK(is_nakayama(p));
  }
}

TEST_CASE("extraction rejects non-line quivers") {
  CHECK_FALSE(kupisch_from_presentation(testing::fixture("G1")));
  CHECK_FALSE(is_nakayama(testing::fixture("G1")));
  CHECK(is_nakayama(testing::fixture("B")));
}

TEST_CASE("interval maps of [2,3,3,3,3,3] cyclic") {
  IntervalMaps m(cyc({2, 3, 3, 3, 3, 3}));
  CHECK(m.f(1) == 3);
  CHECK(m.f(2) == 5);
  CHECK(m.f(7) == m.f(1) + 6);
  CHECK(m.co_kupisch() == std::vector<std::size_t>{3, 3, 2, 3, 3, 3});
  CHECK(m.g(3) == 1);
  CHECK(m.g(1) == -2);
  CHECK(m.idim_projective(1).is_infinite());
  CHECK(m.pdim_injective(3).is_infinite());
}

TEST_CASE("interval maps are monotone and shift-equivariant") {
  for (const auto& ks : enumerate_nakayama(5)) {
    CAPTURE(to_string(ks));
    IntervalMaps m(ks);
    const auto n = static_cast<long long>(ks.size());
    const bool cyclic = ks.shape == KupischShape::cyclic;
    const long long lo = cyclic ? 1 - n : 1;
    const long long hi = cyclic ? 2 * n : n;
    for (long long j = lo; j < hi; ++j) {
      CHECK(m.f(j) <= m.f(j + 1));
      CHECK(m.g(j) <= m.g(j + 1));
      if (cyclic) {
        CHECK(m.f(j + n) == m.f(j) + n);
        CHECK(m.g(j + n) == m.g(j) + n);
      }
    }
    if (!cyclic) {
      CHECK_THROWS_AS(m.f(0), ValidationError);
      CHECK_THROWS_AS(m.g(n + 1), ValidationError);
    }
  }
}

TEST_CASE("closed forms agree with the resolution engine") {
  for (const auto& ks : enumerate_nakayama(5)) {
    CAPTURE(to_string(ks));
    auto p = presentation_from_kupisch(ks);
    Analysis an(p);
    for (std::size_t j = 1; j <= ks.size(); ++j) {
      CHECK(idim_projective_closed_form(ks, j) == an.idim_projective(j - 1));
      CHECK(pdim_injective_closed_form(ks, j) == an.pdim_injective(j - 1));
    }
  }
}
