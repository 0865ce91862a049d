#include <doctest.h>

#include <functional>

#include "gorquiv/error.hpp"
#include "gorquiv/harness.hpp"
#include "support.hpp"

using namespace gorquiv;

namespace {

// Counts finite-dimensional (quiver, antichain) pairs within the bounds
// using only word manipulation.
std::size_t naive_monomial_count(std::size_t max_v, std::size_t max_a,
                                 std::size_t max_len, std::size_t max_rel) {
  std::size_t total = 0;
  for (std::size_t n = 1; n <= max_v; ++n) {
    for (std::size_t m = 0; m <= max_a; ++m) {
      std::vector<std::size_t> pick(m, 0);
      std::function<void(std::size_t, std::size_t)> arrows =
          [&](std::size_t k, std::size_t from) {
            if (k < m) {
              for (std::size_t x = from; x < n * n; ++x) {
                pick[k] = x;
                arrows(k + 1, x);
              }
              return;
            }
            Quiver q;
            for (std::size_t v = 0; v < n; ++v) {
              q.add_vertex(std::to_string(v));
            }
            for (std::size_t a = 0; a < m; ++a) {
              q.add_arrow("x" + std::to_string(a), pick[a] / n, pick[a] % n);
            }
            std::vector<std::vector<std::size_t>> cands;
            std::vector<std::vector<std::size_t>> layer;
            for (std::size_t a = 0; a < m; ++a) {
              layer.push_back({a});
            }
            for (std::size_t len = 2; len <= max_len; ++len) {
              std::vector<std::vector<std::size_t>> next;
              for (const auto& w : layer) {
                for (std::size_t a = 0; a < m; ++a) {
                  auto e = w;
                  e.push_back(a);
                  if (testing::composes(q, e)) {
                    next.push_back(e);
                    cands.push_back(e);
                  }
                }
              }
              layer = std::move(next);
            }
            // A nonzero path longer than the number of arrow words of
            // length < max_len forces a cycle, hence infinitely many paths.
            std::size_t bound = 1;
            for (std::size_t l = 0, w = 1; l + 1 < max_len; ++l) {
              w *= m;
              bound += w;
            }
            std::vector<std::vector<std::size_t>> chosen;
            std::function<void(std::size_t)> rec = [&](std::size_t from) {
              if (testing::finite_by_length(q, chosen, bound)) {
                ++total;
              }
              if (chosen.size() == max_rel) {
                return;
              }
              for (std::size_t j = from; j < cands.size(); ++j) {
                bool ok = true;
                for (const auto& c : chosen) {
                  ok = ok && !testing::has_factor(c, cands[j]) &&
                       !testing::has_factor(cands[j], c);
                }
                if (ok) {
                  chosen.push_back(cands[j]);
                  rec(j + 1);
                  chosen.pop_back();
                }
              }
            };
            rec(0);
          };
      arrows(0, 0);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("monomial enumeration count matches a naive enumerator") {
  for (auto [v, a] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 2}, {2, 3}}) {
    EnumerationBounds b;
    b.max_vertices = v;
    b.max_arrows = a;
    CAPTURE(v);
    CAPTURE(a);
    CHECK(enumerate_monomial_list(b).size() == naive_monomial_count(v, a, 3, 4));
  }
}

TEST_CASE("enumeration is deterministic and names algebras in order") {
  EnumerationBounds b;
  b.max_vertices = 2;
  b.max_arrows = 2;
  auto x = enumerate_monomial_list(b);
  auto y = enumerate_monomial_list(b);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i].name() == "M" + std::to_string(i + 1));
    CHECK(same_labeled_structure(x[i], y[i]));
  }
}

TEST_CASE("shape filters") {
  EnumerationBounds b;
  b.max_vertices = 2;
  b.max_arrows = 3;
  b.filter = ShapeFilter::gentle;
  for (const auto& p : enumerate_monomial_list(b)) {
    CHECK(is_gentle(p));
  }
  b.filter = ShapeFilter::nakayama;
  for (const auto& p : enumerate_monomial_list(b)) {
    CHECK(is_nakayama(p));
  }
}

TEST_CASE("budget guard") {
  EnumerationBounds b;  // the default bounds exceed the budget
  CHECK(estimate_monomial(b) > kEnumerationBudget);
  CHECK_THROWS_AS(enumerate_monomial(b, [](const MonomialPresentation&) {}),
                  ResourceLimitError);
  EnumerationBounds bad;
  bad.max_relation_length = 1;
  CHECK_THROWS_AS(validate(bad), ValidationError);
}

TEST_CASE("property registry") {
  CHECK(properties().size() >= 10);
  CHECK(property("nakayama-even-odd").nakayama_only);
  CHECK_FALSE(property("two-gorenstein-criterion").nakayama_only);
  CHECK_THROWS_AS(property("no-such-property"), ValidationError);
}

TEST_CASE("every property holds on the fixtures") {
  for (const char* name : {"G1", "A1", "A2", "B", "G9"}) {
    auto p = testing::fixture(name);
    auto ks = kupisch_from_presentation(p);
    for (const auto& info : properties()) {
      if (info.nakayama_only && !ks) {
        continue;
      }
      CAPTURE(name);
      CAPTURE(info.id);
      auto r = check_property(info.id, p,
                              ks ? std::optional(ks->series) : std::nullopt);
      CHECK_FALSE(r);
    }
  }
}

TEST_CASE("small exhaustive runs pass") {
  VerificationOptions opt;
  opt.bounds.max_vertices = 2;
  opt.bounds.max_arrows = 2;
  std::vector<std::string> ids;
  for (const auto& p : properties()) {
    if (!p.nakayama_only) {
      ids.push_back(p.id);
    }
  }
  for (const auto& r : verify_properties(ids, opt)) {
    CAPTURE(r.id);
    CHECK(r.pass());
    CHECK(to_json(r)["pass"] == true);
  }
  VerificationOptions nak;
  nak.nakayama_n = 4;
  auto r = verify_theorem("nakayama-closed-form", nak);
  CHECK(r.pass());
  CHECK(r.instances == enumerate_nakayama(4).size());
}

TEST_CASE("a false statement is caught with a counterexample") {
  // Closed forms of a series the presentation does not realise.
  auto p = presentation_from_kupisch(parse_kupisch("2,2,1"));
  KupischSeries wrong = parse_kupisch("3,2,1");
  auto r = check_property("nakayama-closed-form", p, wrong);
  CHECK(r);
}
