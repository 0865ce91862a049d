// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runtime limits are pinned below in seconds.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gorquiv/analysis.hpp"
#include "gorquiv/dsl.hpp"
#include "gorquiv/harness.hpp"
#include "gorquiv/modules.hpp"
#include "gorquiv/nakayama.hpp"
#include "gorquiv/surgery.hpp"

using namespace gorquiv;

namespace {

constexpr double kRegressionLimit = 1.0;
constexpr double kNakayamaRemarkLimit = 5.0;
constexpr double kNakayamaSuiteLimit = 600.0;
constexpr double kMonomialSuiteLimit = 3600.0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

MonomialPresentation fixture(const std::string& name) {
  return load_presentation(std::string(GORQUIV_FIXTURES) + "/" + name +
                           ".quiver");
}

// Collects mismatches of one criterion.
class Check {
 public:
  template <typename A, typename B>
  void eq(const std::string& what, const A& got, const B& want) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", expected " << want;
      problems_.push_back(os.str());
    }
  }
  void that(const std::string& what, bool ok) {
    if (!ok) {
      problems_.push_back(what);
    }
  }
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

bool report(int number, const std::string& title, const Check& c,
            double seconds, double limit) {
  bool ok = c.problems().empty() && seconds < limit;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": "
            << title << " (" << seconds << " s, limit " << limit << " s)";
  for (const auto& p : c.problems()) {
    std::cout << "\n        " << p;
  }
  if (seconds >= limit) {
    std::cout << "\n        runtime limit exceeded";
  }
  std::cout << std::endl;
  return ok;
}

std::string psi(const Analysis& an) {
  auto ar = an.ar_map();
  if (!ar.bijective) {
    return ar.well_defined ? "not bijective" : "not well-defined";
  }
  return cycle_notation(an.presentation().quiver(), ar);
}

VertexIndex vx(const MonomialPresentation& p, const std::string& id) {
  return p.quiver().vertex(id);
}

void add_reports(Check& c, const std::vector<VerificationReport>& reps,
                 const std::vector<std::string>& ids) {
  for (const auto& r : reps) {
    if (std::find(ids.begin(), ids.end(), r.id) == ids.end()) {
      continue;
    }
    std::ostringstream os;
    os << r.id << ": " << r.violations << " violations in " << r.instances
       << " instances";
    if (!r.counterexamples.empty()) {
      os << "; first: " << r.counterexamples[0].detail << " on\n"
         << r.counterexamples[0].presentation;
    }
    c.that(os.str(), r.pass());
    c.that(r.id + ": no algebra in scope", r.instances > 0);
  }
}

}  // namespace

int main() {
  bool all = true;

  {
    auto t0 = Clock::now();
    Check c;
    auto p = fixture("G1");
    Analysis an(p);
    c.eq("pdim I(3)", an.pdim_injective(vx(p, "3")), Dim(0));
    c.eq("pdim I(2)", an.pdim_injective(vx(p, "2")), Dim(1));
    c.eq("pdim I(1)", an.pdim_injective(vx(p, "1")), Dim(2));
    c.eq("gor_level", an.gor_level(), Dim::infinity());
    c.that("Auslander-Gorenstein", an.profile().is_auslander_gorenstein);
    c.eq("psi", psi(an), std::string("(1 3)(2)"));
    all &= report(1, "G1 regression", c, since(t0), kRegressionLimit);
  }

  {
    auto t0 = Clock::now();
    Check c;
    auto a1 = fixture("A1");
    Analysis an1(a1);
    c.that("A1 is not 2-Gorenstein", !an1.is_n_gorenstein(2));
    auto omega = first_syzygy_injective(a1, vx(a1, "1"));
    std::vector<std::size_t> s2(3, 0);
    s2[vx(a1, "2")] = 1;
    c.that("Omega I(1) is S(2)", omega.dims == s2);
    auto tg = two_gorenstein_criterion(a1);
    c.that("A1 criterion fails only at condition (4), arrow c",
           !tg.pass && tg.failures.size() == 1 &&
               tg.failures[0].condition == 4 && tg.failures[0].where == "c");
    auto a2 = fixture("A2");
    Analysis an2(a2);
    c.that("A2 is 2-Gorenstein", an2.is_n_gorenstein(2));
    c.that("A2 criterion passes", two_gorenstein_criterion(a2).pass);
    c.eq("A2 pdim I(2)", an2.pdim_injective(vx(a2, "2")), Dim(0));
    c.eq("A2 pdim I(v)", an2.pdim_injective(vx(a2, "v")), Dim(1));
    all &= report(2, "A1/A2 2-Gorenstein regression", c, since(t0),
                  kRegressionLimit);
  }

  {
    auto t0 = Clock::now();
    Check c;
    auto a = fixture("A2");
    auto b = fixture("B");
    auto cut_a = cut(a, vx(a, "v"));
    c.that("cut(A2, v) equals B",
           same_labeled_structure(cut_a.presentation, b));
    Analysis an_a(a);
    Analysis an_b(cut_a.presentation);
    c.that("A2 Auslander-Gorenstein", an_a.profile().is_auslander_gorenstein);
    c.that("B Auslander-Gorenstein", an_b.profile().is_auslander_gorenstein);
    c.eq("psi_A", psi(an_a), std::string("(1 2)(v)"));
    c.eq("psi_B", psi(an_b), std::string("(1)(2 v_1)(v_2)"));
    Dim pa = an_a.pdim_injective(vx(a, "1"));
    Dim pb = an_b.pdim_injective(vx(cut_a.presentation, "1"));
    c.eq("pdim_A I(1) vs pdim_B I(1)", pa, pb);
    std::cout << "      recorded pdim I(1) = " << pa << "\n";
    all &= report(3, "A2 cut regression", c, since(t0), kRegressionLimit);
  }

  {
    auto t0 = Clock::now();
    Check c;
    for (std::size_t n = 1; n <= 3; ++n) {
      KupischSeries ks{KupischShape::cyclic,
                       std::vector<std::size_t>(3 * (n + 1), 3)};
      ks.c[0] = 2;
      auto p = presentation_from_kupisch(ks);
      Analysis an(p);
      const std::string tag = "n=" + std::to_string(n) + " ";
      c.eq(tag + "gor_level", an.gor_level(), Dim(2 * n + 1));
      c.that(tag + "idim P(1) infinite",
             an.idim_projective(vx(p, "1")).is_infinite());
      c.that(tag + "pdim I(3) infinite",
             an.pdim_injective(vx(p, "3")).is_infinite());
    }
    all &= report(4, "cyclic [2,3,...,3] Gorenstein level", c, since(t0),
                  kNakayamaRemarkLimit);
  }

  {
    auto t0 = Clock::now();
    Check c;
    auto p = fixture("G9");
    Analysis an(p);
    c.that("gentle", is_gentle(p));
    c.that("degree criterion", gentle_ag_criterion(p));
    const std::string want = "(1 4 2)(3)(5)(6)(7 8 9)";
    c.eq("psi from resolutions", psi(an), want);
    c.eq("psi from the quiver",
         cycle_notation(p.quiver(), gentle_ar_formula(p)), want);
    all &= report(5, "G9 regression", c, since(t0), kRegressionLimit);
  }

  const std::vector<std::string> nakayama_ids = {
      "nakayama-closed-form", "nakayama-even-odd",     "nakayama-ar-bijection",
      "nakayama-two-gorenstein", "nakayama-finitistic", "nakayama-interval"};
  const std::vector<std::string> monomial_ids = {
      "two-gorenstein-criterion", "two-gorenstein-string",
      "monomial-ar-bijection",    "monomial-even-odd",
      "opposite-symmetry",        "iwanaga-bound"};
  const std::vector<std::string> gentle_ids = {
      "gentle-ag-degree", "gentle-1gor-degree", "gentle-ar-formula"};
  const std::vector<std::string> cut_ids = {"cut-invariance",
                                            "cut-resolution-matching"};
  const std::vector<std::string> oracle_ids = {"oracle-equivalence"};

  // Criterion 6, plus the oracle on the Nakayama census for criterion 10.
  VerificationOptions nak;
  nak.nakayama_n = 6;
  std::vector<std::string> nak_run = nakayama_ids;
  nak_run.push_back("oracle-equivalence");
  auto t6 = Clock::now();
  auto nak_reports = verify_properties(nak_run, nak);
  double nak_seconds = since(t6);
  {
    Check c;
    add_reports(c, nak_reports, nakayama_ids);
    all &= report(6, "exhaustive Nakayama suite, N <= 6", c, nak_seconds,
                  kNakayamaSuiteLimit);
  }

  // Criteria 7-10 share one pass over the monomial class.
  VerificationOptions mono;
  mono.force = true;  // the default bounds exceed the candidate budget
  std::vector<std::string> mono_run;
  for (const auto* ids : {&monomial_ids, &gentle_ids, &cut_ids, &oracle_ids}) {
    mono_run.insert(mono_run.end(), ids->begin(), ids->end());
  }
  auto t7 = Clock::now();
  auto mono_reports = verify_properties(mono_run, mono);
  double mono_seconds = since(t7);
  std::map<std::string, double> per_id;
  for (const auto& r : mono_reports) {
    per_id[r.id] = r.seconds;
  }
  auto share = [&](const std::vector<std::string>& ids) {
    double s = 0;
    for (const auto& id : ids) {
      s += per_id[id];
    }
    return s;
  };
  {
    Check c;
    add_reports(c, mono_reports, monomial_ids);
    all &= report(7, "exhaustive monomial suite", c, mono_seconds,
                  kMonomialSuiteLimit);
  }
  {
    Check c;
    add_reports(c, mono_reports, gentle_ids);
    all &= report(8, "exhaustive gentle suite", c, share(gentle_ids),
                  kMonomialSuiteLimit);
  }
  {
    Check c;
    add_reports(c, mono_reports, cut_ids);
    all &= report(9, "cutting suite", c, share(cut_ids), kMonomialSuiteLimit);
  }
  {
    Check c;
    add_reports(c, mono_reports, oracle_ids);
    add_reports(c, nak_reports, oracle_ids);
    all &= report(10, "linear engine = hybrid engine", c,
                  per_id["oracle-equivalence"], kMonomialSuiteLimit);
  }

  std::cout << (all ? "all criteria pass" : "some criteria fail") << std::endl;
  return all ? 0 : 1;
}
