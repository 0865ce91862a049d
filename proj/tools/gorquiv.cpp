// gorquiv: command-line front end.
//
// Exit codes: 0 success / property holds, 1 counterexample found,
// 2 usage or validation error, 3 internal error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gorquiv/analysis.hpp"
#include "gorquiv/dsl.hpp"
#include "gorquiv/error.hpp"
#include "gorquiv/harness.hpp"
#include "gorquiv/modules.hpp"
#include "gorquiv/nakayama.hpp"
#include "gorquiv/resolve.hpp"
#include "gorquiv/surgery.hpp"

using namespace gorquiv;
using nlohmann::json;

namespace {

enum class Format { json, text };

VertexIndex vertex_arg(const MonomialPresentation& pres, const std::string& id) {
  auto v = pres.quiver().find_vertex(id);
  if (!v) {
    throw ValidationError("unknown vertex '" + id + "'");
  }
  return *v;
}

std::string term_string(const Quiver& q, const std::vector<std::uint64_t>& t) {
  std::string out;
  for (VertexIndex v = 0; v < t.size(); ++v) {
    for (std::uint64_t k = 0; k < t[v]; ++k) {
      out += (out.empty() ? "" : "⊕") + ("P(" + q.vertex_id(v) + ")");
    }
  }
  return out.empty() ? "0" : out;
}

std::string dim_line(const ResolutionTrace& t) {
  if (t.dimension.is_finite()) {
    return t.dimension.str();
  }
  return "infinity (preperiod=" + std::to_string(t.preperiod) +
         ", period=" + std::to_string(t.period) + ")";
}

json trace_json(const Quiver& q, const ResolutionTrace& t, std::size_t shown) {
  json terms = json::array();
  for (std::size_t i = 0; i < shown; ++i) {
    json term = json::object();
    const auto& row = t.terms[t.stored_index(i)];
    for (VertexIndex v = 0; v < row.size(); ++v) {
      if (row[v] != 0) {
        term[q.vertex_id(v)] = row[v];
      }
    }
    terms.push_back(std::move(term));
  }
  json j{{"terms", terms}, {"pdim", to_json(t.dimension)}};
  if (t.dimension.is_infinite()) {
    j["preperiod"] = t.preperiod;
    j["period"] = t.period;
  }
  return j;
}

std::size_t shown_terms(const ResolutionTrace& t, std::optional<std::size_t> k) {
  std::size_t n = t.dimension.is_finite() ? t.dimension.value() + 1
                                          : t.preperiod + t.period;
  return k ? std::min(n, *k) : n;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string profile_text(const Analysis& an) {
  const Quiver& q = an.presentation().quiver();
  auto p = an.profile();
  auto ar = an.ar_map();
  auto tg = two_gorenstein_criterion(an.presentation());
  std::ostringstream os;
  os << "algebra " << an.presentation().name() << " (dimension "
     << an.presentation().dimension() << ")\n"
     << "gor_level          " << p.gor_level << "\n"
     << "idim A_A           " << p.idim_right << "\n"
     << "idim _AA           " << p.idim_left << "\n"
     << "global dimension   " << p.global_dimension << "\n"
     << "dominant dimension " << p.dominant_dimension << "\n"
     << "Auslander-Gorenstein " << (p.is_auslander_gorenstein ? "yes" : "no")
     << ", Iwanaga-Gorenstein " << (p.is_iwanaga_gorenstein ? "yes" : "no")
     << "\n"
     << "2-Gorenstein criterion " << (tg.pass ? "pass" : "fail");
  for (const auto& f : tg.failures) {
    os << " [(" << f.condition << ") at " << f.where << "]";
  }
  os << "\nvertex  pdim I  idim P\n";
  for (VertexIndex v = 0; v < q.num_vertices(); ++v) {
    os << "  " << q.vertex_id(v) << "\t" << an.pdim_injective(v) << "\t"
       << an.idim_projective(v) << "\n";
  }
  os << "psi: ";
  if (ar.bijective) {
    os << cycle_notation(q, ar) << "\n";
  } else {
    os << (ar.well_defined ? "well-defined, not bijective" : "not well-defined")
       << "\n";
  }
  return os.str();
}

int run_analyze(const std::string& file, Format fmt, bool dot) {
  auto pres = load_presentation(file);
  if (dot) {
    std::cout << to_dot(pres);
    return 0;
  }
  Analysis an(pres);
  if (fmt == Format::text) {
    std::cout << profile_text(an);
  } else {
    print_json(analysis_report(an));
  }
  return 0;
}

int run_resolve(const std::string& file, const std::string& injective,
                const std::string& simple, std::optional<std::size_t> max_show,
                bool dump, bool linear, Format fmt) {
  auto pres = load_presentation(file);
  const Quiver& q = pres.quiver();
  Resolver res(pres);
  const bool inj = !injective.empty();
  VertexIndex x = vertex_arg(pres, inj ? injective : simple);
  ResolutionTrace t = inj ? (linear ? res.resolve_injective_linear(x, 4096)
                                    : res.resolve_injective(x))
                          : res.resolve_simple(x);
  std::size_t shown = shown_terms(t, max_show);
  if (fmt == Format::text) {
    for (std::size_t i = 0; i < shown; ++i) {
      std::cout << "P_" << i << " = " << term_string(q, t.terms[t.stored_index(i)])
                << "\n";
    }
    std::cout << "pdim " << (inj ? "I(" : "S(") << q.vertex_id(x)
              << ") = " << dim_line(t) << "\n";
  }
  json j = trace_json(q, t, shown);
  j["module"] = (inj ? "I(" : "S(") + q.vertex_id(x) + ")";
  if (dump) {
    Representation m = inj ? gorquiv::injective(pres, x) : gorquiv::simple(pres, x);
    j["module_representation"] = representation_to_json(m, q);
    j["first_syzygy"] = representation_to_json(syzygy(pres, m), q);
    if (fmt == Format::text) {
      print_json({{"module_representation", j["module_representation"]},
                  {"first_syzygy", j["first_syzygy"]}});
    }
  }
  if (fmt == Format::json) {
    print_json(j);
  }
  return 0;
}

int run_nakayama(const std::string& kupisch, bool profile, Format fmt) {
  KupischSeries ks = parse_kupisch(kupisch);
  validate(ks);
  auto pres = presentation_from_kupisch(ks);
  if (!profile) {
    if (fmt == Format::text) {
      std::cout << serialize(pres);
    } else {
      print_json({{"kupisch", to_string(ks)}, {"presentation", serialize(pres)}});
    }
    return 0;
  }
  IntervalMaps maps(ks);
  Analysis an(pres);
  json rows = json::array();
  for (std::size_t j = 1; j <= ks.size(); ++j) {
    auto jj = static_cast<long long>(j);
    rows.push_back({{"j", j},
                    {"c", ks.c[j - 1]},
                    {"d", maps.co_kupisch()[j - 1]},
                    {"f", maps.f(jj)},
                    {"g", maps.g(jj)},
                    {"idim_projective", to_json(maps.idim_projective(j))},
                    {"pdim_injective", to_json(maps.pdim_injective(j))}});
  }
  if (fmt == Format::text) {
    std::cout << to_string(ks) << "\n j  c  d  f  g  idim P  pdim I\n";
    for (const auto& r : rows) {
      std::cout << " " << r["j"] << "  " << r["c"] << "  " << r["d"] << "  "
                << r["f"] << "  " << r["g"] << "  "
                << (r["idim_projective"].is_string()
                        ? r["idim_projective"].get<std::string>()
                        : r["idim_projective"].dump())
                << "  "
                << (r["pdim_injective"].is_string()
                        ? r["pdim_injective"].get<std::string>()
                        : r["pdim_injective"].dump())
                << "\n";
    }
    std::cout << profile_text(an);
  } else {
    print_json({{"kupisch", to_string(ks)},
                {"table", rows},
                {"report", analysis_report(an)}});
  }
  return 0;
}

CutLabeling parse_labeling(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    parts.push_back(item);
  }
  if (parts.size() != 4) {
    throw ValidationError("labeling must be a1,a2,b1,b2");
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

int run_cut(const std::string& file, const std::string& vertex,
            const std::string& labeling, Format fmt) {
  auto pres = load_presentation(file);
  VertexIndex v = vertex_arg(pres, vertex);
  CutResult r = labeling.empty() ? cut(pres, v)
                                 : cut(pres, v, parse_labeling(labeling));
  if (fmt == Format::text) {
    std::cout << serialize(r.presentation) << "\n";
    print_json(to_json(r.trace));
  } else {
    print_json({{"presentation", serialize(r.presentation)},
                {"trace", to_json(r.trace)}});
  }
  return 0;
}

int run_glue(const std::string& file, const std::vector<std::string>& vs,
             const std::string& name, Format fmt) {
  auto pres = load_presentation(file);
  auto g = glue(pres, vertex_arg(pres, vs[0]), vertex_arg(pres, vs[1]), name);
  if (fmt == Format::text) {
    std::cout << serialize(g);
  } else {
    print_json({{"presentation", serialize(g)}});
  }
  return 0;
}

int run_reduce(const std::string& file, Format fmt) {
  auto pres = load_presentation(file);
  auto red = reduce_to_nakayama(pres);
  if (!red) {
    auto tg = two_gorenstein_criterion(pres);
    json failures = json::array();
    for (const auto& f : tg.failures) {
      failures.push_back({{"condition", f.condition}, {"at", f.where}});
    }
    if (fmt == Format::text) {
      std::cout << "not 2-Gorenstein; no reduction\n";
    } else {
      print_json({{"applicable", false}, {"failures", failures}});
    }
    return 0;
  }
  json comps = json::array();
  for (std::size_t i = 0; i < red->components.size(); ++i) {
    comps.push_back({{"presentation", serialize(red->components[i])},
                     {"kupisch", to_string(red->series[i].series)}});
  }
  if (fmt == Format::text) {
    std::cout << serialize(red->result) << "\n";
    for (const auto& c : comps) {
      std::cout << "component " << c["kupisch"].get<std::string>() << "\n";
    }
    print_json(to_json(red->trace));
  } else {
    print_json({{"applicable", true},
                {"presentation", serialize(red->result)},
                {"components", comps},
                {"trace", to_json(red->trace)}});
  }
  return 0;
}

struct BoundsArgs {
  std::size_t vertices = 3;
  std::size_t arrows = 4;
  std::size_t rel_len = 3;
  std::size_t rel_count = 4;
  std::string filter = "any";
  std::optional<std::size_t> nakayama_n;
};

EnumerationBounds to_bounds(const BoundsArgs& a) {
  EnumerationBounds b;
  b.max_vertices = a.vertices;
  b.max_arrows = a.arrows;
  b.max_relation_length = a.rel_len;
  b.max_relations = a.rel_count;
  b.filter = a.filter == "gentle"     ? ShapeFilter::gentle
             : a.filter == "nakayama" ? ShapeFilter::nakayama
                                      : ShapeFilter::any;
  validate(b);
  return b;
}

void add_bounds(CLI::App* cmd, BoundsArgs& a) {
  cmd->add_option("--vertices", a.vertices, "maximum number of vertices")
      ->capture_default_str();
  cmd->add_option("--arrows", a.arrows, "maximum number of arrows")
      ->capture_default_str();
  cmd->add_option("--rel-len", a.rel_len, "maximum relation length")
      ->capture_default_str();
  cmd->add_option("--rel-count", a.rel_count, "maximum number of relations")
      ->capture_default_str();
  cmd->add_option("--filter", a.filter, "any, gentle or nakayama")
      ->check(CLI::IsMember({"any", "gentle", "nakayama"}))
      ->capture_default_str();
  cmd->add_option("--nakayama-N", a.nakayama_n,
                  "use the Nakayama census up to N vertices instead");
}

int run_verify(const std::vector<std::string>& requested, const BoundsArgs& ba,
               bool force, unsigned threads, std::size_t max_cex, Format fmt) {
  VerificationOptions opt;
  opt.bounds = to_bounds(ba);
  opt.nakayama_n = ba.nakayama_n;
  opt.force = force;
  opt.threads = threads;
  opt.max_counterexamples = max_cex;
  std::vector<std::string> ids;
  for (const auto& id : requested) {
    if (id == "all") {
      for (const auto& p : properties()) {
        if (!p.nakayama_only || opt.nakayama_n) {
          ids.push_back(p.id);
        }
      }
    } else {
      property(id);
      ids.push_back(id);
    }
  }
  auto reports = verify_properties(ids, opt);
  bool ok = true;
  json out = json::array();
  for (const auto& r : reports) {
    ok = ok && r.pass();
    if (fmt == Format::text) {
      std::cout << (r.pass() ? "PASS " : "FAIL ") << r.id << "  instances "
                << r.instances << "  violations " << r.violations << "  "
                << r.seconds << " s\n";
      for (const auto& c : r.counterexamples) {
        std::cout << "  " << c.detail << "\n" << c.presentation << "\n";
      }
    } else {
      out.push_back(to_json(r));
    }
  }
  if (fmt == Format::json) {
    print_json(out.size() == 1 ? out[0] : out);
  }
  return ok ? 0 : 1;
}

int run_enumerate(const BoundsArgs& ba, bool count, bool force, Format fmt) {
  if (ba.nakayama_n) {
    auto all = enumerate_nakayama(*ba.nakayama_n);
    if (count) {
      print_json({{"count", all.size()}});
      return 0;
    }
    json list = json::array();
    for (const auto& ks : all) {
      if (fmt == Format::text) {
        std::cout << to_string(ks) << "\n";
      }
      list.push_back(to_string(ks));
    }
    if (fmt == Format::json) {
      print_json(list);
    }
    return 0;
  }
  EnumerationBounds b = to_bounds(ba);
  std::uint64_t n = 0;
  json list = json::array();
  enumerate_monomial(
      b,
      [&](const MonomialPresentation& p) {
        ++n;
        if (count) {
          return;
        }
        if (fmt == Format::text) {
          std::cout << serialize(p) << "\n";
        } else {
          list.push_back(serialize(p));
        }
      },
      force);
  if (count) {
    print_json({{"count", n}});
  } else if (fmt == Format::json) {
    print_json(list);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological invariants of finite-dimensional monomial algebras"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  std::string file;
  bool dot = false;
  auto* analyze = app.add_subcommand("analyze", "Gorenstein profile and AR map");
  analyze->add_option("file", file, "presentation file")->required();
  analyze->add_flag("--dot", dot, "print a Graphviz digraph instead");

  std::string injective;
  std::string simple;
  std::optional<std::size_t> max_show;
  bool dump = false;
  bool linear = false;
  auto* resolve = app.add_subcommand("resolve", "minimal projective resolution");
  resolve->add_option("file", file, "presentation file")->required();
  auto* inj_opt = resolve->add_option("--injective", injective, "resolve I(x)");
  auto* sim_opt = resolve->add_option("--simple", simple, "resolve S(x)");
  inj_opt->excludes(sim_opt);
  resolve->add_option("--max-show", max_show, "print at most k terms");
  resolve->add_flag("--dump", dump, "dump the module and its first syzygy");
  resolve->add_flag("--linear", linear, "use the pure linear-algebra engine");

  std::string kupisch;
  bool profile = false;
  auto* nakayama = app.add_subcommand("nakayama", "Nakayama algebra from a Kupisch series");
  nakayama->add_option("--kupisch", kupisch, "\"c1,c2,...[,cyclic|linear]\"")
      ->required();
  nakayama->add_flag("--profile", profile, "print f/g tables and the profile");

  std::string vertex;
  std::string labeling;
  auto* cutcmd = app.add_subcommand("cut", "cut a degree-4 vertex");
  cutcmd->add_option("file", file, "presentation file")->required();
  cutcmd->add_option("--vertex", vertex, "vertex to cut")->required();
  cutcmd->add_option("--labeling", labeling, "a1,a2,b1,b2 (default: first valid)");

  std::vector<std::string> glue_vertices;
  std::string glue_name;
  auto* gluecmd = app.add_subcommand("glue", "merge two vertices");
  gluecmd->add_option("file", file, "presentation file")->required();
  gluecmd->add_option("--vertices", glue_vertices, "two vertex ids")
      ->required()
      ->expected(2);
  gluecmd->add_option("--name", glue_name, "id of the merged vertex")->required();

  auto* reduce = app.add_subcommand("reduce", "cut down to Nakayama components");
  reduce->add_option("file", file, "presentation file")->required();

  std::vector<std::string> ids;
  BoundsArgs bounds;
  bool force = false;
  unsigned threads = 0;
  std::size_t max_cex = 10;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "exhaustive property check");
  verify->add_option("ids", ids, "property ids, or 'all'");
  verify->add_flag("--list", list, "list the property ids");
  add_bounds(verify, bounds);
  verify->add_flag("--force", force, "ignore the enumeration budget");
  verify->add_option("--threads", threads, "worker threads (0 = all cores)");
  verify->add_option("--max-counterexamples", max_cex, "stored per property")
      ->capture_default_str();

  bool count = false;
  auto* enumerate = app.add_subcommand("enumerate", "list enumerated algebras");
  add_bounds(enumerate, bounds);
  enumerate->add_flag("--count", count, "only print the number");
  enumerate->add_flag("--force", force, "ignore the enumeration budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const Format fmt = format == "text" ? Format::text : Format::json;

  try {
    if (analyze->parsed()) {
      return run_analyze(file, fmt, dot);
    }
    if (resolve->parsed()) {
      if (injective.empty() && simple.empty()) {
        std::cerr << "resolve: one of --injective or --simple is required\n";
        return 2;
      }
      return run_resolve(file, injective, simple, max_show, dump, linear, fmt);
    }
    if (nakayama->parsed()) {
      return run_nakayama(kupisch, profile, fmt);
    }
    if (cutcmd->parsed()) {
      return run_cut(file, vertex, labeling, fmt);
    }
    if (gluecmd->parsed()) {
      return run_glue(file, glue_vertices, glue_name, fmt);
    }
    if (reduce->parsed()) {
      return run_reduce(file, fmt);
    }
    if (verify->parsed()) {
      if (list) {
        json out = json::array();
        for (const auto& p : properties()) {
          out.push_back({{"id", p.id},
                         {"statement", p.statement},
                         {"nakayama_only", p.nakayama_only}});
        }
        print_json(out);
        return 0;
      }
      if (ids.empty()) {
        std::cerr << "verify: give a property id, 'all' or --list\n";
        return 2;
      }
      return run_verify(ids, bounds, force, threads, max_cex, fmt);
    }
    if (enumerate->parsed()) {
      return run_enumerate(bounds, count, force, fmt);
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
