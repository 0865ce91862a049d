#include "gorquiv/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "gorquiv/error.hpp"

namespace gorquiv {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Splits a line into identifiers, ":" and "->". Stops at '#'.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') {
      break;
    }
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (c == ':') {
      out.push_back({":", i + 1});
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({"->", i + 1});
      i += 2;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !is_space(line[i]) && line[i] != ':' &&
           line[i] != '#' &&
           !(line[i] == '-' && i + 1 < line.size() && line[i + 1] == '>')) {
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool is_identifier(const Token& t) { return t.text != ":" && t.text != "->"; }

struct PendingRelation {
  std::vector<Token> words;
  std::size_t line;
};

}  // namespace

MonomialPresentation parse_presentation(std::string_view text) {
  std::string name = "A";
  bool have_name = false;
  Quiver q;
  std::vector<PendingRelation> relations;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    pos = end + 1;
    ++line_no;

    auto toks = tokenize(line);
    if (toks.empty()) {
      continue;
    }
    const Token& kw = toks[0];
    auto expect_ident = [&](std::size_t i, const char* what) -> const Token& {
      if (i >= toks.size()) {
        throw ParseError(line_no, line.size() + 1,
                         std::string("expected ") + what);
      }
      if (!is_identifier(toks[i])) {
        throw ParseError(line_no, toks[i].column,
                         std::string("expected ") + what + ", got '" +
                             toks[i].text + "'");
      }
      return toks[i];
    };
    auto expect_end = [&](std::size_t i) {
      if (i < toks.size()) {
        throw ParseError(line_no, toks[i].column,
                         "unexpected '" + toks[i].text + "'");
      }
    };

    if (kw.text == "algebra") {
      if (have_name) {
        throw ParseError(line_no, kw.column, "duplicate 'algebra' line");
      }
      name = expect_ident(1, "algebra name").text;
      expect_end(2);
      have_name = true;
    } else if (kw.text == "vertices") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const Token& t = expect_ident(i, "vertex id");
        if (q.find_vertex(t.text)) {
          throw ValidationError("line " + std::to_string(line_no) +
                                ": duplicate vertex id '" + t.text + "'");
        }
        q.add_vertex(t.text);
      }
    } else if (kw.text == "arrow") {
      const Token& id = expect_ident(1, "arrow id");
      if (toks.size() < 3 || toks[2].text != ":") {
        throw ParseError(line_no,
                         toks.size() < 3 ? line.size() + 1 : toks[2].column,
                         "expected ':' after arrow id");
      }
      const Token& src = expect_ident(3, "source vertex");
      if (toks.size() < 5 || toks[4].text != "->") {
        throw ParseError(line_no,
                         toks.size() < 5 ? line.size() + 1 : toks[4].column,
                         "expected '->'");
      }
      const Token& tgt = expect_ident(5, "target vertex");
      expect_end(6);
      for (const Token* t : {&src, &tgt}) {
        if (!q.find_vertex(t->text)) {
          throw ValidationError("line " + std::to_string(line_no) +
                                ", column " + std::to_string(t->column) +
                                ": unknown vertex '" + t->text + "'");
        }
      }
      if (q.find_arrow(id.text)) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": duplicate arrow id '" + id.text + "'");
      }
      q.add_arrow(id.text, src.text, tgt.text);
    } else if (kw.text == "relation") {
      PendingRelation r{{}, line_no};
      for (std::size_t i = 1; i < toks.size(); ++i) {
        r.words.push_back(expect_ident(i, "arrow id"));
      }
      if (r.words.empty()) {
        throw ParseError(line_no, line.size() + 1, "empty relation");
      }
      relations.push_back(std::move(r));
    } else {
      throw ParseError(line_no, kw.column, "unknown keyword '" + kw.text + "'");
    }
    if (end == text.size()) {
      break;
    }
  }

  // Relations may mention arrows declared later in the file.
  std::vector<Path> gens;
  for (const auto& r : relations) {
    std::vector<ArrowIndex> idx;
    for (const auto& t : r.words) {
      auto a = q.find_arrow(t.text);
      if (!a) {
        throw ValidationError("line " + std::to_string(r.line) + ", column " +
                              std::to_string(t.column) + ": unknown arrow '" +
                              t.text + "'");
      }
      idx.push_back(*a);
    }
    try {
      gens.push_back(q.make_path(idx));
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(r.line) + ": " + e.what());
    }
  }
  return MonomialPresentation(name, std::move(q), std::move(gens));
}

MonomialPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open '" + path + "'");
  }
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, e.byte, e.what());
    }
    return presentation_from_json(j);
  }
  return parse_presentation(text);
}

std::string serialize(const MonomialPresentation& pres) {
  const Quiver& q = pres.quiver();
  std::ostringstream os;
  os << "algebra " << pres.name() << "\n";
  os << "vertices";
  for (const auto& v : q.vertex_ids()) {
    os << ' ' << v;
  }
  os << "\n";
  for (const auto& a : q.arrows()) {
    os << "arrow " << a.id << ": " << q.vertex_id(a.source) << " -> "
       << q.vertex_id(a.target) << "\n";
  }
  for (const auto& g : pres.generators()) {
    os << "relation " << q.format(g) << "\n";
  }
  return os.str();
}

nlohmann::json to_json(const MonomialPresentation& pres) {
  const Quiver& q = pres.quiver();
  nlohmann::json j;
  j["name"] = pres.name();
  j["vertices"] = q.vertex_ids();
  j["arrows"] = nlohmann::json::array();
  for (const auto& a : q.arrows()) {
    j["arrows"].push_back({{"id", a.id},
                           {"src", q.vertex_id(a.source)},
                           {"tgt", q.vertex_id(a.target)}});
  }
  j["relations"] = nlohmann::json::array();
  for (const auto& g : pres.generators()) {
    j["relations"].push_back(q.arrow_ids(g));
  }
  return j;
}

MonomialPresentation presentation_from_json(const nlohmann::json& j) {
  try {
    Quiver q;
    for (const auto& v : j.at("vertices")) {
      q.add_vertex(v.get<std::string>());
    }
    for (const auto& a : j.at("arrows")) {
      q.add_arrow(a.at("id").get<std::string>(), a.at("src").get<std::string>(),
                  a.at("tgt").get<std::string>());
    }
    std::vector<Path> gens;
    if (j.contains("relations")) {
      for (const auto& r : j.at("relations")) {
        gens.push_back(q.make_path(r.get<std::vector<std::string>>()));
      }
    }
    return MonomialPresentation(j.value("name", std::string("A")), std::move(q),
                                std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed presentation JSON: ") +
                          e.what());
  }
}

namespace {
std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string to_dot(const MonomialPresentation& pres) {
  const Quiver& q = pres.quiver();
  std::vector<std::string> vs = q.vertex_ids();
  std::sort(vs.begin(), vs.end());
  std::vector<const Arrow*> as;
  for (const auto& a : q.arrows()) {
    as.push_back(&a);
  }
  std::sort(as.begin(), as.end(),
            [](const Arrow* x, const Arrow* y) { return x->id < y->id; });

  std::ostringstream os;
  os << "digraph " << dot_quote(pres.name()) << " {\n";
  for (const auto& v : vs) {
    os << "  " << dot_quote(v) << ";\n";
  }
  for (const Arrow* a : as) {
    os << "  " << dot_quote(q.vertex_id(a->source)) << " -> "
       << dot_quote(q.vertex_id(a->target)) << " [label=" << dot_quote(a->id)
       << "];\n";
  }
  for (const auto& r : pres.minimal_relations()) {
    os << "  // relation: " << q.format(r) << "\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace gorquiv
