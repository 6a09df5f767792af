#include "qreg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace qreg {

namespace {

using PEK = PresentationErrorKind;

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

bool divisible_by(const mpz_class& z, long long p) {
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

// shared by validate() and the parser (the parser wraps errors with a line number)
Relation normalize_relation(const Quiver& q, const Relation& raw, const FieldSpec& field) {
  std::vector<RelTerm> kept;
  for (const auto& term : raw.terms) {
    if (term.arrows.empty()) {
      throw PresentationError(PEK::relation_degree_too_low, "relation term has no arrows");
    }
    for (int ai : term.arrows) {
      if (ai < 0 || ai >= static_cast<int>(q.arrows.size())) {
        throw PresentationError(PEK::non_composable_path, "relation term uses an unknown arrow");
      }
    }
    for (std::size_t k = 0; k + 1 < term.arrows.size(); ++k) {
      if (q.arrows[term.arrows[k]].tgt != q.arrows[term.arrows[k + 1]].src) {
        throw PresentationError(
            PEK::non_composable_path,
            "path " + q.arrows[term.arrows[k]].name + "." + q.arrows[term.arrows[k + 1]].name +
                " is not composable");
      }
    }
    mpq_class c = term.coeff;
    c.canonicalize();
    if (!field.is_rational() && divisible_by(c.get_den(), field.p)) {
      throw PresentationError(PEK::bad_coefficient,
                              "coefficient denominator vanishes mod " + std::to_string(field.p));
    }
    bool zero = field.is_rational() ? sgn(c) == 0 : divisible_by(c.get_num(), field.p);
    if (zero) continue;
    RelTerm t;
    t.coeff = c;
    t.arrows = term.arrows;
    kept.push_back(std::move(t));
  }
  if (kept.empty()) return Relation{};  // caller drops it

  auto endpoints = [&](const std::vector<int>& arrows) {
    int src = q.arrows[arrows.front()].src;
    int tgt = q.arrows[arrows.back()].tgt;
    int deg = 0;
    for (int ai : arrows) deg += q.arrows[ai].deg;
    return std::tuple<int, int, int>{src, tgt, deg};
  };

  auto [src0, tgt0, deg0] = endpoints(kept.front().arrows);
  for (const auto& t : kept) {
    auto [s, g, d] = endpoints(t.arrows);
    if (d != deg0) {
      throw PresentationError(PEK::inhomogeneous_relation,
                              "relation mixes terms of degrees " + std::to_string(deg0) + " and " +
                                  std::to_string(d));
    }
    if (s != src0 || g != tgt0) {
      throw PresentationError(PEK::non_uniform_relation,
                              "relation mixes terms with different endpoints");
    }
  }
  if (deg0 < 2) {
    throw PresentationError(PEK::relation_degree_too_low,
                            "relation degree " + std::to_string(deg0) + " is below 2");
  }

  std::map<std::vector<int>, mpq_class> combined;
  for (auto& t : kept) combined[t.arrows] += t.coeff;

  Relation out;
  out.src = src0;
  out.tgt = tgt0;
  out.deg = deg0;
  for (auto& [arrows, c] : combined) {
    c.canonicalize();
    bool zero = field.is_rational() ? sgn(c) == 0 : divisible_by(c.get_num(), field.p);
    if (zero) continue;
    out.terms.push_back(RelTerm{c, arrows});
  }
  if (out.terms.empty()) return Relation{};
  mpq_class lead = out.terms.front().coeff;
  for (auto& t : out.terms) {
    t.coeff /= lead;
    t.coeff.canonicalize();
  }
  return out;
}

}  // namespace

bool path_lex_less(const Path& a, const Path& b) {
  return std::lexicographical_compare(a.arrows.begin(), a.arrows.end(), b.arrows.begin(),
                                      b.arrows.end());
}

Path concat(const Quiver& q, const Path& a, const Path& b) {
  (void)q;
  if (a.tgt != b.src) {
    throw PresentationError(PEK::non_composable_path, "paths are not composable");
  }
  Path out;
  out.src = a.src;
  out.tgt = b.tgt;
  out.deg = a.deg + b.deg;
  out.arrows = a.arrows;
  out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
  return out;
}

Presentation validate(Presentation p) {
  if (p.quiver.vertices < 1) {
    throw PresentationError(PEK::bad_vertex_index, "the quiver needs at least one vertex");
  }
  std::set<std::string> names;
  for (const auto& a : p.quiver.arrows) {
    if (!is_identifier(a.name)) {
      throw PresentationError(PEK::parse, "arrow name '" + a.name + "' is not an identifier");
    }
    if (!names.insert(a.name).second) {
      throw PresentationError(PEK::duplicate_arrow_name, "duplicate arrow name '" + a.name + "'");
    }
    if (a.src < 0 || a.src >= p.quiver.vertices || a.tgt < 0 || a.tgt >= p.quiver.vertices) {
      throw PresentationError(PEK::bad_vertex_index,
                              "arrow '" + a.name + "' touches a vertex out of range");
    }
    if (a.deg < 1) {
      throw PresentationError(PEK::degree_zero_arrow,
                              "arrow '" + a.name + "' must have positive degree");
    }
  }
  if (!p.field.is_rational()) FieldSpec::prime(p.field.p);

  std::vector<Relation> rels;
  std::set<std::pair<std::vector<std::pair<std::vector<int>, std::string>>, int>> seen;
  for (const auto& raw : p.relations) {
    Relation r = normalize_relation(p.quiver, raw, p.field);
    if (r.terms.empty()) continue;
    std::vector<std::pair<std::vector<int>, std::string>> key;
    for (const auto& t : r.terms) key.emplace_back(t.arrows, t.coeff.get_str());
    if (!seen.insert({key, r.src}).second) continue;
    rels.push_back(std::move(r));
  }
  p.relations = std::move(rels);
  return p;
}

namespace {

void enumerate_rec(const Quiver& q, int deg, int tgt, Path& cur, std::vector<Path>& out) {
  if (cur.deg == deg) {
    if (cur.tgt == tgt) out.push_back(cur);
    return;
  }
  for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
    const Arrow& ar = q.arrows[a];
    if (ar.src != cur.tgt || cur.deg + ar.deg > deg) continue;
    cur.arrows.push_back(a);
    cur.deg += ar.deg;
    int save = cur.tgt;
    cur.tgt = ar.tgt;
    enumerate_rec(q, deg, tgt, cur, out);
    cur.tgt = save;
    cur.deg -= ar.deg;
    cur.arrows.pop_back();
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const Quiver& q, int deg, int src, int tgt) {
  std::vector<Path> out;
  if (deg < 0 || src < 0 || src >= q.vertices || tgt < 0 || tgt >= q.vertices) return out;
  Path cur;
  cur.src = src;
  cur.tgt = src;
  cur.deg = 0;
  enumerate_rec(q, deg, tgt, cur, out);
  return out;
}

Presentation opposite(const Presentation& p) {
  Presentation out;
  out.field = p.field;
  out.quiver.vertices = p.quiver.vertices;
  for (const auto& a : p.quiver.arrows) {
    out.quiver.arrows.push_back(Arrow{a.name, a.tgt, a.src, a.deg});
  }
  for (const auto& r : p.relations) {
    Relation rr;
    for (const auto& t : r.terms) {
      RelTerm tt;
      tt.coeff = t.coeff;
      tt.arrows.assign(t.arrows.rbegin(), t.arrows.rend());
      rr.terms.push_back(std::move(tt));
    }
    out.relations.push_back(std::move(rr));
  }
  return validate(std::move(out));
}

namespace {

struct Token {
  enum class Type { sign, number, star, name, dot, end };
  Type type;
  std::string text;
};

std::vector<Token> tokenize_terms(const std::string& s, int ln) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '+' || c == '-') {
      out.push_back({Token::Type::sign, std::string(1, c)});
      ++i;
    } else if (c == '*') {
      out.push_back({Token::Type::star, "*"});
      ++i;
    } else if (c == '.') {
      out.push_back({Token::Type::dot, "."});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '/') {
        ++j;
        if (j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j]))) {
          throw PresentationError(PEK::parse, "malformed rational coefficient", ln);
        }
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      out.push_back({Token::Type::number, s.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        ++j;
      }
      out.push_back({Token::Type::name, s.substr(i, j - i)});
      i = j;
    } else {
      throw PresentationError(PEK::parse, std::string("unexpected character '") + c + "'", ln);
    }
  }
  out.push_back({Token::Type::end, ""});
  return out;
}

Relation parse_relation_terms(const std::string& rest, const std::map<std::string, int>& arrow_idx,
                              int ln) {
  auto tokens = tokenize_terms(rest, ln);
  std::size_t pos = 0;
  Relation rel;
  bool first = true;
  while (tokens[pos].type != Token::Type::end) {
    mpq_class sign = 1;
    if (tokens[pos].type == Token::Type::sign) {
      if (tokens[pos].text == "-") sign = -1;
      ++pos;
    } else if (!first) {
      throw PresentationError(PEK::parse, "expected '+' or '-' between relation terms", ln);
    }
    first = false;
    mpq_class coeff = 1;
    if (tokens[pos].type == Token::Type::number) {
      coeff = mpq_class(tokens[pos].text);
      if (coeff.get_den() == 0) {
        throw PresentationError(PEK::bad_coefficient, "coefficient has a zero denominator", ln);
      }
      coeff.canonicalize();
      ++pos;
      if (tokens[pos].type == Token::Type::star) ++pos;
    }
    if (tokens[pos].type != Token::Type::name) {
      throw PresentationError(PEK::parse, "relation term needs a path", ln);
    }
    RelTerm term;
    term.coeff = sign * coeff;
    while (true) {
      auto it = arrow_idx.find(tokens[pos].text);
      if (it == arrow_idx.end()) {
        throw PresentationError(PEK::parse, "unknown arrow '" + tokens[pos].text + "'", ln);
      }
      term.arrows.push_back(it->second);
      ++pos;
      if (tokens[pos].type == Token::Type::dot) {
        ++pos;
        if (tokens[pos].type != Token::Type::name) {
          throw PresentationError(PEK::parse, "expected an arrow name after '.'", ln);
        }
      } else {
        break;
      }
    }
    rel.terms.push_back(std::move(term));
  }
  if (rel.terms.empty()) {
    throw PresentationError(PEK::parse, "empty relation", ln);
  }
  return rel;
}

long parse_int(const std::string& s, int ln, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw PresentationError(PEK::parse, std::string("expected an integer for ") + what, ln);
  }
  if (used != s.size()) {
    throw PresentationError(PEK::parse, std::string("expected an integer for ") + what, ln);
  }
  return v;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  bool saw_vertices = false, saw_field = false;
  std::map<std::string, int> arrow_idx;
  std::vector<int> relation_lines;

  while (std::getline(in, raw)) {
    ++ln;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;

    if (head == "vertices") {
      if (saw_vertices) throw PresentationError(PEK::parse, "duplicate vertices line", ln);
      std::string arg;
      if (!(ls >> arg)) throw PresentationError(PEK::parse, "vertices needs a count", ln);
      std::string extra;
      if (ls >> extra) throw PresentationError(PEK::parse, "trailing tokens after vertices", ln);
      long n = parse_int(arg, ln, "the vertex count");
      if (n < 1) throw PresentationError(PEK::bad_vertex_index, "vertex count must be positive", ln);
      p.quiver.vertices = static_cast<int>(n);
      saw_vertices = true;
    } else if (head == "arrow") {
      if (!saw_vertices) {
        throw PresentationError(PEK::parse, "the vertices line must precede arrows", ln);
      }
      std::string name, s_src, s_tgt, s_deg;
      if (!(ls >> name >> s_src >> s_tgt)) {
        throw PresentationError(PEK::parse, "arrow needs: name src tgt [deg]", ln);
      }
      if (!is_identifier(name)) {
        throw PresentationError(PEK::parse, "arrow name '" + name + "' is not an identifier", ln);
      }
      Arrow a;
      a.name = name;
      a.src = static_cast<int>(parse_int(s_src, ln, "the arrow source"));
      a.tgt = static_cast<int>(parse_int(s_tgt, ln, "the arrow target"));
      a.deg = 1;
      if (ls >> s_deg) {
        a.deg = static_cast<int>(parse_int(s_deg, ln, "the arrow degree"));
        std::string extra;
        if (ls >> extra) throw PresentationError(PEK::parse, "trailing tokens after arrow", ln);
      }
      if (a.src < 0 || a.src >= p.quiver.vertices || a.tgt < 0 || a.tgt >= p.quiver.vertices) {
        throw PresentationError(PEK::bad_vertex_index,
                                "arrow '" + name + "' touches a vertex out of range", ln);
      }
      if (a.deg < 1) {
        throw PresentationError(PEK::degree_zero_arrow,
                                "arrow '" + name + "' must have positive degree", ln);
      }
      if (!arrow_idx.emplace(name, static_cast<int>(p.quiver.arrows.size())).second) {
        throw PresentationError(PEK::duplicate_arrow_name, "duplicate arrow name '" + name + "'",
                                ln);
      }
      p.quiver.arrows.push_back(std::move(a));
    } else if (head == "relation") {
      std::string rest;
      std::getline(ls, rest);
      p.relations.push_back(parse_relation_terms(rest, arrow_idx, ln));
      relation_lines.push_back(ln);
    } else if (head == "field") {
      if (saw_field) throw PresentationError(PEK::parse, "duplicate field line", ln);
      std::string arg;
      if (!(ls >> arg)) throw PresentationError(PEK::parse, "field needs Q or F<p>", ln);
      if (arg == "Q") {
        p.field = FieldSpec::rationals();
      } else if (arg.size() > 1 && arg[0] == 'F') {
        long pp = parse_int(arg.substr(1), ln, "the field characteristic");
        try {
          p.field = FieldSpec::prime(pp);
        } catch (const std::invalid_argument& e) {
          throw PresentationError(PEK::parse, e.what(), ln);
        }
      } else {
        throw PresentationError(PEK::parse, "field must be Q or F<p>", ln);
      }
      saw_field = true;
    } else {
      throw PresentationError(PEK::parse, "unknown directive '" + head + "'", ln);
    }
  }
  if (!saw_vertices) {
    throw PresentationError(PEK::parse, "missing vertices line", ln);
  }

  // normalize relation-by-relation so semantic errors keep their line numbers
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    try {
      normalize_relation(p.quiver, p.relations[r], p.field);
    } catch (const PresentationError& e) {
      throw PresentationError(e.kind, e.what(), relation_lines[r]);
    }
  }
  return validate(std::move(p));
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

namespace {

std::string coeff_str(const mpq_class& c) { return c.get_str(); }

}  // namespace

std::string serialize(const Presentation& p) {
  std::ostringstream out;
  out << "vertices " << p.quiver.vertices << "\n";
  out << "field " << p.field.str() << "\n";
  for (const auto& a : p.quiver.arrows) {
    out << "arrow " << a.name << " " << a.src << " " << a.tgt;
    if (a.deg != 1) out << " " << a.deg;
    out << "\n";
  }
  for (const auto& r : p.relations) {
    out << "relation ";
    for (std::size_t t = 0; t < r.terms.size(); ++t) {
      mpq_class c = r.terms[t].coeff;
      bool neg = sgn(c) < 0;
      if (t == 0) {
        if (neg) out << "-";
      } else {
        out << (neg ? " - " : " + ");
      }
      mpq_class ac = abs(c);
      if (ac != 1) out << coeff_str(ac) << "*";
      for (std::size_t k = 0; k < r.terms[t].arrows.size(); ++k) {
        if (k) out << ".";
        out << p.quiver.arrows[r.terms[t].arrows[k]].name;
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace qreg
