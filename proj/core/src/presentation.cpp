#include "quiverhh/presentation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace quiverhh {

namespace {

enum class Tok { ident, number, colon, arrow_to, plus, minus, star, slash };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

using Statement = std::vector<Token>;

bool ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80;
}

// Splits the source into statements at newlines and ';', stripping comments.
std::vector<Statement> tokenize(const std::string& text) {
  std::vector<Statement> statements;
  Statement current;
  std::size_t line = 1, col = 1;
  auto flush = [&]() {
    if (!current.empty()) statements.push_back(std::move(current));
    current.clear();
  };
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = text[i];
    if (c == '\n') {
      flush();
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == ';') {
      flush();
      ++i;
      ++col;
      continue;
    }
    if (std::isspace(c)) {
      ++i;
      ++col;
      continue;
    }
    std::size_t tok_col = col;
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      current.push_back({Tok::arrow_to, "->", line, tok_col});
      i += 2;
      col += 2;
      continue;
    }
    switch (c) {
      case ':':
        current.push_back({Tok::colon, ":", line, tok_col});
        ++i;
        ++col;
        continue;
      case '+':
        current.push_back({Tok::plus, "+", line, tok_col});
        ++i;
        ++col;
        continue;
      case '-':
        current.push_back({Tok::minus, "-", line, tok_col});
        ++i;
        ++col;
        continue;
      case '*':
        current.push_back({Tok::star, "*", line, tok_col});
        ++i;
        ++col;
        continue;
      case '/':
        current.push_back({Tok::slash, "/", line, tok_col});
        ++i;
        ++col;
        continue;
      default:
        break;
    }
    if (std::isdigit(c)) {
      std::string t;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        t += text[i++];
        ++col;
      }
      // digits followed by identifier characters form an identifier ("1a")
      if (i < text.size() && ident_char(text[i]) ) {
        while (i < text.size() && ident_char(text[i])) {
          t += text[i++];
          ++col;
        }
        current.push_back({Tok::ident, t, line, tok_col});
      } else {
        current.push_back({Tok::number, t, line, tok_col});
      }
      continue;
    }
    if (ident_char(c)) {
      std::string t;
      while (i < text.size() && ident_char(text[i])) {
        t += text[i++];
        ++col;
      }
      current.push_back({Tok::ident, t, line, tok_col});
      continue;
    }
    throw SyntaxError(line, tok_col,
                      std::string("unexpected character '") + static_cast<char>(c) + "'");
  }
  flush();
  return statements;
}

struct RelationTermFactor {
  std::string label;
  std::size_t line, col;
};

}  // namespace

BoundQuiverPresentation parse_presentation(const std::string& text) {
  std::vector<Statement> statements = tokenize(text);

  BoundQuiverPresentation pres{Field::rationals(), Quiver{}, {}};
  bool field_seen = false;
  bool in_relations = false;

  // Relation statements are collected first and resolved after the quiver is
  // complete, so coefficients can be read in the declared field.
  std::vector<Statement> relation_statements;

  for (const Statement& st : statements) {
    const Token& head = st.front();
    if (!in_relations && head.kind == Tok::ident && head.text == "field") {
      if (field_seen)
        throw SyntaxError(head.line, head.col, "duplicate field declaration");
      field_seen = true;
      if (st.size() == 2 && st[1].kind == Tok::ident) {
        pres.field = Field::parse(st[1].text);
      } else if (st.size() == 3 && st[1].kind == Tok::ident &&
                 st[2].kind == Tok::number) {
        pres.field = Field::parse(st[1].text + st[2].text);
      } else {
        throw SyntaxError(head.line, head.col,
                          "expected 'field Q' or 'field F <p>'");
      }
      continue;
    }
    if (!in_relations && head.kind == Tok::ident && head.text == "vertices") {
      if (st.size() < 2)
        throw SyntaxError(head.line, head.col, "empty vertex list");
      for (std::size_t k = 1; k < st.size(); ++k) {
        if (st[k].kind != Tok::number && st[k].kind != Tok::ident)
          throw SyntaxError(st[k].line, st[k].col, "bad vertex name");
        try {
          pres.quiver.add_vertex(st[k].text);
        } catch (const SemanticError& e) {
          throw SyntaxError(st[k].line, st[k].col, e.what());
        }
      }
      continue;
    }
    if (!in_relations && head.kind == Tok::ident && head.text == "arrows" &&
        st.size() == 1) {
      continue;  // optional section marker
    }
    if (!in_relations && head.kind == Tok::ident && head.text == "arrow") {
      // arrow <label> : <v> -> <v>
      if (st.size() != 6 || st[1].kind != Tok::ident ||
          st[2].kind != Tok::colon ||
          (st[3].kind != Tok::number && st[3].kind != Tok::ident) ||
          st[4].kind != Tok::arrow_to ||
          (st[5].kind != Tok::number && st[5].kind != Tok::ident))
        throw SyntaxError(head.line, head.col,
                          "expected 'arrow <label>: <v> -> <v>'");
      if (std::isdigit(static_cast<unsigned char>(st[1].text[0])))
        throw SemanticError("arrow label '" + st[1].text +
                            "' must not start with a digit");
      auto src = pres.quiver.vertex_by_label(st[3].text);
      auto tgt = pres.quiver.vertex_by_label(st[5].text);
      if (!src)
        throw SemanticError("unknown vertex '" + st[3].text + "' (line " +
                            std::to_string(st[3].line) + ")");
      if (!tgt)
        throw SemanticError("unknown vertex '" + st[5].text + "' (line " +
                            std::to_string(st[5].line) + ")");
      pres.quiver.add_arrow(st[1].text, *src, *tgt);
      continue;
    }
    if (head.kind == Tok::ident && head.text == "relations" && st.size() == 1) {
      in_relations = true;
      continue;
    }
    if (!in_relations)
      throw SyntaxError(head.line, head.col,
                        "unexpected statement '" + head.text + "'");
    relation_statements.push_back(st);
  }

  // Resolve relation statements:  term (('+'|'-') term)*
  for (const Statement& st : relation_statements) {
    PathVector rel(pres.field);
    std::size_t i = 0;
    bool first_term = true;
    while (i < st.size()) {
      Scalar sign = Scalar::one(pres.field);
      if (st[i].kind == Tok::plus || st[i].kind == Tok::minus) {
        if (first_term && st[i].kind == Tok::plus)
          throw SyntaxError(st[i].line, st[i].col, "unexpected leading '+'");
        if (st[i].kind == Tok::minus) sign = -sign;
        ++i;
      } else if (!first_term) {
        throw SyntaxError(st[i].line, st[i].col,
                          "expected '+' or '-' between terms");
      }
      if (i >= st.size())
        throw SyntaxError(st.back().line, st.back().col,
                          "dangling sign at end of relation");
      // optional coefficient
      Scalar coeff = Scalar::one(pres.field);
      if (st[i].kind == Tok::number) {
        std::string lit = st[i].text;
        std::size_t num_line = st[i].line, num_col = st[i].col;
        ++i;
        if (i < st.size() && st[i].kind == Tok::slash) {
          ++i;
          if (i >= st.size() || st[i].kind != Tok::number)
            throw SyntaxError(num_line, num_col, "bad fraction coefficient");
          lit += "/" + st[i].text;
          ++i;
        }
        coeff = Scalar::parse(pres.field, lit);
        if (i >= st.size() || st[i].kind != Tok::star)
          throw SyntaxError(num_line, num_col,
                            "coefficient must be followed by '*'");
        ++i;
      }
      // factor list
      std::vector<RelationTermFactor> factors;
      while (true) {
        if (i >= st.size() || st[i].kind != Tok::ident)
          throw SyntaxError(i < st.size() ? st[i].line : st.back().line,
                            i < st.size() ? st[i].col : st.back().col,
                            "expected arrow label in relation term");
        factors.push_back({st[i].text, st[i].line, st[i].col});
        ++i;
        if (i < st.size() && st[i].kind == Tok::star) {
          ++i;
          continue;
        }
        break;
      }
      if (factors.size() < 2)
        throw SemanticError("relation term of length " +
                            std::to_string(factors.size()) +
                            " (paths in relations must have length >= 2), line " +
                            std::to_string(factors.front().line));
      std::vector<ArrowId> arrows;
      for (const auto& f : factors) {
        auto a = pres.quiver.arrow_by_label(f.label);
        if (!a)
          throw SemanticError("unknown arrow '" + f.label + "' (line " +
                              std::to_string(f.line) + ")");
        arrows.push_back(*a);
      }
      Path p = Path::of_arrows(pres.quiver, arrows);
      rel.add_term(p, coeff * sign);
      first_term = false;
    }
    if (rel.is_zero())
      throw SemanticError("relation collapses to zero");
    if (!rel.endpoint_homogeneous())
      throw SemanticError("relation is not endpoint-homogeneous: " +
                          rel.str(pres.quiver));
    pres.relations.push_back(std::move(rel));
  }
  return pres;
}

BoundQuiverPresentation parse_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string print_presentation(const BoundQuiverPresentation& pres) {
  std::ostringstream out;
  out << "field " << pres.field.name() << "\n";
  out << "vertices";
  for (const Vertex& v : pres.quiver.vertices()) out << " " << v.label;
  out << "\n";
  for (const Arrow& a : pres.quiver.arrows())
    out << "arrow " << a.label << ": " << pres.quiver.vertex(a.source).label
        << " -> " << pres.quiver.vertex(a.target).label << "\n";
  out << "relations\n";
  for (const PathVector& r : pres.relations)
    out << r.str(pres.quiver) << "\n";
  return out.str();
}

BoundQuiverPresentation with_field(const BoundQuiverPresentation& pres,
                                   const Field& field) {
  if (field == pres.field) return pres;
  BoundQuiverPresentation out{field, pres.quiver, {}};
  for (const PathVector& r : pres.relations) {
    PathVector nr(field);
    for (const auto& [p, c] : r.terms())
      nr.add_term(p, Scalar::parse(field, c.str()));
    if (nr.is_zero())
      throw SemanticError("relation collapses to zero over " + field.name() +
                          ": " + r.str(pres.quiver));
    out.relations.push_back(std::move(nr));
  }
  return out;
}

}  // namespace quiverhh
