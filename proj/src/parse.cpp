#include "categorica/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace categorica {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> split_words(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    out.push_back({std::string(text.substr(start, i - start)),
                   static_cast<int>(start) + 1});
  }
  return out;
}

NamedLiteral parse_term(const Token& tok, int line) {
  std::string_view text = tok.text;
  bool positive = true;
  if (text.starts_with("non-")) {
    positive = false;
    text.remove_prefix(4);
  }
  if (text.ends_with("'")) {
    if (!positive)
      throw ParseError("term combines non- and apostrophe", line, tok.column);
    positive = false;
    text.remove_suffix(1);
  }
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text.front())) ||
      !std::all_of(text.begin(), text.end(), ident_char))
    throw ParseError("bad term: " + tok.text, line, tok.column);
  return {std::string(text), positive};
}

ParsedStatement parse_surface(const std::vector<Token>& words, int line) {
  auto expect = [&](std::size_t i, const char* what) -> const Token& {
    if (i >= words.size()) {
      int col = words.empty() ? 1 : words.back().column + 1;
      throw ParseError(std::string("expected ") + what, line, col);
    }
    return words[i];
  };
  const std::string& quantifier = words[0].text;
  ParsedStatement st;
  NamedLiteral subject = parse_term(expect(1, "subject term"), line);
  const Token& copula = expect(2, "'is' or 'are'");
  if (copula.text != "is" && copula.text != "are")
    throw ParseError("expected 'is' or 'are', got " + copula.text, line,
                     copula.column);
  std::size_t i = 3;
  bool negated = false;
  if (i < words.size() && words[i].text == "not") {
    negated = true;
    ++i;
  }
  NamedLiteral predicate = parse_term(expect(i, "predicate term"), line);
  if (i + 1 < words.size())
    throw ParseError("trailing input: " + words[i + 1].text, line,
                     words[i + 1].column);
  if (subject.term == predicate.term)
    throw ParseError("statement repeats the term " + subject.term, line,
                     words[1].column);
  if (negated && quantifier != "Some")
    throw ParseError("'not' is only valid after 'Some'", line, copula.column);
  if (quantifier == "All")
    st.form = Form::A;
  else if (quantifier == "No")
    st.form = Form::E;
  else
    st.form = negated ? Form::O : Form::I;
  st.lits = {std::move(subject), std::move(predicate)};
  return st;
}

ParsedStatement parse_equation(std::string_view text, int line) {
  ParsedStatement st;
  st.equation = true;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  while (i < text.size() &&
         std::isalpha(static_cast<unsigned char>(text[i]))) {
    NamedLiteral lit{std::string(1, text[i]), true};
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      lit.term.push_back(text[i++]);
    if (i < text.size() && text[i] == '\'') {
      lit.positive = false;
      ++i;
    }
    for (const NamedLiteral& seen : st.lits)
      if (seen.term == lit.term)
        throw ParseError("product repeats the term " + lit.term, line,
                         static_cast<int>(i));
    st.lits.push_back(std::move(lit));
  }
  if (st.lits.empty())
    throw ParseError("expected a literal product", line,
                     static_cast<int>(i) + 1);
  skip_space();
  if (text.substr(i, 2) == "!=") {
    st.kind = NfKind::nonempty;
    i += 2;
  } else if (i < text.size() && text[i] == '=') {
    st.kind = NfKind::empty;
    ++i;
  } else {
    throw ParseError("expected '=' or '!='", line, static_cast<int>(i) + 1);
  }
  skip_space();
  if (i >= text.size() || text[i] != '0')
    throw ParseError("expected '0'", line, static_cast<int>(i) + 1);
  ++i;
  skip_space();
  if (i < text.size())
    throw ParseError("trailing input after equation", line,
                     static_cast<int>(i) + 1);
  return st;
}

Literal bind(const NamedLiteral& lit, const Universe& u) {
  return {u.index_of(lit.term),
          lit.positive ? Polarity::positive : Polarity::complemented};
}

std::string term_text(const Universe& u, Literal l) {
  return u.name(l.term) + (l.positive() ? "" : "'");
}

}  // namespace

ParsedStatement parse_statement(std::string_view text, int line) {
  std::vector<Token> words = split_words(text);
  if (words.empty()) throw ParseError("empty statement", line, 1);
  const std::string& head = words[0].text;
  if (head == "All" || head == "No" || head == "Some")
    return parse_surface(words, line);
  return parse_equation(text, line);
}

std::vector<std::string> statement_terms(const ParsedStatement& st) {
  std::vector<std::string> out;
  for (const NamedLiteral& lit : st.lits)
    if (std::find(out.begin(), out.end(), lit.term) == out.end())
      out.push_back(lit.term);
  return out;
}

SurfaceStatement to_surface(const ParsedStatement& st, const Universe& u) {
  if (st.equation)
    throw std::invalid_argument("equation has no surface form");
  return SurfaceStatement{st.form, bind(st.lits[0], u), bind(st.lits[1], u)};
}

ProductStatement to_product(const ParsedStatement& st, const Universe& u) {
  if (!st.equation) return ProductStatement::from(normalize(to_surface(st, u)));
  std::vector<Literal> lits;
  lits.reserve(st.lits.size());
  for (const NamedLiteral& lit : st.lits) lits.push_back(bind(lit, u));
  return ProductStatement::make(st.kind, std::move(lits));
}

SoriteSource parse_sorite_text(std::string_view text) {
  std::vector<ParsedStatement> statements;
  std::vector<std::string> terms;
  std::istringstream stream{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (split_words(raw).empty()) continue;
    ParsedStatement st = parse_statement(raw, line);
    for (const std::string& term : statement_terms(st))
      if (std::find(terms.begin(), terms.end(), term) == terms.end())
        terms.push_back(term);
    statements.push_back(std::move(st));
  }
  SoriteSource out{Sorite{Universe(terms), {}}, std::move(statements)};
  for (const ParsedStatement& st : out.statements)
    out.sorite.premises.push_back(to_product(st, out.sorite.universe));
  return out;
}

SoriteSource parse_sorite_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << file.rdbuf();
  return parse_sorite_text(text.str());
}

std::string render(const Universe& u, const SurfaceStatement& st) {
  std::string out;
  switch (st.form) {
    case Form::A: out = "All "; break;
    case Form::E: out = "No "; break;
    case Form::I:
    case Form::O: out = "Some "; break;
  }
  out += term_text(u, st.subject);
  out += " are ";
  if (st.form == Form::O) out += "not ";
  out += term_text(u, st.predicate);
  return out;
}

std::string render_equation(const Universe& u, const ProductStatement& st) {
  std::string out;
  for (Literal l : st.lits) out += term_text(u, l);
  out += st.universal() ? " = 0" : " != 0";
  return out;
}

}  // namespace categorica
