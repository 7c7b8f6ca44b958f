#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "categorica/core.hpp"
#include "categorica/sorites.hpp"

namespace categorica {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message), line(line), column(column) {}
  int line;
  int column;
};

struct NamedLiteral {
  std::string term;
  bool positive = true;

  bool operator==(const NamedLiteral&) const = default;
};

// One parsed statement, before terms are bound to a universe.  Surface
// statements ("All M are P") carry a form and exactly two literals, subject
// first; equations ("d'n'm' = 0", "xy != 0") carry a product of any arity.
struct ParsedStatement {
  bool equation = false;
  Form form = Form::A;         // surface only
  NfKind kind = NfKind::empty; // equation only
  std::vector<NamedLiteral> lits;

  bool operator==(const ParsedStatement&) const = default;
};

// Grammar: ("All"|"No"|"Some") TERM ("is"|"are") ["not"] TERM, with TERM an
// identifier, an identifier + "'", or "non-" + identifier ("not" only after
// "Some"); or PRODUCT ("="|"!=") "0" with PRODUCT juxtaposed single-letter
// literals.  Throws ParseError with position info.
ParsedStatement parse_statement(std::string_view text, int line = 1);

// Terms in order of first appearance.
std::vector<std::string> statement_terms(const ParsedStatement& st);

// Binding to a universe; unknown terms and (for to_surface) equations throw.
SurfaceStatement to_surface(const ParsedStatement& st, const Universe& u);
ProductStatement to_product(const ParsedStatement& st, const Universe& u);

// Sorite source: one statement per line, "#" starts a comment, blank lines
// skipped.  The universe is the terms in order of first appearance.
struct SoriteSource {
  Sorite sorite;
  std::vector<ParsedStatement> statements;
};

SoriteSource parse_sorite_text(std::string_view text);
SoriteSource parse_sorite_file(const std::string& path);  // throws on I/O error

std::string render(const Universe& u, const SurfaceStatement& st);
// single-letter term names only
std::string render_equation(const Universe& u, const ProductStatement& st);

}  // namespace categorica
