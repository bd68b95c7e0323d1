#pragma once

#include <string>
#include <string_view>

#include "patternforge/fact_schema.hpp"
#include "patternforge/pattern.hpp"

namespace patternforge {

// Pattern DSL, one pattern per file:
//
//   pattern  := "root" VAR "." subpat+
//   subpat   := "sub" NAME ":" atom ("," atom)* "."
//   atom     := IDENT "(" term ("," term)* ")"
//   term     := VAR | INT | "_"
//
// Atom names are the schema's fact predicates plus the constraint names
// eq, neq, lt, leq, red, green. `%` starts a comment. Variables begin with an
// upper-case letter. Throws SyntaxError / UnknownTypeName / ArityMismatch
// with line:column positions.
Pattern parse_pattern(std::string_view text, const FactSchema& schema = FactSchema::standard());

// Inverse of parse_pattern up to whitespace: parse(unparse(p)) == p.
std::string unparse(const Pattern& p, const FactSchema& schema = FactSchema::standard());

} // namespace patternforge
