#pragma once

#include <string>
#include <string_view>

#include "sclogic/term.hpp"

namespace scl {

// Concrete syntax (whitespace-insensitive):
//
//   term    ::= cond
//   cond    ::= or ( "<|" or "|>" or )?          non-associative, lowest
//   or      ::= and ( "||" and )*                left-associative
//   and     ::= unary ( "&&" unary )*            left-associative
//   unary   ::= "!" unary | primary
//   primary ::= "T" | "F" | atom | var | "(" term ")"
//   atom    ::= [a-z][a-z0-9_]*
//   var     ::= "$" [a-z][a-z0-9_]*
Term parse(std::string_view input);

// Minimal-parentheses rendering; parse(render(t)) == t.
std::string render(const Term& t);

// S-expression export: (&& (! b) a), (cond F a T), $x, T.
std::string to_sexpr(const Term& t);

// Tagged-record export: SeqAnd(Not(Atom(b)), Atom(a)), Cond(ConstF, Atom(a),
// ConstT), Var(x), ConstT.
std::string to_structured(const Term& t);

}  // namespace scl
