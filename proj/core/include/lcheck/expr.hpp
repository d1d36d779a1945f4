#pragma once

#include <map>
#include <string>
#include <string_view>

#include "lcheck/rep.hpp"

namespace lcheck {

/// Named sub-expressions available as `@name`.
using MacroTable = std::map<std::string, VirtualRep, std::less<>>;

/// Parses the symbolic expression language into an unnormalized VirtualRep.
///
///   expr    := term ('(+)' term)*
///   term    := [INT '*'] rsterm
///   rsterm  := unary ('(x)' unary)*
///   unary   := '~' unary | postfix
///   postfix := primary ('tw' charprod)*
///   primary := '(' expr ')' | pi | pi' | Sym^m(b) | Ad(b) | nu(b) | Ind(b)
///            | charprod | (s-1)^INT | @name | empty
///
/// Throws ParseError with the column of the offending token.
VirtualRep parse_expression(std::string_view text, const MacroTable& macros = {});

}  // namespace lcheck
