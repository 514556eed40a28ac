#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "dgolod/d_calculus.hpp"
#include "dgolod/groebner.hpp"
#include "dgolod/polynomial.hpp"

namespace dgolod {

/// Parses +, -, *, ^, parentheses, integers and declared variable names.
/// `a/b` is accepted when b is a nonzero constant, so rational coefficients round-trip.
/// ParseError positions use `line`, and columns of `text` shifted by `column_offset`.
Polynomial parse_polynomial(std::string_view text, const PolyRing& ring, std::size_t line = 1,
                            std::size_t column_offset = 0);

struct IdealFile {
  PolyRing ring;
  IdealGens ideal;
  std::optional<TermOrder> order;
  std::optional<Permutation> perm;
};

/// Grammar:
///   file     := ringline header* genline+
///   ringline := "ring" FIELD "[" ident ("," ident)* "]"
///   header   := "order" ("lex" | "grevlex") | "perm" (images | "reverse")
///   genline  := expr
/// Blank lines and text after '#' are ignored. When `field` is given it replaces
/// the declared field.
IdealFile parse_ideal_file(std::string_view text, std::optional<Field> field = std::nullopt);

/// Canonical text: ring line, optional headers, one generator per line.
std::string format_ideal_file(const IdealFile& file);

}  // namespace dgolod
