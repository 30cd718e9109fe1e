#pragma once

// Text syntax. Words: decimal digits for d <= 10, otherwise comma-separated
// integers in brackets; the empty word is "e". Points: "prefix(period)",
// e.g. "01(10)" or "(0)". Tables: rows `v->w[:germ]` joined by `;`, germs
// named as in the automaton (or by id), identity germs omitted.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zipper/elements.hpp"
#include "zipper/zipper.hpp"

namespace zipper {

  std::string format_word(Alphabet alphabet, Word const& w);
  Word parse_word(Alphabet alphabet, std::string_view text);

  std::string format_point(Alphabet alphabet, Point const& x);
  Point parse_point(Alphabet alphabet, std::string_view text);

  std::string format_table(SimTable const& t);
  inline std::string format_element(CanonicalElement const& g) {
    return format_table(g.table());
  }
  inline std::string format_eclass(EClassRep const& e) {
    return format_table(e.table());
  }

  // Parses rows without validating them. Errors carry row and column.
  SimTable parse_table(GroupPtr const&  group,
                       std::string_view text,
                       TableKind        kind   = TableKind::group_element,
                       Word             domain = Word());

  // Parse, validate as a group element, reduce. "id" is the identity.
  CanonicalElement parse_element(GroupPtr const& group, std::string_view text);

  using NamedElements = std::vector<std::pair<std::string, CanonicalElement>>;

  // Generator files: one `name literal` per line, `#` comments.
  NamedElements parse_generators(GroupPtr const& group, std::string const& text);

}  // namespace zipper
