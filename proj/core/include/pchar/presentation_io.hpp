#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pchar/pcgroup.hpp"

namespace pchar {

// Text format, one relation per line:
//
//   # comment
//   p 3
//   gens 4
//   names c a b z          (optional)
//   pow 2 = g3^1
//   conj 2 1 = g2^1 g3^1
//
// Generators are 1-based. Omitted relations are trivial (g_i^p = 1,
// g_j^{g_i} = g_j). Words are "g1^e1 ... gn^en" with absent generators at
// exponent 0; the identity word is written "1".

PcPresentation parse_presentation(std::string_view text);
PcPresentation read_presentation_file(const std::string& path);

/// Canonical text: header, names when non-default, nontrivial pow lines in
/// generator order, then nontrivial conj lines ordered by (i, j).
std::string format_presentation(const PcPresentation& pres);

/// Normal-form word in g-notation ("g1^1 g3^2", or "1").
std::string format_word(const PcPresentation& pres, const Element& x);
/// Same, but using presentation names when present.
std::string format_named_word(const PcPresentation& pres, const Element& x);

/// Evaluates an arbitrary word ("a c^-1 b^2") in the group; letters may be
/// generator names or g<i>.
Element parse_word(const PcGroup& group, std::string_view word);

/// Splits a generator list ("a z, b^2 c") on commas; each entry is a word.
std::vector<Element> parse_word_list(const PcGroup& group, std::string_view text);

}  // namespace pchar
