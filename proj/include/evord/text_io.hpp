#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "evord/perm.hpp"
#include "evord/spacetime.hpp"

namespace evord {

/// "(2,3,4,5,1)"; whitespace is ignored.
Permutation parse_permutation(std::string_view text);

/// Accepts both "{(1,2,3),(2,3,1)}" and the one-line report form
/// "(1,2,3);(2,3,1)". Non-bijective tuples, ragged sizes and duplicate
/// members raise ParseError with the offending offset.
PermSet parse_permset(std::string_view text, bool canonical = false);

/// One set per non-empty line; lines starting with '#' are skipped.
std::vector<PermSet> parse_permset_lines(std::string_view text);

/// Structured witness document with exact "p/q" rationals.
std::string witness_to_json(const Witness& w);
Witness witness_from_json(std::string_view text);

}  // namespace evord
