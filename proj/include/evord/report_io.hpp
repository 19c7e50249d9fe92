#pragma once

// Report files: one set per line in the "(..);(..)" form, then a trailer
//   #stats
//   #kind=s5
//   #total_enumerated=7940751
//   #<name>=<value>
// Trailer lines start with '#', so parse_permset_lines reads the sets alone.

#include <filesystem>
#include <string>
#include <string_view>

#include "evord/search.hpp"

namespace evord {

std::string format_report(const SearchReport& r);
SearchReport parse_report(std::string_view text);

/// Writes through a temporary file and renames, so a file either holds a
/// complete report or does not exist.
void write_report_file(const std::filesystem::path& path, const SearchReport& r);
SearchReport read_report_file(const std::filesystem::path& path);

/// Structured form: a single JSON document with the same content.
std::string report_to_json(const SearchReport& r);

}  // namespace evord
