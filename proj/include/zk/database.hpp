#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zk/classify.hpp"

// Persistence for classification results.
//
// zkdb v1 is a line-oriented text format (UTF-8, LF):
//
//   # zkdb v1
//   record k=<K> n=<N> lattice=<zn|e8|e8z> type=<I|II> index=<i>
//   <one line per Howell generator row, space-separated entries in [0, k)>
//   end
//
// Records are sorted by (k, n, lattice, canonical form) and indexed from 1
// within each (k, n, lattice) group. Results with no classes produce no
// records.

namespace zk {

enum class DbFormat { Zkdb, Json };

std::optional<DbFormat> parse_db_format(std::string_view name);

std::string format_zkdb(const std::vector<ClassificationResult>& results);

/// Parses zkdb v1 text; timings and frame counts come back as zero.
/// Throws FormatError on malformed input.
std::vector<ClassificationResult> parse_zkdb(std::string_view text);

std::string format_json(const std::vector<ClassificationResult>& results);

/// Writes to a temporary sibling file and renames it into place, so an
/// interrupted export never leaves a truncated database behind.
void export_db(const std::vector<ClassificationResult>& results, const std::filesystem::path& destination,
               DbFormat format = DbFormat::Zkdb);

std::vector<ClassificationResult> import_db(const std::filesystem::path& source);

/// Mathematical consistency of stored results: every representative is a
/// self-dual code in canonical form, its type tag is right, Construction A
/// lands in the recorded lattice class, and classes within a group are
/// distinct. Returns one message per problem found.
std::vector<std::string> verify_results(const std::vector<ClassificationResult>& results);

}  // namespace zk
