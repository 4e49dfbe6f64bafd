// SPDX-License-Identifier: Apache-2.0
//
// Loading of checksummed plain-text data assets.
//
// Every coefficient table shipped under data/ is a comma-separated file with
// `#`-prefixed provenance comments followed by one header row and the data
// rows.  One comment line declares a 64-bit FNV-1a digest of the content:
//
//     # fnv1a64: <16 lowercase hex digits>
//
// The digest covers the non-comment lines only (header + data rows), each
// stripped of trailing whitespace and terminated with a single '\n'.  The
// loader recomputes the digest and refuses files that do not match, so a
// transcription or merge accident in the spectroscopic tables fails loudly
// instead of skewing results.

#ifndef MMWLINK_ASSETS_HPP
#define MMWLINK_ASSETS_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace mmwlink::assets
{

/// 64-bit FNV-1a over the given lines; each line is hashed as if written
/// with trailing whitespace removed and a single '\n' appended.
std::uint64_t fnv1a64(const std::vector<std::string> &lines);

/// Same digest rendered as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::vector<std::string> &lines);

/// Parsed checksummed CSV: comment text (without the leading "# "), header
/// fields, and data rows as raw cell strings.
struct csv_table
{
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Reads and verifies a checksummed CSV asset.  Throws io_error when the
/// file is missing, has no checksum comment, fails verification, or has
/// rows whose cell count differs from the header.
csv_table load_checksummed_csv(const std::filesystem::path &path);

/// Strict string->double conversion for asset cells; throws io_error naming
/// `context` when the cell is not a complete floating-point literal.
double parse_double(const std::string &cell, const std::string &context);

/// Directory that holds the coefficient tables.  Resolution order: the
/// MMWLINK_DATA_DIR environment variable, the compile-time default
/// (MMWLINK_DEFAULT_DATA_DIR), then "data" relative to the working
/// directory.
std::filesystem::path default_data_dir();

} // namespace mmwlink::assets

#endif // MMWLINK_ASSETS_HPP
