// SPDX-License-Identifier: Apache-2.0

#include "mmwlink/assets.hpp"
#include "mmwlink/errors.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace mmwlink::assets
{

namespace
{

constexpr std::uint64_t fnv_offset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t fnv_prime = 0x100000001b3ULL;
constexpr const char *checksum_tag = "fnv1a64:";

std::string rstrip(std::string line)
{
    const auto last = line.find_last_not_of(" \t\r\n\v\f");
    line.erase(last == std::string::npos ? 0 : last + 1);
    return line;
}

std::string lstrip(std::string line)
{
    const auto first = line.find_first_not_of(" \t\r\n\v\f");
    line.erase(0, first == std::string::npos ? line.size() : first);
    return line;
}

std::vector<std::string> split_csv(const std::string &line)
{
    std::vector<std::string> cells;
    std::string::size_type begin = 0;
    while (true)
    {
        const auto comma = line.find(',', begin);
        if (comma == std::string::npos)
        {
            cells.push_back(line.substr(begin));
            return cells;
        }
        cells.push_back(line.substr(begin, comma - begin));
        begin = comma + 1;
    }
}

} // namespace

std::uint64_t fnv1a64(const std::vector<std::string> &lines)
{
    std::uint64_t hash = fnv_offset;
    for (const auto &line : lines)
    {
        const std::string content = rstrip(line) + '\n';
        for (const unsigned char byte : content)
        {
            hash ^= static_cast<std::uint64_t>(byte);
            hash *= fnv_prime;
        }
    }
    return hash;
}

std::string fnv1a64_hex(const std::vector<std::string> &lines)
{
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(lines)));
    return std::string(buffer);
}

csv_table load_checksummed_csv(const std::filesystem::path &path)
{
    std::ifstream file(path);
    if (!file)
        throw io_error("cannot open data asset '" + path.string() + "'");

    csv_table table;
    std::vector<std::string> content_lines;
    std::string declared_digest;

    std::string line;
    while (std::getline(file, line))
    {
        const std::string stripped = rstrip(line);
        if (!stripped.empty() && stripped.front() == '#')
        {
            std::string comment = lstrip(stripped.substr(1));
            if (comment.rfind(checksum_tag, 0) == 0)
                declared_digest = lstrip(comment.substr(std::string(checksum_tag).size()));
            else
                table.comments.push_back(comment);
            continue;
        }
        content_lines.push_back(stripped);
    }
    if (file.bad())
        throw io_error("read failure on data asset '" + path.string() + "'");

    if (declared_digest.empty())
        throw io_error("data asset '" + path.string() + "' declares no fnv1a64 checksum");
    if (content_lines.empty())
        throw io_error("data asset '" + path.string() + "' has no header row");

    const std::string actual_digest = fnv1a64_hex(content_lines);
    if (actual_digest != declared_digest)
        throw io_error("checksum mismatch in data asset '" + path.string() + "': declared " +
                       declared_digest + ", computed " + actual_digest);

    table.header = split_csv(content_lines.front());
    for (std::size_t i = 1; i < content_lines.size(); ++i)
    {
        auto cells = split_csv(content_lines[i]);
        if (cells.size() != table.header.size())
            throw io_error("row " + std::to_string(i) + " of data asset '" + path.string() +
                           "' has " + std::to_string(cells.size()) + " cells, expected " +
                           std::to_string(table.header.size()));
        table.rows.push_back(std::move(cells));
    }
    return table;
}

double parse_double(const std::string &cell, const std::string &context)
{
    const std::string trimmed = rstrip(lstrip(cell));
    if (trimmed.empty())
        throw io_error("empty numeric cell in " + context);
    char *end = nullptr;
    const double value = std::strtod(trimmed.c_str(), &end);
    if (end != trimmed.c_str() + trimmed.size())
        throw io_error("malformed numeric cell '" + cell + "' in " + context);
    return value;
}

std::filesystem::path default_data_dir()
{
    if (const char *env = std::getenv("MMWLINK_DATA_DIR"); env != nullptr && *env != '\0')
        return std::filesystem::path(env);
#ifdef MMWLINK_DEFAULT_DATA_DIR
    return std::filesystem::path(MMWLINK_DEFAULT_DATA_DIR);
#else
    return std::filesystem::path("data");
#endif
}

} // namespace mmwlink::assets
