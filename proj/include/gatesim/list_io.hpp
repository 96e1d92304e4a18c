#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gatesim/errors.hpp"
#include "gatesim/lists.hpp"

namespace gatesim {

// List-file format: line 1 is n; line v+1 is node v's list as comma-separated
// node ids. UTF-8, newline-terminated.

namespace detail {

inline std::uint64_t parse_uint(std::string_view token, std::size_t line) {
    std::uint64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || token.empty()) {
        throw ParseError("malformed integer '" + std::string(token) + "'", line);
    }
    return value;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace detail

/// Parses a family from an input stream, validating every invariant; parse
/// and validation errors carry the offending line number (node v is on
/// line v+1).
inline ListFamily read_lists(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing node count", 1);
    const std::uint64_t n64 = detail::parse_uint(detail::trim(line), 1);
    if (n64 < 2) throw ParseError("node count must be >= 2, got " + std::to_string(n64), 1);
    if (n64 > 10'000'000) throw ParseError("node count " + std::to_string(n64) + " unreasonably large", 1);
    const auto n = static_cast<std::uint32_t>(n64);

    std::vector<std::vector<NodeId>> lists;
    lists.reserve(n);
    for (NodeId v = 1; v <= n; ++v) {
        const std::size_t line_no = v + 1;
        if (!std::getline(in, line)) throw ParseError("missing list for node " + std::to_string(v), line_no);
        std::vector<NodeId> ids;
        ids.reserve(n - 1);
        std::string_view rest = detail::trim(line);
        while (!rest.empty()) {
            const std::size_t comma = rest.find(',');
            const std::string_view token = detail::trim(rest.substr(0, comma));
            ids.push_back(static_cast<NodeId>(detail::parse_uint(token, line_no)));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
            if (rest.empty()) throw ParseError("trailing comma", line_no);
        }
        lists.push_back(std::move(ids));
    }

    ListFamily family(n, std::move(lists));
    if (const auto violation = validate_lists(family)) {
        // report against the file line that holds the offending node
        const std::size_t line_no = violation->node == 0 ? 1 : violation->node + 1;
        std::string msg = violation->message;
        if (violation->position != 0) msg += " at position " + std::to_string(violation->position);
        throw ParseError(msg, line_no);
    }
    return family;
}

inline ListFamily load_lists(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open list file '" + path + "'");
    return read_lists(in);
}

inline void write_lists(const ListFamily& family, std::ostream& out) {
    out << family.node_count() << '\n';
    for (NodeId v = 1; v <= family.node_count(); ++v) {
        const auto& list = family.list_of(v);
        for (std::size_t idx = 0; idx < list.size(); ++idx) {
            if (idx != 0) out << ',';
            out << list[idx];
        }
        out << '\n';
    }
}

inline void save_lists(const ListFamily& family, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_lists(family, out);
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace gatesim
