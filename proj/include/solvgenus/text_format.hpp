#pragma once

// Text encodings shared by every front end: matrices as "a,b;c,d" (row-major,
// ';' between rows) and slopes as "p/q". Whitespace around separators and a
// leading unary minus are accepted.

#include "solvgenus/core_algebra.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace solvgenus {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

}  // namespace detail

inline Integer parse_integer(std::string_view text) {
    std::string_view s = detail::trim(text);
    std::size_t digits_from = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == digits_from) throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(text) + "'");
    for (std::size_t i = digits_from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(text) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

inline IntMatrix2 parse_matrix(std::string_view text) {
    auto rows = detail::split(text, ';');
    if (rows.size() != 2) throw Error(ErrorKind::Parse, "matrix must look like 'a,b;c,d', got '" + std::string(text) + "'");
    auto r0 = detail::split(rows[0], ',');
    auto r1 = detail::split(rows[1], ',');
    if (r0.size() != 2 || r1.size() != 2)
        throw Error(ErrorKind::Parse, "matrix must look like 'a,b;c,d', got '" + std::string(text) + "'");
    return {parse_integer(r0[0]), parse_integer(r0[1]), parse_integer(r1[0]), parse_integer(r1[1])};
}

inline std::string format_matrix(const IntMatrix2& m) {
    return m.a.str() + "," + m.b.str() + ";" + m.c.str() + "," + m.d.str();
}

inline PrimitiveSlope parse_slope(std::string_view text) {
    auto parts = detail::split(text, '/');
    if (parts.size() != 2) throw Error(ErrorKind::Parse, "slope must look like 'p/q', got '" + std::string(text) + "'");
    return PrimitiveSlope(parse_integer(parts[0]), parse_integer(parts[1]));
}

inline std::string format_slope(const PrimitiveSlope& s) { return s.p().str() + "/" + s.q().str(); }

}  // namespace solvgenus
