#pragma once

#include "hnpoly/polygon.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace hnpoly {

/// Parse failure with the offending position (0-based byte offset).
class ParseError : public std::runtime_error {
public:
    ParseError(size_t pos, const std::string& what)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
          pos_(pos) {}
    size_t position() const { return pos_; }

private:
    size_t pos_;
};

/// Bundle expression grammar, whitespace-insensitive:
///   bundle := "0" | term ("+" term)*
///   term   := "O" ["(" int ["/" int] ")"] ["^" int]
/// with arbitrary-precision integers, negative and improper fractions
/// allowed. "O" alone is O(0). Throws ParseError with position diagnostics.
Bundle parse_bundle(std::string_view text);

/// Canonical text form: blocks in canonical (descending slope) order,
/// e.g. "O(9/4) + O(-1/2)^2"; the zero bundle prints as "0".
std::string format_bundle(const Bundle& b);

}  // namespace hnpoly
