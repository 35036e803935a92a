#pragma once

#include "biquad/presentation.hpp"
#include "biquad/rewrite.hpp"

#include <stdexcept>
#include <string>

namespace biquad {

/// A line-numbered syntax or consistency error in a presentation file or a
/// word expression.  Lines are 1-based; 0 means the error is not tied to a
/// particular line.
struct ParseError : std::runtime_error {
    int line;
    std::string detail;
    ParseError(int l, const std::string& msg)
        : std::runtime_error(l > 0 ? "line " + std::to_string(l) + ": " + msg : msg),
          line(l),
          detail(msg) {}
};

/// Parse the line-oriented presentation format:
///
///   algebra "NAME"              # optional
///   generators N
///   parameters p1, p2, ...      # optional; must precede relation lines
///   orientation descending      # optional; default descending
///   q I J = EXPR                # 1 <= I < J <= N; default 1
///   a I J K = EXPR              # 1 <= K <= N; default 0
///   b I J = EXPR                # default 0
///
/// '#' starts a comment.  Duplicate and unknown keys are errors.  Ascending
/// input is translated to the canonical descending orientation.
AlgebraPresentation parse_presentation(const std::string& text);

/// Canonical file rendering; parsing it back yields an equal presentation.
std::string emit_presentation(const AlgebraPresentation& pres);

/// Parse a product of generator powers, e.g. "x2^2 x1" -> [2,2,1].
Word parse_word(const std::string& text, int n);

}  // namespace biquad
