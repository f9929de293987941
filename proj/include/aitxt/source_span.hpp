#pragma once

#include <cstddef>

namespace aitxt {

/// Location of a token or line in ai.txt source text. Lines and columns are
/// 1-based; columns count bytes from the start of the line.
struct SourceSpan {
    int line = 1;
    int column = 1;
    std::size_t length = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

}  // namespace aitxt
