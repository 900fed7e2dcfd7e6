#pragma once

#include <string>
#include <string_view>

#include "sl2/crystal.hpp"

namespace sl2 {

/// Parse path text: factors are maximal runs of digits over {1,2}, separated
/// by '.', ',' or whitespace (e.g. "1111.11.2.1122.1222.1.2.22"). Throws
/// std::invalid_argument with the 1-based offending position on empty input,
/// an illegal character, or a decreasing run.
Path parse_path(std::string_view text);

/// Canonical text form: factor words joined with '.'.
std::string render_path(const Path& path);

}  // namespace sl2
