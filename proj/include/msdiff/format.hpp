#pragma once

#include <string>
#include <string_view>

namespace msdiff {

/// Shortest-safe decimal text: 17 significant digits, round-trips exactly.
std::string format_double(double value);

/// Whole-string parse; throws ValidationError on trailing garbage.
double parse_double(std::string_view text);

}  // namespace msdiff
