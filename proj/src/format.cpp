#include "msdiff/format.hpp"

#include <charconv>
#include <string>

#include "msdiff/error.hpp"

namespace msdiff {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || first == last) {
    throw ValidationError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace msdiff
