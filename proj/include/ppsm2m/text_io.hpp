#ifndef PPSM2M_TEXT_IO_HPP
#define PPSM2M_TEXT_IO_HPP

#include <string>
#include <string_view>
#include <vector>

namespace ppsm2m {

/// Shortest decimal string that round-trips the exact double value.
/// Locale-independent; used for every number written to disk so that
/// identical runs produce identical bytes.
std::string format_double(double value);

/// Strict parse of a whole token as a double; throws std::invalid_argument.
double parse_double(std::string_view token);

/// Strict parse of a whole token as an unsigned integer.
unsigned long long parse_unsigned(std::string_view token);

/// Whitespace-delimited tokens of a line.
std::vector<std::string_view> split_tokens(std::string_view line);

/// Removes leading/trailing spaces and tabs.
std::string_view trim(std::string_view s);

}  // namespace ppsm2m

#endif  // PPSM2M_TEXT_IO_HPP
