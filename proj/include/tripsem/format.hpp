#ifndef TRIPSEM_FORMAT_HPP
#define TRIPSEM_FORMAT_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace tripsem {

// Shortest decimal that parses back to the same double (at most 17
// significant digits).
std::string format_double(double x);

// Space-separated format_double of each value.
std::string format_values(std::span<const double> values);

// Whole-string parse; nullopt on junk, trailing characters, or non-finite values.
std::optional<double> parse_double(std::string_view text);

}  // namespace tripsem

#endif  // TRIPSEM_FORMAT_HPP
