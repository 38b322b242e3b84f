#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "chm/core_rv.hpp"

namespace chm::cli {

// Parses "a", "bi", "a+bi", "a-bi", "i", "-i" with no whitespace. Real and
// imaginary parts accept anything std::from_chars does (including exponents).
std::optional<Complex> parse_complex(std::string_view text);

// Shortest decimal that reads back to the same double.
std::string format_number(double x);

}  // namespace chm::cli
