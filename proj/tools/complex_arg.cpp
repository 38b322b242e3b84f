#include "complex_arg.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace chm::cli {

namespace {

std::optional<double> parse_real(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

// Coefficient of an imaginary term written without its trailing 'i'.
std::optional<double> parse_imaginary(std::string_view text) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text);
}

}  // namespace

std::optional<Complex> parse_complex(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.back() != 'i') {
    const auto re = parse_real(text);
    if (!re) return std::nullopt;
    return Complex(*re, 0.0);
  }
  text.remove_suffix(1);
  // The split is the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    const auto im = parse_imaginary(text);
    if (!im) return std::nullopt;
    return Complex(0.0, *im);
  }
  const auto re = parse_real(text.substr(0, split));
  const auto im = parse_imaginary(text.substr(split));
  if (!re || !im) return std::nullopt;
  return Complex(*re, *im);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), x);
  return std::string(buffer.data(), ec == std::errc{} ? end : buffer.data());
}

}  // namespace chm::cli
