#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/scalar.hpp"

namespace qseries {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Grammar: optional real part, then an optional signed imaginary part ending
// in 'i'. Examples: "0.5", "0.3+0.1i", "-0.2i", "i", "1e-3-2.5e-4i".
Complex parse_complex(std::string_view text);

// Comma-separated literals; the empty string is the empty list.
std::vector<Complex> parse_complex_list(std::string_view text);

// Shortest form that parses back to the same value.
std::string format_complex(Complex v);

}  // namespace qseries
