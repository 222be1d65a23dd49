#include "qseries/complex_literal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace qseries {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view text) {
  throw ParseError("not a complex literal: \"" + std::string(text) + "\"");
}

Real parse_real(std::string_view s, std::string_view whole) {
  if (s.empty()) fail(whole);
  std::string_view body = s;
  if (body.front() == '+') body.remove_prefix(1);
  Real v = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc() || ptr != body.data() + body.size()) fail(whole);
  return v;
}

// Coefficient of a trailing-i part: "" or "+" means 1, "-" means -1.
Real parse_imag(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return parse_real(s, whole);
}

// Finds where the imaginary part starts: the last sign that is neither the
// first character nor part of an exponent.
std::size_t split_point(std::string_view s) {
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') return i;
  }
  return 0;
}

std::string shortest(Real v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) fail(text);
  if (s.back() != 'i') return {parse_real(s, text), 0};
  s.remove_suffix(1);
  const std::size_t cut = split_point(s);
  if (cut == 0) return {0, parse_imag(s, text)};
  return {parse_real(s.substr(0, cut), text), parse_imag(s.substr(cut), text)};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  std::string_view s = trim(text);
  if (s.empty()) return out;
  while (true) {
    const std::size_t comma = s.find(',');
    out.push_back(parse_complex(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_complex(Complex v) {
  if (v.imag() == 0 && !std::signbit(v.imag())) return shortest(v.real());
  std::string im = shortest(v.imag()) + "i";
  if (v.real() == 0 && !std::signbit(v.real())) return im;
  if (im.front() != '-') im.insert(im.begin(), '+');
  return shortest(v.real()) + im;
}

}  // namespace qseries
