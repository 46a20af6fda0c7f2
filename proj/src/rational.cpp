#include "kac/rational.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace kac {

Int floor(const Rational& x) {
  // boost keeps the denominator positive
  Int q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
  return q;
}

Rational frac(const Rational& x) { return x - Rational(floor(x)); }

std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace {

Int parse_int(std::string_view text, std::string_view whole) {
  Int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  auto slash = trimmed.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(trimmed, text));
  Int num = parse_int(trimmed.substr(0, slash), text);
  Int den = parse_int(trimmed.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (Int x : v) out.emplace_back(x);
  return out;
}

RatVec frac(const RatVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(frac(x));
  return out;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace kac
