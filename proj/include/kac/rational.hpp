#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74 implements `int == rational` by swapping the operands, which
// C++20 rewritten comparisons turn into endless recursion. Exact non-template
// overloads win overload resolution and keep mixed comparisons finite.
namespace boost {
inline bool operator==(const rational<long>& a, long b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(const rational<long>& a, int b) { return a == static_cast<long>(b); }
}  // namespace boost

namespace kac {

using Int = std::int64_t;
static_assert(std::is_same_v<Int, long>, "the boost::rational comparison overloads assume Int is long");
using Rational = boost::rational<Int>;
using RatVec = std::vector<Rational>;
using IntVec = std::vector<Int>;

/// Largest integer not exceeding x.
Int floor(const Rational& x);

/// Representative of x modulo Z in [0, 1).
Rational frac(const Rational& x);

inline bool is_integer(const Rational& x) { return x.denominator() == 1; }

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& x);

/// Accepts "a", "-a", "a/b". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

RatVec to_rational(const IntVec& v);

/// Componentwise reduction into [0, 1).
RatVec frac(const RatVec& v);

bool is_zero(const RatVec& v);

}  // namespace kac
