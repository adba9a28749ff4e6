#include "rscrit/rational.hpp"

#include <cctype>
#include <limits>

#include "rscrit/error.hpp"

namespace rscrit {

namespace {

boost::multiprecision::cpp_int parseInteger(std::string_view s, std::string_view whole) {
  if (s.empty()) raise(ErrorCode::InvalidArgument, "malformed rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) raise(ErrorCode::InvalidArgument, "malformed rational '" + std::string(whole) + "'");
  boost::multiprecision::cpp_int v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      raise(ErrorCode::InvalidArgument, "malformed rational '" + std::string(whole) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? -v : v;
}

}  // namespace

std::string toString(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parseRational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parseInteger(s, s));
  auto num = parseInteger(s.substr(0, slash), s);
  auto den = parseInteger(s.substr(slash + 1), s);
  if (den == 0) raise(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

bool isInteger(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

Int toInt(const Rational& q) {
  if (!isInteger(q)) raise(ErrorCode::NonIntegralResult, "value " + toString(q) + " is not an integer");
  auto num = boost::multiprecision::numerator(q);
  if (num > std::numeric_limits<Int>::max() || num < std::numeric_limits<Int>::min())
    raise(ErrorCode::TooLarge, "value " + toString(q) + " does not fit in 64 bits");
  return num.convert_to<Int>();
}

Rational fromDoubled(Int doubled) { return Rational(doubled, 2); }

std::string doubledToString(Int doubled) { return toString(fromDoubled(doubled)); }

Int floorDiv(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int ceilDiv(Int a, Int b) { return -floorDiv(-a, b); }

}  // namespace rscrit
