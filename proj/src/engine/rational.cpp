#include "spikecount/rational.hpp"

#include <cctype>
#include <limits>

#include "spikecount/errors.hpp"

namespace spikecount {
namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw ParseError("expected digits in number '" + std::string(whole) + "'");
  }
  std::int64_t value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("invalid character in number '" + std::string(whole) + "'");
    }
    if (value > (kMax - (c - '0')) / 10) {
      throw ParseError("number out of range '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_digits(body.substr(0, slash), text);
    std::int64_t den = parse_digits(body.substr(slash + 1), text);
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    result = Rational(num, den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    std::int64_t whole = parse_digits(int_part, text);
    std::int64_t frac = parse_digits(frac_part, text);
    if (frac_part.size() > 18) {
      throw ParseError("too many fractional digits in '" + std::string(text) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) {
      scale *= 10;
    }
    if (whole > (kMax - frac) / scale) {
      throw ParseError("number out of range '" + std::string(text) + "'");
    }
    result = Rational(whole * scale + frac, scale);
  } else {
    result = Rational(parse_digits(body, text));
  }
  return negative ? -result : result;
}

std::string format_rational(const Rational &value) {
  std::int64_t num = value.numerator();
  std::int64_t den = value.denominator();

  std::int64_t reduced = den;
  int twos = 0;
  int fives = 0;
  while (reduced % 2 == 0) {
    reduced /= 2;
    ++twos;
  }
  while (reduced % 5 == 0) {
    reduced /= 5;
    ++fives;
  }
  if (reduced != 1) {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Scale to a power of ten: num/den == scaled / 10^places.
  int places = twos > fives ? twos : fives;
  __extension__ __int128 scaled = num;
  for (int i = twos; i < places; ++i) scaled *= 2;
  for (int i = fives; i < places; ++i) scaled *= 5;

  bool negative = scaled < 0;
  __extension__ unsigned __int128 magnitude = negative ? -scaled : scaled;
  std::string digits;
  do {
    digits.insert(digits.begin(), static_cast<char>('0' + magnitude % 10));
    magnitude /= 10;
  } while (magnitude != 0);
  if (places > 0) {
    while (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(digits.begin(), '0');
    }
    digits.insert(digits.end() - places, '.');
  }
  return negative ? "-" + digits : digits;
}

} // namespace spikecount
