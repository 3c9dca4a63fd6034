#include "oscrep/rational.hpp"

#include <cctype>

namespace oscrep {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!all_digits(den)) {
      throw std::invalid_argument("parse_rational: bad denominator in '" + std::string(text) + "'");
    }
  }
  if (!all_digits(num)) {
    throw std::invalid_argument("parse_rational: bad numerator in '" + std::string(text) + "'");
  }
  Rational q(std::string(body), 10);
  if (q.get_den() == 0) {
    throw std::invalid_argument("parse_rational: zero denominator in '" + std::string(text) + "'");
  }
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace oscrep
