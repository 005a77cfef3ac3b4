#include "tilingaf/rational.hpp"

#include <cctype>

#include "tilingaf/errors.hpp"

namespace tilingaf {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw InputError("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw InputError("bad rational literal '" + text + "'");
    try {
      Rational q(num + "/" + den);
      if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw InputError("bad rational literal '" + text + "'");
    }
  }

  auto dot = s.find('.');
  if (dot == std::string::npos) {
    try {
      Rational q(s);
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw InputError("bad rational literal '" + text + "'");
    }
  }

  // Exact decimal: digits before and after the dot over a power of ten.
  std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
  bool neg = false;
  if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
    neg = head[0] == '-';
    head.erase(head.begin());
  }
  if (tail.empty() && head.empty()) throw InputError("bad decimal literal '" + text + "'");
  for (char c : head + tail)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("bad decimal literal '" + text + "'");
  Integer scale = 1;
  for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
  Integer digits(head.empty() ? std::string("0") : head);
  digits *= scale;
  digits += Integer(tail.empty() ? std::string("0") : tail);
  Rational q(digits, scale);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer rational_floor(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace tilingaf
