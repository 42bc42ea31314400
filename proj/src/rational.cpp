#include "flatcert/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace flatcert {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  // U+2212 in UTF-8
  const std::string minus = "\xE2\x88\x92";
  if (s.rfind(minus, 0) == 0) s = "-" + s.substr(minus.size());

  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw std::invalid_argument("empty rational: '" + text + "'");

  Rational out;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("not a rational: '" + text + "'");
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    out = Rational(Integer(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (fp.empty() || !all_digits(ip) || !all_digits(fp))
      throw std::invalid_argument("not a decimal: '" + text + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    out = Rational(Integer(ip) * scale + Integer(fp), scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("not a rational: '" + text + "'");
    out = Rational(Integer(s));
  }
  out.canonicalize();
  return neg ? Rational(-out) : out;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace flatcert
