#include "qrkit/text.hpp"

#include <regex>
#include <stdexcept>

#include "qrkit/errors.hpp"

namespace qrkit {

namespace {

int64_t to_i64(const std::string& s, const std::string& whole) {
  try {
    return std::stoll(s);
  } catch (const std::logic_error&) {
    raise("ParseError", "integer out of range in '" + whole + "'");
  }
}

// "", "+", "-" mean 1, 1, -1; otherwise a signed integer
int64_t coeff(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return to_i64(s, whole);
}

}  // namespace

Gaussian parse_gaussian(const std::string& s) {
  static const std::regex real_re(R"(^\s*([+-]?\d+)\s*$)");
  static const std::regex imag_re(R"(^\s*([+-]?\d*)\s*i\s*$)");
  static const std::regex full_re(R"(^\s*([+-]?\d+)\s*([+-])\s*(\d*)\s*i\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, real_re)) return {to_i64(m[1], s), 0};
  if (std::regex_match(s, m, imag_re)) return {0, coeff(m[1], s)};
  if (std::regex_match(s, m, full_re)) {
    int64_t im = coeff(m[3], s);
    if (m[2] == "-") im = -im;
    return {to_i64(m[1], s), im};
  }
  raise("ParseError", "cannot read '" + s + "' as a+bi");
}

Rational parse_rational(const std::string& s) {
  static const std::regex re(R"(^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?$)");
  std::smatch m;
  if (!std::regex_match(s, m, re))
    raise("ParseError", "cannot read '" + s + "' as n or n/d");
  Rational r;
  r.num = to_i64(m[1], s);
  r.den = m[2].matched ? to_i64(m[2], s) : 1;
  if (r.den == 0) raise("ParseError", "zero denominator in '" + s + "'");
  return r;
}

std::string gaussian_str(const Gaussian& z) {
  if (z.im == 0) return std::to_string(z.re);
  std::string im;
  if (z.im == 1)
    im = "i";
  else if (z.im == -1)
    im = "-i";
  else
    im = std::to_string(z.im) + "i";
  if (z.re == 0) return im;
  return std::to_string(z.re) + (z.im > 0 ? "+" : "") + im;
}

std::string quartic_str(const QuarticValue& v) {
  static const char* units[4] = {"1", "i", "-1", "-i"};
  return "i^" + std::to_string(v.r) + " (=" + units[v.r & 3] + ")";
}

std::string rational_str(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string form_str(const Form& f) {
  return "[" + std::to_string(f.a) + "," + std::to_string(f.b) + "," +
         std::to_string(f.c) + "]";
}

}  // namespace qrkit
