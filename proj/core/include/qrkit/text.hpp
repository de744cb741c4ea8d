#pragma once

#include <string>

#include "qrkit/gaussian.hpp"
#include "qrkit/modular.hpp"
#include "qrkit/quadratic_forms.hpp"

namespace qrkit {

// "a+bi" / "a-bi" / "a" / "bi" / "i" / "-i"; raises ParseError
Gaussian parse_gaussian(const std::string& s);

// "n" or "n/d" with d != 0; raises ParseError
Rational parse_rational(const std::string& s);

std::string gaussian_str(const Gaussian& z);
std::string quartic_str(const QuarticValue& v);  // "i^r (=unit)"
std::string rational_str(const Rational& r);
std::string form_str(const Form& f);  // "[a,b,c]"

}  // namespace qrkit
