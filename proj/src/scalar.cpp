#include "watchtower/scalar.hpp"
#include "watchtower/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace watchtower {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::VerticalLine: return "VerticalLine";
    case ErrorCode::NonMonotoneX: return "NonMonotoneX";
    case ErrorCode::IntervalInverted: return "IntervalInverted";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::ApexOutsideStrip: return "ApexOutsideStrip";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidChannel: return "InvalidChannel";
    case ErrorCode::EndpointOutsideChannel: return "EndpointOutsideChannel";
    case ErrorCode::DegeneratePolyline: return "DegeneratePolyline";
    case ErrorCode::OutsideDomain: return "OutsideDomain";
    case ErrorCode::InvalidMesh: return "InvalidMesh";
    case ErrorCode::InvalidTower: return "InvalidTower";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonPositiveEpsilon: return "NonPositiveEpsilon";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

} // namespace

Scalar parse_scalar(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(s.begin());
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "sign without digits: '" + text + "'");

  Scalar value;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw Error(ErrorCode::ParseError, "bad fraction: '" + text + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + text + "'");
    value = Scalar(n, d);
    value.canonicalize();
  } else if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw Error(ErrorCode::ParseError, "bad decimal: '" + text + "'");
    if (!whole.empty() && !all_digits(whole))
      throw Error(ErrorCode::ParseError, "bad decimal: '" + text + "'");
    if (!frac.empty() && !all_digits(frac))
      throw Error(ErrorCode::ParseError, "bad decimal: '" + text + "'");
    mpz_class n(whole.empty() ? std::string("0") : whole);
    mpz_class den = 1;
    for (char c : frac) {
      n = n * 10 + (c - '0');
      den *= 10;
    }
    value = Scalar(n, den);
    value.canonicalize();
  } else {
    if (!all_digits(s)) throw Error(ErrorCode::ParseError, "bad integer: '" + text + "'");
    value = Scalar(mpz_class(s));
  }
  if (negative) value = -value;
  return value;
}

std::string to_fraction_string(const Scalar& v) {
  Scalar c = v;
  c.canonicalize(); // two-argument mpq_class constructions may not be reduced
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_decimal_string(const Scalar& v, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (v == 0) {
    std::string zeros(static_cast<size_t>(significant_digits - 1), '0');
    return "0." + zeros;
  }
  bool negative = v < 0;
  mpz_class num = abs(v.get_num());
  mpz_class den = v.get_den();

  // Scale so that the integer quotient carries exactly
  // significant_digits digits, then round half away from zero.
  mpz_class scaled_num = num;
  int exponent = 0; // digits of the value left of the decimal point
  mpz_class q = scaled_num / den;
  if (q > 0) {
    exponent = static_cast<int>(q.get_str().size());
  } else {
    // |v| < 1 : shift up until the quotient becomes nonzero
    while (q == 0) {
      scaled_num *= 10;
      --exponent;
      q = scaled_num / den;
    }
    exponent += 1; // first nonzero digit position
    scaled_num = num;
  }

  int shift = significant_digits - exponent;
  mpz_class n = num;
  mpz_class d = den;
  if (shift >= 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    n *= p;
  } else {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    d *= p;
  }
  mpz_class digits = (2 * n + d) / (2 * d); // round half up on |v|
  std::string dig = digits.get_str();
  // Rounding may add a digit (e.g. 999.95 -> 1000); adjust exponent.
  if (static_cast<int>(dig.size()) > significant_digits) {
    dig.pop_back();
    ++exponent;
  }

  std::string out;
  if (exponent <= 0) {
    out = "0." + std::string(static_cast<size_t>(-exponent), '0') + dig;
  } else if (exponent >= static_cast<int>(dig.size())) {
    out = dig + std::string(static_cast<size_t>(exponent) - dig.size(), '0');
  } else {
    out = dig.substr(0, static_cast<size_t>(exponent)) + "." +
          dig.substr(static_cast<size_t>(exponent));
  }
  return negative ? "-" + out : out;
}

} // namespace watchtower
