#include "ffvojta/rational.hpp"

#include <cctype>

#include "ffvojta/error.hpp"

namespace ffvojta {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::STooSmall: return "STooSmall";
    case ErrorCode::InvalidPlace: return "InvalidPlace";
    case ErrorCode::InvalidUnit: return "InvalidUnit";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NotSInteger: return "NotSInteger";
    case ErrorCode::ZeroDifference: return "ZeroDifference";
    case ErrorCode::ConstantQuotient: return "ConstantQuotient";
    case ErrorCode::VanishingSubsum: return "VanishingSubsum";
    case ErrorCode::SumNonzero: return "SumNonzero";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::DegenerateDegree: return "DegenerateDegree";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::EmptyFactorization: return "EmptyFactorization";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::SectionInsideZ: return "SectionInsideZ";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::NotIrreducibleAttested: return "NotIrreducibleAttested";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_int(num, true) || (slash != std::string_view::npos && !valid_int(den, false)))
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  Rational q;
  q.get_num() = Integer(n);
  q.get_den() = den.empty() ? Integer(1) : Integer(std::string(den));
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, long exponent) {
  Rational b = base;
  if (exponent < 0) {
    if (b == 0) throw Error(ErrorCode::InvalidInput, "negative power of zero");
    b = 1 / b;
    exponent = -exponent;
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  r.canonicalize();
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace ffvojta
