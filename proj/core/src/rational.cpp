#include "hcube/rational.hpp"

#include <cctype>

#include "hcube/error.hpp"

namespace hcube {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::EmptySampleSet: return "EmptySampleSet";
    case ErrorCode::AnchorOnBoundary: return "AnchorOnBoundary";
    case ErrorCode::Unclassifiable: return "Unclassifiable";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::NoPreimage: return "NoPreimage";
    case ErrorCode::MultiplePreimages: return "MultiplePreimages";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::HorizonExceeded: return "HorizonExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IOError: return "IOError";
  }
  return "Unknown";
}

Rational pow2(long e) {
  Rational r(1);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);

  if (!is_integer_literal(num)) {
    throw Error(ErrorCode::ParseError, "bad numerator in rational \"" + std::string(text) + "\"");
  }
  if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::ParseError, "bad denominator in rational \"" + std::string(text) + "\"");
  }

  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_decimal(const Rational& r, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

  // round(|r| * 10^digits), half away from zero
  const mpz_class num = abs(r.get_num()) * scale * 2 + r.get_den();
  const mpz_class den = r.get_den() * 2;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());

  std::string digits_str = q.get_str(10);
  if (digits > 0) {
    if (digits_str.size() <= static_cast<std::size_t>(digits)) {
      digits_str.insert(0, static_cast<std::size_t>(digits) + 1 - digits_str.size(), '0');
    }
    digits_str.insert(digits_str.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool negative = r < 0 && q != 0;
  return negative ? "-" + digits_str : digits_str;
}

bool exact_log2(const Rational& r, long& exponent) {
  if (r <= 0) return false;
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (num == 1 && mpz_popcount(den.get_mpz_t()) == 1) {
    exponent = -static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
    return true;
  }
  if (den == 1 && mpz_popcount(num.get_mpz_t()) == 1) {
    exponent = static_cast<long>(mpz_scan1(num.get_mpz_t(), 0));
    return true;
  }
  return false;
}

}  // namespace hcube
