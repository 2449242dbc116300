#include "cfrac/bigint.hpp"

#include <cctype>
#include <string>

#include "cfrac/errors.hpp"

namespace cfrac {

BigInt parse_bigint(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);

  std::size_t digits_at = (!body.empty() && (body[0] == '-' || body[0] == '+')) ? 1 : 0;
  if (digits_at == body.size()) {
    throw Error(ErrorKind::Syntax, "expected an integer, got '" + std::string(text) + "'");
  }
  for (std::size_t i = digits_at; i < body.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(body[i]))) {
      throw Error(ErrorKind::Syntax, "expected an integer, got '" + std::string(text) + "'");
    }
  }
  // mpz_set_str rejects a leading '+'.
  std::string normalized(body[0] == '+' ? body.substr(1) : body);
  return BigInt(normalized, 10);
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "isqrt of a negative number");
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

bool is_perfect_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

BigInt floor_div(const BigInt& numerator, const BigInt& divisor) {
  if (divisor == 0) throw Error(ErrorKind::DivisionByZero, "integer division by zero");
  BigInt quotient;
  mpz_fdiv_q(quotient.get_mpz_t(), numerator.get_mpz_t(), divisor.get_mpz_t());
  return quotient;
}

BigInt pow10(unsigned long exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

std::string format_fixed_point(const BigInt& scaled, unsigned digits) {
  const BigInt scale = pow10(digits);
  BigInt magnitude = abs(scaled);
  std::string out;
  if (scaled < 0) out += '-';
  out += BigInt(magnitude / scale).get_str();
  if (digits > 0) {
    std::string frac = BigInt(magnitude % scale).get_str();
    out += '.';
    out.append(digits - frac.size(), '0');
    out += frac;
  }
  return out;
}

}  // namespace cfrac
