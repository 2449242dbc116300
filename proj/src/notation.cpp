#include "cfrac/notation.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "cfrac/errors.hpp"

namespace cfrac {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ContinuedFraction parse() {
    expect('[');
    skip_space();
    std::vector<BigInt> pre;
    if (peek() == '(') return finish_periodic(std::move(pre));

    pre.push_back(integer(/*tail=*/false));
    skip_space();
    if (peek() == ']') return finish_finite(std::move(pre));
    if (peek() != ';' && peek() != ',') fail(ErrorKind::Syntax, "expected ';', ',' or ']'");
    ++pos_;

    while (true) {
      skip_space();
      if (peek() == '(') return finish_periodic(std::move(pre));
      pre.push_back(integer(/*tail=*/true));
      skip_space();
      if (peek() == ']') return finish_finite(std::move(pre));
      expect(',');
    }
  }

 private:
  std::optional<char> peek() const {
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(ErrorKind kind, const std::string& message) const { fail_at(kind, pos_, message); }

  [[noreturn]] void fail_at(ErrorKind kind, std::size_t at, const std::string& message) const {
    if (!text_.empty() && at >= text_.size()) at = text_.size() - 1;
    if (text_.empty()) at = 0;
    throw ParseError(kind, at, message);
  }

  void expect(char wanted) {
    skip_space();
    if (peek() != wanted) {
      fail(ErrorKind::Syntax, std::string("expected '") + wanted + "'" +
                                  (peek() ? std::string(", found '") + *peek() + "'"
                                          : std::string(", found end of input")));
    }
    ++pos_;
  }

  // Tail terms (everything after a0) must be >= 1.
  BigInt integer(bool tail) {
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '-') ++pos_;
    const std::size_t digits_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits_start) fail(ErrorKind::Syntax, "expected an integer");
    BigInt value(std::string(text_.substr(start, pos_ - start)), 10);
    if (tail && value < 1) {
      fail_at(ErrorKind::Invariant, start,
              "tail term " + value.get_str() + " must be >= 1 (only a0 may be zero or negative)");
    }
    return value;
  }

  void finish() {
    expect(']');
    skip_space();
    if (pos_ != text_.size()) fail(ErrorKind::Syntax, "unexpected text after ']'");
  }

  ContinuedFraction finish_finite(std::vector<BigInt> pre) {
    finish();
    return FiniteCF(std::move(pre));
  }

  ContinuedFraction finish_periodic(std::vector<BigInt> pre) {
    expect('(');
    skip_space();
    if (peek() == ')') fail(ErrorKind::Invariant, "period must not be empty");
    std::vector<BigInt> period;
    while (true) {
      period.push_back(integer(/*tail=*/true));
      skip_space();
      if (peek() == ')') break;
      expect(',');
    }
    ++pos_;
    finish();
    return PeriodicCF(std::move(pre), std::move(period));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_terms(std::string& out, const std::vector<BigInt>& terms, std::size_t from) {
  for (std::size_t i = from; i < terms.size(); ++i) {
    if (i > from) out += ',';
    out += terms[i].get_str();
  }
}

}  // namespace

ContinuedFraction parse_cf(std::string_view text) { return Parser(text).parse(); }

std::string format_cf(const FiniteCF& cf) {
  std::vector<BigInt> terms(cf.coefficients().begin(), cf.coefficients().end());
  std::string out = "[" + terms.front().get_str();
  if (terms.size() > 1) {
    out += ';';
    append_terms(out, terms, 1);
  }
  return out + "]";
}

std::string format_cf(const PeriodicCF& cf) {
  const auto& pre = cf.pre_period();
  std::string out = "[";
  if (!pre.empty()) {
    out += pre.front().get_str() + ";";
    append_terms(out, pre, 1);
    if (pre.size() > 1) out += ',';
  }
  out += '(';
  append_terms(out, cf.period(), 0);
  return out + ")]";
}

std::string format_cf(const ContinuedFraction& cf) {
  return std::visit([](const auto& value) { return format_cf(value); }, cf);
}

}  // namespace cfrac
