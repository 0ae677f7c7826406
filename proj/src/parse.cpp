#include "psi/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "psi/errors.hpp"

namespace psi {

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::size_t d) : text_(text), d_(d) {}

  Polynomial run() {
    if (d_ == 0) throw DimensionMismatch("polynomial ring needs at least one variable");
    Polynomial result(d_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip_ws();
      auto [m, c] = term();
      result.add_term(m, sign > 0 ? c : Scalar(-c));
    }
    return result;
  }

 private:
  std::pair<Monomial, Scalar> term() {
    Scalar coeff(1);
    std::vector<Exponent> exps(d_, 0);
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      skip_ws();
      if (at_end() || peek() != '*') return {Monomial(std::move(exps)), coeff};
      ++pos_;
      skip_ws();
    }
    factor(exps);
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip_ws();
      factor(exps);
    }
    return {Monomial(std::move(exps)), coeff};
  }

  void factor(std::vector<Exponent>& exps) {
    if (at_end() || peek() != 'x') fail("expected variable 'x<index>'");
    std::size_t start = pos_;
    ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected variable index");
    }
    mpz_class index = integer();
    if (index < 1 || index > static_cast<unsigned long>(d_)) {
      throw ParseError("variable x" + index.get_str() + " out of range 1.." + std::to_string(d_),
                       start);
    }
    mpz_class exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      std::size_t exp_start = pos_;
      exponent = integer();
      if (exponent > 1000000) throw ParseError("exponent too large", exp_start);
    }
    exps[index.get_ui() - 1] += static_cast<Exponent>(exponent.get_ui());
  }

  Scalar rational() {
    mpz_class num = integer();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t den_start = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      mpz_class den = integer();
      if (den == 0) throw ParseError("zero denominator", den_start);
      Scalar q(num, den);
      q.canonicalize();
      return q;
    }
    return Scalar(num);
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t d_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t d) {
  return PolynomialParser(text, d).run();
}

}  // namespace psi
