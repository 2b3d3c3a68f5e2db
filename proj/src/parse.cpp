// Recursive-descent parser for the textual element format.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (['*'|'/'] power)*        juxtaposition multiplies
//   power  := atom ['^' ['-'] integer]
//   atom   := integer | 'z' | 'x1' | 'x2' | 'y' | '(' expr ')'
//
// Products keep the written order. Division and negative powers are only
// allowed for scalars.

#include <cctype>

#include "a2ext/qalgebra.hpp"

namespace a2ext {

namespace {

template <ExactField F>
class Parser {
 public:
  Parser(const Algebra<F>& alg, std::string_view text) : alg_(alg), text_(text) {}

  Element<F> run() {
    auto e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw AlgebraError(AlgebraError::Kind::Parse, "parse error at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_atom_start() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'z' || c == 'x' || c == 'y' || c == '(';
  }

  Element<F> expr() {
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    auto acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Element<F> term() {
    auto acc = power();
    for (;;) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        auto d = power();
        acc = acc.scaled(alg_.field().inv(as_scalar(d, "divisor")));
      } else if (at_atom_start()) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  typename F::Elem as_scalar(const Element<F>& e, const char* what) {
    const F& f = alg_.field();
    if (e.is_zero()) fail(std::string(what) + " is zero");
    if (e.terms().size() != 1 || e.terms()[0].first != 0) fail(std::string(what) + " must be a scalar");
    if (f.is_zero(e.terms()[0].second)) fail(std::string(what) + " is zero");
    return e.terms()[0].second;
  }

  Element<F> power() {
    auto base = atom();
    if (!eat('^')) return base;
    const bool negative = eat('-');
    skip();
    const long long e = integer();
    if (negative) return alg_.scalar(alg_.field().pow(as_scalar(base, "base of a negative power"), -e));
    return alg_.power(base, static_cast<unsigned>(e));
  }

  long long integer() {
    skip();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 100000000000000LL) fail("integer too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  Element<F> atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return alg_.integer(integer());
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == 'z') {
      ++pos_;
      const F& f = alg_.field();
      return alg_.scalar(f.root_of_unity(f.root_order()));
    }
    if (c == 'y') {
      ++pos_;
      if (alg_.is_n2()) fail("y is not available for N = 2");
      return alg_.y();
    }
    if (c == 'x' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == '1' || text_[pos_ + 1] == '2')) {
      const bool first = text_[pos_ + 1] == '1';
      pos_ += 2;
      return first ? alg_.x1() : alg_.x2();
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Algebra<F>& alg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

template <ExactField F>
Element<F> Algebra<F>::parse(std::string_view text) const {
  return Parser<F>(*this, text).run();
}

template Element<PrimeField> Algebra<PrimeField>::parse(std::string_view) const;
template Element<CyclotomicField> Algebra<CyclotomicField>::parse(std::string_view) const;

}  // namespace a2ext
