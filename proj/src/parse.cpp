#include "genus0/parse.hpp"

#include <cctype>

namespace genus0 {

namespace {

// Fraction of polynomials of type P built while walking the expression tree.
// P supplies: constant(Rat), from_var(char, pos), +, -, *, pow, is_zero.
template <class Policy>
struct Frac {
  typename Policy::poly_t num, den;
};

template <class Policy>
class Parser {
 public:
  Parser(const std::string& text, bool allow_nonconstant_division)
      : text_(text), free_division_(allow_nonconstant_division) {}

  Frac<Policy> parse() {
    Frac<Policy> r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  using P = typename Policy::poly_t;

  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool take(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Frac<Policy> expr() {
    Frac<Policy> acc = term();
    for (;;) {
      if (take('+')) {
        Frac<Policy> rhs = term();
        acc = add(acc, rhs, false);
      } else if (peek('-')) {
        ++pos_;
        Frac<Policy> rhs = term();
        acc = add(acc, rhs, true);
      } else {
        return acc;
      }
    }
  }

  Frac<Policy> term() {
    Frac<Policy> acc = factor();
    for (;;) {
      if (take('*')) {
        Frac<Policy> rhs = factor();
        acc = Frac<Policy>{acc.num * rhs.num, acc.den * rhs.den};
      } else if (peek('/')) {
        std::size_t at = pos_;
        ++pos_;
        Frac<Policy> rhs = factor();
        if (rhs.num.is_zero()) throw parse_error("division by zero", at);
        if (!free_division_ && !rhs.num.is_constant())
          throw parse_error("division by a non-constant expression", at);
        acc = Frac<Policy>{acc.num * rhs.den, acc.den * rhs.num};
      } else {
        return acc;
      }
    }
  }

  Frac<Policy> factor() {
    bool negate = false;
    for (;;) {
      if (take('+')) continue;
      if (peek('-')) {
        ++pos_;
        negate = !negate;
        continue;
      }
      break;
    }
    Frac<Policy> b = base();
    if (negate) b.num = -b.num;
    return b;
  }

  Frac<Policy> base() {
    Frac<Policy> p = primary();
    if (take('^')) {
      skip_ws();
      std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw parse_error("expected a nonnegative integer exponent", at);
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > 64) throw parse_error("exponent too large", at);
        ++pos_;
      }
      return Frac<Policy>{Policy::pow(p.num, static_cast<unsigned>(e)),
                          Policy::pow(p.den, static_cast<unsigned>(e))};
    }
    return p;
  }

  Frac<Policy> primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Int v(text_.substr(start, pos_ - start));
      return Frac<Policy>{Policy::constant(Rat(v)), Policy::constant(Rat(1))};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      return Frac<Policy>{Policy::from_var(c, pos_ - 1), Policy::constant(Rat(1))};
    }
    if (c == '(') {
      ++pos_;
      Frac<Policy> inner = expr();
      if (!take(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  static Frac<Policy> add(const Frac<Policy>& a, const Frac<Policy>& b, bool subtract) {
    P n = subtract ? a.num * b.den - b.num * a.den : a.num * b.den + b.num * a.den;
    return Frac<Policy>{std::move(n), a.den * b.den};
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  bool free_division_;
};

struct CurvePolicy {
  using poly_t = Poly2;
  static Poly2 constant(const Rat& v) { return Poly2::constant(v); }
  static Poly2 from_var(char c, std::size_t pos) {
    if (c == 'x') return Poly2::var_x();
    if (c == 'y') return Poly2::var_y();
    throw parse_error(std::string("unknown variable '") + c + "' (expected x or y)", pos);
  }
  static Poly2 pow(const Poly2& p, unsigned e) { return poly2_pow(p, e); }
};

struct ParamPolicy {
  using poly_t = UPoly<Rat>;
  static UPoly<Rat> constant(const Rat& v) { return UPoly<Rat>::constant(v); }
  static UPoly<Rat> from_var(char c, std::size_t pos) {
    if (c == 't') return UPoly<Rat>::var();
    throw parse_error(std::string("unknown variable '") + c + "' (expected t)", pos);
  }
  static UPoly<Rat> pow(const UPoly<Rat>& p, unsigned e) { return upoly_pow(p, e); }
};

}  // namespace

Poly2 parse_poly(const std::string& text) {
  Parser<CurvePolicy> parser(text, /*allow_nonconstant_division=*/false);
  Frac<CurvePolicy> f = parser.parse();
  // The denominator is a nonzero constant here; divide through.
  Rat d = f.den.coeff(0, 0);
  Poly2 out;
  for (const auto& [ij, v] : f.num.terms) out.set(ij.first, ij.second, v / d);
  return out;
}

URat<Rat> parse_ratfunc(const std::string& text) {
  Parser<ParamPolicy> parser(text, /*allow_nonconstant_division=*/true);
  Frac<ParamPolicy> f = parser.parse();
  if (f.num.is_zero()) return URat<Rat>();
  return URat<Rat>(f.num, f.den);
}

std::vector<URat<Rat>> parse_param_list(const std::string& text) {
  std::vector<URat<Rat>> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string piece =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    try {
      out.push_back(parse_ratfunc(piece));
    } catch (const parse_error& e) {
      throw parse_error(e.bare, e.pos + start);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace genus0
