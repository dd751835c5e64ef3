#include "blockalg/expr.hpp"

#include <optional>
#include <ostream>

namespace blockalg {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && is_ws(text[pos])) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool try_consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!try_consume(c)) throw SyntaxError(pos, what);
  }

  void expect_end() {
    skip_ws();
    if (pos != text.size()) throw SyntaxError(pos, "end of input");
  }
};

mpz_class parse_integer(Cursor& cur, bool allow_sign) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  std::string digits;
  if (allow_sign && cur.pos < cur.text.size() && cur.text[cur.pos] == '-') {
    digits += '-';
    ++cur.pos;
  }
  while (cur.pos < cur.text.size() && is_digit(cur.text[cur.pos])) digits += cur.text[cur.pos++];
  if (digits.empty() || digits == "-")
    throw SyntaxError(start, allow_sign ? "integer" : "positive integer");
  return mpz_class(digits, 10);
}

Rational parse_rational(Cursor& cur) {
  mpz_class num = parse_integer(cur, true);
  if (cur.try_consume('/')) {
    cur.skip_ws();
    std::size_t den_start = cur.pos;
    mpz_class den = parse_integer(cur, false);
    if (sgn(den) == 0) throw DomainError(den_start, "denominator must be positive");
    return make_rational(num, den);
  }
  return Rational(num);
}

Scalar parse_scalar_part(Cursor& cur) {
  if (cur.try_consume('(')) {
    Rational re = parse_rational(cur);
    Rational im(0);
    char sign = cur.peek();
    if (sign == '+' || sign == '-') {
      ++cur.pos;
      if (cur.try_consume('i')) {
        im = sign == '+' ? 1 : -1;
      } else {
        Rational mag = parse_rational(cur);
        cur.expect('i', "'i'");
        im = sign == '+' ? mag : Rational(-mag);
      }
    }
    cur.expect(')', "')'");
    return Scalar(std::move(re), std::move(im));
  }
  return Scalar(parse_rational(cur));
}

std::int64_t parse_index_component(Cursor& cur, bool nonnegative) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  mpz_class v = parse_integer(cur, true);
  if (nonnegative && sgn(v) < 0)
    throw DomainError(start, "second basis index must be nonnegative");
  if (!v.fits_slong_p()) throw DomainError(start, "basis index out of range");
  return static_cast<std::int64_t>(v.get_si());
}

BasisIndex parse_basis(Cursor& cur) {
  cur.expect('L', "'L'");
  cur.expect('[', "'['");
  std::int64_t alpha = parse_index_component(cur, false);
  cur.expect(',', "','");
  std::int64_t i = parse_index_component(cur, true);
  cur.expect(']', "']'");
  return BasisIndex(alpha, i);
}

struct Term {
  Scalar coefficient;
  std::optional<BasisIndex> basis;  // nullopt: bare zero scalar
};

Term parse_term(Cursor& cur) {
  if (cur.peek() == 'L') return {Scalar(1), parse_basis(cur)};
  std::size_t start_of_scalar = cur.pos;
  Scalar c = parse_scalar_part(cur);
  if (cur.try_consume('*')) return {std::move(c), parse_basis(cur)};
  if (!c.is_zero())
    throw DomainError(start_of_scalar, "scalar term without a basis vector must be 0");
  return {Scalar(0), std::nullopt};
}

Element parse_element_body(Cursor& cur) {
  Element e;
  bool negate = false;
  char lead = cur.peek();
  if (lead == '+' || lead == '-') {
    ++cur.pos;
    negate = lead == '-';
  }
  for (;;) {
    Term t = parse_term(cur);
    if (t.basis) e.add_term(*t.basis, negate ? Scalar(-t.coefficient) : t.coefficient);
    char sep = cur.peek();
    if (sep != '+' && sep != '-') break;
    ++cur.pos;
    negate = sep == '-';
  }
  return e;
}

// ('+'|'-') already consumed; parses (scalar '*'?)? 'd' and applies the sign.
Scalar parse_lambda_tail(Cursor& cur, bool negative) {
  Scalar lambda(1);
  if (!cur.try_consume('d')) {
    lambda = parse_scalar_part(cur);
    cur.try_consume('*');
    cur.expect('d', "'d'");
  }
  return negative ? Scalar(-lambda) : lambda;
}

}  // namespace

Element parse_element(std::string_view text) {
  Cursor cur{text};
  Element e = parse_element_body(cur);
  cur.expect_end();
  return e;
}

Scalar parse_scalar(std::string_view text) {
  Cursor cur{text};
  Scalar s = parse_scalar_part(cur);
  cur.expect_end();
  return s;
}

BasisIndex parse_basis_index(std::string_view text) {
  Cursor cur{text};
  BasisIndex b = parse_basis(cur);
  cur.expect_end();
  return b;
}

InnerOuterDerivation parse_derivation(std::string_view text) {
  Cursor cur{text};
  InnerOuterDerivation D;
  cur.skip_ws();
  if (cur.peek() == 'a') {
    cur.expect('a', "'ad'");
    if (cur.pos >= cur.text.size() || cur.text[cur.pos] != 'd')
      throw SyntaxError(cur.pos, "'ad'");
    ++cur.pos;
    cur.expect('(', "'('");
    D.inner = parse_element_body(cur);
    cur.expect(')', "')'");
    char sign = cur.peek();
    if (sign == '+' || sign == '-') {
      ++cur.pos;
      D.lambda = parse_lambda_tail(cur, sign == '-');
    }
  } else {
    bool negative = false;
    if (cur.peek() == '-') {
      std::size_t save = cur.pos;
      ++cur.pos;
      if (cur.peek() == 'd') {
        negative = true;
      } else {
        cur.pos = save;  // let the scalar parse its own sign
      }
    }
    D.lambda = parse_lambda_tail(cur, negative);
  }
  cur.expect_end();
  return D;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

std::string format_scalar(const Scalar& s) {
  if (s.is_real()) return format_rational(s.re);
  const Rational mag = abs(s.im);
  std::string out = "(" + format_rational(s.re) + (sgn(s.im) > 0 ? "+" : "-");
  if (mag != 1) out += format_rational(mag);
  return out + "i)";
}

std::string format_basis_index(const BasisIndex& b) {
  return "L[" + std::to_string(b.alpha) + "," + std::to_string(b.i) + "]";
}

std::string format_element(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : x.terms()) {
    const bool negative_real = c.is_real() && sgn(c.re) < 0;
    const Scalar mag = negative_real ? Scalar(-c) : c;
    if (first)
      out += negative_real ? "-" : "";
    else
      out += negative_real ? " - " : " + ";
    if (!(mag.is_real() && mag.re == 1)) out += format_scalar(mag) + "*";
    out += format_basis_index(b);
    first = false;
  }
  return out;
}

std::string format_derivation(const InnerOuterDerivation& D) {
  if (D.lambda.is_zero()) return "ad(" + format_element(D.inner) + ")";

  auto lambda_term = [](const Scalar& lam) {
    if (lam.is_real() && lam.re == 1) return std::string("d");
    return format_scalar(lam) + "*d";
  };

  if (D.inner.is_zero()) return lambda_term(D.lambda);

  std::string out = "ad(" + format_element(D.inner) + ")";
  if (D.lambda.is_real() && sgn(D.lambda.re) < 0)
    return out + " - " + lambda_term(Scalar(-D.lambda));
  return out + " + " + lambda_term(D.lambda);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << format_scalar(s); }
std::ostream& operator<<(std::ostream& os, const BasisIndex& b) {
  return os << format_basis_index(b);
}
std::ostream& operator<<(std::ostream& os, const Element& x) { return os << format_element(x); }
std::ostream& operator<<(std::ostream& os, const InnerOuterDerivation& D) {
  return os << format_derivation(D);
}

}  // namespace blockalg
