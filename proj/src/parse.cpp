#include "ffsqfree/parse.hpp"

#include <cctype>
#include <cstdint>

#include "ffsqfree/error.hpp"

namespace ffsqfree {

namespace {

constexpr std::uint64_t kMaxExponent = 1u << 16;

class Parser {
 public:
  Parser(std::string_view text, const FieldPtr& field, VariableSet vars)
      : text_(text), field_(field), vars_(vars) {}

  BiPoly parse() {
    BiPoly out = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& msg, ErrorKind kind = ErrorKind::SyntaxError) const {
    throw Error(kind, msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_primary_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  BiPoly constant(FieldElem c) const {
    return BiPoly::from_t(UniPoly::constant(field_, c));
  }

  BiPoly expr() {
    skip_ws();
    bool negate = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    BiPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      const char op = text_[pos_];
      if (op != '+' && op != '-') break;
      ++pos_;
      BiPoly rhs = term();
      if (op == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
    return acc;
  }

  BiPoly term() {
    BiPoly acc = factor();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (at_primary_start()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  BiPoly factor() {
    BiPoly base = primary();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        error("expected an exponent");
      std::uint64_t e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (e > kMaxExponent) error("exponent too large");
        ++pos_;
      }
      BiPoly acc = constant(field_->one());
      for (; e > 0; e >>= 1) {
        if (e & 1) acc = acc * base;
        if (e > 1) base = base * base;
      }
      return acc;
    }
    return base;
  }

  BiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') error("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = (value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0')) % field_->p();
        ++pos_;
      }
      return constant(FieldElem{value});
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "t") return BiPoly::from_t(UniPoly::variable(field_));
      if (name == "x") {
        if (vars_ == VariableSet::T) {
          pos_ = start;
          error("variable 'x' not allowed here", ErrorKind::UnknownVariable);
        }
        return BiPoly::variable(field_);
      }
      if (name == "u") {
        if (field_->is_prime_field()) {
          pos_ = start;
          error("'u' is not an element of the prime field F_" + std::to_string(field_->p()),
                ErrorKind::CoefficientOutOfField);
        }
        return constant(field_->generator());
      }
      pos_ = start;
      error("unknown variable '" + std::string(name) + "'", ErrorKind::UnknownVariable);
    }
    error("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const FieldPtr& field_;
  VariableSet vars_;
  std::size_t pos_ = 0;
};

bool needs_parens(const std::string& s) {
  return s.find('+') != std::string::npos;
}

// One monomial c*t^i; c is parenthesized when it is a sum.
std::string format_monomial(const Field& F, FieldElem c, std::size_t i) {
  if (i == 0) return F.format(c);
  std::string var = i == 1 ? "t" : "t^" + std::to_string(i);
  if (c == F.one()) return var;
  std::string cs = F.format(c);
  if (needs_parens(cs)) cs = "(" + cs + ")";
  return cs + "*" + var;
}

std::string format_sum(const UniPoly& f, const char* sep) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto coeffs = f.coeffs();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (f.field().is_zero(coeffs[i])) continue;
    if (!out.empty()) out += sep;
    out += format_monomial(f.field(), coeffs[i], i);
  }
  return out;
}

std::size_t term_count(const UniPoly& f) {
  std::size_t n = 0;
  for (auto c : f.coeffs())
    if (c.code != 0) ++n;
  return n;
}

}  // namespace

BiPoly parse_poly(std::string_view text, const FieldPtr& field, VariableSet vars) {
  return Parser(text, field, vars).parse();
}

BiPoly parse_bipoly(std::string_view text, const FieldPtr& field) {
  return parse_poly(text, field, VariableSet::TX);
}

UniPoly parse_unipoly(std::string_view text, const FieldPtr& field) {
  BiPoly f = parse_poly(text, field, VariableSet::T);
  return f.gamma(0);
}

FieldElem parse_element(std::string_view text, const FieldPtr& field) {
  UniPoly f = parse_unipoly(text, field);
  if (f.degree() > 0) throw Error(ErrorKind::UnknownVariable, "field element may not contain 't'", 0);
  return f.coeff(0);
}

std::string format(const UniPoly& f) { return format_sum(f, " + "); }

std::string format(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t j = f.gammas().size(); j-- > 0;) {
    const UniPoly& g = f.gammas()[j];
    if (g.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (j == 0) {
      out += format_sum(g, " + ");
      continue;
    }
    const std::string xs = j == 1 ? "x" : "x^" + std::to_string(j);
    if (g.is_one()) {
      out += xs;
    } else if (term_count(g) == 1) {
      std::string mono = format_sum(g, "+");
      if (g.degree() == 0 && needs_parens(mono)) mono = "(" + mono + ")";
      out += mono + "*" + xs;
    } else {
      out += "(" + format_sum(g, "+") + ")*" + xs;
    }
  }
  return out;
}

}  // namespace ffsqfree
