#include "homequiv/text.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "homequiv/errors.hpp"

namespace homequiv {

namespace {

constexpr unsigned kMaxExponent = 4096;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

// Mixed-degree polynomial used while parsing; homogeneity is checked at the end.
struct RawPoly {
  std::map<Monomial, Scalar> terms;

  void add(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }

  bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first.degree() == 0); }
  Scalar constant_value() const { return terms.empty() ? Scalar() : terms.begin()->second; }
};

RawPoly constant(std::size_t n, const Scalar& c) {
  RawPoly p;
  p.add(Monomial(n), c);
  return p;
}

RawPoly add(const RawPoly& a, const RawPoly& b, bool subtract) {
  RawPoly p = a;
  for (const auto& [m, c] : b.terms) p.add(m, subtract ? -c : c);
  return p;
}

RawPoly multiply(const RawPoly& a, const RawPoly& b) {
  RawPoly p;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) p.add(ma * mb, ca * cb);
  return p;
}

RawPoly scale(const RawPoly& a, const Scalar& c) {
  RawPoly p;
  for (const auto& [m, coeff] : a.terms) p.add(m, coeff * c);
  return p;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  RawPoly parse() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty expression");
    RawPoly p = expr();
    skip_space();
    if (!at_end()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RawPoly expr() {
    RawPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term(), false);
      } else if (accept('-')) {
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  RawPoly term() {
    RawPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = multiply(acc, unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RawPoly divisor = unary();
        if (!divisor.is_constant()) throw ParseError(at, "division by a non-constant expression");
        if (divisor.terms.empty()) throw ParseError(at, "division by zero");
        acc = scale(acc, divisor.constant_value().inverse());
      } else {
        return acc;
      }
    }
  }

  RawPoly unary() {
    if (accept('-')) return scale(unary(), Scalar(-1));
    if (accept('+')) return unary();
    return power();
  }

  RawPoly power() {
    RawPoly base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    if (at_end() || std::isdigit(static_cast<unsigned char>(text_[pos_])) == 0) {
      throw ParseError(at, "exponent must be a non-negative integer literal");
    }
    mpz_class e = integer_literal();
    if (e > kMaxExponent) throw ParseError(at, "exponent too large");
    RawPoly result = constant(vars_.size(), Scalar(1));
    for (unsigned long k = 0; k < e.get_ui(); ++k) result = multiply(result, base);
    return result;
  }

  mpz_class integer_literal() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  RawPoly atom() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RawPoly inner = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      return constant(vars_.size(), Scalar(mpq_class(integer_literal())));
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (!at_end() && is_ident_char(text_[pos_])) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "i") return constant(vars_.size(), Scalar::i());
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError(start, "unknown variable '" + std::string(name) + "'");
      RawPoly p;
      p.add(Monomial::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin())), Scalar(1));
      return p;
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

void check_var_names(const std::vector<std::string>& vars) {
  for (const auto& v : vars) {
    if (v.empty() || !is_ident_start(v.front()) || !std::all_of(v.begin(), v.end(), is_ident_char)) {
      throw ParseError(0, "invalid variable name '" + v + "'");
    }
    if (v == "i") throw ParseError(0, "'i' is the imaginary unit and cannot name a variable");
  }
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b)
      if (vars[a] == vars[b]) throw ParseError(0, "duplicate variable '" + vars[a] + "'");
}

std::string monomial_text(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t k = 0; k < m.nvars(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[k];
    if (m[k] > 1) out += '^' + std::to_string(m[k]);
  }
  return out;
}

}  // namespace

HomPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  check_var_names(vars);
  RawPoly raw = Parser(text, vars).parse();
  const std::size_t n = vars.size();
  if (raw.terms.empty()) return HomPoly(n, 0);

  unsigned lo = raw.terms.begin()->first.degree();
  unsigned hi = lo;
  for (const auto& [m, c] : raw.terms) {
    lo = std::min(lo, m.degree());
    hi = std::max(hi, m.degree());
  }
  if (lo != hi) throw NonHomogeneousError(lo, hi);

  HomPoly::Terms terms(raw.terms.begin(), raw.terms.end());
  return HomPoly(n, hi, terms);
}

Scalar parse_scalar(std::string_view text) {
  const HomPoly p = parse_poly(text, {});
  return p.is_zero() ? Scalar() : p.terms().begin()->second;
}

void append_term(std::string& out, const Scalar& c, const std::string& mono) {
  bool negative = false;
  std::string body;
  if (c.is_real()) {
    negative = sgn(c.re()) < 0;
    const mpq_class magnitude = abs(c.re());
    if (magnitude == 1 && !mono.empty()) {
      body = mono;
    } else {
      body = magnitude.get_str();
      if (!mono.empty()) body += '*' + mono;
    }
  } else if (sgn(c.re()) == 0) {
    negative = sgn(c.im()) < 0;
    const mpq_class magnitude = abs(c.im());
    body = magnitude == 1 ? "i" : magnitude.get_str() + "*i";
    if (!mono.empty()) body += '*' + mono;
  } else {
    body = '(' + c.to_string() + ')';
    if (!mono.empty()) body += '*' + mono;
  }
  if (negative) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  out += body;
}

std::string to_string(const HomPoly& f, const std::vector<std::string>& vars) {
  if (vars.size() != f.nvars()) throw DimensionError("variable name count does not match the polynomial");
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) append_term(out, c, monomial_text(m, vars));
  return out;
}

std::vector<std::string> collect_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_ident_start(text[pos])) {
      const std::size_t start = pos;
      while (pos < text.size() && is_ident_char(text[pos])) ++pos;
      std::string name(text.substr(start, pos - start));
      if (name != "i" && std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
    } else {
      ++pos;
    }
  }
  return out;
}

std::vector<std::string> split_vars(std::string_view list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = list.find(',', start);
    std::string_view piece = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front())) != 0) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())) != 0) piece.remove_suffix(1);
    out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  check_var_names(out);
  return out;
}

}  // namespace homequiv
