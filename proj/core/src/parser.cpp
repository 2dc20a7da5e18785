#include <hydrosym/parser.hpp>

#include <cctype>
#include <optional>
#include <vector>

namespace hydrosym {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c))
      throw ParseError(std::string("expected '") + c + "' at position " +
                       std::to_string(pos) + " in: " + s);
  }
  std::optional<Rational> number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return std::nullopt;
    return Rational(BigInt(s.substr(start, pos - start)));
  }
  std::optional<std::string> ident() {
    skip_ws();
    size_t start = pos;
    if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos]))))
      return std::nullopt;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
};

struct Parser {
  Lexer lex;
  const std::map<std::string, Rational>& bindings;

  SymExpr parse_expr() {
    SymExpr acc = parse_term();
    for (;;) {
      if (lex.consume('+'))
        acc = acc + parse_term();
      else if (lex.consume('-'))
        acc = acc - parse_term();
      else
        return acc;
    }
  }

  SymExpr parse_term() {
    SymExpr acc = parse_unary();
    for (;;) {
      if (lex.consume('*')) {
        acc = acc * parse_unary();
      } else if (lex.consume('/')) {
        acc = acc * invert(parse_unary());
      } else {
        return acc;
      }
    }
  }

  static SymExpr invert(const SymExpr& e) {
    if (e.is_zero()) throw ParseError("division by zero expression");
    if (e.size() == 1) {
      const auto& [t, c] = *e.terms().begin();
      if (t.gkey.empty() && t.odd.empty()) return e.pow_int(-1);
    }
    return SymExpr::pow(e, Rational(-1));
  }

  SymExpr parse_unary() {
    bool neg = false;
    for (;;) {
      if (lex.consume('-'))
        neg = !neg;
      else if (lex.consume('+'))
        ;
      else
        break;
    }
    SymExpr e = parse_postfix();
    return neg ? -e : e;
  }

  SymExpr parse_postfix() {
    SymExpr base = parse_primary();
    if (lex.consume('^')) {
      Rational q = parse_exponent();
      return SymExpr::pow(base, q);
    }
    return base;
  }

  Rational parse_exponent() {
    if (lex.peek() == '(') {
      lex.expect('(');
      SymExpr e = parse_expr();
      lex.expect(')');
      return to_rational(e);
    }
    if (auto n = lex.number()) return *n;
    // allow a bare bound identifier as exponent
    if (auto id = lex.ident()) {
      auto it = bindings.find(*id);
      if (it != bindings.end()) return it->second;
      throw ParseError("exponent must fold to a rational: " + *id);
    }
    throw ParseError("malformed exponent in: " + lex.s);
  }

  static Rational to_rational(const SymExpr& e) {
    if (e.is_zero()) return Rational(0);
    if (e.size() == 1) {
      const auto& [t, c] = *e.terms().begin();
      if (t.gkey.empty() && t.odd.empty() && t.even.empty()) return c;
    }
    throw ParseError("expression does not fold to a rational constant: " + e.str());
  }

  SymExpr parse_primary() {
    if (lex.consume('(')) {
      SymExpr e = parse_expr();
      lex.expect(')');
      return e;
    }
    if (auto n = lex.number()) return SymExpr::constant(*n);
    auto id = lex.ident();
    if (!id) throw ParseError("unexpected input at position " +
                              std::to_string(lex.pos) + " in: " + lex.s);
    if (lex.peek() == '(') {
      return parse_call(*id);
    }
    return resolve_name(*id);
  }

  SymExpr parse_call(const std::string& name) {
    lex.expect('(');
    std::vector<SymExpr> args;
    if (lex.peek() != ')') {
      args.push_back(parse_expr());
      while (lex.consume(',')) args.push_back(parse_expr());
    }
    lex.expect(')');
    auto unary_fn = [&](FuncKind k) {
      if (args.size() != 1) throw ParseError(name + " expects one argument");
      return SymExpr::func(k, args[0]);
    };
    if (name == "exp") return unary_fn(FuncKind::Exp);
    if (name == "ln") return unary_fn(FuncKind::Ln);
    if (name == "sin") return unary_fn(FuncKind::Sin);
    if (name == "cos") return unary_fn(FuncKind::Cos);
    if (name == "tan") return unary_fn(FuncKind::Tan);
    if (name == "arctan") return unary_fn(FuncKind::Arctan);
    if (name == "sqrt") {
      if (args.size() != 1) throw ParseError("sqrt expects one argument");
      return SymExpr::pow(args[0], Rational(1, 2));
    }
    if (name == "pow") {
      if (args.size() != 2) throw ParseError("pow expects (base, exponent)");
      return SymExpr::pow(args[0], to_rational(args[1]));
    }
    throw ParseError("unknown function: " + name);
  }

  // Greedy split of a jet suffix into independent-variable names.
  static bool split_suffix(const std::string& suffix, std::vector<std::string>& out) {
    static const std::vector<std::string> names = {"sigma", "theta", "x", "t"};
    size_t i = 0;
    while (i < suffix.size()) {
      bool matched = false;
      for (const auto& n : names) {
        if (suffix.compare(i, n.size(), n) == 0) {
          out.push_back(n);
          i += n.size();
          matched = true;
          break;
        }
      }
      if (!matched) return false;
    }
    return !out.empty();
  }

  SymExpr resolve_name(const std::string& name) {
    auto bit = bindings.find(name);
    if (bit != bindings.end()) return SymExpr::constant(bit->second);
    auto& cr = CoordRegistry::instance();
    // jet atom: field_suffix
    auto us = name.find('_');
    if (us != std::string::npos && us + 1 < name.size()) {
      std::string head = name.substr(0, us);
      std::string suffix = name.substr(us + 1);
      int f = cr.lookup(head);
      if (f >= 0) {
        const auto& info = cr.info(f);
        if (info.kind == CoordKind::FieldEven || info.kind == CoordKind::FieldOdd) {
          std::vector<std::string> parts;
          if (split_suffix(suffix, parts)) return SymExpr::atom(atom_of_field(head, parts));
        }
      }
    }
    int c = cr.lookup(name);
    if (c >= 0) return SymExpr::atom(atom_of_coord(name));
    int g = GeneratorRegistry::instance().lookup(name);
    if (g >= 0) return SymExpr::generator(g);
    throw ParseError("unknown symbol: " + name);
  }
};

}  // namespace

SymExpr parse_expr(const std::string& text,
                   const std::map<std::string, Rational>& bindings) {
  Parser p{Lexer{text}, bindings};
  SymExpr e = p.parse_expr();
  if (!p.lex.eof())
    throw ParseError("trailing input at position " + std::to_string(p.lex.pos) +
                     " in: " + text);
  return e;
}

Rational parse_rational(const std::string& text,
                        const std::map<std::string, Rational>& bindings) {
  return Parser::to_rational(parse_expr(text, bindings));
}

}  // namespace hydrosym
