#include "renamer/syntax.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace renamer {

ParseError::ParseError(SourceLocation where, const std::string& message)
    : std::runtime_error(std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message),
      where_(where),
      message_(message) {}

ArityConflictError::ArityConflictError(SourceLocation where, const ArityConflict& conflict)
    : ParseError(where, conflict.what()),
      symbol_(conflict.symbol()),
      first_(conflict.first_arity()),
      second_(conflict.second_arity()) {}

namespace {

bool ident_tail(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool lower_start(char c) { return c >= 'a' && c <= 'z'; }
bool upper_start(char c) { return (c >= 'A' && c <= 'Z') || c == '_'; }

enum class Tok { Ident, Variable, LParen, RParen, Comma, Bar, Tilde, Dot, End };

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Variable: return "variable";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Bar: return "'|'";
    case Tok::Tilde: return "'~'";
    case Tok::Dot: return "'.'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceLocation where;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_blank();
    Token t;
    t.where = here_;
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    if (lower_start(c) || upper_start(c)) {
      t.kind = lower_start(c) ? Tok::Ident : Tok::Variable;
      while (pos_ < text_.size() && ident_tail(text_[pos_])) t.text += advance();
      return t;
    }
    switch (c) {
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case ',': t.kind = Tok::Comma; break;
      case '|': t.kind = Tok::Bar; break;
      case '~': t.kind = Tok::Tilde; break;
      case '.': t.kind = Tok::Dot; break;
      default:
        throw ParseError(here_, std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(1, advance());
    return t;
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++here_.line;
      here_.column = 1;
    } else {
      ++here_.column;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SourceLocation here_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  ClauseSet parse() {
    ClauseSet out;
    while (look_.kind != Tok::End) out.add(clause());
    return out;
  }

 private:
  void shift() { look_ = lexer_.next(); }

  Token expect(Tok kind) {
    if (look_.kind != kind)
      throw ParseError(look_.where, "expected " + std::string(describe(kind)) + ", found " +
                                        std::string(describe(look_.kind)));
    Token t = look_;
    shift();
    return t;
  }

  Clause clause() {
    Clause c;
    c.insert(literal());
    while (look_.kind == Tok::Bar) {
      shift();
      c.insert(literal());
    }
    expect(Tok::Dot);
    return c;
  }

  Literal literal() {
    Sign sign = Sign::Positive;
    if (look_.kind == Tok::Tilde) {
      sign = Sign::Negative;
      shift();
    }
    if (look_.kind == Tok::Variable) throw ParseError(look_.where, "expected predicate symbol, found variable " + look_.text);
    const Token name = expect(Tok::Ident);
    std::vector<Term> args = arguments();
    check_arity(predicates_, ArityConflict::Kind::Predicate, name, args.size());
    return Literal{sign, name.text, std::move(args)};
  }

  std::vector<Term> arguments() {
    std::vector<Term> args;
    if (look_.kind != Tok::LParen) return args;
    shift();
    args.push_back(term());
    while (look_.kind == Tok::Comma) {
      shift();
      args.push_back(term());
    }
    expect(Tok::RParen);
    return args;
  }

  Term term() {
    if (look_.kind == Tok::Variable) {
      Token v = look_;
      shift();
      if (look_.kind == Tok::LParen) throw ParseError(look_.where, "variable " + v.text + " cannot take arguments");
      return Term::variable(v.text);
    }
    const Token name = expect(Tok::Ident);
    std::vector<Term> args = arguments();
    check_arity(functions_, ArityConflict::Kind::Function, name, args.size());
    return Term::apply(name.text, std::move(args));
  }

  static void check_arity(std::map<std::string, std::size_t>& seen, ArityConflict::Kind kind, const Token& name,
                          std::size_t arity) {
    auto [it, inserted] = seen.emplace(name.text, arity);
    if (!inserted && it->second != arity)
      throw ArityConflictError(name.where, ArityConflict(kind, name.text, it->second, arity));
  }

  Lexer lexer_;
  Token look_;
  std::map<std::string, std::size_t> predicates_;
  std::map<std::string, std::size_t> functions_;
};

}  // namespace

bool is_identifier(std::string_view text) {
  if (text.empty() || !lower_start(text.front())) return false;
  for (char c : text)
    if (!ident_tail(c)) return false;
  return true;
}

ClauseSet parse_clause_set(std::string_view text) { return Parser(text).parse(); }

std::string serialize_clause_set(const ClauseSet& s) {
  std::string out;
  for (const auto& c : s) {
    if (c.empty()) throw std::invalid_argument("the empty clause has no surface form");
    out += to_string(c);
    out += '\n';
  }
  return out;
}

}  // namespace renamer
