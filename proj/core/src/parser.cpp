// Recursive-descent parser and printer for the ASCII formula syntax.
//
// Precedence, tightest first: prefix (~ [] <>), &, |, then -> (right
// associative) and <-> (non-associative). A `<->` may not share a level with
// `->` or another `<->` unless parenthesised.

#include <cctype>

#include "birel/formula.hpp"

namespace birel {

SyntaxError::SyntaxError(std::size_t column, const std::string& message)
    : std::runtime_error("syntax error at column " + std::to_string(column) + ": " + message),
      column_(column),
      detail_(message) {}

namespace {

enum class Tok { Ident, False, True, Not, Box, Dia, And, Or, Imp, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::False: return "'false'";
    case Tok::True: return "'true'";
    case Tok::Not: return "'~'";
    case Tok::Box: return "'[]'";
    case Tok::Dia: return "'<>'";
    case Tok::And: return "'&'";
    case Tok::Or: return "'|'";
    case Tok::Imp: return "'->'";
    case Tok::Iff: return "'<->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t col = i + 1;
    if (std::isspace(c)) {
      ++i;
    } else if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < s.size() && (std::islower(static_cast<unsigned char>(s[j])) ||
                              std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      std::string word(s.substr(i, j - i));
      Tok kind = word == "false" ? Tok::False : word == "true" ? Tok::True : Tok::Ident;
      out.push_back({kind, std::move(word), col});
      i = j;
    } else if (starts("<->")) {
      out.push_back({Tok::Iff, "<->", col});
      i += 3;
    } else if (starts("->")) {
      out.push_back({Tok::Imp, "->", col});
      i += 2;
    } else if (starts("[]")) {
      out.push_back({Tok::Box, "[]", col});
      i += 2;
    } else if (starts("<>")) {
      out.push_back({Tok::Dia, "<>", col});
      i += 2;
    } else if (c == '~') {
      out.push_back({Tok::Not, "~", col});
      ++i;
    } else if (c == '&') {
      out.push_back({Tok::And, "&", col});
      ++i;
    } else if (c == '|') {
      out.push_back({Tok::Or, "|", col});
      ++i;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", col});
      ++i;
    } else {
      throw SyntaxError(col, std::string("unexpected character '") + s[i] + "'");
    }
  }
  out.push_back({Tok::End, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula run() {
    Formula f = level_imp();
    if (peek().kind != Tok::End)
      throw SyntaxError(peek().column, std::string("unexpected ") + describe(peek().kind));
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  // disj ( '->' imp_chain | '<->' disj )?
  Formula level_imp() {
    Formula lhs = level_or();
    if (peek().kind == Tok::Imp) {
      next();
      return Formula::implies(lhs, imp_chain());
    }
    if (peek().kind == Tok::Iff) {
      next();
      Formula rhs = level_or();
      if (peek().kind == Tok::Iff)
        throw SyntaxError(peek().column, "chained '<->' requires parentheses");
      if (peek().kind == Tok::Imp)
        throw SyntaxError(peek().column, "'->' after '<->' requires parentheses");
      return Formula::iff(lhs, rhs);
    }
    return lhs;
  }

  Formula imp_chain() {
    Formula lhs = level_or();
    if (peek().kind == Tok::Imp) {
      next();
      return Formula::implies(lhs, imp_chain());
    }
    if (peek().kind == Tok::Iff)
      throw SyntaxError(peek().column, "'<->' after '->' requires parentheses");
    return lhs;
  }

  Formula level_or() {
    Formula acc = level_and();
    while (peek().kind == Tok::Or) {
      next();
      acc = Formula::disj(acc, level_and());
    }
    return acc;
  }

  Formula level_and() {
    Formula acc = prefix();
    while (peek().kind == Tok::And) {
      next();
      acc = Formula::conj(acc, prefix());
    }
    return acc;
  }

  Formula prefix() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Not: return Formula::neg(prefix());
      case Tok::Box: return Formula::box(prefix());
      case Tok::Dia: return Formula::dia(prefix());
      case Tok::Ident: return Formula::var(t.text);
      case Tok::False: return Formula::bottom();
      case Tok::True: return Formula::top();
      case Tok::LParen: {
        Formula inner = level_imp();
        if (peek().kind != Tok::RParen)
          throw SyntaxError(peek().column,
                            std::string("expected ')' but found ") + describe(peek().kind));
        next();
        return inner;
      }
      default:
        throw SyntaxError(t.column, std::string("expected a formula but found ") + describe(t.kind));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength used by the printer.
int strength(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::And: return 3;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::Implies:
      // `~x` and `true` print as prefix forms.
      return f.rhs().is(Formula::Kind::Bottom) ? 4 : 1;
    default: return 4;
  }
}

void emit(const Formula& f, std::string& out);

void emit_wrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  emit(f, out);
  if (parens) out += ')';
}

void emit(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Var: out += f.name(); return;
    case Formula::Kind::Bottom: out += "false"; return;
    case Formula::Kind::Box:
      out += "[]";
      emit_wrapped(f.arg(), strength(f.arg()) < 4, out);
      return;
    case Formula::Kind::Dia:
      out += "<>";
      emit_wrapped(f.arg(), strength(f.arg()) < 4, out);
      return;
    case Formula::Kind::And:
      emit_wrapped(f.lhs(), strength(f.lhs()) < 3, out);
      out += " & ";
      emit_wrapped(f.rhs(), strength(f.rhs()) <= 3, out);
      return;
    case Formula::Kind::Or:
      emit_wrapped(f.lhs(), strength(f.lhs()) < 2, out);
      out += " | ";
      emit_wrapped(f.rhs(), strength(f.rhs()) <= 2, out);
      return;
    case Formula::Kind::Implies:
      if (f.rhs().is(Formula::Kind::Bottom)) {
        if (f.lhs().is(Formula::Kind::Bottom)) {
          out += "true";
        } else {
          out += '~';
          emit_wrapped(f.lhs(), strength(f.lhs()) < 4, out);
        }
        return;
      }
      emit_wrapped(f.lhs(), strength(f.lhs()) <= 1, out);
      out += " -> ";
      emit_wrapped(f.rhs(), strength(f.rhs()) < 1, out);
      return;
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).run(); }

std::string print(const Formula& f) {
  std::string out;
  emit(f, out);
  return out;
}

}  // namespace birel
