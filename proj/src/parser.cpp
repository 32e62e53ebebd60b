#include "lambang/parser.hpp"

#include <cctype>
#include <optional>

namespace lambang {

namespace {

enum class Tok {
  Ident, KwDef, KwReturn, KwLet, KwIn, KwMu,
  Lambda, Dot, Bang, Eq, LParen, RParen, Comma, Colon, Lolli, HoleTok,
  End
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

struct Lexer {
  const std::string& src;
  size_t i = 0;
  int line = 1, col = 1;
  std::vector<Token> toks;

  explicit Lexer(const std::string& s) : src(s) { run(); }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

  void advance(size_t n) {
    for (size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') { ++line; col = 1; } else ++col;
    }
  }

  void run() {
    while (i < src.size()) {
      char c = src[i];
      if (c == '#') {  // line comment
        while (i < src.size() && src[i] != '\n') advance(1);
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) { advance(1); continue; }
      int l = line, co = col;
      auto push = [&](Tok k, std::string text, size_t len) {
        toks.push_back({k, std::move(text), l, co});
        advance(len);
      };
      if (c == '\\') { push(Tok::Lambda, "\\", 1); continue; }
      if (c == '.') { push(Tok::Dot, ".", 1); continue; }
      if (c == '!') { push(Tok::Bang, "!", 1); continue; }
      if (c == '=') { push(Tok::Eq, "=", 1); continue; }
      if (c == '(') { push(Tok::LParen, "(", 1); continue; }
      if (c == ')') { push(Tok::RParen, ")", 1); continue; }
      if (c == ',') { push(Tok::Comma, ",", 1); continue; }
      if (c == ':') { push(Tok::Colon, ":", 1); continue; }
      if (c == '[' && i + 2 < src.size() && src[i + 1] == '-' && src[i + 2] == ']') {
        push(Tok::HoleTok, "[-]", 3);
        continue;
      }
      if (c == '-' && i + 1 < src.size() && src[i + 1] == 'o') {
        push(Tok::Lolli, "-o", 2);
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = i;
        while (j < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' ||
                src[j] == '\''))
          ++j;
        std::string w = src.substr(i, j - i);
        Tok k = Tok::Ident;
        if (w == "def") k = Tok::KwDef;
        else if (w == "return") k = Tok::KwReturn;
        else if (w == "let") k = Tok::KwLet;
        else if (w == "in") k = Tok::KwIn;
        else if (w == "mu") k = Tok::KwMu;
        push(k, w, w.size());
        continue;
      }
      fail(std::string("unexpected character '") + c + "'");
    }
    toks.push_back({Tok::End, "", line, col});
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;
  Monad monad;
  std::string alphabet;

  Parser(const std::string& src, Monad m, std::string alpha)
      : monad(m), alphabet(std::move(alpha)) {
    Lexer lx(src);
    toks = std::move(lx.toks);
  }

  const Token& peek(size_t ahead = 0) const {
    size_t p = pos + ahead;
    return p < toks.size() ? toks[p] : toks.back();
  }
  const Token& next() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + " (found " + got + ")", t.line, t.col);
  }

  void expect(Tok k, const std::string& what) {
    if (!at(k)) fail("expected " + what);
    next();
  }

  // Is this identifier an operation symbol of any built-in monad?
  static bool global_op(const std::string& w) {
    return w == "choice" || w == "read" || w.rfind("print_", 0) == 0;
  }
  bool active_op(const std::string& w) const {
    return op_arity(monad, w, alphabet).has_value();
  }

  bool value_start() const {
    Tok k = peek().kind;
    if (k == Tok::Lambda || k == Tok::Bang || k == Tok::LParen) return true;
    if (k == Tok::Ident) return !at_op_call();
    return false;
  }
  bool at_op_call() const {
    return peek().kind == Tok::Ident && global_op(peek().text) &&
           peek(1).kind == Tok::LParen;
  }

  std::optional<TermPtr> try_value() {
    size_t save = pos;
    try {
      return parse_value();
    } catch (const ParseError&) {
      pos = save;
      return std::nullopt;
    }
  }

  TermPtr parse_value() {
    switch (peek().kind) {
      case Tok::Ident: {
        if (at_op_call()) fail("operation '" + peek().text + "' is not a value");
        return var_lin(next().text);
      }
      case Tok::Lambda: {
        next();
        if (!at(Tok::Ident)) fail("expected binder after '\\'");
        std::string x = next().text;
        expect(Tok::Dot, "'.'");
        return lam(x, parse_comp());
      }
      case Tok::Bang: {
        next();
        return bang(parse_comp_atom());
      }
      case Tok::LParen: {
        next();
        TermPtr v = parse_value();
        expect(Tok::RParen, "')'");
        return v;
      }
      default:
        fail("expected a value");
    }
  }

  // A computation that needs no trailing context: bare variable, op call,
  // or parenthesized computation. This is what '!' applies to.
  TermPtr parse_comp_atom() {
    if (at(Tok::LParen)) {
      size_t save = pos;
      next();
      try {
        TermPtr e = parse_comp();
        expect(Tok::RParen, "')'");
        return e;
      } catch (const ParseError&) {
        pos = save;
      }
      fail("expected a computation");
    }
    if (at(Tok::Ident)) {
      if (at_op_call()) return parse_op_call();
      return var_nonlin(next().text);
    }
    if (at(Tok::HoleTok)) { next(); return hole(); }
    fail("expected a computation after '!'");
  }

  TermPtr parse_op_call() {
    const Token& t = peek();
    std::string op = t.text;
    if (!active_op(op)) {
      if (global_op(op))
        throw ParseError("operation '" + op + "' is not available for monad '" +
                             monad_name(monad) + "'",
                         t.line, t.col);
      fail("unknown operation '" + op + "'");
    }
    next();
    expect(Tok::LParen, "'('");
    std::vector<TermPtr> args;
    if (!at(Tok::RParen)) {
      args.push_back(parse_comp());
      while (at(Tok::Comma)) { next(); args.push_back(parse_comp()); }
    }
    expect(Tok::RParen, "')'");
    int ar = *op_arity(monad, op, alphabet);
    if (static_cast<int>(args.size()) != ar)
      throw ParseError("operation '" + op + "' expects " + std::to_string(ar) +
                           " argument(s), got " + std::to_string(args.size()),
                       t.line, t.col);
    return op_app(op, std::move(args));
  }

  TermPtr parse_comp() {
    switch (peek().kind) {
      case Tok::KwReturn:
        next();
        return ret(parse_value());
      case Tok::KwLet: {
        next();
        if (at(Tok::Bang)) {
          next();
          if (!at(Tok::Ident)) fail("expected binder after 'let !'");
          std::string a = next().text;
          expect(Tok::Eq, "'='");
          TermPtr v = parse_value();
          expect(Tok::KwIn, "'in'");
          return let_bang(v, a, parse_comp());
        }
        if (!at(Tok::Ident)) fail("expected binder after 'let'");
        std::string x = next().text;
        expect(Tok::Eq, "'='");
        TermPtr e = parse_comp();
        expect(Tok::KwIn, "'in'");
        return let_(e, x, parse_comp());
      }
      case Tok::HoleTok:
        next();
        return hole();
      case Tok::Ident: {
        if (at_op_call()) return parse_op_call();
        std::string name = next().text;
        if (value_start()) return app(var_lin(name), parse_value());
        return var_nonlin(name);
      }
      case Tok::Lambda:
      case Tok::Bang: {
        TermPtr v = parse_value();
        if (!value_start()) fail("a lone value is not a computation; apply it or use 'return'");
        return app(v, parse_value());
      }
      case Tok::LParen: {
        size_t save = pos;
        auto v = try_value();
        if (v && value_start()) return app(*v, parse_value());
        pos = save;
        next();
        TermPtr e = parse_comp();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        fail("expected a computation");
    }
  }

  TypePtr parse_type() {
    TypePtr a = parse_type_atom();
    if (at(Tok::Lolli)) {
      next();
      return tlolli(a, parse_type());
    }
    return a;
  }

  TypePtr parse_type_atom() {
    switch (peek().kind) {
      case Tok::Bang:
        next();
        return tbang(parse_type_atom());
      case Tok::KwMu: {
        const Token& t = peek();
        next();
        if (!at(Tok::Ident)) fail("expected type variable after 'mu'");
        std::string x = next().text;
        expect(Tok::Dot, "'.'");
        TypePtr body = parse_type();
        if (body->kind == TypeKind::Lolli) return tmu_lolli(x, body->a, body->b);
        if (body->kind == TypeKind::Bang) return tmu_bang(x, body->a);
        throw ParseError("mu body must be 't -o t' or '!t'", t.line, t.col);
      }
      case Tok::Ident:
        return tvar(next().text);
      case Tok::LParen: {
        next();
        TypePtr t = parse_type();
        expect(Tok::RParen, "')'");
        return t;
      }
      default:
        fail("expected a type");
    }
  }

  std::vector<Def> parse_defs() {
    std::vector<Def> defs;
    while (!at(Tok::End)) {
      expect(Tok::KwDef, "'def'");
      if (!at(Tok::Ident)) fail("expected definition name");
      std::string name = next().text;
      expect(Tok::Colon, "':'");
      TypePtr ty = parse_type();
      expect(Tok::Eq, "'='");
      // A body is a value when it parses as one and the next item starts
      // right after; otherwise it is a computation.
      size_t save = pos;
      auto v = try_value();
      if (v && (at(Tok::End) || at(Tok::KwDef))) {
        defs.push_back({name, ty, *v, true});
        continue;
      }
      pos = save;
      TermPtr e = parse_comp();
      if (!at(Tok::End) && !at(Tok::KwDef)) fail("unexpected trailing tokens in definition");
      defs.push_back({name, ty, e, false});
    }
    return defs;
  }
};

}  // namespace

TypePtr parse_type(const std::string& src) {
  Parser p(src, Monad::Maybe, "");
  TypePtr t = p.parse_type();
  if (!p.at(Tok::End)) p.fail("unexpected trailing tokens");
  return t;
}

TermPtr parse_value_str(const std::string& src, Monad m, const std::string& alphabet) {
  Parser p(src, m, alphabet);
  TermPtr t = p.parse_value();
  if (!p.at(Tok::End)) p.fail("unexpected trailing tokens");
  return t;
}

TermPtr parse_comp_str(const std::string& src, Monad m, const std::string& alphabet) {
  Parser p(src, m, alphabet);
  TermPtr t = p.parse_comp();
  if (!p.at(Tok::End)) p.fail("unexpected trailing tokens");
  return t;
}

std::vector<Def> parse_defs(const std::string& src, Monad m, const std::string& alphabet) {
  Parser p(src, m, alphabet);
  return p.parse_defs();
}

}  // namespace lambang
