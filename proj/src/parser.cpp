#include "bicomlab/parser.hpp"

#include <cctype>
#include <vector>

namespace bicomlab {

namespace {

enum class Tok { ident, number, word, plus, minus, star, lparen, rparen, lbracket, rbracket,
                 lbrace, rbrace, comma, equals, end };

struct Token {
  Tok kind;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.col = col_;
      if (eof()) {
        t.kind = Tok::end;
        out.push_back(t);
        return out;
      }
      char c = peek();
      if (std::isalpha(static_cast<unsigned char>(c))) {
        t.text = scan_ident();
        if (t.text == "Y" && !eof() && peek() == '[') {
          t.kind = Tok::word;
          t.text = scan_word_body();
        } else {
          t.kind = Tok::ident;
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::number;
        t.text = scan_number();
      } else {
        t.kind = symbol(c, t.line, t.col);
        get();
      }
      out.push_back(std::move(t));
    }
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() {
    char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_space() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }
  std::string scan_ident() {
    std::string s;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      s += get();
    return s;
  }
  std::string scan_number() {
    std::string s;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) s += get();
    if (!eof() && peek() == '/') {
      std::size_t save = pos_;
      int sl = line_, sc = col_;
      get();
      if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        s += '/';
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) s += get();
      } else {
        pos_ = save;
        line_ = sl;
        col_ = sc;
      }
    }
    return s;
  }
  std::string scan_word_body() {
    // called with peek() == '[' right after the Y
    int l = line_, c = col_;
    get();
    std::string body;
    while (!eof() && peek() != ']') body += get();
    if (eof()) throw ParseError("unterminated canonical word", l, c);
    get();
    return body;
  }
  Tok symbol(char c, int line, int col) const {
    switch (c) {
      case '+': return Tok::plus;
      case '-': return Tok::minus;
      case '*': return Tok::star;
      case '(': return Tok::lparen;
      case ')': return Tok::rparen;
      case '[': return Tok::lbracket;
      case ']': return Tok::rbracket;
      case '{': return Tok::lbrace;
      case '}': return Tok::rbrace;
      case ',': return Tok::comma;
      case '=': return Tok::equals;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

struct Ast {
  enum Kind { number, ident, word, mul, add, sub, neg, com, anti } kind;
  Rational value;
  std::string name;
  std::vector<std::string> wcol, wrow;
  std::vector<Ast> kids;
  int line = 1, col = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Ast parse_expr_all() {
    Ast e = expr();
    expect(Tok::end, "end of input");
    return e;
  }

  std::pair<Ast, Ast> parse_identity_all() {
    Ast lhs = expr();
    if (at(Tok::equals)) {
      advance();
      Ast rhs = expr();
      expect(Tok::end, "end of input");
      return {std::move(lhs), std::move(rhs)};
    }
    expect(Tok::end, "end of input");
    Ast zero;
    zero.kind = Ast::number;
    zero.value = 0;
    return {std::move(lhs), std::move(zero)};
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  bool at(Tok k) const { return cur().kind == k; }
  void advance() { ++i_; }
  void expect(Tok k, const std::string& what) {
    if (!at(k)) throw ParseError("expected " + what, cur().line, cur().col);
    if (k != Tok::end) advance();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur().line, cur().col);
  }

  Ast expr() {
    bool negate = false;
    if (at(Tok::plus)) {
      advance();
    } else if (at(Tok::minus)) {
      negate = true;
      advance();
    }
    Ast acc = term();
    if (negate) acc = unary(Ast::neg, std::move(acc));
    while (at(Tok::plus) || at(Tok::minus)) {
      bool minus = at(Tok::minus);
      advance();
      Ast rhs = term();
      acc = binary(minus ? Ast::sub : Ast::add, std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Ast term() {
    if (at(Tok::number)) {
      Ast coeff;
      coeff.kind = Ast::number;
      coeff.line = cur().line;
      coeff.col = cur().col;
      coeff.value = parse_rational(cur().text);
      advance();
      if (at(Tok::star)) advance();
      if (!starts_atom()) return coeff;  // bare constant
      Ast acc = atom();
      while (at(Tok::star)) {
        advance();
        acc = binary(Ast::mul, std::move(acc), atom());
      }
      return binary(Ast::mul, std::move(coeff), std::move(acc));
    }
    Ast acc = atom();
    while (at(Tok::star)) {
      advance();
      acc = binary(Ast::mul, std::move(acc), atom());
    }
    return acc;
  }

  bool starts_atom() const {
    return at(Tok::ident) || at(Tok::word) || at(Tok::lparen) || at(Tok::lbracket) ||
           at(Tok::lbrace);
  }

  Ast atom() {
    Ast a;
    a.line = cur().line;
    a.col = cur().col;
    if (at(Tok::ident)) {
      std::string name = cur().text;
      advance();
      if (name == "assoc" && at(Tok::lparen)) {
        advance();
        Ast x = expr();
        expect(Tok::comma, "','");
        Ast y = expr();
        expect(Tok::comma, "','");
        Ast z = expr();
        expect(Tok::rparen, "')'");
        // {x,{y,z}} - {{x,y},z}
        Ast inner = binary(Ast::anti, clone(y), clone(z));
        Ast lhs = binary(Ast::anti, clone(x), std::move(inner));
        Ast outer = binary(Ast::anti, std::move(x), std::move(y));
        Ast rhs = binary(Ast::anti, std::move(outer), std::move(z));
        return binary(Ast::sub, std::move(lhs), std::move(rhs));
      }
      if (!Generator::valid(name)) fail("bad variable name '" + name + "'");
      a.kind = Ast::ident;
      a.name = std::move(name);
      return a;
    }
    if (at(Tok::word)) {
      a.kind = Ast::word;
      parse_word_body(cur().text, a);
      advance();
      return a;
    }
    if (at(Tok::lparen)) {
      advance();
      Ast e = expr();
      expect(Tok::rparen, "')'");
      return e;
    }
    if (at(Tok::lbracket)) {
      advance();
      Ast l = expr();
      expect(Tok::comma, "','");
      Ast r = expr();
      expect(Tok::rbracket, "']'");
      return binary(Ast::com, std::move(l), std::move(r));
    }
    if (at(Tok::lbrace)) {
      advance();
      Ast l = expr();
      expect(Tok::comma, "','");
      Ast r = expr();
      expect(Tok::rbrace, "'}'");
      return binary(Ast::anti, std::move(l), std::move(r));
    }
    fail("expected an expression");
  }

  void parse_word_body(const std::string& body, Ast& a) const {
    auto bar = body.find('|');
    if (bar == std::string::npos || body.find('|', bar + 1) != std::string::npos)
      throw ParseError("canonical word needs exactly one '|'", a.line, a.col);
    auto split = [&](const std::string& part, std::vector<std::string>& out) {
      std::size_t start = 0;
      while (start <= part.size()) {
        auto comma = part.find(',', start);
        std::string name =
            part.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!Generator::valid(name))
          throw ParseError("bad generator name '" + name + "' in canonical word", a.line, a.col);
        out.push_back(std::move(name));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    };
    split(body.substr(0, bar), a.wcol);
    split(body.substr(bar + 1), a.wrow);
  }

  static Ast unary(Ast::Kind k, Ast x) {
    Ast a;
    a.kind = k;
    a.line = x.line;
    a.col = x.col;
    a.kids.push_back(std::move(x));
    return a;
  }
  static Ast binary(Ast::Kind k, Ast l, Ast r) {
    Ast a;
    a.kind = k;
    a.line = l.line;
    a.col = l.col;
    a.kids.push_back(std::move(l));
    a.kids.push_back(std::move(r));
    return a;
  }
  static Ast clone(const Ast& x) { return x; }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// Lowered value: a scalar until it meets an algebra element.
template <typename T>
struct Value {
  bool is_scalar = false;
  Rational scalar;
  T elem;
};

struct BicomOps {
  using T = BicomElement;
  static T var(const std::string& n) { return BicomElement::generator(Generator(n)); }
  static T word(const Ast& a) {
    std::vector<Generator> col, row;
    for (const auto& n : a.wcol) col.emplace_back(n);
    for (const auto& n : a.wrow) row.emplace_back(n);
    return BicomElement::word(BasisWord::pair(std::move(col), std::move(row)));
  }
  static T mul(const T& x, const T& y) { return multiply(x, y); }
  static T bracket(Ast::Kind k, const T& x, const T& y) {
    T xy = multiply(x, y), yx = multiply(y, x);
    return k == Ast::com ? xy - yx : xy + yx;
  }
};

struct MagmaOps {
  using T = MagmaPoly;
  static T var(const std::string& n) { return MagmaPoly::variable(Generator(n)); }
  static T word(const Ast& a) {
    throw ParseError("canonical words are not allowed in identity context", a.line, a.col);
  }
  static T mul(const T& x, const T& y) { return MagmaPoly::combine(NodeOp::plain, x, y); }
  static T bracket(Ast::Kind k, const T& x, const T& y) {
    return MagmaPoly::combine(k == Ast::com ? NodeOp::com : NodeOp::anti, x, y);
  }
};

template <typename Ops>
Value<typename Ops::T> lower(const Ast& a) {
  using T = typename Ops::T;
  auto scalar = [](Rational r) {
    Value<T> v;
    v.is_scalar = true;
    v.scalar = std::move(r);
    return v;
  };
  auto element = [](T e) {
    Value<T> v;
    v.elem = std::move(e);
    return v;
  };
  auto demote = [&](Value<T> v, const Ast& at) -> T {
    // a scalar is an element only when it is zero
    if (!v.is_scalar) return std::move(v.elem);
    if (v.scalar == 0) return T{};
    throw ParseError("a nonzero constant is not an element here", at.line, at.col);
  };

  switch (a.kind) {
    case Ast::number:
      return scalar(a.value);
    case Ast::ident:
      return element(Ops::var(a.name));
    case Ast::word:
      return element(Ops::word(a));
    case Ast::neg: {
      auto v = lower<Ops>(a.kids[0]);
      if (v.is_scalar)
        v.scalar = -v.scalar;
      else
        v.elem = -v.elem;
      return v;
    }
    case Ast::add:
    case Ast::sub: {
      auto l = lower<Ops>(a.kids[0]), r = lower<Ops>(a.kids[1]);
      if (l.is_scalar && r.is_scalar)
        return scalar(a.kind == Ast::add ? Rational(l.scalar + r.scalar)
                                         : Rational(l.scalar - r.scalar));
      T le = demote(std::move(l), a.kids[0]), re = demote(std::move(r), a.kids[1]);
      return element(a.kind == Ast::add ? le + re : le - re);
    }
    case Ast::mul: {
      auto l = lower<Ops>(a.kids[0]), r = lower<Ops>(a.kids[1]);
      if (l.is_scalar && r.is_scalar) return scalar(l.scalar * r.scalar);
      if (l.is_scalar) {
        r.elem = l.scalar * r.elem;
        return r;
      }
      if (r.is_scalar) {
        l.elem = r.scalar * l.elem;
        return l;
      }
      return element(Ops::mul(l.elem, r.elem));
    }
    case Ast::com:
    case Ast::anti: {
      auto l = lower<Ops>(a.kids[0]), r = lower<Ops>(a.kids[1]);
      T le = demote(std::move(l), a.kids[0]), re = demote(std::move(r), a.kids[1]);
      return element(Ops::bracket(a.kind, le, re));
    }
  }
  throw std::logic_error("unreachable");
}

template <typename Ops>
typename Ops::T lower_top(const Ast& a) {
  auto v = lower<Ops>(a);
  if (!v.is_scalar) return std::move(v.elem);
  if (v.scalar == 0) return typename Ops::T{};
  throw ParseError("a nonzero constant is not an element", a.line, a.col);
}

}  // namespace

BicomElement parse_element(const std::string& text) {
  Parser p(Lexer(text).run());
  return lower_top<BicomOps>(p.parse_expr_all());
}

MagmaPoly parse_magma(const std::string& text) {
  Parser p(Lexer(text).run());
  return lower_top<MagmaOps>(p.parse_expr_all());
}

MagmaPoly parse_identity(const std::string& text) {
  Parser p(Lexer(text).run());
  auto [lhs, rhs] = p.parse_identity_all();
  return lower_top<MagmaOps>(lhs) - lower_top<MagmaOps>(rhs);
}

Multidegree parse_multidegree(const std::string& text) {
  Multidegree md;
  std::size_t start = 0;
  if (text.empty()) throw std::invalid_argument("empty multidegree");
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto colon = item.find(':');
    std::string name = colon == std::string::npos ? item : item.substr(0, colon);
    int count = 1;
    if (colon != std::string::npos) {
      try {
        count = std::stoi(item.substr(colon + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad multidegree count in '" + item + "'");
      }
    }
    if (!Generator::valid(name))
      throw std::invalid_argument("bad generator name '" + name + "' in multidegree");
    if (count < 1) throw std::invalid_argument("multidegree counts must be positive");
    md[Generator(name)] += count;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return md;
}

}  // namespace bicomlab
