#include <algorithm>
#include <cctype>

#include "qsuper/cli.hpp"

namespace qsuper::cli {

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, TensorOp, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= s_.size()) {
        out.push_back({Tok::End, "", line_, col_});
        return out;
      }
      int line = line_, col = col_;
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string t;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) t += advance();
        out.push_back({Tok::Int, t, line, col});
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string t;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) t += advance();
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) t += advance();
        out.push_back({Tok::Ident, t, line, col});
      } else if (c == '(' && tensor_op_ahead()) {
        out.push_back({Tok::TensorOp, "(x)", line, col});
      } else {
        advance();
        Tok k;
        switch (c) {
          case '+': k = Tok::Plus; break;
          case '-': k = Tok::Minus; break;
          case '*': k = Tok::Star; break;
          case '^': k = Tok::Caret; break;
          case '/': k = Tok::Slash; break;
          case '(': k = Tok::LParen; break;
          case ')': k = Tok::RParen; break;
          case ',': k = Tok::Comma; break;
          default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back({k, std::string(1, c), line, col});
      }
    }
  }

 private:
  char advance() {
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
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
  }

  // "(x)" with optional inner spaces, where x is not the start of a generator name.
  bool tensor_op_ahead() {
    std::size_t p = pos_ + 1;
    while (p < s_.size() && s_[p] == ' ') ++p;
    if (p >= s_.size() || s_[p] != 'x') return false;
    ++p;
    while (p < s_.size() && s_[p] == ' ') ++p;
    if (p >= s_.size() || s_[p] != ')') return false;
    while (pos_ <= p) advance();
    return true;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const SessionConfig& cfg) : toks_(std::move(toks)), size_(cfg.m + cfg.n) {}

  Expr parse_all() {
    if (peek().kind == Tok::End) fail("empty expression");
    Expr e = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().column); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.column); }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }

  static Expr node(Expr::Kind k, const Token& at) {
    Expr e;
    e.kind = k;
    e.line = at.line;
    e.column = at.column;
    return e;
  }

  Expr expr() {
    Token start = peek();
    Expr first = tensor();
    if (peek().kind != Tok::Plus && peek().kind != Tok::Minus) return first;
    Expr sum = node(Expr::Kind::Sum, start);
    sum.args.push_back(std::move(first));
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      Token op = take();
      Expr rhs = tensor();
      if (op.kind == Tok::Minus) {
        Expr neg = node(Expr::Kind::Neg, op);
        neg.args.push_back(std::move(rhs));
        rhs = std::move(neg);
      }
      sum.args.push_back(std::move(rhs));
    }
    return sum;
  }

  Expr tensor() {
    Token start = peek();
    Expr first = term();
    if (peek().kind != Tok::TensorOp) return first;
    Expr t = node(Expr::Kind::Tensor, start);
    t.args.push_back(std::move(first));
    while (accept(Tok::TensorOp)) t.args.push_back(term());
    return t;
  }

  Expr term() {
    Token start = peek();
    Expr first = unary();
    if (peek().kind != Tok::Star) return first;
    Expr p = node(Expr::Kind::Product, start);
    p.args.push_back(std::move(first));
    while (accept(Tok::Star)) p.args.push_back(unary());
    return p;
  }

  Expr unary() {
    if (peek().kind == Tok::Minus) {
      Token op = take();
      Expr neg = node(Expr::Kind::Neg, op);
      neg.args.push_back(unary());
      return neg;
    }
    return factor();
  }

  int integer(const char* what) {
    if (peek().kind != Tok::Int) fail(std::string("expected ") + what);
    Token t = take();
    if (t.text.size() > 6) fail_at(t, "integer too large");
    return std::stoi(t.text);
  }

  Expr factor() {
    Expr base = atom();
    if (!accept(Tok::Caret)) return base;
    Token at = peek();
    bool negative = accept(Tok::Minus);
    int e = integer("integer exponent");
    if (negative) e = -e;
    if (e < 0 && !invertible(base)) fail_at(at, "illegal negative power");
    if (base.kind == Expr::Kind::Param || base.kind == Expr::Kind::Generator || base.kind == Expr::Kind::Grouplike) {
      base.exponent *= e;
      return base;
    }
    Expr p = node(Expr::Kind::Power, at);
    p.exponent = e;
    p.args.push_back(std::move(base));
    return p;
  }

  static bool invertible(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Param: return e.name == "p";
      case Expr::Kind::Generator: return e.name == "a" && e.index == 1;
      case Expr::Kind::Grouplike: return true;
      case Expr::Kind::Number: return e.number != 0;
      default: return false;
    }
  }

  int check_index(const Token& t, int i) const {
    if (i < 1 || i > size_) fail_at(t, "index " + std::to_string(i) + " out of range 1.." + std::to_string(size_));
    return i;
  }

  Expr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        Token tok = take();
        Expr e = node(Expr::Kind::Number, tok);
        e.number = mpq_class(tok.text);
        if (accept(Tok::Slash)) {
          Token den = peek();
          int d = integer("denominator");
          if (d == 0) fail_at(den, "zero denominator");
          e.number /= d;
        }
        return e;
      }
      case Tok::LParen: {
        take();
        Expr e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident:
        return symbol_or_call();
      default:
        fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  Expr symbol_or_call() {
    Token tok = take();
    const std::string& s = tok.text;
    std::size_t split = s.find_first_of("0123456789");
    std::string letters = s.substr(0, split);
    std::string digits = split == std::string::npos ? "" : s.substr(split);

    static const std::vector<std::string> calls{"d", "partial", "T", "S", "Delta", "eps", "omega"};
    if (digits.empty() && std::find(calls.begin(), calls.end(), letters) != calls.end() && peek().kind == Tok::LParen)
      return call(tok, letters);
    if (letters == "g" && digits.empty()) return node(Expr::Kind::Grouplike, tok);
    if ((letters == "a" || letters == "x" || letters == "p" || letters == "h") && !digits.empty() && digits.size() <= 3 &&
        digits[0] != '0') {
      Expr e = node(letters == "p" || letters == "h" ? Expr::Kind::Param : Expr::Kind::Generator, tok);
      e.name = letters;
      e.index = check_index(tok, std::stoi(digits));
      return e;
    }
    fail_at(tok, "unknown symbol '" + s + "'");
  }

  Expr call(const Token& tok, const std::string& name) {
    Expr e = node(Expr::Kind::Call, tok);
    e.name = name;
    expect(Tok::LParen, "'('");
    if (name == "partial" || name == "T" || name == "omega") {
      Token at = peek();
      e.index = check_index(at, integer("generator index"));
      if (name != "omega") {
        expect(Tok::Comma, "','");
        e.args.push_back(expr());
      }
    } else {
      e.args.push_back(expr());
    }
    expect(Tok::RParen, "')'");
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int size_;
};

}  // namespace

Expr parse(const std::string& input, const SessionConfig& cfg) {
  Lexer lex(input);
  Parser p(lex.run(), cfg);
  return p.parse_all();
}

}  // namespace qsuper::cli
