#include <cctype>

#include "pslice/poly.hpp"

namespace pslice {

namespace {

enum class Tok { Number, Var, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
  int var = -1;  // variable index
};

[[noreturn]] void fail(std::size_t offset, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "at byte " + std::to_string(offset) + ": " + msg);
}

std::vector<Token> tokenize(std::string_view s, VarStyle& style) {
  std::vector<Token> out;
  style = VarStyle::None;
  auto note_style = [&](VarStyle st, std::size_t at) {
    if (style != VarStyle::None && style != st) fail(at, "mixes X/Y with indexed variables");
    style = st;
  };
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, at, std::string(s.substr(at, i - at))});
      continue;
    }
    if (c == 'X' || c == 'Y') {
      note_style(VarStyle::XY, at);
      ++i;
      if (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) fail(i, "unexpected character after variable");
      out.push_back({Tok::Var, at, std::string(1, c), c == 'X' ? 0 : 1});
      continue;
    }
    if (c == 'x') {
      note_style(VarStyle::Indexed, at);
      ++i;
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail(i, "expected digit after 'x'");
      const int idx = s[i] - '0';
      ++i;
      if (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) fail(i, "variable index must be a single digit");
      out.push_back({Tok::Var, at, std::string(s.substr(at, 2)), idx});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: fail(at, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, at, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const FieldCtx& ctx, int nvars) : toks_(std::move(toks)), ctx_(ctx), nvars_(nvars) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    if (peek().kind != Tok::End) unexpected();
    return r;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void unexpected() const {
    const Token& t = peek();
    if (t.kind == Tok::End) fail(t.offset, "unexpected end of input");
    if (t.kind == Tok::Number || t.kind == Tok::Var || t.kind == Tok::LParen) {
      fail(t.offset, "expected an operator before '" + t.text + "' (juxtaposition is not multiplication)");
    }
    fail(t.offset, "unexpected '" + t.text + "'");
  }

  MultiPoly expr() {
    MultiPoly acc(ctx_, nvars_);
    bool negate = false;
    if (peek().kind == Tok::Minus) {
      next();
      negate = true;
    } else if (peek().kind == Tok::Plus) {
      next();
    }
    acc = term();
    if (negate) acc = MultiPoly(ctx_, nvars_) - acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      MultiPoly t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (peek().kind == Tok::Star) {
      next();
      acc = acc * power();
    }
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (peek().kind == Tok::Caret) {
      next();
      const Token& t = next();
      if (t.kind != Tok::Number) fail(t.offset, "exponent must be a nonnegative integer");
      if (t.text.size() > 4) fail(t.offset, "exponent " + t.text + " too large");
      base = base.pow(static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
  }

  MultiPoly primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Number: {
        std::int64_t v = 0;
        for (char c : t.text) v = (v * 10 + (c - '0')) % ctx_.p();
        return MultiPoly::constant(ctx_, nvars_, ctx_.from_int(v));
      }
      case Tok::Var:
        if (t.var >= nvars_) {
          fail(t.offset, "variable " + t.text + " outside the " + std::to_string(nvars_) + " available");
        }
        return MultiPoly::variable(ctx_, nvars_, t.var);
      case Tok::LParen: {
        MultiPoly r = expr();
        if (peek().kind != Tok::RParen) {
          if (peek().kind == Tok::End) fail(peek().offset, "missing ')'");
          unexpected();
        }
        next();
        return r;
      }
      default:
        --pos_;
        unexpected();
    }
  }

  std::vector<Token> toks_;
  const FieldCtx& ctx_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedPoly parse_polynomial(std::string_view text, const FieldCtx& ctx, int nvars) {
  VarStyle style;
  std::vector<Token> toks = tokenize(text, style);
  int n = nvars;
  if (style == VarStyle::XY) {
    if (nvars >= 0 && nvars != 2) {
      throw Error(ErrorKind::ArityMismatch, "X/Y polynomial is bivariate but " + std::to_string(nvars) +
                                                " variables were requested");
    }
    n = 2;
  } else if (n < 0) {
    n = 0;
    for (const auto& t : toks) {
      if (t.kind == Tok::Var) n = std::max(n, t.var + 1);
    }
  }
  return {Parser(std::move(toks), ctx, n).parse(), style};
}

BiPoly parse_bipoly(std::string_view text, const FieldCtx& ctx) {
  return BiPoly::from_multi(parse_polynomial(text, ctx, 2).poly);
}

}  // namespace pslice
