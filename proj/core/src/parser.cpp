#include "mcdlo/parser.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "mcdlo/error.hpp"
#include "mcdlo/macros.hpp"
#include "mcdlo/transform.hpp"

namespace mcdlo::syntax {

namespace {

struct Token {
  enum class Kind { open, close, symbol, end } kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ >= src_.size()) return {Token::Kind::end, {}, pos_};
    const auto start = pos_;
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      return {Token::Kind::open, "(", start};
    }
    if (c == ')') {
      ++pos_;
      return {Token::Kind::close, ")", start};
    }
    while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) &&
           src_[pos_] != '(' && src_[pos_] != ')') {
      ++pos_;
    }
    return {Token::Kind::symbol, std::string(src_.substr(start, pos_ - start)), start};
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

bool is_variable(const std::string& s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::optional<Const> constant_named(const std::string& s) {
  if (s == "bot") return Const::bot;
  if (s == "zero") return Const::zero;
  if (s == "zerostar") return Const::zerostar;
  if (s == "top") return Const::top;
  return std::nullopt;
}

std::optional<Fn> function_named(const std::string& s) {
  if (s == "union") return Fn::union_;
  if (s == "inter") return Fn::inter;
  if (s == "setminus") return Fn::setminus;
  if (s == "sinv") return Fn::succ_inv;
  if (s == "msinv") return Fn::sinv;
  if (s == "min") return Fn::min;
  if (s == "max") return Fn::max;
  if (s == "l") return Fn::left;
  if (s == "r") return Fn::right;
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::string_view src, Signature sig) : lexer_(src), sig_(sig) { advance(); }

  Formula formula() {
    if (tok_.kind == Token::Kind::symbol) {
      if (tok_.text == "true") {
        advance();
        return Formula::truth();
      }
      if (tok_.text == "false") {
        advance();
        return Formula::falsity();
      }
      fail("expected a formula, found '" + tok_.text + "'");
    }
    const auto open = expect_open("a formula");
    const auto head = expect_symbol("a formula head");
    Formula out = Formula::truth();
    if (head.text == "=") {
      auto a = term();
      auto b = term();
      out = eq(a, b);
    } else if (head.text == "subset") {
      if (!allows(sig_, Formula::Kind::subset)) fail_at("'subset' is not in this signature", head.pos);
      auto a = term();
      auto b = term();
      out = subset(a, b);
    } else if (head.text == "ltE") {
      auto a = term();
      auto b = term();
      out = lt_exists_expansion(a, b, sig_);
    } else if (head.text == "at") {
      out = at(term());
    } else if (head.text == "not") {
      out = lnot(formula());
    } else if (head.text == "and" || head.text == "or") {
      std::vector<Formula> parts;
      while (tok_.kind != Token::Kind::close && tok_.kind != Token::Kind::end) parts.push_back(formula());
      if (parts.size() < 2) fail_at("'" + head.text + "' needs at least two operands", head.pos);
      out = head.text == "and" ? conjunction(std::move(parts)) : disjunction(std::move(parts));
    } else if (head.text == "implies" || head.text == "iff") {
      auto a = formula();
      auto b = formula();
      out = head.text == "implies" ? implies(a, b) : iff(a, b);
    } else if (head.text == "exists" || head.text == "forall") {
      const auto v = expect_symbol("a bound variable");
      if (!is_variable(v.text)) fail_at("'" + v.text + "' is not a variable", v.pos);
      auto body = formula();
      out = head.text == "exists" ? exists(v.text, body) : forall(v.text, body);
    } else {
      fail_at("unknown formula head '" + head.text + "'", head.pos);
    }
    expect_close(open);
    return out;
  }

  Term term() {
    if (tok_.kind == Token::Kind::symbol) {
      const auto t = tok_;
      advance();
      if (is_variable(t.text)) return var(t.text);
      if (auto c = constant_named(t.text)) {
        if (!allows(sig_, *c)) fail_at("constant '" + t.text + "' is not in this signature", t.pos);
        return Term::constant(*c);
      }
      fail_at("expected a term, found '" + t.text + "'", t.pos);
    }
    const auto open = expect_open("a term");
    const auto head = expect_symbol("a function symbol");
    Term out = bot();
    if (head.text == "delta") {
      if (!allows(sig_, Fn::setminus)) fail_at("'delta' is not in this signature", head.pos);
      auto a = term();
      auto b = term();
      out = delta(a, b);
    } else if (auto fn = function_named(head.text)) {
      if (!allows(sig_, *fn)) fail_at("function '" + head.text + "' is not in this signature", head.pos);
      std::vector<Term> args;
      for (int i = 0; i < arity(*fn); ++i) args.push_back(term());
      out = Term::apply(*fn, std::move(args));
    } else {
      fail_at("unknown function symbol '" + head.text + "'", head.pos);
    }
    expect_close(open);
    return out;
  }

  void expect_end() {
    if (tok_.kind != Token::Kind::end) fail("trailing input '" + tok_.text + "'");
  }

 private:
  void advance() { tok_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, tok_.pos); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) { throw ParseError(msg, pos); }

  std::size_t expect_open(const std::string& what) {
    if (tok_.kind != Token::Kind::open) {
      fail("expected " + what + (tok_.kind == Token::Kind::end ? ", found end of input" : ""));
    }
    const auto pos = tok_.pos;
    advance();
    return pos;
  }

  Token expect_symbol(const std::string& what) {
    if (tok_.kind != Token::Kind::symbol) fail("expected " + what);
    auto t = tok_;
    advance();
    return t;
  }

  void expect_close(std::size_t open) {
    if (tok_.kind != Token::Kind::close) {
      fail("expected ')' closing the list opened at offset " + std::to_string(open));
    }
    advance();
  }

  Lexer lexer_;
  Signature sig_;
  Token tok_{Token::Kind::end, {}, 0};
};

}  // namespace

Formula parse_formula(std::string_view text, Signature sig) {
  Parser p(text, sig);
  auto f = p.formula();
  p.expect_end();
  return f;
}

Term parse_term(std::string_view text, Signature sig) {
  Parser p(text, sig);
  auto t = p.term();
  p.expect_end();
  return t;
}

}  // namespace mcdlo::syntax
