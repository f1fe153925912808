#include "ginv/law_parser.hpp"

#include <algorithm>
#include <array>
#include <optional>

namespace ginv {

namespace {

enum class Tok { Ident, Int, Eq, Implies, Le, Comma, Plus, Minus, Star, Caret, LBrace, RBrace, LParen, RParen, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;
};

constexpr std::array<std::string_view, 8> kReserved = {"in", "has", "nil", "hirano", "rideal", "lideal", "lann", "rann"};

bool reserved(std::string_view s) { return std::find(kReserved.begin(), kReserved.end(), s) != kReserved.end(); }

std::optional<SetKind> set_kind(std::string_view s) {
  if (s == "rideal") return SetKind::RightIdeal;
  if (s == "lideal") return SetKind::LeftIdeal;
  if (s == "lann") return SetKind::LeftAnn;
  if (s == "rann") return SetKind::RightAnn;
  return std::nullopt;
}

std::optional<InverseKind> dsl_kind(std::string_view s) {
  for (auto k : kAllKinds) {
    if (kind_short_name(k) == s) return k;
  }
  return std::nullopt;
}

std::string describe(const Token& t) {
  switch (t.type) {
    case Tok::End: return "end of input";
    case Tok::Ident: return reserved(t.text) ? "'" + t.text + "'" : "identifier '" + t.text + "'";
    case Tok::Int: return "integer '" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column_;
      t.offset = pos_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t end = pos_;
        while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) ++end;
        t.type = Tok::Ident;
        t.text = std::string(src_.substr(pos_, end - pos_));
        advance(end - pos_);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t end = pos_;
        while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
        t.type = Tok::Int;
        t.text = std::string(src_.substr(pos_, end - pos_));
        advance(end - pos_);
      } else if (src_.substr(pos_, 2) == "=>") {
        t.type = Tok::Implies;
        t.text = "=>";
        advance(2);
      } else if (src_.substr(pos_, 2) == "<=") {
        t.type = Tok::Le;
        t.text = "<=";
        advance(2);
      } else {
        switch (c) {
          case '=': t.type = Tok::Eq; break;
          case ',': t.type = Tok::Comma; break;
          case '+': t.type = Tok::Plus; break;
          case '-': t.type = Tok::Minus; break;
          case '*': t.type = Tok::Star; break;
          case '^': t.type = Tok::Caret; break;
          case '{': t.type = Tok::LBrace; break;
          case '}': t.type = Tok::RBrace; break;
          case '(': t.type = Tok::LParen; break;
          case ')': t.type = Tok::RParen; break;
          default: {
            std::size_t len = 1;
            while (pos_ + len < src_.size() && (static_cast<unsigned char>(src_[pos_ + len]) & 0xC0) == 0x80) ++len;
            throw LawError(ErrorCode::SyntaxError, t.line, t.column,
                           "unexpected character '" + std::string(src_.substr(pos_, len)) + "'");
          }
        }
        t.text = std::string(1, c);
        advance(1);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i, ++pos_) {
      const auto b = static_cast<unsigned char>(src_[pos_]);
      if (b == '\n') {
        ++line_;
        column_ = 1;
      } else if ((b & 0xC0) != 0x80) {
        ++column_;
      }
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        std::size_t end = src_.find('\n', pos_);
        advance((end == std::string_view::npos ? src_.size() : end) - pos_);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

const std::vector<std::string> kAtomStart = {"variable", "'0'", "'1'", "'('"};
const std::vector<std::string> kFormulaStart = {"variable", "'0'",     "'1'",      "'('",      "'nil'", "'hirano'",
                                                "'has'",    "'rideal'", "'lideal'", "'lann'", "'rann'"};
const std::vector<std::string> kTermContinue = {"'^'", "'*'", "'+'", "'-'"};

std::vector<std::string> operator+(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::size_t source_size) : toks_(std::move(toks)), size_(source_size) {}

  Law law() {
    std::vector<Formula> formulas;
    formulas.push_back(formula());
    bool implies = false;
    while (true) {
      if (peek().type == Tok::Comma) {
        next();
        formulas.push_back(formula());
      } else if (peek().type == Tok::Implies) {
        next();
        implies = true;
        break;
      } else if (peek().type == Tok::End && formulas.size() == 1) {
        break;
      } else {
        fail(formulas.size() == 1 ? std::vector<std::string>{"','", "'=>'", "end of input"}
                                  : std::vector<std::string>{"','", "'=>'"},
             true);
      }
    }
    Law out;
    if (implies) {
      out.hypotheses = std::move(formulas);
      out.conclusion = formula();
      if (peek().type != Tok::End) fail({"end of input"}, true);
    } else {
      out.conclusion = std::move(formulas.front());
    }
    out.variables = variables_;
    rewrite_conclusion(out);
    return out;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  // after_term: the failure follows a complete term, so the term
  // continuation operators were acceptable as well.
  [[noreturn]] void fail(std::vector<std::string> expected, bool after_term = false) const {
    if (after_term && ends_term_) expected = kTermContinue + expected;
    const Token& t = peek();
    throw LawError(ErrorCode::SyntaxError, t.line, t.column, "unexpected " + describe(t), std::move(expected));
  }

  void expect(Tok type, const std::string& name, bool after_term = false) {
    if (peek().type != type) fail({name}, after_term);
    next();
  }

  SourceSpan span_from(const Token& start) const {
    SourceSpan s;
    s.line = start.line;
    s.column = start.column;
    s.offset = start.offset;
    const std::size_t end = pos_ == 0 ? start.offset : toks_[pos_ - 1].offset + toks_[pos_ - 1].text.size();
    s.length = std::min(end, size_) - start.offset;
    return s;
  }

  InverseKind kind() {
    const Token& t = peek();
    if (t.type != Tok::Ident) fail({"inverse kind"});
    auto k = dsl_kind(t.text);
    if (!k) throw LawError(ErrorCode::UnknownKind, t.line, t.column, "unknown inverse kind '" + t.text + "'");
    next();
    return *k;
  }

  Formula formula() {
    ends_term_ = false;
    const Token start = peek();
    Formula f;
    if (start.type == Tok::Ident && reserved(start.text)) {
      if (auto s = set_kind(start.text)) {
        next();
        f.set = *s;
        f.lhs = parenthesized();
        if (peek().type == Tok::Le) {
          f.type = Formula::Type::Inclusion;
        } else if (peek().type == Tok::Eq) {
          f.type = Formula::Type::SetEqual;
        } else {
          fail({"'<='", "'='"});
        }
        next();
        const Token& other = peek();
        if (other.type != Tok::Ident || set_kind(other.text) != s) fail({"'" + start.text + "'"});
        next();
        f.rhs = parenthesized();
      } else if (start.text == "nil" || start.text == "hirano") {
        next();
        f.type = start.text == "nil" ? Formula::Type::Nilpotent : Formula::Type::Hirano;
        f.lhs = parenthesized();
      } else if (start.text == "has") {
        next();
        f.type = Formula::Type::Has;
        f.kind = kind();
        f.lhs = parenthesized();
      } else {
        fail(kFormulaStart);
      }
      ends_term_ = false;
    } else {
      const bool term_start = start.type == Tok::Ident || start.type == Tok::LParen ||
                              (start.type == Tok::Int && (start.text == "0" || start.text == "1"));
      if (!term_start) fail(kFormulaStart);
      f.lhs = term();
      if (peek().type == Tok::Eq) {
        next();
        f.type = Formula::Type::Equation;
        f.rhs = term();
      } else if (peek().type == Tok::Ident && peek().text == "in") {
        next();
        f.type = Formula::Type::Membership;
        f.kind = kind();
        f.rhs = parenthesized();
        ends_term_ = false;
      } else {
        fail({"'='", "'in'"}, true);
      }
    }
    f.span = span_from(start);
    return f;
  }

  TermPtr parenthesized() {
    expect(Tok::LParen, "'('");
    TermPtr t = term();
    expect(Tok::RParen, "')'", true);
    ends_term_ = false;
    return t;
  }

  std::shared_ptr<Term> make(Term::Op op, const Token& start, TermPtr lhs, TermPtr rhs = nullptr) {
    auto t = std::make_shared<Term>();
    t->op = op;
    t->lhs = std::move(lhs);
    t->rhs = std::move(rhs);
    t->span = span_from(start);
    return t;
  }

  TermPtr term() {
    const Token start = peek();
    TermPtr left = product();
    while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
      const Term::Op op = next().type == Tok::Plus ? Term::Op::Add : Term::Op::Sub;
      TermPtr right = product();
      left = make(op, start, left, right);
    }
    return left;
  }

  TermPtr product() {
    const Token start = peek();
    TermPtr left = unary();
    while (peek().type == Tok::Star) {
      next();
      TermPtr right = unary();
      left = make(Term::Op::Mul, start, left, right);
    }
    return left;
  }

  TermPtr unary() {
    const Token start = peek();
    TermPtr t = atom();
    while (peek().type == Tok::Caret) {
      next();
      const Token& p = peek();
      if (p.type == Tok::Star) {
        next();
        t = make(Term::Op::Star, start, t);
      } else if (p.type == Tok::Int) {
        if (p.text.size() > 4 || std::stoul(p.text) > 4096) {
          throw LawError(ErrorCode::SyntaxError, p.line, p.column, "exponent " + p.text + " is larger than 4096");
        }
        const auto e = static_cast<unsigned>(std::stoul(p.text));
        next();
        auto n = make(Term::Op::Pow, start, t);
        n->exponent = e;
        t = n;
      } else if (p.type == Tok::Ident && p.text == "k") {
        next();
        t = make(Term::Op::PowIndex, start, t);
      } else if (p.type == Tok::LBrace) {
        next();
        const InverseKind k = kind();
        expect(Tok::RBrace, "'}'");
        auto n = make(Term::Op::Inverse, start, t);
        n->kind = k;
        t = n;
      } else {
        fail({"'*'", "integer", "'k'", "'{'"});
      }
    }
    ends_term_ = true;
    return t;
  }

  TermPtr atom() {
    const Token start = peek();
    auto t = std::make_shared<Term>();
    if (start.type == Tok::Ident && !reserved(start.text)) {
      next();
      t->op = Term::Op::Var;
      t->name = start.text;
      if (std::find(variables_.begin(), variables_.end(), start.text) == variables_.end()) {
        variables_.push_back(start.text);
      }
    } else if (start.type == Tok::Int && (start.text == "0" || start.text == "1")) {
      next();
      t->op = start.text == "0" ? Term::Op::Zero : Term::Op::One;
    } else if (start.type == Tok::LParen) {
      next();
      TermPtr inner = term();
      expect(Tok::RParen, "')'", true);
      ends_term_ = true;
      return inner;
    } else {
      fail(kAtomStart);
    }
    t->span = span_from(start);
    ends_term_ = true;
    return t;
  }

  void rewrite_conclusion(Law& law) const {
    Formula& c = law.conclusion;
    if (c.type != Formula::Type::Equation || c.lhs->op != Term::Op::Inverse) return;
    if (c.lhs->kind != InverseKind::WD && c.lhs->kind != InverseKind::WDMP) return;
    const std::string name(kind_short_name(c.lhs->kind));
    law.warnings.push_back("line " + std::to_string(c.span.line) + ", column " + std::to_string(c.span.column) +
                           ": '=' with a " + name + "-decorated left side is read as membership in " + name + "(" +
                           print_term(*c.lhs->lhs) + ")");
    Formula m;
    m.type = Formula::Type::Membership;
    m.kind = c.lhs->kind;
    m.lhs = c.rhs;
    m.rhs = c.lhs->lhs;
    m.span = c.span;
    c = std::move(m);
  }

  std::vector<Token> toks_;
  std::size_t size_;
  std::size_t pos_ = 0;
  bool ends_term_ = false;
  std::vector<std::string> variables_;
};

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += xs[i];
  }
  return out;
}

std::string format_message(std::size_t line, std::size_t column, const std::string& message,
                           const std::vector<std::string>& expected) {
  std::string out = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  if (!expected.empty()) out += (expected.size() == 1 ? "; expected " : "; expected one of: ") + join(expected);
  return out;
}

}  // namespace

LawError::LawError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message,
                   std::vector<std::string> expected)
    : Error(code, format_message(line, column, message, expected)),
      line_(line),
      column_(column),
      message_(message),
      expected_(std::move(expected)) {}

Law parse_law(std::string_view text) {
  Parser p(Lexer(text).run(), text.size());
  return p.law();
}

}  // namespace ginv
