#include "rankc/hoa.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace rankc {

namespace {

struct Token {
  enum Kind { Ident, HeaderName, Int, String, Punct, Alias, End } kind;
  std::string text;
  uint64_t value = 0;  // for Int
  uint32_t line = 0, col = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& msg, uint32_t line,
                         uint32_t col) const {
    std::ostringstream os;
    os << "line " << line << ", col " << col << ": " << msg;
    throw HoaParseError(os.str());
  }

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) {
      t.kind = Token::End;
      return t;
    }
    char c = text_[pos_];
    if (c == '"') {
      advance();
      std::string s;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) advance();
        s += text_[pos_];
        advance();
      }
      if (pos_ >= text_.size()) fail("unterminated string", t.line, t.col);
      advance();
      t.kind = Token::String;
      t.text = std::move(s);
      return t;
    }
    if (c == '@') {
      advance();
      std::string s;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
        s += text_[pos_];
        advance();
      }
      if (s.empty()) fail("empty alias name", t.line, t.col);
      t.kind = Token::Alias;
      t.text = std::move(s);
      return t;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      uint64_t v = 0;
      std::string s;
      while (pos_ < text_.size() &&
             isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        s += text_[pos_];
        advance();
      }
      t.kind = Token::Int;
      t.value = v;
      t.text = std::move(s);
      return t;
    }
    if (is_ident_start(c)) {
      std::string s;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
        s += text_[pos_];
        advance();
      }
      if (pos_ < text_.size() && text_[pos_] == ':') {
        advance();
        t.kind = Token::HeaderName;
      } else {
        t.kind = Token::Ident;
      }
      t.text = std::move(s);
      return t;
    }
    if (c == '-' && text_.compare(pos_, 8, "--BODY--") == 0) {
      for (int i = 0; i < 8; ++i) advance();
      t.kind = Token::Punct;
      t.text = "--BODY--";
      return t;
    }
    if (c == '-' && text_.compare(pos_, 7, "--END--") == 0) {
      for (int i = 0; i < 7; ++i) advance();
      t.kind = Token::Punct;
      t.text = "--END--";
      return t;
    }
    if (std::string("[]{}()!&|").find(c) != std::string::npos) {
      advance();
      t.kind = Token::Punct;
      t.text = std::string(1, c);
      return t;
    }
    fail(std::string("unexpected character '") + c + "'", t.line, t.col);
  }

 private:
  static bool is_ident_start(char c) {
    return isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_ident_char(char c) {
    return isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
           c == '.';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
        uint32_t l = line_, co = col_;
        advance();
        advance();
        while (pos_ + 1 < text_.size() &&
               !(text_[pos_] == '*' && text_[pos_ + 1] == '/'))
          advance();
        if (pos_ + 1 >= text_.size()) fail("unterminated comment", l, co);
        advance();
        advance();
      } else if (isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  uint32_t line_ = 1, col_ = 1;
};

// Label formula, evaluated against a valuation bitmask of APs.
struct Expr {
  enum Kind { True, False, Ap, Not, And, Or } kind;
  uint32_t ap = 0;
  std::vector<Expr> kids;

  bool eval(uint32_t valuation) const {
    switch (kind) {
      case True: return true;
      case False: return false;
      case Ap: return (valuation >> ap) & 1;
      case Not: return !kids[0].eval(valuation);
      case And: return kids[0].eval(valuation) && kids[1].eval(valuation);
      case Or: return kids[0].eval(valuation) || kids[1].eval(valuation);
    }
    return false;
  }
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { shift(); }

  Ba run() {
    expect_header("HOA");
    if (cur_.kind != Token::Ident || cur_.text != "v1")
      fail("expected HOA version v1");
    shift();
    parse_headers();
    if (!(cur_.kind == Token::Punct && cur_.text == "--BODY--"))
      fail("expected --BODY--");
    shift();
    if (!acceptance_ok_) fail("missing or unsupported Acceptance header");
    if (!num_states_) {
      // States: header is optional; infer from body later
      num_states_ = 0;
      infer_states_ = true;
    }
    build();
    parse_body();
    if (!(cur_.kind == Token::Punct && cur_.text == "--END--"))
      fail("expected --END--");
    ba_.validate();
    return std::move(ba_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    lex_.fail(msg, cur_.line, cur_.col);
  }

  void shift() { cur_ = lex_.next(); }

  void expect_header(const std::string& name) {
    if (cur_.kind != Token::HeaderName || cur_.text != name)
      fail("expected '" + name + ":'");
    shift();
  }

  uint64_t expect_int() {
    if (cur_.kind != Token::Int) fail("expected integer");
    uint64_t v = cur_.value;
    shift();
    return v;
  }

  void parse_headers() {
    while (cur_.kind == Token::HeaderName) {
      std::string name = cur_.text;
      shift();
      if (name == "States") {
        num_states_ = static_cast<uint32_t>(expect_int());
      } else if (name == "Start") {
        start_.push_back(static_cast<uint32_t>(expect_int()));
      } else if (name == "AP") {
        uint32_t n = static_cast<uint32_t>(expect_int());
        for (uint32_t i = 0; i < n; ++i) {
          if (cur_.kind != Token::String) fail("expected AP name string");
          aps_.push_back(cur_.text);
          shift();
        }
      } else if (name == "Acceptance") {
        parse_acceptance();
      } else if (name == "acc-name") {
        // informative only
        while (cur_.kind == Token::Ident || cur_.kind == Token::Int) shift();
      } else if (name == "Alias") {
        if (cur_.kind != Token::Alias) fail("expected @alias name");
        std::string alias = cur_.text;
        shift();
        aliases_[alias] = parse_expr();
      } else if (name == "name" || name == "tool") {
        while (cur_.kind == Token::String) shift();
      } else if (name == "properties") {
        while (cur_.kind == Token::Ident) shift();
      } else {
        // unknown headers: skip their arguments
        while (cur_.kind == Token::Ident || cur_.kind == Token::Int ||
               cur_.kind == Token::String)
          shift();
      }
    }
  }

  void parse_acceptance() {
    uint64_t sets = expect_int();
    if (sets != 1) fail("unsupported acceptance: need exactly 1 Buchi set");
    if (cur_.kind != Token::Ident || cur_.text != "Inf")
      fail("unsupported acceptance: need Inf(0)");
    shift();
    if (!(cur_.kind == Token::Punct && cur_.text == "(")) fail("expected (");
    shift();
    if (cur_.kind != Token::Int || cur_.value != 0)
      fail("unsupported acceptance: need Inf(0)");
    shift();
    if (!(cur_.kind == Token::Punct && cur_.text == ")")) fail("expected )");
    shift();
    acceptance_ok_ = true;
  }

  // precedence: ! over & over |
  Expr parse_expr() {
    Expr e = parse_and();
    while (cur_.kind == Token::Punct && cur_.text == "|") {
      shift();
      Expr rhs = parse_and();
      Expr n{Expr::Or};
      n.kids = {std::move(e), std::move(rhs)};
      e = std::move(n);
    }
    return e;
  }

  Expr parse_and() {
    Expr e = parse_unary();
    while (cur_.kind == Token::Punct && cur_.text == "&") {
      shift();
      Expr rhs = parse_unary();
      Expr n{Expr::And};
      n.kids = {std::move(e), std::move(rhs)};
      e = std::move(n);
    }
    return e;
  }

  Expr parse_unary() {
    if (cur_.kind == Token::Punct && cur_.text == "!") {
      shift();
      Expr n{Expr::Not};
      n.kids = {parse_unary()};
      return n;
    }
    if (cur_.kind == Token::Punct && cur_.text == "(") {
      shift();
      Expr e = parse_expr();
      if (!(cur_.kind == Token::Punct && cur_.text == ")"))
        fail("expected )");
      shift();
      return e;
    }
    if (cur_.kind == Token::Ident && cur_.text == "t") {
      shift();
      return Expr{Expr::True};
    }
    if (cur_.kind == Token::Ident && cur_.text == "f") {
      shift();
      return Expr{Expr::False};
    }
    if (cur_.kind == Token::Int) {
      uint32_t ap = static_cast<uint32_t>(cur_.value);
      if (ap >= aps_.size()) fail("undeclared atomic proposition");
      shift();
      Expr e{Expr::Ap};
      e.ap = ap;
      return e;
    }
    if (cur_.kind == Token::Alias) {
      auto it = aliases_.find(cur_.text);
      if (it == aliases_.end()) fail("unknown alias @" + cur_.text);
      shift();
      return it->second;
    }
    fail("expected label expression");
  }

  void build() {
    uint32_t letters = 1u << aps_.size();
    if (aps_.size() > 20) fail("too many atomic propositions");
    std::vector<std::string> names;
    for (uint32_t v = 0; v < letters; ++v) {
      if (aps_.empty()) {
        names.push_back("t");
        continue;
      }
      std::string s;
      for (uint32_t i = 0; i < aps_.size(); ++i) {
        if (!s.empty()) s += "&";
        if (!((v >> i) & 1)) s += "!";
        s += aps_[i];
      }
      names.push_back(std::move(s));
    }
    ba_ = Ba(num_states_, std::move(names));
  }

  void grow_to(uint32_t q) {
    if (q < ba_.num_states) return;
    if (!infer_states_) fail("state index out of range");
    Ba bigger(q + 1, ba_.symbols);
    bigger.initial = StateSet(q + 1);
    ba_.initial.for_each([&](uint32_t s) { bigger.initial.set(s); });
    ba_.acc_states.for_each([&](uint32_t s) { bigger.acc_states.set(s); });
    for (uint32_t s = 0; s < ba_.num_states; ++s)
      for (uint32_t a = 0; a < ba_.num_symbols(); ++a)
        for (uint32_t r : ba_.succ(s, a))
          bigger.add_edge(s, a, r, ba_.has_acc_edge(s, a, r));
    bigger.state_names = ba_.state_names;
    if (!bigger.state_names.empty()) bigger.state_names.resize(q + 1);
    ba_ = std::move(bigger);
  }

  // {0} or {} after a state or edge; only set 0 is allowed
  bool parse_marks() {
    if (!(cur_.kind == Token::Punct && cur_.text == "{")) return false;
    shift();
    bool marked = false;
    while (cur_.kind == Token::Int) {
      if (cur_.value != 0) fail("acceptance set out of range");
      marked = true;
      shift();
    }
    if (!(cur_.kind == Token::Punct && cur_.text == "}")) fail("expected }");
    shift();
    return marked;
  }

  void parse_body() {
    uint32_t letters = ba_.num_symbols();
    while (cur_.kind == Token::HeaderName && cur_.text == "State") {
      shift();
      if (cur_.kind == Token::Punct && cur_.text == "[")
        fail("state labels are not supported");
      uint32_t q = static_cast<uint32_t>(expect_int());
      grow_to(q);
      if (cur_.kind == Token::String) {
        if (ba_.state_names.empty())
          ba_.state_names.assign(ba_.num_states, "");
        ba_.state_names[q] = cur_.text;
        shift();
      }
      if (parse_marks()) ba_.acc_states.set(q);

      uint32_t implicit = 0;
      while ((cur_.kind == Token::Punct && cur_.text == "[") ||
             cur_.kind == Token::Int) {
        std::optional<Expr> label;
        if (cur_.kind == Token::Punct) {
          shift();
          label = parse_expr();
          if (!(cur_.kind == Token::Punct && cur_.text == "]"))
            fail("expected ]");
          shift();
        }
        uint32_t dst = static_cast<uint32_t>(expect_int());
        grow_to(dst);
        bool acc_edge = parse_marks();
        if (label) {
          for (uint32_t v = 0; v < letters; ++v)
            if (label->eval(v)) ba_.add_edge(q, v, dst, acc_edge);
        } else {
          if (implicit >= letters) fail("too many implicit edges");
          ba_.add_edge(q, implicit++, dst, acc_edge);
        }
      }
    }
    for (uint32_t s : start_) {
      if (s >= ba_.num_states) fail("Start state out of range");
      ba_.initial.set(s);
    }
  }

  Lexer lex_;
  Token cur_;
  uint32_t num_states_ = 0;
  bool infer_states_ = false;
  bool acceptance_ok_ = false;
  std::vector<uint32_t> start_;
  std::vector<std::string> aps_;
  std::map<std::string, Expr> aliases_;
  Ba ba_;
};

}  // namespace

Ba parse_hoa(const std::string& text) { return Parser(text).run(); }

std::string serialize_hoa(const Ba& ba) {
  uint32_t ap_count = 0;
  while ((1u << ap_count) < ba.num_symbols()) ++ap_count;

  std::ostringstream os;
  os << "HOA: v1\n";
  os << "States: " << ba.num_states << "\n";
  ba.initial.for_each([&](uint32_t q) { os << "Start: " << q << "\n"; });
  os << "AP: " << ap_count;
  for (uint32_t i = 0; i < ap_count; ++i) os << " \"p" << i << "\"";
  os << "\n";
  os << "acc-name: Buchi\n";
  os << "Acceptance: 1 Inf(0)\n";
  os << "--BODY--\n";
  for (uint32_t q = 0; q < ba.num_states; ++q) {
    os << "State: " << q;
    if (!ba.state_names.empty() && !ba.state_name(q).empty())
      os << " \"" << ba.state_name(q) << "\"";
    if (ba.acc_states.test(q)) os << " {0}";
    os << "\n";
    for (uint32_t a = 0; a < ba.num_symbols(); ++a) {
      std::string label;
      if (ap_count == 0) {
        label = "t";
      } else {
        for (uint32_t i = 0; i < ap_count; ++i) {
          if (!label.empty()) label += "&";
          if (!((a >> i) & 1)) label += "!";
          label += std::to_string(i);
        }
      }
      for (uint32_t r : ba.succ(q, a)) {
        os << "  [" << label << "] " << r;
        if (ba.has_acc_edge(q, a, r)) os << " {0}";
        os << "\n";
      }
    }
  }
  os << "--END--\n";
  return os.str();
}

}  // namespace rankc
