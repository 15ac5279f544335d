#include "pbw/parse.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <variant>

#include "pbw/errors.hpp"

namespace pbw {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class ExprParser {
 public:
  ExprParser(const Algebra& alg, const std::vector<std::string>& params, std::string_view src)
      : alg_(alg), params_(params), src_(src) {}

  Element run() {
    skip();
    if (at_end()) fail("empty expression");
    Element v = expr();
    skip();
    if (!at_end()) {
      if (ident_start(peek()) || std::isdigit(static_cast<unsigned char>(peek())) || peek() == '(')
        fail("expected an operator; products need an explicit '*'");
      fail(std::string("unexpected '") + peek() + "'");
    }
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_ + 1); }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Element expr() {
    Element v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  Element term() {
    Element v = factor();
    for (;;) {
      if (eat('*')) {
        v = alg_.multiply(v, factor());
      } else if (eat('/')) {
        std::size_t at = pos_;
        Element d = factor();
        auto s = d.as_scalar();
        if (!s) {
          pos_ = at;
          fail("division is only by scalars");
        }
        if (s->is_zero()) throw DivisionByZero();
        v *= s->inverse();
      } else {
        return v;
      }
    }
  }

  Element factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    Element base = primary();
    if (!eat('^')) return base;
    skip();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
      skip();
    }
    long k = integer("expected an integer exponent");
    if (neg) k = -k;
    if (auto s = base.as_scalar()) {
      if (s->is_zero() && k < 0) throw DivisionByZero();
      return alg_.constant(s->pow(k));
    }
    return alg_.power(base, static_cast<int>(k));
  }

  long integer(const char* what) {
    skip();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail(what);
    long v = 0;
    auto [p, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (ec != std::errc()) {
      pos_ = start;
      fail("integer out of range");
    }
    return v;
  }

  Element primary() {
    skip();
    if (at_end()) fail("unexpected end of expression");
    char c = peek();
    if (c == '(') {
      ++pos_;
      Element v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return alg_.constant(Scalar(mpq_class(std::string(src_.substr(start, pos_ - start)))));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (!at_end() && ident_char(peek())) ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      int g = alg_.presentation().generator_index(name);
      if (g >= 0) return alg_.generator(g);
      for (const auto& p : params_)
        if (p == name) return alg_.constant(Scalar::param(name));
      pos_ = start;
      throw UnknownSymbol(name);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const Algebra& alg_;
  const std::vector<std::string>& params_;
  std::string_view src_;
  std::size_t pos_ = 0;
};

const Algebra& scalar_algebra() {
  static const Algebra alg(Presentation(0, 0, {}, {}));
  return alg;
}

std::string coefficient_text(const Scalar& a) {
  std::string s = a.to_string();
  if (a.den().is_one() && a.num().size() > 1) return "(" + s + ")";
  return s;
}

// ---- document reader ------------------------------------------------------

struct Value;
using List = std::vector<Value>;
using Table = std::vector<std::pair<std::string, Value>>;
struct Value {
  std::variant<long, std::string, List, Table> v;
  std::size_t col = 0;
};

struct Token {
  enum Kind { ident, integer, string, symbol, end } kind;
  std::string text;
  std::size_t col;
};

class LineReader {
 public:
  LineReader(std::string text, int line) : s_(std::move(text)), line_(line) { lex(); }

  [[noreturn]] void fail(const std::string& what, std::size_t col) const {
    throw SyntaxError("line " + std::to_string(line_) + ": " + what, col);
  }
  const Token& peek() const { return toks_[k_]; }
  Token next() { return toks_[k_ < toks_.size() - 1 ? k_++ : k_]; }
  void expect(const std::string& sym) {
    Token t = next();
    if (t.kind != Token::symbol || t.text != sym) fail("expected '" + sym + "'", t.col);
  }
  void expect_end() {
    if (peek().kind != Token::end) fail("unexpected '" + peek().text + "'", peek().col);
  }
  long expect_int() {
    Token t = next();
    if (t.kind != Token::integer) fail("expected an integer", t.col);
    return std::stol(t.text);
  }

  Value value() {
    Token t = next();
    switch (t.kind) {
      case Token::integer: return {std::stol(t.text), t.col};
      case Token::string: return {t.text, t.col};
      case Token::symbol:
        if (t.text == "[") {
          List items;
          if (peek().kind == Token::symbol && peek().text == "]") {
            next();
            return {items, t.col};
          }
          for (;;) {
            items.push_back(value());
            Token sep = next();
            if (sep.kind == Token::symbol && sep.text == "]") return {items, t.col};
            if (sep.kind != Token::symbol || sep.text != ",") fail("expected ',' or ']'", sep.col);
          }
        }
        if (t.text == "{") {
          Table items;
          if (peek().kind == Token::symbol && peek().text == "}") {
            next();
            return {items, t.col};
          }
          for (;;) {
            Token key = next();
            if (key.kind != Token::ident && key.kind != Token::integer) fail("expected a key", key.col);
            Token eq = next();
            if (eq.kind != Token::symbol || (eq.text != "=" && eq.text != ":")) fail("expected '=' or ':'", eq.col);
            items.emplace_back(key.text, value());
            Token sep = next();
            if (sep.kind == Token::symbol && sep.text == "}") return {items, t.col};
            if (sep.kind != Token::symbol || sep.text != ",") fail("expected ',' or '}'", sep.col);
          }
        }
        [[fallthrough]];
      default:
        fail("expected a value", t.col);
    }
  }

  std::string text_of(const Value& v) const {
    if (auto* s = std::get_if<std::string>(&v.v)) return *s;
    if (auto* i = std::get_if<long>(&v.v)) return std::to_string(*i);
    fail("expected a string", v.col);
  }

  int line() const { return line_; }

 private:
  void lex() {
    std::size_t i = 0;
    while (i < s_.size()) {
      char c = s_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '"') {
        std::size_t j = s_.find('"', i + 1);
        if (j == std::string::npos) fail("unterminated string", i + 1);
        toks_.push_back({Token::string, s_.substr(i + 1, j - i - 1), i + 1});
        i = j + 1;
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && i + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i + 1])))) {
        std::size_t j = i + 1;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        toks_.push_back({Token::integer, s_.substr(i, j - i), i + 1});
        i = j;
      } else if (ident_start(c)) {
        std::size_t j = i;
        while (j < s_.size() && ident_char(s_[j])) ++j;
        toks_.push_back({Token::ident, s_.substr(i, j - i), i + 1});
        i = j;
      } else if (std::string_view("=[]{},:").find(c) != std::string_view::npos) {
        toks_.push_back({Token::symbol, std::string(1, c), i + 1});
        ++i;
      } else {
        fail(std::string("unexpected '") + c + "'", i + 1);
      }
    }
    toks_.push_back({Token::end, "end of line", s_.size() + 1});
  }

  std::string s_;
  int line_;
  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    else if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

int brace_balance(const std::string& s) {
  int b = 0;
  bool quoted = false;
  for (char c : s) {
    if (c == '"') quoted = !quoted;
    else if (!quoted && (c == '{' || c == '[')) ++b;
    else if (!quoted && (c == '}' || c == ']')) --b;
  }
  return b;
}

[[noreturn]] void doc_fail(int line, const std::string& what) {
  throw SyntaxError("line " + std::to_string(line) + ": " + what, 1);
}

std::vector<std::string> string_list(LineReader& rd, const Value& v) {
  auto* l = std::get_if<List>(&v.v);
  if (!l) rd.fail("expected a list", v.col);
  std::vector<std::string> out;
  for (const auto& item : *l) out.push_back(rd.text_of(item));
  return out;
}

// Fields are stored as canonical text: lists are joined with '\n'.
std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "\n" : "") + v[k];
  return s;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '\n')) out.push_back(item);
  return out;
}

long field_int(const Document& doc, const std::string& key, long fallback) {
  auto it = doc.fields.find(key);
  if (it == doc.fields.end()) return fallback;
  return std::stol(it->second);
}

std::string quoted_list(const std::vector<std::string>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", \"" : "\"") + v[k] + "\"";
  return s + "]";
}

}  // namespace

Element parse_expression(const Algebra& alg, std::string_view src) {
  return ExprParser(alg, alg.presentation().params(), src).run();
}

Scalar parse_scalar(std::string_view src, const std::vector<std::string>& params) {
  Element e = ExprParser(scalar_algebra(), params, src).run();
  return *e.as_scalar();
}

std::string format_monomial(const Presentation& p, const Monomial& m) {
  std::string s;
  for (int k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += p.gen_names()[k];
    if (m[k] != 1) s += '^' + std::to_string(m[k]);
  }
  return s.empty() ? "1" : s;
}

std::string format_element(const Presentation& p, const Element& f, OutputMode mode) {
  std::string out;
  if (mode == OutputMode::machine) {
    for (const auto& [m, c] : f.terms()) {
      out += c.to_string() + '\t';
      for (int k = 0; k < m.size(); ++k) out += (k ? " " : "") + std::to_string(m[k]);
      out += '\n';
    }
    return out;
  }
  if (f.is_zero()) return "0";
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    bool neg = c.looks_negative();
    Scalar a = neg ? -c : c;
    std::string body;
    if (m.is_one()) body = coefficient_text(a);
    else if (a.is_one()) body = format_monomial(p, m);
    else body = coefficient_text(a) + "*" + format_monomial(p, m);
    if (first) out += (neg ? "-" : "") + body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

Element parse_machine(const Algebra& alg, std::string_view text) {
  Element out = alg.zero();
  std::stringstream ss{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) doc_fail(lineno, "expected '<scalar>\\t<exponents>'");
    Scalar c = parse_scalar(line.substr(0, tab), alg.presentation().params());
    std::stringstream es(line.substr(tab + 1));
    std::vector<int> exps;
    int e;
    while (es >> e) exps.push_back(e);
    if (!es.eof() || static_cast<int>(exps.size()) != alg.n()) doc_fail(lineno, "expected one exponent per generator");
    Monomial m(std::move(exps));
    if (!alg.admissible(m)) throw NotInvertible("line " + std::to_string(lineno) + ": negative exponent outside the invertible block");
    out.add_term(m, c);
  }
  return out;
}

Document parse_document(std::string_view text) {
  Document doc;
  std::stringstream ss{std::string(text)};
  std::string raw;
  int lineno = 0;
  enum { top, bracket, derivation } section = top;
  while (std::getline(ss, raw)) {
    ++lineno;
    int start = lineno;
    std::string stmt = strip_comment(raw);
    while (brace_balance(stmt) > 0 && std::getline(ss, raw)) {
      ++lineno;
      stmt += " " + strip_comment(raw);
    }
    if (stmt.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto first = stmt.find_first_not_of(" \t\r");
    if (stmt[first] == '[') {
      auto close = stmt.find(']', first);
      if (close == std::string::npos || stmt.find_first_not_of(" \t\r", close + 1) != std::string::npos)
        doc_fail(start, "malformed section header");
      std::string name = stmt.substr(first + 1, close - first - 1);
      if (name == "bracket") {
        section = bracket;
        doc.has_bracket = true;
      } else if (name == "derivation") {
        section = derivation;
        doc.has_derivation = true;
      } else {
        doc_fail(start, "unknown section '" + name + "'");
      }
      continue;
    }
    LineReader rd(stmt, start);
    Token key = rd.next();
    if (key.kind != Token::ident) rd.fail("expected a key", key.col);
    if (section == top && key.text == "rel") {
      int j = static_cast<int>(rd.expect_int()), i = static_cast<int>(rd.expect_int());
      rd.expect("=");
      Value v = rd.value();
      rd.expect_end();
      auto* t = std::get_if<Table>(&v.v);
      if (!t) rd.fail("expected '{ ... }'", v.col);
      Document::Rel rel;
      rel.line = start;
      bool has_q = false;
      for (const auto& [k, item] : *t) {
        if (k == "q") {
          rel.q = rd.text_of(item);
          has_q = true;
        } else if (k == "c0") {
          rel.c0 = rd.text_of(item);
        } else if (k == "c") {
          auto* ct = std::get_if<Table>(&item.v);
          if (!ct) rd.fail("expected '{ t: \"...\" }'", item.col);
          for (const auto& [tk, tv] : *ct) {
            if (tk.empty() || !std::isdigit(static_cast<unsigned char>(tk[0]))) rd.fail("expected a generator index", tv.col);
            rel.c[std::stoi(tk)] = rd.text_of(tv);
          }
        } else {
          rd.fail("unknown relation field '" + k + "'", item.col);
        }
      }
      if (!has_q) rd.fail("relation entry needs q", v.col);
      if (!doc.rels.emplace(std::make_pair(j, i), rel).second) rd.fail("duplicate relation", key.col);
    } else if (section == top) {
      rd.expect("=");
      Value v = rd.value();
      rd.expect_end();
      if (key.text == "n" || key.text == "r") {
        auto* i = std::get_if<long>(&v.v);
        if (!i) rd.fail("expected an integer", v.col);
        doc.fields[key.text] = std::to_string(*i);
      } else if (key.text == "params" || key.text == "gens") {
        doc.fields[key.text] = join(string_list(rd, v));
      } else {
        rd.fail("unknown field '" + key.text + "'", key.col);
      }
    } else if (section == bracket) {
      if (key.text != "b") rd.fail("expected 'b i j = \"...\"'", key.col);
      int i = static_cast<int>(rd.expect_int()), j = static_cast<int>(rd.expect_int());
      rd.expect("=");
      Value v = rd.value();
      rd.expect_end();
      if (!doc.bracket.emplace(std::make_pair(i, j), rd.text_of(v)).second) rd.fail("duplicate bracket entry", key.col);
    } else {
      if (key.text == "gamma") {
        rd.expect("=");
        Value v = rd.value();
        rd.expect_end();
        doc.gamma = string_list(rd, v);
      } else if (key.text == "u") {
        int i = static_cast<int>(rd.expect_int());
        rd.expect("=");
        Value v = rd.value();
        rd.expect_end();
        if (!doc.u.emplace(i, rd.text_of(v)).second) rd.fail("duplicate generator image", key.col);
      } else {
        rd.fail("expected 'gamma = [...]' or 'u i = \"...\"'", key.col);
      }
    }
  }
  return doc;
}

Presentation presentation_from(const Document& doc) {
  if (!doc.fields.count("n")) doc_fail(1, "missing field 'n'");
  long n = field_int(doc, "n", 0), r = field_int(doc, "r", 0);
  if (n < 0 || r < 0 || r > n) doc_fail(1, "need 0 <= r <= n");
  std::vector<std::string> params = split_lines(doc.fields.count("params") ? doc.fields.at("params") : "");
  std::vector<std::string> gens;
  if (doc.fields.count("gens")) {
    gens = split_lines(doc.fields.at("gens"));
    if (static_cast<long>(gens.size()) != n) doc_fail(1, "gens must list n names");
  } else {
    for (long k = 1; k <= n; ++k) gens.push_back("x" + std::to_string(k));
  }
  Presentation p(static_cast<int>(n), static_cast<int>(r), gens, params);
  for (const auto& [key, rel] : doc.rels) {
    auto [j, i] = key;
    if (!(1 <= i && i < j && j <= n)) doc_fail(rel.line, "relation indices must satisfy 1 <= i < j <= n in 'rel j i'");
    p.set_q(i - 1, j - 1, parse_scalar(rel.q, params));
    if (!rel.c0.empty()) p.set_c0(i - 1, j - 1, parse_scalar(rel.c0, params));
    for (const auto& [t, txt] : rel.c) {
      if (t < 1 || t > n) doc_fail(rel.line, "generator index out of range in c");
      p.set_c(i - 1, j - 1, t - 1, parse_scalar(txt, params));
    }
  }
  return p;
}

GeneratorBracket bracket_from(const Document& doc, const Algebra& alg) {
  GeneratorBracket B(alg);
  for (const auto& [key, txt] : doc.bracket) {
    auto [i, j] = key;
    if (i < 1 || j < 1 || i > alg.n() || j > alg.n() || i == j)
      throw SyntaxError("bracket entry (" + std::to_string(i) + "," + std::to_string(j) + ") needs distinct indices in 1..n", 1);
    Element v = parse_expression(alg, txt);
    if (i < j) B.set(i - 1, j - 1, v);
    else B.set(j - 1, i - 1, -v);
  }
  return B;
}

GeneratorBracket parse_bracket_text(const Algebra& alg, std::string_view text) {
  return bracket_from(parse_document(text), alg);
}

GammaDerivation derivation_from(const Document& doc, const Algebra& alg) {
  const int n = alg.n();
  GammaDerivation d{ToricAutomorphism::identity(n), std::vector<Element>(n, alg.zero())};
  if (!doc.gamma.empty()) {
    if (static_cast<int>(doc.gamma.size()) != n) throw SyntaxError("gamma must list n scalars", 1);
    for (int k = 0; k < n; ++k) d.gamma.gammas[k] = parse_scalar(doc.gamma[k], alg.presentation().params());
  }
  for (const auto& [i, txt] : doc.u) {
    if (i < 1 || i > n) throw SyntaxError("derivation image index out of range", 1);
    d.u[i - 1] = parse_expression(alg, txt);
  }
  return d;
}

Presentation parse_presentation(std::string_view text) { return presentation_from(parse_document(text)); }

std::string format_presentation(const Presentation& p) {
  std::string s;
  s += "n = " + std::to_string(p.n()) + "\n";
  s += "r = " + std::to_string(p.r()) + "\n";
  s += "params = " + quoted_list(p.params()) + "\n";
  s += "gens = " + quoted_list(p.gen_names()) + "\n";
  for (int j = 1; j < p.n(); ++j)
    for (int i = 0; i < j; ++i) {
      s += "rel " + std::to_string(j + 1) + " " + std::to_string(i + 1) + " = { q = \"" + p.q(i, j).to_string() + "\"";
      if (!p.c0(i, j).is_zero()) s += ", c0 = \"" + p.c0(i, j).to_string() + "\"";
      std::string c;
      for (int t = 0; t < p.n(); ++t)
        if (!p.c(i, j, t).is_zero()) c += (c.empty() ? "" : ", ") + std::to_string(t + 1) + ": \"" + p.c(i, j, t).to_string() + "\"";
      if (!c.empty()) s += ", c = { " + c + " }";
      s += " }\n";
    }
  return s;
}

std::string format_bracket(const GeneratorBracket& B) {
  const Presentation& p = B.algebra().presentation();
  std::string s = "[bracket]\n";
  for (int i = 0; i < p.n(); ++i)
    for (int j = i + 1; j < p.n(); ++j) {
      Element e = B.entry(i, j);
      if (e.is_zero()) continue;
      s += "b " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " = \"" +
           format_element(p, e, OutputMode::pretty) + "\"\n";
    }
  return s;
}

std::string format_derivation(const Presentation& p, const GammaDerivation& d) {
  std::vector<std::string> g;
  for (const auto& x : d.gamma.gammas) g.push_back(x.to_string());
  std::string s = "[derivation]\ngamma = " + quoted_list(g) + "\n";
  for (int i = 0; i < p.n(); ++i)
    if (!d.u[i].is_zero())
      s += "u " + std::to_string(i + 1) + " = \"" + format_element(p, d.u[i], OutputMode::pretty) + "\"\n";
  return s;
}

}  // namespace pbw
