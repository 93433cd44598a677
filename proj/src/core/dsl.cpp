#include "pertinax/dsl.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "pertinax/error.hpp"
#include "pertinax/freealgebra.hpp"
#include "pertinax/radical.hpp"

namespace pertinax {

const OptionValue* TaskDecl::option(const std::string& key) const {
  for (const auto& [k, v] : options)
    if (k == key) return &v;
  return nullptr;
}

std::vector<const TaskDecl*> Script::tasks() const {
  std::vector<const TaskDecl*> out;
  for (const auto& s : statements)
    if (const auto* t = std::get_if<TaskDecl>(&s)) out.push_back(t);
  return out;
}

const std::vector<std::string>& task_kinds() {
  static const std::vector<std::string> kinds{"radical",    "pertinency", "invariants", "cofinality",
                                              "verify",     "semisimple", "soundness"};
  return kinds;
}

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind;
  std::string text;
  SourcePos pos;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const SourcePos pos{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, src.substr(i, j - i), pos});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Token::Kind::Number, src.substr(i, j - i), pos});
      advance(j - i);
    } else if (std::string("()[]{},;:=+-*/^").find(c) != std::string::npos) {
      out.push_back({Token::Kind::Punct, std::string(1, c), pos});
      advance(1);
    } else {
      raise(ErrorCode::SyntaxError, pos.str() + ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::Kind::End, "", {line, col}});
  return out;
}

class Parser {
public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  Script parse() {
    Script s;
    while (peek().kind != Token::Kind::End) s.statements.push_back(statement());
    return s;
  }

private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool is(const std::string& p) const { return peek().kind != Token::Kind::End && peek().text == p; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    const std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    raise(ErrorCode::SyntaxError, t.pos.str() + ": expected " + what + ", found " + found);
  }
  const Token& expect(const std::string& p) {
    if (!is(p)) fail(peek(), "'" + p + "'");
    return next();
  }
  bool accept(const std::string& p) {
    if (!is(p)) return false;
    next();
    return true;
  }
  std::string ident(const std::string& what = "a name") {
    if (peek().kind != Token::Kind::Ident) fail(peek(), what);
    return next().text;
  }
  int integer(const std::string& what = "an integer") {
    if (peek().kind != Token::Kind::Number) fail(peek(), what);
    const Token& t = next();
    if (t.text.size() > 9) raise(ErrorCode::SyntaxError, t.pos.str() + ": integer too large");
    return std::stoi(t.text);
  }

  Statement statement() {
    const Token& head = peek();
    if (head.kind != Token::Kind::Ident) fail(head, "a statement");
    if (head.text == "field") return field();
    if (head.text == "algebra") return algebra();
    if (head.text == "group") return group();
    if (head.text == "element") return element();
    if (head.text == "pair") return pair();
    if (head.text == "task") return task();
    fail(head, "field, algebra, group, element, pair or task");
  }

  FieldDecl field() {
    FieldDecl f{1, next().pos};
    const Token& kw = peek();
    if (ident("cyclotomic") != "cyclotomic") fail(kw, "cyclotomic");
    expect("(");
    f.conductor = integer("a conductor");
    expect(")");
    expect(";");
    return f;
  }

  AlgebraDecl algebra() {
    AlgebraDecl a;
    a.pos = next().pos;
    a.name = ident();
    expect("=");
    const Token& kind_tok = peek();
    a.kind = ident("an algebra constructor");
    if (a.kind == "commutative") {
      expect("(");
      a.n = integer();
      expect(")");
    } else if (a.kind == "quantum_affine") {
      expect("(");
      a.q = matrix();
      expect(")");
    } else if (a.kind == "downup") {
      expect("(");
      a.args.push_back(expr());
      expect(",");
      a.args.push_back(expr());
      expect(")");
    } else if (a.kind == "presentation") {
      expect("{");
      const Token& g = peek();
      if (ident("gens") != "gens") fail(g, "gens");
      expect(":");
      do {
        a.gens.push_back(ident("a generator name"));
        a.degrees.push_back(accept(":") ? integer("a degree") : 1);
      } while (accept(","));
      expect(";");
      if (peek().text == "rels") {
        next();
        expect(":");
        if (!is(";")) {
          do a.rels.push_back(expr());
          while (accept(","));
        }
        expect(";");
      }
      expect("}");
    } else if (a.kind == "quotient") {
      expect("(");
      a.base = ident("an algebra name");
      expect(",");
      a.rels = list();
      expect(")");
    } else {
      fail(kind_tok, "commutative, quantum_affine, downup, presentation or quotient");
    }
    while (!is(";")) {
      const Token& k = peek();
      const std::string key = ident("an option or ';'");
      expect("=");
      if (key != "gkdim") raise(ErrorCode::SyntaxError, k.pos.str() + ": unknown algebra option '" + key + "'");
      a.gkdim = integer();
    }
    expect(";");
    return a;
  }

  GroupDecl group() {
    GroupDecl g;
    g.pos = next().pos;
    g.name = ident();
    expect("=");
    const Token& kw = peek();
    if (ident("matrices") != "matrices") fail(kw, "matrices");
    expect("{");
    while (!is("}")) {
      std::string label = ident("a generator label");
      expect(":");
      g.gens.emplace_back(std::move(label), matrix());
      expect(";");
    }
    expect("}");
    while (!is(";")) {
      const Token& k = peek();
      const std::string key = ident("an option or ';'");
      expect("=");
      if (key != "max_order") raise(ErrorCode::SyntaxError, k.pos.str() + ": unknown group option '" + key + "'");
      g.max_order = integer();
    }
    expect(";");
    return g;
  }

  ElementDecl element() {
    ElementDecl e;
    e.pos = next().pos;
    e.name = ident();
    expect("=");
    e.value = expr();
    expect(";");
    return e;
  }

  PairDecl pair() {
    PairDecl p;
    p.pos = next().pos;
    p.name = ident();
    expect("=");
    expect("(");
    p.left = list();
    expect(",");
    p.right = list();
    expect(")");
    expect(";");
    return p;
  }

  TaskDecl task() {
    TaskDecl t;
    t.pos = next().pos;
    t.kind = ident("a task kind");
    expect("(");
    if (!is(")")) {
      do t.args.push_back(ident());
      while (accept(","));
    }
    expect(")");
    while (!is(";")) {
      std::string key = ident("an option or ';'");
      expect("=");
      OptionValue v;
      if (is("[")) {
        v.is_list = true;
        v.items = list();
      } else {
        v.items.push_back(expr());
      }
      t.options.emplace_back(std::move(key), std::move(v));
    }
    expect(";");
    return t;
  }

  std::vector<Expr> list() {
    std::vector<Expr> out;
    expect("[");
    if (!is("]")) {
      do out.push_back(expr());
      while (accept(","));
    }
    expect("]");
    return out;
  }

  MatrixExpr matrix() {
    MatrixExpr m;
    expect("[");
    do {
      m.push_back(list());
    } while (accept(","));
    expect("]");
    return m;
  }

  static Expr node(Expr::Kind k, SourcePos pos, std::vector<Expr> args) {
    Expr e;
    e.kind = k;
    e.pos = pos;
    e.args = std::move(args);
    return e;
  }

  Expr expr() {
    Expr left = term();
    while (is("+") || is("-")) {
      const Token& op = next();
      Expr right = term();
      left = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op.pos, {std::move(left), std::move(right)});
    }
    return left;
  }

  Expr term() {
    Expr left = unary();
    while (is("*") || is("/")) {
      const Token& op = next();
      Expr right = unary();
      left = node(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op.pos, {std::move(left), std::move(right)});
    }
    return left;
  }

  Expr unary() {
    if (is("-")) {
      const Token& op = next();
      return node(Expr::Kind::Neg, op.pos, {unary()});
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (is("^")) {
      const Token& op = next();
      Expr e = node(Expr::Kind::Pow, op.pos, {std::move(base)});
      e.exponent = integer("an exponent");
      return e;
    }
    return base;
  }

  Expr atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number || t.kind == Token::Kind::Ident) {
      next();
      Expr e;
      e.kind = t.kind == Token::Kind::Number ? Expr::Kind::Number : Expr::Kind::Ident;
      e.text = t.text;
      e.pos = t.pos;
      return e;
    }
    if (accept("(")) {
      Expr e = expr();
      expect(")");
      return e;
    }
    fail(t, "an expression");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string render_at(const Expr& e, int min_prec) {
  std::string out;
  switch (e.kind) {
    case Expr::Kind::Number:
    case Expr::Kind::Ident: out = e.text; break;
    case Expr::Kind::Add: out = render_at(e.args[0], 1) + " + " + render_at(e.args[1], 2); break;
    case Expr::Kind::Sub: out = render_at(e.args[0], 1) + " - " + render_at(e.args[1], 2); break;
    case Expr::Kind::Mul: out = render_at(e.args[0], 2) + "*" + render_at(e.args[1], 3); break;
    case Expr::Kind::Div: out = render_at(e.args[0], 2) + "/" + render_at(e.args[1], 3); break;
    case Expr::Kind::Neg: out = "-" + render_at(e.args[0], 3); break;
    case Expr::Kind::Pow: out = render_at(e.args[0], 5) + "^" + std::to_string(e.exponent); break;
  }
  return precedence(e) < min_prec ? "(" + out + ")" : out;
}

std::string render_list(const std::vector<Expr>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + render_expr(items[i]);
  return out + "]";
}

std::string render_matrix_expr(const MatrixExpr& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? ", " : "") + render_list(m[i]);
  return out + "]";
}

struct Renderer {
  std::string operator()(const FieldDecl& f) const { return "field cyclotomic(" + std::to_string(f.conductor) + ");"; }
  std::string operator()(const AlgebraDecl& a) const {
    std::string out = "algebra " + a.name + " = ";
    if (a.kind == "commutative") {
      out += "commutative(" + std::to_string(a.n) + ")";
    } else if (a.kind == "quantum_affine") {
      out += "quantum_affine(" + render_matrix_expr(a.q) + ")";
    } else if (a.kind == "downup") {
      out += "downup(" + render_expr(a.args[0]) + ", " + render_expr(a.args[1]) + ")";
    } else if (a.kind == "presentation") {
      out += "presentation { gens: ";
      for (std::size_t i = 0; i < a.gens.size(); ++i)
        out += (i ? ", " : "") + a.gens[i] + (a.degrees[i] != 1 ? ":" + std::to_string(a.degrees[i]) : "");
      out += "; rels: ";
      for (std::size_t i = 0; i < a.rels.size(); ++i) out += (i ? ", " : "") + render_expr(a.rels[i]);
      out += "; }";
    } else {
      out += "quotient(" + a.base + ", " + render_list(a.rels) + ")";
    }
    if (a.gkdim) out += " gkdim=" + std::to_string(*a.gkdim);
    return out + ";";
  }
  std::string operator()(const GroupDecl& g) const {
    std::string out = "group " + g.name + " = matrices {";
    for (const auto& [label, m] : g.gens) out += " " + label + ": " + render_matrix_expr(m) + ";";
    out += " }";
    if (g.max_order) out += " max_order=" + std::to_string(*g.max_order);
    return out + ";";
  }
  std::string operator()(const ElementDecl& e) const { return "element " + e.name + " = " + render_expr(e.value) + ";"; }
  std::string operator()(const PairDecl& p) const {
    return "pair " + p.name + " = (" + render_list(p.left) + ", " + render_list(p.right) + ");";
  }
  std::string operator()(const TaskDecl& t) const {
    std::string out = "task " + t.kind + "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) out += (i ? ", " : "") + t.args[i];
    out += ")";
    for (const auto& [k, v] : t.options)
      out += " " + k + "=" + (v.is_list ? render_list(v.items) : render_expr(v.items.front()));
    return out + ";";
  }
};

// Option names allowed for each task kind.
const std::map<std::string, std::set<std::string>>& task_options() {
  static const std::map<std::string, std::set<std::string>> opts{
      {"radical", {"maxdeg", "method", "strategies", "inputs", "pairs", "dump"}},
      {"pertinency", {"maxdeg", "method", "strategies", "inputs", "pairs", "window", "gkdim"}},
      {"invariants", {"maxdeg", "normal", "dump"}},
      {"cofinality", {"maxdeg", "smax", "ncap", "normal"}},
      {"verify", {"maxdeg"}},
      {"semisimple", {"maxdeg", "quotient"}},
      {"soundness", {"maxdeg", "samples"}},
  };
  return opts;
}

std::optional<int> root_order(const std::string& ident) {
  if (ident.size() < 2 || ident[0] != 'z') return std::nullopt;
  for (std::size_t i = 1; i < ident.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(ident[i]))) return std::nullopt;
  if (ident[1] == '0' || ident.size() > 7) return std::nullopt;
  return std::stoi(ident.substr(1));
}

class Validator {
public:
  explicit Validator(const Script& s) : s_(s) {}

  int run() {
    for (const auto& st : s_.statements) std::visit([this](const auto& d) { check(d); }, st);
    int m = 1;
    for (const auto& [k, pos] : roots_) m = std::lcm(m, k);
    if (field_) {
      for (const auto& [k, pos] : roots_)
        if (field_->conductor % k != 0)
          raise(ErrorCode::ConductorTooSmall, pos.str() + ": z" + std::to_string(k) + " is not in Q(zeta_" +
                                                  std::to_string(field_->conductor) + ")");
      return field_->conductor;
    }
    return m;
  }

private:
  void declare(const std::string& name, const std::string& kind, SourcePos pos) {
    if (kinds_.count(name)) raise(ErrorCode::DuplicateIdentifier, pos.str() + ": '" + name + "' is already declared");
    if (root_order(name)) raise(ErrorCode::UsageError, pos.str() + ": '" + name + "' is reserved for roots of unity");
    kinds_[name] = kind;
  }
  void require(const std::string& name, const std::string& kind, SourcePos pos) {
    auto it = kinds_.find(name);
    if (it == kinds_.end() || it->second != kind)
      raise(ErrorCode::UndeclaredIdentifier, pos.str() + ": no " + kind + " named '" + name + "' declared before use");
  }

  void expr(const Expr& e) {
    if (e.kind == Expr::Kind::Ident) {
      if (generators_.count(e.text)) return;
      if (auto it = kinds_.find(e.text); it != kinds_.end() && it->second == "element") return;
      if (auto k = root_order(e.text)) {
        roots_.emplace_back(*k, e.pos);
        return;
      }
      raise(ErrorCode::UndeclaredIdentifier, e.pos.str() + ": unknown identifier '" + e.text + "'");
    }
    for (const auto& a : e.args) expr(a);
  }
  void exprs(const std::vector<Expr>& es) {
    for (const auto& e : es) expr(e);
  }
  void matrix(const MatrixExpr& m, SourcePos pos) {
    if (m.empty()) raise(ErrorCode::UsageError, pos.str() + ": empty matrix");
    for (const auto& row : m) {
      if (row.size() != m.size()) raise(ErrorCode::UsageError, pos.str() + ": matrix must be square");
      exprs(row);
    }
  }

  void check(const FieldDecl& f) {
    if (field_) raise(ErrorCode::UsageError, f.pos.str() + ": the field is declared twice");
    if (f.conductor < 1) raise(ErrorCode::UsageError, f.pos.str() + ": conductor must be positive");
    field_ = &f;
  }
  void check(const AlgebraDecl& a) {
    if (a.kind == "commutative" && a.n < 1)
      raise(ErrorCode::UsageError, a.pos.str() + ": commutative needs at least one variable");
    if (a.kind == "quantum_affine") matrix(a.q, a.pos);
    if (a.kind == "downup") exprs(a.args);
    if (a.kind == "presentation") {
      std::set<std::string> seen;
      for (std::size_t i = 0; i < a.gens.size(); ++i) {
        if (!seen.insert(a.gens[i]).second)
          raise(ErrorCode::DuplicateIdentifier, a.pos.str() + ": generator '" + a.gens[i] + "' repeated");
        if (a.degrees[i] < 1) raise(ErrorCode::UsageError, a.pos.str() + ": generator degrees must be positive");
        generators_.insert(a.gens[i]);
      }
      exprs(a.rels);
    } else if (a.kind == "quotient") {
      require(a.base, "algebra", a.pos);
      exprs(a.rels);
    } else {
      const int n = a.kind == "commutative" ? a.n : a.kind == "quantum_affine" ? static_cast<int>(a.q.size()) : 2;
      const Alphabet alphabet = Alphabet::standard(n);
      generators_.insert(alphabet.names().begin(), alphabet.names().end());
    }
    declare(a.name, "algebra", a.pos);
  }
  void check(const GroupDecl& g) {
    if (g.gens.empty()) raise(ErrorCode::UsageError, g.pos.str() + ": a group needs at least one generator");
    for (const auto& [label, m] : g.gens) matrix(m, g.pos);
    if (g.max_order && *g.max_order < 2) raise(ErrorCode::UsageError, g.pos.str() + ": max_order must be at least 2");
    declare(g.name, "group", g.pos);
  }
  void check(const ElementDecl& e) {
    expr(e.value);
    declare(e.name, "element", e.pos);
  }
  void check(const PairDecl& p) {
    if (p.left.size() != p.right.size())
      raise(ErrorCode::UsageError, p.pos.str() + ": pair sides have different lengths");
    if (p.left.empty()) raise(ErrorCode::UsageError, p.pos.str() + ": a pair needs at least one entry");
    exprs(p.left);
    exprs(p.right);
    declare(p.name, "pair", p.pos);
  }
  void check(const TaskDecl& t) {
    auto opts = task_options().find(t.kind);
    if (opts == task_options().end()) raise(ErrorCode::UsageError, t.pos.str() + ": unknown task kind '" + t.kind + "'");
    const std::size_t want = t.kind == "verify" ? 3 : 2;
    if (t.args.size() != want)
      raise(ErrorCode::UsageError, t.pos.str() + ": task " + t.kind + " takes " + std::to_string(want) + " arguments");
    require(t.args[0], "algebra", t.pos);
    require(t.args[1], "group", t.pos);
    if (want == 3) require(t.args[2], "pair", t.pos);
    std::set<std::string> seen;
    for (const auto& [key, v] : t.options) {
      if (!opts->second.count(key))
        raise(ErrorCode::UsageError, t.pos.str() + ": task " + t.kind + " has no option '" + key + "'");
      if (!seen.insert(key).second) raise(ErrorCode::UsageError, t.pos.str() + ": option '" + key + "' repeated");
      if (key == "strategies") {
        for (const auto& s : v.items)
          if (s.kind != Expr::Kind::Ident || !known_strategies().count(s.text))
            raise(ErrorCode::UsageError, s.pos.str() + ": unknown strategy '" + render_expr(s) + "'");
      } else if (key == "pairs") {
        for (const auto& s : v.items) {
          if (s.kind != Expr::Kind::Ident) raise(ErrorCode::UsageError, s.pos.str() + ": expected a pair name");
          require(s.text, "pair", s.pos);
        }
      } else if (key == "method" || key == "quotient") {
        const Expr& s = v.items.front();
        const std::set<std::string> allowed =
            key == "method" ? std::set<std::string>{"oracle", "constructive"} : std::set<std::string>{"radical", "none"};
        if (v.is_list || s.kind != Expr::Kind::Ident || !allowed.count(s.text))
          raise(ErrorCode::UsageError, s.pos.str() + ": bad value for " + key);
      } else if (key == "inputs" || key == "normal") {
        exprs(v.items);
      } else {
        if (v.is_list || v.items.front().kind != Expr::Kind::Number)
          raise(ErrorCode::UsageError, t.pos.str() + ": option '" + key + "' takes an integer");
      }
    }
  }

  const Script& s_;
  const FieldDecl* field_ = nullptr;
  std::map<std::string, std::string> kinds_;
  std::set<std::string> generators_;
  std::vector<std::pair<int, SourcePos>> roots_;
};

}  // namespace

Script parse_script(const std::string& text) { return Parser(text).parse(); }

int validate_script(const Script& script) { return Validator(script).run(); }

std::string render_expr(const Expr& e) { return render_at(e, 0); }

std::string render_script(const Script& script) {
  std::string out;
  for (const auto& st : script.statements) out += std::visit(Renderer{}, st) + "\n";
  return out;
}

}  // namespace pertinax
