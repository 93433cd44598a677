#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pertinax {

struct SourcePos {
  int line = 0;
  int column = 0;
  std::string str() const { return "line " + std::to_string(line) + ", column " + std::to_string(column); }
  // positions do not take part in AST equality
  friend bool operator==(const SourcePos&, const SourcePos&) { return true; }
};

struct Expr {
  enum class Kind { Number, Ident, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Number;
  std::string text;  // digits or identifier
  int exponent = 0;
  std::vector<Expr> args;
  SourcePos pos;

  friend bool operator==(const Expr&, const Expr&) = default;
};

using MatrixExpr = std::vector<std::vector<Expr>>;

struct FieldDecl {
  int conductor = 1;
  SourcePos pos;
  friend bool operator==(const FieldDecl&, const FieldDecl&) = default;
};

struct AlgebraDecl {
  std::string name;
  std::string kind;  // commutative | quantum_affine | downup | presentation | quotient
  int n = 0;
  MatrixExpr q;
  std::vector<Expr> args;  // downup parameters
  std::vector<std::string> gens;
  std::vector<int> degrees;
  std::vector<Expr> rels;  // presentation relations, or quotient generators
  std::string base;
  std::optional<int> gkdim;
  SourcePos pos;
  friend bool operator==(const AlgebraDecl&, const AlgebraDecl&) = default;
};

struct GroupDecl {
  std::string name;
  std::vector<std::pair<std::string, MatrixExpr>> gens;
  std::optional<int> max_order;
  SourcePos pos;
  friend bool operator==(const GroupDecl&, const GroupDecl&) = default;
};

struct ElementDecl {
  std::string name;
  Expr value;
  SourcePos pos;
  friend bool operator==(const ElementDecl&, const ElementDecl&) = default;
};

struct PairDecl {
  std::string name;
  std::vector<Expr> left, right;
  SourcePos pos;
  friend bool operator==(const PairDecl&, const PairDecl&) = default;
};

struct OptionValue {
  bool is_list = false;
  std::vector<Expr> items;
  friend bool operator==(const OptionValue&, const OptionValue&) = default;
};

struct TaskDecl {
  std::string kind;
  std::vector<std::string> args;
  std::vector<std::pair<std::string, OptionValue>> options;
  SourcePos pos;
  friend bool operator==(const TaskDecl&, const TaskDecl&) = default;

  const OptionValue* option(const std::string& key) const;
};

using Statement = std::variant<FieldDecl, AlgebraDecl, GroupDecl, ElementDecl, PairDecl, TaskDecl>;

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;

  std::vector<const TaskDecl*> tasks() const;
  template <class T>
  const T* find(const std::string& name) const {
    for (const auto& s : statements)
      if (const T* d = std::get_if<T>(&s); d && d->name == name) return d;
    return nullptr;
  }
};

/// Throws SyntaxError with line and column.
Script parse_script(const std::string& text);

/// Names, references, task signatures and roots of unity. Returns the session
/// conductor: the declared one, or the lcm of the root orders used.
int validate_script(const Script& script);

std::string render_expr(const Expr& e);
std::string render_script(const Script& script);

const std::vector<std::string>& task_kinds();

}  // namespace pertinax
