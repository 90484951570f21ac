#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "synth/ty.hpp"

namespace synth {

// DSL terms: variables naming operators, curried application, typed holes.
enum class ExprKind { Var, App, Hole };

struct Expr {
  ExprKind kind = ExprKind::Var;
  std::string name;       // Var: operator name
  int hole_id = 0;        // Hole
  Ty ann;                 // Hole: local type annotation
  std::vector<Expr> kids; // App: {fn, arg}

  bool operator==(const Expr& o) const {
    return kind == o.kind && name == o.name && hole_id == o.hole_id &&
           ann == o.ann && kids == o.kids;
  }
};

Expr e_var(std::string name);
Expr e_app(Expr fn, Expr arg);
Expr e_hole(int id, Ty ann);

// Flattens a curried application into head + argument list. The head of any
// well-formed program spine is a Var.
struct Spine {
  const Expr* head;
  std::vector<const Expr*> args;
};
Spine spine_of(const Expr& e);

int count_op_nodes(const Expr& e);
int count_holes(const Expr& e);
int max_hole_id(const Expr& e);  // -1 if none
// Holes in canonical left-to-right order.
std::vector<const Expr*> holes_of(const Expr& e);
const Expr* find_hole(const Expr& e, int hole_id);

struct SyntaxError : std::runtime_error {
  size_t offset;
  SyntaxError(size_t off, const std::string& msg)
      : std::runtime_error(msg), offset(off) {}
};

struct UnknownOperator : std::runtime_error {
  std::string name;
  explicit UnknownOperator(const std::string& n)
      : std::runtime_error("unknown operator '" + n + "'"), name(n) {}
};

class OperatorSet;  // ops.hpp

// Canonical text: atoms bare, applications as "(head arg ...)", holes as
// "undefined :: <type>" (parenthesized in argument position). Hole ids are
// assigned 0,1,2,... in reading order by the parser.
std::string print_expr(const Expr& e);
Expr parse_expr(const std::string& text, const OperatorSet& env);

}  // namespace synth
