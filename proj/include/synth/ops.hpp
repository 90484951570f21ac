#pragma once

#include <optional>
#include <string>
#include <vector>

#include "synth/expr.hpp"
#include "synth/ty.hpp"

namespace synth {

struct Operator {
  std::string name;
  Scheme scheme;
  int max_arity = 0;  // leading arrows of the scheme body
};

class OperatorSet {
 public:
  OperatorSet() = default;
  explicit OperatorSet(std::vector<Operator> ops);

  bool contains(const std::string& name) const;
  const Operator& at(const std::string& name) const;
  int index_of(const std::string& name) const;  // -1 if absent
  const std::vector<Operator>& list() const { return ops_; }
  size_t size() const { return ops_.size(); }

 private:
  std::vector<Operator> ops_;
};

// The full builtin table, including `and`/`false` which are not part of the
// default experiment set but are valid DSL operators.
const OperatorSet& builtin_operators();
// The 19 operators the datasets are generated over.
OperatorSet default_operator_set();
// Subset by name, in the given order.
OperatorSet operator_subset(const std::vector<std::string>& names);

// A production of the arity-unrolled grammar: operator `op` applied to
// `applied` holes. Types are local, variables unsubstituted.
struct ExpansionRule {
  Operator op;
  int applied = 0;
  Ty result_ty;
  std::vector<Ty> hole_tys;

  std::string display() const;  // e.g. "(and ? ?)", "and"
};

// One rule per (operator, q) with q = max_arity..0, operators in set order.
std::vector<ExpansionRule> unroll_grammar(const OperatorSet& ops);

int rule_index(const std::vector<ExpansionRule>& rules,
               const std::string& op_name, int applied);  // -1 if absent

struct UnknownHole : std::runtime_error {
  explicit UnknownHole(int id)
      : std::runtime_error("no hole with id " + std::to_string(id)) {}
};

// Replaces the hole with the rule's template; fresh hole ids continue above
// every id already present.
Expr fill_hole(const Expr& ppt, int hole_id, const ExpansionRule& rule);

// The hole's local type: the parameter type of its parent rule, verbatim;
// the annotation when the hole is the root.
Ty hole_local_type(const Expr& ppt, int hole_id);

}  // namespace synth
