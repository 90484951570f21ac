#pragma once

#include <map>
#include <string>
#include <vector>

#include "synth/expr.hpp"
#include "synth/ops.hpp"
#include "synth/ty.hpp"

namespace synth {

enum class InferFail {
  None,
  TypeError,              // application of non-function or argument mismatch
  UnsatisfiedConstraint,  // class membership missing for a concrete head
};

struct InferResult {
  bool ok = false;
  Scheme scheme;  // canonical variable names a, b, c, ...
  InferFail fail = InferFail::None;
  TyClass fail_class = TyClass::Enum;
  Ty fail_ty;
  std::string message;
};

// Principal scheme of `e` under the operator environment, constraints
// discharged against the table for concrete constructors. Holes contribute
// their annotation with variables freshened per hole.
InferResult infer_type(const Expr& e, const OperatorSet& env,
                       const TypeclassTable& table = TypeclassTable::standard());

// true iff infer_type succeeds.
bool type_checks(const Expr& ppt, const OperatorSet& env,
                 const TypeclassTable& table = TypeclassTable::standard());

// Inference with recorded per-Var-occurrence types plus an instance
// substitution over the canonical scheme variables; leftover unconstrained
// variables default to Int. Used to fix builtin behavior before evaluation.
struct Elaborated {
  Expr expr;                 // Var nodes annotated via side table below
  std::vector<Ty> var_tys;   // type per Var occurrence, in reading order
};

struct ElaborateResult {
  bool ok = false;
  Elaborated elaborated;
  std::string message;
};

// `inst` maps canonical scheme variable names to monomorphic types (or, for
// variables of higher kind, to bare constructors).
ElaborateResult elaborate(const Expr& program, const OperatorSet& env,
                          const Subst& inst,
                          const TypeclassTable& table = TypeclassTable::standard());

// Matches `program` against a required monomorphic type: unifies the inferred
// body with `want`, requires all constraints discharged and no ambiguous
// constrained variables. Returns the full instance substitution on success.
std::optional<Subst> match_instance(const Expr& program, const OperatorSet& env,
                                    const Ty& want,
                                    const TypeclassTable& table =
                                        TypeclassTable::standard());

}  // namespace synth
