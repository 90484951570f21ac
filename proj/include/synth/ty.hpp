#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace synth {

// Types of the DSL. Constructors are drawn from a fixed universe; `AppVar`
// is a type variable applied to arguments, which is what lets schemes such
// as `Foldable t => t a -> Int` live in a first-order representation.
// Constructor nodes may carry fewer arguments than their arity while they
// stand in for a variable of higher kind (e.g. `t` bound to `Either Int`).
enum class TyKind { Con, Var, AppVar };

struct Ty {
  TyKind kind = TyKind::Con;
  std::string name;      // constructor name, or variable name
  std::vector<Ty> args;  // Con: 0..arity applied args; AppVar: >=1 args

  bool operator==(const Ty& o) const {
    return kind == o.kind && name == o.name && args == o.args;
  }
};

int con_arity(const std::string& name);  // -1 if unknown

Ty t_con(std::string name, std::vector<Ty> args = {});
Ty t_var(std::string name);
Ty t_app(std::string var, std::vector<Ty> args);
Ty t_int();
Ty t_char();
Ty t_bool();
Ty t_maybe(Ty a);
Ty t_list(Ty a);
Ty t_pair(Ty a, Ty b);
Ty t_either(Ty a, Ty b);
Ty t_fun(Ty a, Ty b);

bool is_fun(const Ty& t);
bool is_monomorphic(const Ty& t);
// Depth of constructor nesting: base types 0, [Bool] 1, [[Bool]] 2.
int nesting_depth(const Ty& t);
// Splits leading arrows: `a -> b -> c` gives params {a,b} and result c.
std::pair<std::vector<Ty>, Ty> fun_spine(const Ty& t);
int leading_arrows(const Ty& t);

void free_vars(const Ty& t, std::vector<std::string>& out);

// Typeclasses used by operator schemes.
enum class TyClass { Enum, Foldable, Traversable, Functor, Monoid, Semigroup };
const char* tyclass_name(TyClass c);
std::optional<TyClass> tyclass_from_name(const std::string& s);

// Membership by outer constructor, a closed table. No superclass reasoning:
// a lookup either hits a cell or the constraint is unsatisfied.
struct TypeclassTable {
  bool member(TyClass c, const std::string& con_name) const;
  static const TypeclassTable& standard();
};

struct Constraint {
  TyClass cls;
  Ty target;  // a variable in any well-formed scheme
  bool operator==(const Constraint& o) const {
    return cls == o.cls && target == o.target;
  }
};

struct Scheme {
  std::vector<std::string> quantified;
  std::vector<Constraint> constraints;
  Ty body;
};

// false iff a Fun occurs strictly inside a non-Fun constructor of the body,
// or any constraint targets something other than a single type variable.
bool sane_type(const Scheme& s);

// --- substitution & unification ------------------------------------------

using Subst = std::map<std::string, Ty>;

Ty zonk(const Ty& t, const Subst& s);
// Instantiated constraint targets get zonked the same way.
Scheme zonk_scheme(const Scheme& sch, const Subst& s);

enum class UnifyFail { Mismatch, OccursCheck };

struct UnifyResult {
  bool ok = false;
  UnifyFail fail = UnifyFail::Mismatch;
};

// Extends `s` so that zonk(a,s) == zonk(b,s); most general such extension.
UnifyResult unify(const Ty& a, const Ty& b, Subst& s);

// --- text form -------------------------------------------------------------
//
// Canonical syntax: Int, Char, Bool, Maybe T, [T], (T, U), Either T U,
// T -> U, lowercase variables, and variable application `f T`.

std::string print_ty(const Ty& t);
std::string print_scheme(const Scheme& s);

struct TypeParseError : std::runtime_error {
  size_t offset;
  TypeParseError(size_t off, const std::string& msg)
      : std::runtime_error(msg), offset(off) {}
};

Ty parse_ty(const std::string& text);

}  // namespace synth
