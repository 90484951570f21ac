#include "synth/ty.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace synth {

int con_arity(const std::string& name) {
  if (name == "Int" || name == "Char" || name == "Bool") return 0;
  if (name == "Maybe" || name == "List") return 1;
  if (name == "Pair" || name == "Either" || name == "Fun") return 2;
  return -1;
}

Ty t_con(std::string name, std::vector<Ty> args) {
  return Ty{TyKind::Con, std::move(name), std::move(args)};
}
Ty t_var(std::string name) { return Ty{TyKind::Var, std::move(name), {}}; }
Ty t_app(std::string var, std::vector<Ty> args) {
  return Ty{TyKind::AppVar, std::move(var), std::move(args)};
}
Ty t_int() { return t_con("Int"); }
Ty t_char() { return t_con("Char"); }
Ty t_bool() { return t_con("Bool"); }
Ty t_maybe(Ty a) { return t_con("Maybe", {std::move(a)}); }
Ty t_list(Ty a) { return t_con("List", {std::move(a)}); }
Ty t_pair(Ty a, Ty b) { return t_con("Pair", {std::move(a), std::move(b)}); }
Ty t_either(Ty a, Ty b) {
  return t_con("Either", {std::move(a), std::move(b)});
}
Ty t_fun(Ty a, Ty b) { return t_con("Fun", {std::move(a), std::move(b)}); }

bool is_fun(const Ty& t) {
  return t.kind == TyKind::Con && t.name == "Fun" && t.args.size() == 2;
}

bool is_monomorphic(const Ty& t) {
  if (t.kind != TyKind::Con) return false;
  for (const auto& a : t.args)
    if (!is_monomorphic(a)) return false;
  return true;
}

int nesting_depth(const Ty& t) {
  int d = 0;
  for (const auto& a : t.args) d = std::max(d, 1 + nesting_depth(a));
  return d;
}

std::pair<std::vector<Ty>, Ty> fun_spine(const Ty& t) {
  std::vector<Ty> params;
  Ty cur = t;
  while (is_fun(cur)) {
    params.push_back(cur.args[0]);
    cur = cur.args[1];
  }
  return {params, cur};
}

int leading_arrows(const Ty& t) { return (int)fun_spine(t).first.size(); }

void free_vars(const Ty& t, std::vector<std::string>& out) {
  auto add = [&out](const std::string& n) {
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
  };
  if (t.kind == TyKind::Var || t.kind == TyKind::AppVar) add(t.name);
  for (const auto& a : t.args) free_vars(a, out);
}

const char* tyclass_name(TyClass c) {
  switch (c) {
    case TyClass::Enum: return "Enum";
    case TyClass::Foldable: return "Foldable";
    case TyClass::Traversable: return "Traversable";
    case TyClass::Functor: return "Functor";
    case TyClass::Monoid: return "Monoid";
    case TyClass::Semigroup: return "Semigroup";
  }
  return "?";
}

std::optional<TyClass> tyclass_from_name(const std::string& s) {
  if (s == "Enum") return TyClass::Enum;
  if (s == "Foldable") return TyClass::Foldable;
  if (s == "Traversable") return TyClass::Traversable;
  if (s == "Functor") return TyClass::Functor;
  if (s == "Monoid") return TyClass::Monoid;
  if (s == "Semigroup") return TyClass::Semigroup;
  return std::nullopt;
}

bool TypeclassTable::member(TyClass c, const std::string& con) const {
  switch (c) {
    case TyClass::Enum:
      return con == "Char" || con == "Int";
    case TyClass::Foldable:
    case TyClass::Traversable:
    case TyClass::Functor:
    case TyClass::Semigroup:
      return con == "Maybe" || con == "List" || con == "Pair" ||
             con == "Either";
    case TyClass::Monoid:
      return con == "Maybe" || con == "List";
  }
  return false;
}

const TypeclassTable& TypeclassTable::standard() {
  static TypeclassTable t;
  return t;
}

bool sane_type(const Scheme& s) {
  for (const auto& c : s.constraints)
    if (c.target.kind != TyKind::Var) return false;
  // Fun is fine along the application spine; bad inside any other shape.
  auto bad_inside = [](const Ty& t, auto&& self) -> bool {
    if (is_fun(t)) return self(t.args[0], self) || self(t.args[1], self);
    for (const auto& a : t.args) {
      if (is_fun(a)) return true;
      // below a non-Fun constructor (or an applied variable) no arrow at all
      auto contains_fun = [](const Ty& u, auto&& go) -> bool {
        if (is_fun(u)) return true;
        for (const auto& v : u.args)
          if (go(v, go)) return true;
        return false;
      };
      if (contains_fun(a, contains_fun)) return true;
    }
    return false;
  };
  return !bad_inside(s.body, bad_inside);
}

// --- substitution & unification ------------------------------------------

Ty zonk(const Ty& t, const Subst& s) {
  switch (t.kind) {
    case TyKind::Con: {
      Ty r = t;
      for (auto& a : r.args) a = zonk(a, s);
      return r;
    }
    case TyKind::Var: {
      auto it = s.find(t.name);
      if (it == s.end()) return t;
      return zonk(it->second, s);
    }
    case TyKind::AppVar: {
      std::vector<Ty> args;
      args.reserve(t.args.size());
      for (const auto& a : t.args) args.push_back(zonk(a, s));
      auto it = s.find(t.name);
      if (it == s.end()) return Ty{TyKind::AppVar, t.name, std::move(args)};
      Ty head = zonk(it->second, s);
      if (head.kind == TyKind::Var)
        return Ty{TyKind::AppVar, head.name, std::move(args)};
      // attach our args to whatever the head resolved to
      for (auto& a : args) head.args.push_back(std::move(a));
      return head;
    }
  }
  return t;
}

Scheme zonk_scheme(const Scheme& sch, const Subst& s) {
  Scheme r = sch;
  r.body = zonk(r.body, s);
  for (auto& c : r.constraints) c.target = zonk(c.target, s);
  return r;
}

static bool occurs(const std::string& v, const Ty& t) {
  if ((t.kind == TyKind::Var || t.kind == TyKind::AppVar) && t.name == v)
    return true;
  for (const auto& a : t.args)
    if (occurs(v, a)) return true;
  return false;
}

static UnifyResult ok_result() { return UnifyResult{true, UnifyFail::Mismatch}; }
static UnifyResult fail(UnifyFail f) { return UnifyResult{false, f}; }

UnifyResult unify(const Ty& a0, const Ty& b0, Subst& s) {
  Ty a = zonk(a0, s);
  Ty b = zonk(b0, s);
  if (a == b) return ok_result();

  auto bind = [&s](const std::string& v, const Ty& t) -> UnifyResult {
    if (occurs(v, t)) return fail(UnifyFail::OccursCheck);
    s[v] = t;
    return ok_result();
  };

  if (a.kind == TyKind::Var) return bind(a.name, b);
  if (b.kind == TyKind::Var) return bind(b.name, a);

  if (a.kind == TyKind::Con && b.kind == TyKind::Con) {
    if (a.name != b.name || a.args.size() != b.args.size())
      return fail(UnifyFail::Mismatch);
    for (size_t i = 0; i < a.args.size(); ++i) {
      auto r = unify(a.args[i], b.args[i], s);
      if (!r.ok) return r;
    }
    return ok_result();
  }

  // variable application against a constructor: peel trailing arguments,
  // the head variable takes the (possibly partial) remainder
  if (a.kind == TyKind::AppVar && b.kind == TyKind::Con) {
    if (b.args.size() < a.args.size()) return fail(UnifyFail::Mismatch);
    size_t k = b.args.size() - a.args.size();
    Ty head = t_con(b.name, std::vector<Ty>(b.args.begin(), b.args.begin() + k));
    if (occurs(a.name, head)) return fail(UnifyFail::OccursCheck);
    s[a.name] = head;
    for (size_t i = 0; i < a.args.size(); ++i) {
      auto r = unify(a.args[i], b.args[k + i], s);
      if (!r.ok) return r;
    }
    return ok_result();
  }
  if (a.kind == TyKind::Con && b.kind == TyKind::AppVar) return unify(b, a, s);

  if (a.kind == TyKind::AppVar && b.kind == TyKind::AppVar) {
    const Ty& longer = a.args.size() >= b.args.size() ? a : b;
    const Ty& shorter = a.args.size() >= b.args.size() ? b : a;
    size_t k = longer.args.size() - shorter.args.size();
    if (longer.name == shorter.name && k != 0) return fail(UnifyFail::OccursCheck);
    if (k == 0) {
      if (longer.name != shorter.name) {
        if (occurs(shorter.name, t_var(longer.name)))
          return fail(UnifyFail::OccursCheck);
        s[shorter.name] = t_var(longer.name);
      }
    } else {
      Ty head = Ty{TyKind::AppVar, longer.name,
                   std::vector<Ty>(longer.args.begin(), longer.args.begin() + k)};
      if (occurs(shorter.name, head)) return fail(UnifyFail::OccursCheck);
      s[shorter.name] = head;
    }
    for (size_t i = 0; i < shorter.args.size(); ++i) {
      auto r = unify(shorter.args[i], longer.args[k + i], s);
      if (!r.ok) return r;
    }
    return ok_result();
  }

  return fail(UnifyFail::Mismatch);
}

// --- text form -------------------------------------------------------------

static void print_ty_rec(const Ty& t, std::ostream& os, bool arg_pos);

static bool needs_parens_as_arg(const Ty& t) {
  if (t.kind == TyKind::Var) return false;
  if (t.kind == TyKind::AppVar) return true;
  if (t.name == "List" && t.args.size() == 1) return false;
  if (t.name == "Pair" && t.args.size() == 2) return false;
  return !t.args.empty();  // Maybe T, Either T U, T -> U, partial heads
}

static void print_ty_rec(const Ty& t, std::ostream& os, bool arg_pos) {
  if (arg_pos && needs_parens_as_arg(t)) {
    os << "(";
    print_ty_rec(t, os, false);
    os << ")";
    return;
  }
  switch (t.kind) {
    case TyKind::Var:
      os << t.name;
      return;
    case TyKind::AppVar:
      os << t.name;
      for (const auto& a : t.args) {
        os << " ";
        print_ty_rec(a, os, true);
      }
      return;
    case TyKind::Con:
      if (t.name == "Fun" && t.args.size() == 2) {
        if (is_fun(t.args[0])) {
          os << "(";
          print_ty_rec(t.args[0], os, false);
          os << ")";
        } else {
          print_ty_rec(t.args[0], os, false);
        }
        os << " -> ";
        print_ty_rec(t.args[1], os, false);
        return;
      }
      if (t.name == "List" && t.args.size() == 1) {
        os << "[";
        print_ty_rec(t.args[0], os, false);
        os << "]";
        return;
      }
      if (t.name == "Pair" && t.args.size() == 2) {
        os << "(";
        print_ty_rec(t.args[0], os, false);
        os << ", ";
        print_ty_rec(t.args[1], os, false);
        os << ")";
        return;
      }
      os << t.name;
      for (const auto& a : t.args) {
        os << " ";
        print_ty_rec(a, os, true);
      }
      return;
  }
}

std::string print_ty(const Ty& t) {
  std::ostringstream os;
  print_ty_rec(t, os, false);
  return os.str();
}

std::string print_scheme(const Scheme& s) {
  std::ostringstream os;
  if (!s.constraints.empty()) {
    if (s.constraints.size() > 1) os << "(";
    for (size_t i = 0; i < s.constraints.size(); ++i) {
      if (i) os << ", ";
      os << tyclass_name(s.constraints[i].cls) << " "
         << print_ty(s.constraints[i].target);
    }
    if (s.constraints.size() > 1) os << ")";
    os << " => ";
  }
  os << print_ty(s.body);
  return os.str();
}

// --- parsing ---------------------------------------------------------------

namespace {

struct TyParser {
  const std::string& text;
  size_t pos = 0;

  explicit TyParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  [[noreturn]] void err(const std::string& msg) {
    throw TypeParseError(pos, msg + " at offset " + std::to_string(pos));
  }

  bool peek_ident_start() {
    skip_ws();
    return pos < text.size() &&
           (std::isalpha((unsigned char)text[pos]) || text[pos] == '_');
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum((unsigned char)text[pos]) || text[pos] == '_' ||
            text[pos] == '\''))
      ++pos;
    if (pos == start) err("expected identifier");
    return text.substr(start, pos - start);
  }

  bool try_consume(const std::string& tok) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  // atom := "[" type "]" | "(" type ("," type)? ")" | ident
  std::optional<Ty> atom() {
    skip_ws();
    if (pos >= text.size()) return std::nullopt;
    char c = text[pos];
    if (c == '[') {
      ++pos;
      Ty inner = type();
      if (!try_consume("]")) err("expected ']'");
      return t_list(inner);
    }
    if (c == '(') {
      ++pos;
      Ty first = type();
      if (try_consume(",")) {
        Ty second = type();
        if (!try_consume(")")) err("expected ')'");
        return t_pair(first, second);
      }
      if (!try_consume(")")) err("expected ')'");
      return first;
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::string name = ident();
      if (std::islower((unsigned char)name[0]) || name[0] == '_')
        return t_var(name);
      if (con_arity(name) < 0) err("unknown type constructor '" + name + "'");
      return t_con(name);
    }
    return std::nullopt;
  }

  // app := atom atom*
  Ty app() {
    auto head = atom();
    if (!head) err("expected type");
    std::vector<Ty> args;
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      char c = text[pos];
      bool starts_atom = c == '[' || c == '(' ||
                         std::isalpha((unsigned char)c) || c == '_';
      if (!starts_atom) break;
      // "->" handled by caller; a lone '-' never starts an atom
      auto a = atom();
      if (!a) break;
      args.push_back(*a);
    }
    if (args.empty()) return *head;
    if (head->kind == TyKind::Var)
      return Ty{TyKind::AppVar, head->name, std::move(args)};
    if (head->kind == TyKind::Con && head->args.empty()) {
      int ar = con_arity(head->name);
      if ((int)args.size() > ar) err("too many arguments for " + head->name);
      return t_con(head->name, std::move(args));
    }
    err("cannot apply type");
  }

  // type := app ("->" type)?
  Ty type() {
    Ty lhs = app();
    if (try_consume("->")) {
      Ty rhs = type();
      return t_fun(lhs, rhs);
    }
    return lhs;
  }
};

}  // namespace

Ty parse_ty(const std::string& text) {
  TyParser p(text);
  Ty t = p.type();
  if (!p.at_end()) p.err("trailing input");
  return t;
}

}  // namespace synth
