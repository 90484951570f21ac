#include "synth/ops.hpp"

#include <sstream>
#include <stdexcept>

namespace synth {

OperatorSet::OperatorSet(std::vector<Operator> ops) : ops_(std::move(ops)) {
  for (size_t i = 0; i < ops_.size(); ++i)
    for (size_t j = i + 1; j < ops_.size(); ++j)
      if (ops_[i].name == ops_[j].name)
        throw std::invalid_argument("duplicate operator " + ops_[i].name);
}

bool OperatorSet::contains(const std::string& name) const {
  return index_of(name) >= 0;
}

int OperatorSet::index_of(const std::string& name) const {
  for (size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].name == name) return (int)i;
  return -1;
}

const Operator& OperatorSet::at(const std::string& name) const {
  int i = index_of(name);
  if (i < 0) throw UnknownOperator(name);
  return ops_[(size_t)i];
}

static Operator mk_op(const std::string& name, const std::string& sig) {
  // sig: "C1 v1, C2 v2 => body" or just "body"
  Scheme sch;
  std::string body = sig;
  auto arrow = sig.find("=>");
  if (arrow != std::string::npos) {
    std::string ctx = sig.substr(0, arrow);
    body = sig.substr(arrow + 2);
    std::istringstream is(ctx);
    std::string cls, var;
    while (is >> cls >> var) {
      if (!var.empty() && var.back() == ',') var.pop_back();
      auto c = tyclass_from_name(cls);
      if (!c) throw std::invalid_argument("bad class " + cls);
      sch.constraints.push_back(Constraint{*c, t_var(var)});
    }
  }
  sch.body = parse_ty(body);
  free_vars(sch.body, sch.quantified);
  for (const auto& c : sch.constraints) free_vars(c.target, sch.quantified);
  Operator op;
  op.name = name;
  op.scheme = std::move(sch);
  op.max_arity = leading_arrows(op.scheme.body);
  return op;
}

const OperatorSet& builtin_operators() {
  static OperatorSet set{std::vector<Operator>{
      mk_op("just", "a -> Maybe a"),
      mk_op("maybe_", "b -> (a -> b) -> Maybe a -> b"),
      mk_op("cons", "a -> [a] -> [a]"),
      mk_op("length", "Foldable t => t a -> Int"),
      mk_op("pair", "a -> b -> (a, b)"),
      mk_op("zip", "[a] -> [b] -> [(a, b)]"),
      mk_op("unzip", "[(a, b)] -> ([a], [b])"),
      mk_op("toEnum", "Enum a => Int -> a"),
      mk_op("fromEnum", "Enum a => a -> Int"),
      mk_op("foldMap", "Foldable t, Monoid m => (a -> m) -> t a -> m"),
      mk_op("elem", "Foldable t => a -> t a -> Bool"),
      mk_op("sequenceA", "Traversable t, Functor f => t (f a) -> f (t a)"),
      mk_op("sequence_", "Traversable t, Functor f => t (f a) -> f (t a)"),
      mk_op("fmap", "Functor f => (a -> b) -> f a -> f b"),
      mk_op("mempty", "Monoid m => m"),
      mk_op("mappend", "Semigroup a => a -> a -> a"),
      mk_op("compose", "(b -> c) -> (a -> b) -> a -> c"),
      mk_op("zero", "Int"),
      mk_op("nil", "[a]"),
      // illustrative boolean operators, not in the experiment set
      mk_op("and", "Bool -> Bool -> Bool"),
      mk_op("false", "Bool"),
  }};
  return set;
}

OperatorSet default_operator_set() {
  return operator_subset({"just", "maybe_", "cons", "length", "pair", "zip",
                          "unzip", "toEnum", "fromEnum", "foldMap", "elem",
                          "sequenceA", "sequence_", "fmap", "mempty",
                          "mappend", "compose", "zero", "nil"});
}

OperatorSet operator_subset(const std::vector<std::string>& names) {
  std::vector<Operator> ops;
  ops.reserve(names.size());
  for (const auto& n : names) ops.push_back(builtin_operators().at(n));
  return OperatorSet(std::move(ops));
}

std::string ExpansionRule::display() const {
  if (applied == 0) return op.name;
  std::ostringstream os;
  os << "(" << op.name;
  for (int i = 0; i < applied; ++i) os << " ?";
  os << ")";
  return os.str();
}

std::vector<ExpansionRule> unroll_grammar(const OperatorSet& ops) {
  std::vector<ExpansionRule> rules;
  for (const Operator& op : ops.list()) {
    for (int q = op.max_arity; q >= 0; --q) {
      ExpansionRule r;
      r.op = op;
      r.applied = q;
      Ty cur = op.scheme.body;
      for (int i = 0; i < q; ++i) {
        r.hole_tys.push_back(cur.args[0]);
        cur = cur.args[1];
      }
      r.result_ty = cur;
      rules.push_back(std::move(r));
    }
  }
  return rules;
}

int rule_index(const std::vector<ExpansionRule>& rules,
               const std::string& op_name, int applied) {
  for (size_t i = 0; i < rules.size(); ++i)
    if (rules[i].op.name == op_name && rules[i].applied == applied)
      return (int)i;
  return -1;
}

static Expr rule_template(const ExpansionRule& rule, int first_id) {
  Expr e = e_var(rule.op.name);
  for (int i = 0; i < rule.applied; ++i)
    e = e_app(std::move(e), e_hole(first_id + i, rule.hole_tys[(size_t)i]));
  return e;
}

static bool fill_rec(Expr& e, int hole_id, const ExpansionRule& rule,
                     int first_id) {
  if (e.kind == ExprKind::Hole && e.hole_id == hole_id) {
    e = rule_template(rule, first_id);
    return true;
  }
  for (auto& k : e.kids)
    if (fill_rec(k, hole_id, rule, first_id)) return true;
  return false;
}

Expr fill_hole(const Expr& ppt, int hole_id, const ExpansionRule& rule) {
  Expr out = ppt;
  int first_id = max_hole_id(ppt) + 1;
  if (!fill_rec(out, hole_id, rule, first_id)) throw UnknownHole(hole_id);
  return out;
}

// Searches application spines for the hole in argument position; returns the
// head operator's parameter type at that position.
static std::optional<Ty> local_type_rec(const Expr& e, int hole_id) {
  if (e.kind != ExprKind::App) return std::nullopt;
  Spine s = spine_of(e);
  for (size_t i = 0; i < s.args.size(); ++i) {
    const Expr& a = *s.args[i];
    if (a.kind == ExprKind::Hole && a.hole_id == hole_id) {
      const Operator& op = builtin_operators().at(s.head->name);
      Ty cur = op.scheme.body;
      for (size_t k = 0; k < i; ++k) cur = cur.args[1];
      return cur.args[0];
    }
    auto r = local_type_rec(a, hole_id);
    if (r) return r;
  }
  return std::nullopt;
}

Ty hole_local_type(const Expr& ppt, int hole_id) {
  if (ppt.kind == ExprKind::Hole && ppt.hole_id == hole_id) return ppt.ann;
  auto r = local_type_rec(ppt, hole_id);
  if (!r) throw UnknownHole(hole_id);
  return *r;
}

}  // namespace synth
