#include "doctest.h"

#include "atomreach/error.hpp"
#include "atomreach/logic.hpp"
#include "test_helpers.hpp"

using namespace atomreach;

namespace {

std::vector<std::string> vars(std::initializer_list<const char*> names) {
  return std::vector<std::string>(names.begin(), names.end());
}

}  // namespace

TEST_CASE("qf_to_ldnf") {
  LogicContext ctx(make_backend("total_order"));

  Ldnf le = ctx.qf_to_ldnf(parse_formula("le(x,y)"), vars({"x", "y"}));
  CHECK(le.size() == 2);  // x<y and x=y out of the 3 legal clauses

  Ldnf truth = ctx.qf_to_ldnf(parse_formula("true"), vars({}));
  CHECK(truth.size() == 1);
  CHECK(truth.width() == 0);

  Ldnf contradiction = ctx.qf_to_ldnf(parse_formula("le(x,y) & !le(x,y)"), vars({"x", "y"}));
  CHECK(contradiction.empty());

  CHECK_THROWS_AS(ctx.qf_to_ldnf(parse_formula("exists x. eq(x,x)"), vars({})), Error);
  CHECK_THROWS_AS(ctx.qf_to_ldnf(parse_formula("E(x,y)"), vars({"x", "y"})), Error);
  CHECK_THROWS_AS(ctx.qf_to_ldnf(parse_formula("le(x,z)"), vars({"x", "y"})), Error);
}

TEST_CASE("eliminate_exists drops the variable's literals clause-wise") {
  LogicContext ctx(make_backend("total_order"));
  auto vs = vars({"x", "y", "x'"});
  // x = y & x' >= y, eliminate x'.
  Ldnf d = ctx.qf_to_ldnf(parse_formula("eq(x,y) & le(y,x')"), vs);
  Ldnf reduced = ctx.eliminate_exists(d, vs, "x'");
  Ldnf expected = ctx.qf_to_ldnf(parse_formula("eq(x,y)"), vars({"x", "y"}));
  CHECK(reduced == expected);
  CHECK(reduced.size() <= d.size());

  // Eliminating an unrelated variable keeps the remaining clause set.
  Ldnf d2 = ctx.qf_to_ldnf(parse_formula("le(x,y) & !eq(x,y)"), vs);
  Ldnf r2 = ctx.eliminate_exists(d2, vs, "x'");
  CHECK(r2 == ctx.qf_to_ldnf(parse_formula("le(x,y) & !eq(x,y)"), vars({"x", "y"})));

  Ldnf empty(3);
  CHECK(ctx.eliminate_exists(empty, 2).empty());
  CHECK_THROWS_AS(ctx.eliminate_exists(d, vs, "z"), Error);

  // Every output clause of an elimination is legal.
  for (const Clause& c : reduced.clauses()) CHECK(ctx.is_legal(c));
}

TEST_CASE("fo_to_ldnf reproduces the dense-order quantifier eliminations") {
  LogicContext ctx(make_backend("total_order"));
  auto free = vars({"y", "x'"});

  // exists y',y'',x''' . (y<y' & y''=y) & (x'''<=y') & (x'''=y'' & x'>=y'')
  Formula first = expand_sugar(
      parse_formula("exists y'. exists y''. exists x'''. "
                    "(lt(y,y') & eq(y'',y)) & le(x''',y') & (eq(x''',y'') & le(y'',x'))"),
      ctx.vocab());
  Ldnf got = ctx.fo_to_ldnf(first, free);
  Ldnf expected = ctx.qf_to_ldnf(parse_formula("le(y,x')"), free);
  CHECK(got == expected);
  CHECK(got.size() == 2);

  // Flipping the comparisons makes it unsatisfiable.
  Formula second = expand_sugar(
      parse_formula("exists y'. exists y''. exists x'''. "
                    "(lt(y,y') & eq(y'',y)) & le(y',x''') & (eq(x''',y'') & le(x',y''))"),
      ctx.vocab());
  CHECK(ctx.fo_to_ldnf(second, free).empty());

  // forall x . eq(x,x) is the dim-0 truth.
  Ldnf tautology = ctx.fo_to_ldnf(parse_formula("forall x. eq(x,x)"), vars({}));
  CHECK(tautology.size() == 1);
  CHECK(tautology.width() == 0);
}

TEST_CASE("fo_to_ldnf handles universal quantifiers by double negation") {
  LogicContext ctx(make_backend("total_order"));
  // Density: between any two distinct points something lies strictly between.
  Formula density = expand_sugar(
      parse_formula("forall x. forall y. lt(x,y) | !lt(x,y) "), ctx.vocab());
  CHECK(ctx.fo_to_ldnf(density, vars({})).size() == 1);

  Formula between = expand_sugar(
      parse_formula("forall z. (lt(x,z) & lt(z,y)) | !lt(x,z) | !lt(z,y)"), ctx.vocab());
  // Trivially true for every x, y.
  CHECK(ctx.fo_to_ldnf(between, vars({"x", "y"})).size() == 3);

  // Unbounded above: exists y . x < y holds everywhere; its negation nowhere.
  Formula unbounded = expand_sugar(parse_formula("exists y. lt(x,y)"), ctx.vocab());
  CHECK(ctx.fo_to_ldnf(unbounded, vars({"x"})).size() == 1);
  Formula bounded = expand_sugar(parse_formula("!(exists y. lt(x,y))"), ctx.vocab());
  CHECK(ctx.fo_to_ldnf(bounded, vars({"x"})).empty());
}

TEST_CASE("satisfiable") {
  LogicContext order(make_backend("total_order"));
  Formula cycle = expand_sugar(parse_formula("lt(x,y) & lt(y,x)"), order.vocab());
  CHECK_FALSE(order.satisfiable(cycle));
  CHECK(order.satisfiable(parse_formula("le(x,y) & le(y,z)")));

  LogicContext equality(make_backend("equality"));
  CHECK(equality.satisfiable(parse_formula("!eq(x,y) & !eq(y,z) & !eq(x,z)")));
}

TEST_CASE("ldnf entailment and union") {
  LogicContext ctx(make_backend("total_order"));
  auto vs = vars({"x", "y"});
  Ldnf less = ctx.qf_to_ldnf(expand_sugar(parse_formula("lt(x,y)"), ctx.vocab()), vs);
  Ldnf leq = ctx.qf_to_ldnf(parse_formula("le(x,y)"), vs);
  Ldnf equal = ctx.qf_to_ldnf(parse_formula("eq(x,y)"), vs);

  CHECK(less.entails(leq));
  CHECK_FALSE(equal.entails(less));
  CHECK(Ldnf(2).entails(less));  // false entails anything

  CHECK(less.union_with(equal) == leq);
  CHECK(less.union_with(Ldnf(2)) == less);
  CHECK(less.union_with(less) == less);

  CHECK_THROWS_AS(less.entails(Ldnf(3)), Error);
  CHECK_THROWS_AS(less.union_with(Ldnf(3)), Error);

  // Entailment is a partial order with union as join (on a sample).
  CHECK(less.entails(less));
  CHECK((less.entails(equal) && equal.entails(less)) == (less == equal));
  CHECK(less.entails(less.union_with(equal)));
  CHECK(equal.entails(less.union_with(equal)));
}

TEST_CASE("double complement is the identity") {
  for (const char* name : {"equality", "total_order", "equivalence", "graph"}) {
    LogicContext ctx(make_backend(name));
    const auto& all = ctx.legal_clauses(2);
    for (std::size_t i = 0; i < all.size(); ++i) {
      Ldnf d(2, {all[i]});
      CHECK(ctx.complement(ctx.complement(d)) == d);
    }
    CHECK(ctx.complement(ctx.full_ldnf(2)) == Ldnf(2));
    CHECK(ctx.complement(Ldnf(2)) == ctx.full_ldnf(2));
  }
}

TEST_CASE("prenexing renames bound variables apart") {
  LogicContext ctx(make_backend("equality"));
  // The same bound name used twice, plus shadowing of a free variable.
  Formula f = parse_formula("(exists z. eq(x,z)) & (exists z. !eq(y,z))");
  CHECK(ctx.fo_to_ldnf(f, vars({"x", "y"})).size() == 2);  // both legal clauses
  Formula shadow = parse_formula("!eq(x,y) & (exists x. eq(x,y))");
  Ldnf d = ctx.fo_to_ldnf(shadow, vars({"x", "y"}));
  Ldnf expected = ctx.qf_to_ldnf(parse_formula("!eq(x,y)"), vars({"x", "y"}));
  CHECK(d == expected);
}
