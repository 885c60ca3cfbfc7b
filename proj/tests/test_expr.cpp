#include <doctest.h>

#include <cmath>

#include "gconj/expr.hpp"
#include "gconj/expr_parse.hpp"
#include "gconj/ops.hpp"

using namespace gconj;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

ExtendedReal fin(double v) { return ExtendedReal::finite(v); }

SymbolTable small_symbols() {
  SymbolTable t;
  t.add({0, "order"});
  t.add({1, "size"});
  t.add({2, "girth"});
  t.add({3, "lovasz_theta"});
  t.add({4, "matching_number"});
  t.add({5, "average_distance"});
  t.add({6, "degree_sum"});
  return t;
}

}  // namespace

TEST_CASE("extended reals classify and print") {
  CHECK(ExtendedReal().is_undefined());
  CHECK(ExtendedReal::pos_inf().is_pos_inf());
  CHECK(ExtendedReal::neg_inf().is_neg_inf());
  CHECK(fin(2.5).is_finite());
  CHECK(fin(2.5).value() == 2.5);
  CHECK_THROWS(ExtendedReal::finite(kInf));
  CHECK(ExtendedReal::of(std::nan("")).is_undefined());
  CHECK(ExtendedReal::undefined().str() == "undef");
  CHECK(ExtendedReal::pos_inf().str() == "inf");
  CHECK(fin(3).str() == "3");
  CHECK(defined_lt(ExtendedReal::neg_inf(), fin(-1e300)));
  CHECK(defined_lt(fin(1e300), ExtendedReal::pos_inf()));
  CHECK_THROWS(defined_lt(ExtendedReal::undefined(), fin(0)));
}

TEST_CASE("arithmetic edge cases are explicit, not IEEE") {
  auto undef = ExtendedReal::undefined();
  auto pinf = ExtendedReal::pos_inf();
  auto ninf = ExtendedReal::neg_inf();

  CHECK(apply_op(OpCode::Add, fin(2), fin(3)).value() == 5);
  CHECK(apply_op(OpCode::Add, pinf, ninf).is_undefined());
  CHECK(apply_op(OpCode::Sub, pinf, pinf).is_undefined());
  CHECK(apply_op(OpCode::Add, pinf, fin(1)).is_pos_inf());

  CHECK(apply_op(OpCode::Mul, fin(0), pinf).is_undefined());
  CHECK(apply_op(OpCode::Mul, ninf, fin(-2)).is_pos_inf());

  CHECK(apply_op(OpCode::Div, fin(1), fin(0)).is_undefined());
  CHECK(apply_op(OpCode::Div, fin(0), fin(0)).is_undefined());
  CHECK(apply_op(OpCode::Div, pinf, pinf).is_undefined());
  CHECK(apply_op(OpCode::Div, fin(3), pinf).value() == 0);
  CHECK(apply_op(OpCode::Div, pinf, fin(-2)).is_neg_inf());

  // Powers follow exp(y ln x) conventions on the positive axis only.
  CHECK(apply_op(OpCode::Pow, fin(2), fin(10)).value() == 1024);
  CHECK(apply_op(OpCode::Pow, fin(0), fin(0)).is_undefined());
  CHECK(apply_op(OpCode::Pow, fin(0), fin(3)).value() == 0);
  CHECK(apply_op(OpCode::Pow, fin(0), fin(-1)).is_undefined());
  CHECK(apply_op(OpCode::Pow, fin(-2), fin(2)).is_undefined());
  CHECK(apply_op(OpCode::Pow, fin(2), pinf).is_pos_inf());
  CHECK(apply_op(OpCode::Pow, fin(0.5), pinf).value() == 0);
  CHECK(apply_op(OpCode::Pow, fin(1), pinf).is_undefined());
  CHECK(apply_op(OpCode::Pow, pinf, fin(0)).is_undefined());

  CHECK(apply_op(OpCode::Min, fin(2), pinf).value() == 2);
  CHECK(apply_op(OpCode::Max, fin(2), pinf).is_pos_inf());

  CHECK(apply_op(OpCode::Sqrt, fin(-1)).is_undefined());
  CHECK(apply_op(OpCode::Sqrt, fin(9)).value() == 3);
  CHECK(apply_op(OpCode::Log, fin(0)).is_undefined());
  CHECK(apply_op(OpCode::Log, fin(-3)).is_undefined());
  CHECK(apply_op(OpCode::Log, pinf).is_pos_inf());
  CHECK(apply_op(OpCode::Acosh, fin(0.999)).is_undefined());
  CHECK(apply_op(OpCode::Acosh, fin(1)).value() == 0);
  CHECK(apply_op(OpCode::Floor, fin(2.7)).value() == 2);
  CHECK(apply_op(OpCode::Ceil, fin(2.2)).value() == 3);
  CHECK(apply_op(OpCode::Floor, pinf).is_pos_inf());

  CHECK(apply_op(OpCode::Tan, fin(M_PI / 2)).is_undefined());  // pole guard
  CHECK(apply_op(OpCode::Tan, fin(4)).value() == doctest::Approx(std::tan(4.0)));
  CHECK(apply_op(OpCode::Tan, pinf).is_undefined());

  // Undefined absorbs through every operator.
  for (const auto& spec : operator_table()) {
    CHECK(apply_op(spec.code, undef, fin(1)).is_undefined());
    if (spec.arity == 2) CHECK(apply_op(spec.code, fin(1), undef).is_undefined());
  }
}

TEST_CASE("rationals normalize and parse") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK_THROWS(Rational(1, 0));
  CHECK(*Rational::parse("7") == Rational(7));
  CHECK(*Rational::parse("2/4") == Rational(1, 2));
  CHECK(*Rational::parse("2.5") == Rational(5, 2));
  CHECK(*Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(!Rational::parse("1/0"));
  CHECK(!Rational::parse("abc"));
}

TEST_CASE("expression structure, complexity, canonical keys") {
  InvariantSymbol a{0, "order"}, b{1, "size"};
  Expression ea = Expression::symbol(a), eb = Expression::symbol(b);

  Expression sum_ab = Expression::binary(OpCode::Add, ea, eb);
  Expression sum_ba = Expression::binary(OpCode::Add, eb, ea);
  Expression diff_ab = Expression::binary(OpCode::Sub, ea, eb);
  Expression diff_ba = Expression::binary(OpCode::Sub, eb, ea);

  CHECK(ea.complexity() == 1);
  CHECK(sum_ab.complexity() == 3);
  CHECK(Expression::unary(OpCode::Sqrt, sum_ab).complexity() == 4);

  // Commutative reordering is the one identification applied.
  CHECK(sum_ab.canonical_key() == sum_ba.canonical_key());
  CHECK(diff_ab.canonical_key() != diff_ba.canonical_key());
  CHECK(sum_ab.canonical_key() != diff_ab.canonical_key());

  // No associativity or identity folding: x+x, 1*x, sqrt(x*x) all distinct.
  Expression one = Expression::constant(Rational(1));
  Expression xx = Expression::binary(OpCode::Add, ea, ea);
  Expression mul1 = Expression::binary(OpCode::Mul, one, ea);
  Expression sq = Expression::unary(OpCode::Sqrt, Expression::binary(OpCode::Mul, ea, ea));
  CHECK(xx.canonical_key() != ea.canonical_key());
  CHECK(mul1.canonical_key() != ea.canonical_key());
  CHECK(sq.canonical_key() != Expression::binary(OpCode::Mul, ea, ea).canonical_key());

  CHECK(ea.symbol_ids() == std::vector<int>{0});
  CHECK(sum_ab.symbol_ids() == std::vector<int>{0, 1});
}

TEST_CASE("evaluation walks the tree with environment lookups") {
  InvariantSymbol a{0, "order"}, b{1, "size"};
  Expression e = Expression::binary(
      OpCode::Sub, Expression::symbol(a),
      Expression::binary(OpCode::Mul, Expression::constant(Rational(2)),
                         Expression::symbol(b)));
  std::map<int, ExtendedReal> env{{0, fin(10)}, {1, fin(3)}};
  CHECK(e.evaluate(env).value() == 4);

  std::vector<ExtendedReal> dense{fin(10), fin(3)};
  CHECK(e.evaluate(std::span<const ExtendedReal>(dense)).value() == 4);

  // Missing symbol -> Undefined propagates.
  std::map<int, ExtendedReal> partial{{0, fin(10)}};
  CHECK(e.evaluate(partial).is_undefined());
}

TEST_CASE("rendering uses infix with minimal parentheses") {
  SymbolTable t = small_symbols();
  auto sym = [&](const char* n) { return Expression::symbol(*t.find(n)); };

  Expression diff = Expression::binary(OpCode::Sub, sym("order"), sym("matching_number"));
  CHECK(diff.render() == "order(x) - matching_number(x)");

  Expression nested = Expression::binary(
      OpCode::Mul, diff, sym("size"));
  CHECK(nested.render() == "(order(x) - matching_number(x)) * size(x)");

  Expression mins = Expression::binary(
      OpCode::Min, sym("girth"),
      Expression::unary(OpCode::Floor, sym("lovasz_theta")));
  CHECK(mins.render() == "minimum(girth(x), floor(lovasz_theta(x)))");

  Expression pow = Expression::binary(
      OpCode::Pow, sym("average_distance"), sym("degree_sum"));
  CHECK(pow.render() == "average_distance(x)^degree_sum(x)");

  Expression pow_of_sum = Expression::binary(
      OpCode::Pow, Expression::binary(OpCode::Add, sym("order"), sym("size")),
      Expression::constant(Rational(2)));
  CHECK(pow_of_sum.render() == "(order(x) + size(x))^2");

  // A leading rational needs no parentheses (it re-folds on parse), but a
  // rational on the right of * or / must keep them to stay one constant.
  Expression half = Expression::binary(OpCode::Mul, Expression::constant(Rational(1, 2)),
                                       sym("order"));
  CHECK(half.render() == "1/2 * order(x)");
  Expression scaled = Expression::binary(OpCode::Mul, sym("order"),
                                         Expression::constant(Rational(1, 2)));
  CHECK(scaled.render() == "order(x) * (1/2)");

  Expression sub_sub = Expression::binary(
      OpCode::Sub, sym("order"),
      Expression::binary(OpCode::Sub, sym("size"), sym("girth")));
  CHECK(sub_sub.render() == "order(x) - (size(x) - girth(x))");
}

TEST_CASE("parser handles the full grammar") {
  SymbolTable t = small_symbols();

  SUBCASE("precedence and associativity") {
    Expression e = parse_expression("order + size * girth^2", t);
    CHECK(e.kind() == Expression::Kind::Binary);
    CHECK(e.op() == OpCode::Add);
    CHECK(e.right().op() == OpCode::Mul);
    CHECK(e.right().right().op() == OpCode::Pow);
  }

  SUBCASE("the (x) suffix is accepted and ignored") {
    Expression a = parse_expression("order(x) - matching_number(x)", t);
    Expression b = parse_expression("order - matching_number", t);
    CHECK(a.same_key(b));
  }

  SUBCASE("function names, including aliases") {
    Expression a = parse_expression("minimum(girth(x), floor(lovasz_theta(x)))", t);
    Expression b = parse_expression("min(girth, floor(lovasz_theta))", t);
    CHECK(a.same_key(b));
    CHECK(parse_expression("arccosh(order)", t)
              .same_key(parse_expression("acosh(order(x))", t)));
  }

  SUBCASE("constant quotients fold to exact rationals") {
    Expression e = parse_expression("1/2 * order", t);
    CHECK(e.op() == OpCode::Mul);
    CHECK(e.left().kind() == Expression::Kind::Constant);
    CHECK(e.left().constant_value() == Rational(1, 2));
    CHECK(e.complexity() == 3);
    // ...but symbol quotients stay division trees.
    CHECK(parse_expression("order/2", t).op() == OpCode::Div);
  }

  SUBCASE("decimals parse exactly") {
    Expression e = parse_expression("2.5", t);
    CHECK(e.constant_value() == Rational(5, 2));
  }

  SUBCASE("errors carry positions") {
    CHECK_THROWS_AS(parse_expression("order +", t), ParseError);
    CHECK_THROWS_AS(parse_expression("bogus_name", t), ParseError);
    CHECK_THROWS_AS(parse_expression("min(order)", t), ParseError);
    CHECK_THROWS_AS(parse_expression("order(y)", t), ParseError);
    CHECK_THROWS_AS(parse_expression("1/0", t), ParseError);
    CHECK_THROWS_AS(parse_expression("(order", t), ParseError);
    try {
      parse_expression("order + + size", t);
      CHECK(false);
    } catch (const ParseError& e) {
      CHECK(e.position == 8);
    }
  }
}

TEST_CASE("conjecture lines parse target, direction, and rhs") {
  SymbolTable t = small_symbols();
  auto line = parse_conjecture_line(
      "independence_number(x) <= order(x) - matching_number(x)", t);
  CHECK(line.target == "independence_number");
  CHECK(line.direction == Direction::Upper);
  CHECK(line.rhs.render() == "order(x) - matching_number(x)");

  auto lower = parse_conjecture_line("independence_number >= girth - 2", t);
  CHECK(lower.direction == Direction::Lower);

  CHECK_THROWS_AS(parse_conjecture_line("order(x) + 1", t), ParseError);
}

TEST_CASE("render and parse are inverse on parse images") {
  SymbolTable t = small_symbols();
  const char* samples[] = {
      "order(x) - matching_number(x)",
      "minimum(girth(x), floor(lovasz_theta(x)))",
      "average_distance(x)^degree_sum(x)",
      "floor(log(tan(order(x))^2)/log(10))",
      "sqrt(size(x) * size(x)) + 1/2",
      "maximum(order(x), ceil(size(x)/3)) - girth(x)",
      "2 - 1/4 + order(x)/(size(x) - girth(x))",
  };
  for (const char* s : samples) {
    Expression e = parse_expression(s, t);
    Expression back = parse_expression(e.render(), t);
    CAPTURE(s);
    CHECK(back.same_key(e));
    CHECK(back.render() == e.render());
  }
}
