#include <doctest.h>

#include "helpers.hpp"
#include "ordinals/gen.hpp"

using namespace ord;
using t::el;
using t::ex;
using t::ty;

TEST_CASE("parse_expr respects precedence and associativity") {
  CHECK(ex("w^w*2 + 3") ==
        sum(prod(exp(omega(), omega()), fin(Nat(2))), fin(Nat(3))));
  CHECK(ex("2^w") == exp(fin(Nat(2)), omega()));
  CHECK(ex("w^w^w") == exp(omega(), exp(omega(), omega())));
  CHECK(ex("1+2+3") == sum(sum(fin(Nat(1)), fin(Nat(2))), fin(Nat(3))));
  CHECK(ex("2*3*4") == prod(prod(fin(Nat(2)), fin(Nat(3))), fin(Nat(4))));
  CHECK(ex(" ( w + 1 ) * 2 ") == prod(sum(omega(), fin(Nat(1))), fin(Nat(2))));
  CHECK(ex("123456789012345678901234567890") ==
        fin(Nat("123456789012345678901234567890")));
}

TEST_CASE("parse_expr reports the offset and expectation") {
  try {
    parse_expr("w^");
    FAIL("should not parse");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_expr("2+*3");
    FAIL("should not parse");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_expr("(w+1");
    FAIL("should not parse");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
    CHECK(e.expected() == "')'");
  }
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("w w"), ParseError);
}

TEST_CASE("print_expr uses minimal parentheses") {
  CHECK(print_expr(ex("w^(w+1)")) == "w^(w+1)");
  CHECK(print_expr(ex("(w^w)^w")) == "(w^w)^w");
  CHECK(print_expr(ex("w^w^w")) == "w^w^w");
  CHECK(print_expr(ex("(w+1)*2")) == "(w + 1)*2");
  CHECK(print_expr(ex("w*(2*3)")) == "w*(2*3)");
  CHECK(print_expr(ex("1+(2+3)")) == "1 + (2 + 3)");
}

TEST_CASE("print_cnf canonical form") {
  CHECK(print_cnf(Cnf()) == "0");
  CHECK(print_cnf(cnf(7)) == "7");
  CHECK(print_cnf(Cnf::omega()) == "w");
  CHECK(print_cnf(ty("w^2*3+1")) == "w^2*3 + 1");
  CHECK(print_cnf(ty("w^(w^2*3+1)*2 + w*4 + 7")) == "w^(w^2*3+1)*2 + w*4 + 7");
  CHECK(print_cnf(ty("w^w")) == "w^(w)");
}

TEST_CASE("print_element") {
  CHECK(print_element(el("[(3,2),(1,0)]")) == "[(3,2),(1,0)]");
  CHECK(print_element(el("L:(1,R:0)")) == "L:(1,R:0)");
  CHECK(print_element(Element::list({})) == "[]");
}

TEST_CASE("parse and print round-trip on generated expressions") {
  Rng rng(71);
  for (int i = 0; i < 10000; ++i) {
    Expr e = gen_expr(rng);
    CHECK(parse_expr(print_expr(e)) == e);
  }
}

TEST_CASE("canonical CNF text reads back through the expression grammar") {
  Rng rng(73);
  for (int i = 0; i < 2000; ++i) {
    Cnf c = gen_cnf(rng);
    CHECK(order_type(parse_expr(print_cnf(c))) == c);
  }
}

TEST_CASE("element text round-trips") {
  Rng rng(79);
  int done = 0;
  while (done < 300) {
    Expr e = gen_expr(rng);
    if (is_empty(e)) continue;
    for (const Element& x : sample_elements(rng, e, 4))
      CHECK(parse_element(print_element(x)) == x);
    ++done;
  }
}
