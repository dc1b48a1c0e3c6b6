#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "ordinals/gen.hpp"

using namespace ord;
using t::el;
using t::ex;

TEST_CASE("validate_expr rejects exponentials over an empty base") {
  auto bad = validate_expr(exp(fin(Nat(0)), omega()));
  REQUIRE(bad.has_value());
  CHECK(bad->kind == ErrorKind::EmptyExpBase);

  CHECK_FALSE(validate_expr(exp(fin(Nat(1)), omega())).has_value());
  CHECK_FALSE(validate_expr(ex("(1+w)^3")).has_value());

  auto nested = validate_expr(sum(omega(), exp(prod(fin(Nat(0)), omega()), fin(Nat(2)))));
  REQUIRE(nested.has_value());
  CHECK(nested->kind == ErrorKind::EmptyExpBase);
  CHECK(nested->path == "/right");
}

TEST_CASE("bot picks the least element") {
  CHECK(bot(fin(Nat(3))) == Element::nat(Nat(0)));
  CHECK(bot(sum(fin(Nat(0)), omega())) == Element::right(Element::nat(Nat(0))));
  CHECK(bot(exp(fin(Nat(2)), omega())) == Element::list({}));
  CHECK(bot(prod(omega(), fin(Nat(4)))) ==
        Element::pair(Element::nat(Nat(0)), Element::nat(Nat(0))));

  CHECK_THROWS_AS(bot(fin(Nat(0))), Error);
  CHECK_THROWS_AS(bot(prod(fin(Nat(0)), omega())), Error);
}

TEST_CASE("validate_element checks shape, bounds, descent and positivity") {
  Expr e = ex("2^w");
  CHECK_FALSE(validate_element(e, el("[(1,2),(1,0)]")).has_value());

  auto not_positive = validate_element(e, el("[(0,2)]"));
  REQUIRE(not_positive.has_value());
  CHECK(not_positive->kind == ErrorKind::NotPositive);
  CHECK(not_positive->index == 0);

  auto not_decreasing = validate_element(e, el("[(1,1),(1,1)]"));
  REQUIRE(not_decreasing.has_value());
  CHECK(not_decreasing->kind == ErrorKind::NotDecreasing);
  CHECK(not_decreasing->index == 1);

  auto mismatch = validate_element(e, el("L:0"));
  REQUIRE(mismatch.has_value());
  CHECK(mismatch->kind == ErrorKind::ShapeMismatch);

  auto range = validate_element(fin(Nat(2)), el("2"));
  REQUIRE(range.has_value());
  CHECK(range->kind == ErrorKind::OutOfRange);
}

TEST_CASE("compare: products are reverse lexicographic") {
  Expr e = ex("2*w");
  CHECK(compare(e, el("(1,3)"), el("(0,4)")) == Ordering::Less);
  CHECK(compare(e, el("(0,4)"), el("(1,3)")) == Ordering::Greater);
}

TEST_CASE("compare: left summand sits below the right one") {
  Expr e = ex("w+w");
  CHECK(compare(e, el("R:0"), el("L:5")) == Ordering::Greater);
  CHECK(compare(e, el("L:5"), el("R:0")) == Ordering::Less);
}

TEST_CASE("compare: exponential lists follow their ranks") {
  Expr e = ex("2^w");
  // ranks 8 vs 5 and 4 vs 5
  CHECK(compare(e, el("[(1,3)]"), el("[(1,2),(1,0)]")) == Ordering::Greater);
  CHECK(compare(e, el("[(1,2)]"), el("[(1,2),(1,0)]")) == Ordering::Less);
}

TEST_CASE("is_positive") {
  CHECK(is_positive(fin(Nat(2)), el("1")));
  CHECK_FALSE(is_positive(fin(Nat(2)), el("0")));
  CHECK(is_positive(ex("2^w"), el("[(1,0)]")));
}

TEST_CASE("normalize drops least-element entries") {
  Expr w = omega();
  RawList raw;
  raw.emplace_back(el("0"), el("5"));
  raw.emplace_back(el("2"), el("3"));
  raw.emplace_back(el("0"), el("1"));
  CHECK(normalize(w, w, raw) == el("[(2,3)]"));

  CHECK(normalize(w, w, {}) == el("[]"));

  RawList untouched;
  untouched.emplace_back(el("1"), el("4"));
  untouched.emplace_back(el("3"), el("2"));
  CHECK(normalize(w, w, untouched) == el("[(1,4),(3,2)]"));

  RawList increasing;
  increasing.emplace_back(el("1"), el("1"));
  increasing.emplace_back(el("1"), el("4"));
  CHECK_THROWS_AS(normalize(w, w, increasing), Error);
}

TEST_CASE("normalize output validates and is idempotent on positive lists") {
  Rng rng(7);
  int produced = 0;
  while (produced < 60) {
    Expr base = gen_expr(rng);
    Expr expo = gen_expr(rng);
    if (is_empty(base)) continue;
    Expr e = exp(base, expo);
    RawList raw = gen_raw_list(rng, base, expo);
    Element x = normalize(base, expo, raw);
    CHECK_FALSE(validate_element(e, x).has_value());
    RawList again;
    for (std::size_t i = 0; i < x.entry_count(); ++i)
      again.emplace_back(x.entry_a(i), x.entry_b(i));
    CHECK(normalize(base, expo, again) == x);
    ++produced;
  }
}

TEST_CASE("order is a decidable total order") {
  Rng rng(11);
  int tested = 0;
  while (tested < 80) {
    Expr e = gen_expr(rng);
    if (is_empty(e)) continue;
    std::vector<Element> xs = sample_elements(rng, e, 3);
    const Element &x = xs[0], &y = xs[1], &z = xs[2];

    // trichotomy and antisymmetry
    CHECK(compare(e, x, x) == Ordering::Equal);
    Ordering xy = compare(e, x, y);
    CHECK(compare(e, y, x) == flip(xy));

    // equality is structural identity
    CHECK((xy == Ordering::Equal) == (x == y));

    // transitivity on the sampled triple
    if (xy == Ordering::Less && compare(e, y, z) == Ordering::Less)
      CHECK(compare(e, x, z) == Ordering::Less);

    // nothing sits below bot
    Element least = bot(e);
    if (!(x == least)) CHECK(compare(e, least, x) == Ordering::Less);
    ++tested;
  }
}

TEST_CASE("strictly descending chains in Fin(n) stop within n steps") {
  Expr e = fin(Nat(6));
  Element current = el("5");
  int steps = 1;
  // walk greedily downwards
  while (!(current == bot(e))) {
    current = Element::nat(current.value() - 1);
    ++steps;
  }
  CHECK(steps <= 6);
}
