#include <doctest.h>

#include "helpers.hpp"
#include "ordinals/laws.hpp"

using namespace ord;
using t::el;
using t::ex;

TEST_CASE("exp_zero collapses to the singleton") {
  Iso iso = iso_exp_zero(fin(Nat(3)));
  CHECK(iso.fwd(el("[]")) == el("0"));
  CHECK(iso.bwd(el("0")) == el("[]"));
  CHECK(order_type(iso.src) == cnf(1));
  CHECK(order_type(iso.dst) == cnf(1));
}

TEST_CASE("exp_one strips the singleton exponent") {
  Iso iso = iso_exp_one(fin(Nat(3)));
  CHECK(iso.fwd(el("[]")) == el("0"));
  CHECK(iso.fwd(el("[(2,0)]")) == el("2"));
  for (const Element& x : enumerate(iso.src, Nat(3)))
    CHECK(iso.bwd(iso.fwd(x)) == x);
}

TEST_CASE("exp_succ splits off the top exponent point") {
  Iso iso = iso_exp_succ(fin(Nat(2)), omega());
  Element x = el("[(1,R:0),(1,L:3)]");
  Element image = iso.fwd(x);
  CHECK(image == Element::pair(el("[(1,3)]"), el("1")));
  CHECK(rank(iso.src, x) == t::ty("w+8"));
  CHECK(rank(iso.dst, image) == t::ty("w+8"));
  CHECK(iso.bwd(image) == x);

  CHECK(iso.fwd(el("[]")) == Element::pair(el("[]"), el("0")));
  CHECK(iso.fwd(el("[(1,L:2)]")) == Element::pair(el("[(1,2)]"), el("0")));
}

TEST_CASE("exp_add splits entries by the side of their exponent") {
  Iso iso = iso_exp_add(fin(Nat(2)), fin(Nat(3)), fin(Nat(2)));
  Element x = el("[(1,R:1),(1,L:2),(1,L:0)]");
  Element image = iso.fwd(x);
  CHECK(image == Element::pair(el("[(1,2),(1,0)]"), el("[(1,1)]")));
  CHECK(iso.bwd(image) == x);
  CHECK(iso.fwd(el("[]")) == Element::pair(el("[]"), el("[]")));
}

TEST_CASE("exp_mul groups runs with a common outer exponent") {
  Iso iso = iso_exp_mul(fin(Nat(2)), fin(Nat(2)), fin(Nat(2)));
  Element x = el("[(1,(1,1)),(1,(0,0))]");
  Element image = iso.fwd(x);
  Element expected = Element::list({el("[(1,1)]"), el("1"), el("[(1,0)]"), el("0")});
  CHECK(image == expected);
  CHECK(rank(iso.src, x) == cnf(9));
  CHECK(rank(iso.dst, image) == cnf(9));
  CHECK(iso.bwd(image) == x);

  CHECK(iso.fwd(el("[]")) == el("[]"));

  Element single = el("[(1,(0,1))]");
  Element single_image = iso.fwd(single);
  CHECK(single_image == Element::list({el("[(1,0)]"), el("1")}));
  CHECK(rank(iso.src, single) == cnf(4));
  CHECK(rank(iso.dst, single_image) == cnf(4));
}

TEST_CASE("times_distr retags pairs") {
  Iso iso = iso_times_distr(omega(), fin(Nat(2)), omega());
  CHECK(iso.fwd(el("(3,L:1)")) == el("L:(3,1)"));
  CHECK(iso.fwd(el("(3,R:4)")) == el("R:(3,4)"));
  CHECK(iso.bwd(el("R:(3,4)")) == el("(3,R:4)"));
}

TEST_CASE("sum and product relabelings") {
  Iso pa = iso_plus_assoc(omega(), fin(Nat(2)), omega());
  CHECK(pa.fwd(el("L:L:5")) == el("L:5"));
  CHECK(pa.fwd(el("L:R:1")) == el("R:L:1"));
  CHECK(pa.fwd(el("R:2")) == el("R:R:2"));

  Iso pz = iso_plus_zero(omega());
  CHECK(pz.fwd(el("L:7")) == el("7"));
  CHECK(pz.bwd(el("7")) == el("L:7"));

  Iso ta = iso_times_assoc(omega(), fin(Nat(2)), omega());
  CHECK(ta.fwd(el("((3,1),2)")) == el("(3,(1,2))"));
  CHECK(ta.bwd(el("(3,(1,2))")) == el("((3,1),2)"));
}

TEST_CASE("check_iso accepts the laws") {
  CHECK(check_iso(iso_exp_zero(fin(Nat(3))), 50).ok());
  CHECK(check_iso(iso_exp_one(ex("w+1")), 50).ok());
  CHECK(check_iso(iso_exp_succ(fin(Nat(2)), omega()), 60).ok());
  CHECK(check_iso(iso_exp_add(fin(Nat(2)), fin(Nat(3)), fin(Nat(2))), 200).ok());
  CHECK(check_iso(iso_exp_mul(ex("1+w"), fin(Nat(2)), omega()), 60).ok());
  CHECK(check_iso(iso_times_distr(ex("w"), ex("w^2"), ex("2")), 60).ok());
  CHECK(check_iso(iso_plus_assoc(ex("w"), ex("1"), ex("w*2")), 60).ok());
}

TEST_CASE("check_iso flags a corrupted witness") {
  Iso broken = iso_exp_add(fin(Nat(2)), fin(Nat(3)), fin(Nat(2)));
  auto good = broken.fwd;
  broken.fwd = [good](const Element& x) {
    Element y = good(x);
    // swap the two output components: ranks no longer match
    return Element::pair(y.second(), y.first());
  };
  Report report = check_iso(broken, 200);
  CHECK_FALSE(report.ok());
}
