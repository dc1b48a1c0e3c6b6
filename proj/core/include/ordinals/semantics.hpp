#pragma once

#include <string>
#include <vector>

#include "ordinals/cnf.hpp"
#include "ordinals/element.hpp"
#include "ordinals/expr.hpp"

namespace ord {

/// Order type of a validated expression, as a CNF value.
Cnf order_type(const Expr& e);

/// Order type of the initial segment below x, i.e. the position of x in e.
/// rank is an order isomorphism from the elements of e onto the CNF values
/// below order_type(e); unrank is its inverse.
Cnf rank(const Expr& e, const Element& x);

/// rank over a raw list: first components may be the least element of the
/// base, in which case the entry contributes nothing. Equals
/// rank(exp(base, exponent), normalize(base, exponent, raw)).
Cnf rank_raw(const Expr& base, const Expr& exponent, const RawList& raw);

/// Inverse of rank. Throws Error(OutOfRange) when c >= order_type(e).
Element unrank(const Expr& e, const Cnf& c);

/// The first min(n, size of e) elements in increasing order.
std::vector<Element> enumerate(const Expr& e, const Nat& n);

/// Ordinal comparison of expressions, decided at the level of order types.
bool ord_leq(const Expr& e1, const Expr& e2);

/// The unique simulation from e1 into e2, realized as
/// x -> unrank(e2, rank(e1, x)). Requires ord_leq(e1, e2); throws
/// Error(NotLeq) otherwise.
class Simulation {
 public:
  Simulation(Expr src, Expr dst);

  Element operator()(const Element& x) const;

  const Expr& src() const { return src_; }
  const Expr& dst() const { return dst_; }

 private:
  Expr src_;
  Expr dst_;
};

inline Simulation simulate(Expr e1, Expr e2) {
  return Simulation(std::move(e1), std::move(e2));
}

/// Outcome of a batch of exact checks; failures carry a description of the
/// violated instance.
struct Report {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Runs the defining-equation suite over a corpus of validated expressions:
///  - every finite expression equals the join of the successors of the ranks
///    of its elements (checked by full enumeration, skipped above
///    finite_enumeration_cap);
///  - for all corpus pairs, the zero and successor equations of addition and
///    multiplication at order-type level;
///  - addition and exponentiation preserve two-element joins up to the fixed
///    ordinal (a + max(b,c) and a^max(b,c) clauses), and the successor clause
///    of exponentiation.
Report check_defining_equations(const std::vector<Expr>& corpus,
                                const Nat& finite_enumeration_cap = Nat(4096));

}  // namespace ord
