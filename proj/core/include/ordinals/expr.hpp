#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ordinals/errors.hpp"
#include "ordinals/nat.hpp"

namespace ord {

/// Syntax tree denoting an ordinal below epsilon_0.
///
/// Every expression is built from finite ordinals, omega, binary sums,
/// binary products and the decreasing-list exponential. Values are
/// immutable after construction; all operations on them are pure.
class Expr {
 public:
  enum class Kind { Fin, Omega, Sum, Prod, Exp };

  static Expr fin(Nat n);
  static Expr omega();
  static Expr sum(Expr left, Expr right);
  static Expr prod(Expr left, Expr right);
  static Expr exp(Expr base, Expr exponent);

  Kind kind() const { return kind_; }

  /// Size of a Fin node.
  const Nat& fin_size() const { return n_; }

  const Expr& left() const { return children_[0]; }
  const Expr& right() const { return children_[1]; }
  const Expr& base() const { return children_[0]; }
  const Expr& exponent() const { return children_[1]; }

  bool operator==(const Expr& other) const;
  bool operator!=(const Expr& other) const { return !(*this == other); }

 private:
  Expr(Kind kind, Nat n, std::vector<Expr> children)
      : kind_(kind), n_(std::move(n)), children_(std::move(children)) {}

  Kind kind_;
  Nat n_;                       // only for Fin
  std::vector<Expr> children_;  // [left,right] or [base,exponent]
};

inline Expr fin(Nat n) { return Expr::fin(std::move(n)); }
inline Expr omega() { return Expr::omega(); }
inline Expr sum(Expr a, Expr b) { return Expr::sum(std::move(a), std::move(b)); }
inline Expr prod(Expr a, Expr b) { return Expr::prod(std::move(a), std::move(b)); }
inline Expr exp(Expr b, Expr e) { return Expr::exp(std::move(b), std::move(e)); }

/// True iff the expression denotes the empty ordinal. Purely structural:
/// Fin(0) is empty, a sum is empty iff both parts are, a product iff either
/// factor is, and an exponential never is (its least element is the empty
/// list).
bool is_empty(const Expr& e);

/// Checks that every Exp node has a nonempty base. On failure the result
/// carries a path such as "/left/base" locating the offending node.
ValidationResult validate_expr(const Expr& e);

}  // namespace ord
