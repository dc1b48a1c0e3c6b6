#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ordinals/errors.hpp"
#include "ordinals/expr.hpp"
#include "ordinals/nat.hpp"
#include "ordinals/ordering.hpp"

namespace ord {

/// Concrete inhabitant of an ordinal expression. The shape mirrors the
/// expression constructor:
///
///   Fin(n), Omega  ->  a natural (k < n for Fin)
///   Sum            ->  Left(x) or Right(y)
///   Prod           ->  a pair (first, second)
///   Exp            ->  a finite list of (a, b) entries, strictly decreasing
///                      in b under the exponent's order, every a positive in
///                      the base
class Element {
 public:
  enum class Kind { Nat, Left, Right, Pair, List };

  static Element nat(Nat k);
  static Element left(Element inner);
  static Element right(Element inner);
  static Element pair(Element first, Element second);
  /// entries come flattened as a0,b0,a1,b1,...
  static Element list(std::vector<Element> flat_entries);

  Kind kind() const { return kind_; }
  bool is_list() const { return kind_ == Kind::List; }

  const Nat& value() const { return value_; }
  const Element& inner() const { return children_[0]; }
  const Element& first() const { return children_[0]; }
  const Element& second() const { return children_[1]; }

  std::size_t entry_count() const { return children_.size() / 2; }
  const Element& entry_a(std::size_t i) const { return children_[2 * i]; }
  const Element& entry_b(std::size_t i) const { return children_[2 * i + 1]; }

  /// Structural equality; by trichotomy this coincides with order equality.
  bool operator==(const Element& other) const;
  bool operator!=(const Element& other) const { return !(*this == other); }

 private:
  Element(Kind kind, Nat value, std::vector<Element> children)
      : kind_(kind), value_(std::move(value)), children_(std::move(children)) {}

  Kind kind_;
  Nat value_;
  std::vector<Element> children_;
};

/// List over (base element, exponent element) pairs decreasing in the second
/// component, with no positivity constraint on the first.
using RawEntry = std::pair<Element, Element>;
using RawList = std::vector<RawEntry>;

/// Least element of a nonempty expression. Throws Error(EmptyOrdinal) if the
/// expression denotes the empty ordinal.
Element bot(const Expr& e);

/// Shape and invariant check of x against e. Assumes validate_expr(e) passed.
ValidationResult validate_element(const Expr& e, const Element& x);

/// Structural order of two valid elements of e:
///   Fin/Omega by natural order; Sum with Left below Right; Prod reverse
///   lexicographic (second component first); Exp lexicographic on entry
///   lists, exponent component first, empty list least.
Ordering compare(const Expr& e, const Element& x, const Element& y);

/// True iff x is strictly above the least element of e.
bool is_positive(const Expr& e, const Element& x);

/// Drops the entries of raw whose first component is the least element of
/// base, preserving order; the result is a valid element of
/// Exp(base, exponent). Throws Error(NotDecreasing) when raw is not strictly
/// decreasing in the second component.
Element normalize(const Expr& base, const Expr& exponent, const RawList& raw);

}  // namespace ord
