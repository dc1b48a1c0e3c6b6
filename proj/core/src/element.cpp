#include "ordinals/element.hpp"

namespace ord {

Element Element::nat(Nat k) { return Element(Kind::Nat, std::move(k), {}); }

Element Element::left(Element inner) {
  std::vector<Element> children;
  children.push_back(std::move(inner));
  return Element(Kind::Left, Nat(0), std::move(children));
}

Element Element::right(Element inner) {
  std::vector<Element> children;
  children.push_back(std::move(inner));
  return Element(Kind::Right, Nat(0), std::move(children));
}

Element Element::pair(Element first, Element second) {
  std::vector<Element> children;
  children.reserve(2);
  children.push_back(std::move(first));
  children.push_back(std::move(second));
  return Element(Kind::Pair, Nat(0), std::move(children));
}

Element Element::list(std::vector<Element> flat_entries) {
  return Element(Kind::List, Nat(0), std::move(flat_entries));
}

bool Element::operator==(const Element& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::Nat) return value_ == other.value_;
  if (children_.size() != other.children_.size()) return false;
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (!(children_[i] == other.children_[i])) return false;
  }
  return true;
}

Element bot(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Fin:
      if (e.fin_size() == 0) throw Error(ErrorKind::EmptyOrdinal, "bot of Fin(0)");
      return Element::nat(Nat(0));
    case Expr::Kind::Omega:
      return Element::nat(Nat(0));
    case Expr::Kind::Sum:
      if (!is_empty(e.left())) return Element::left(bot(e.left()));
      if (!is_empty(e.right())) return Element::right(bot(e.right()));
      throw Error(ErrorKind::EmptyOrdinal, "bot of an empty sum");
    case Expr::Kind::Prod:
      if (is_empty(e)) throw Error(ErrorKind::EmptyOrdinal, "bot of an empty product");
      return Element::pair(bot(e.left()), bot(e.right()));
    case Expr::Kind::Exp:
      return Element::list({});
  }
  throw Error(ErrorKind::ShapeMismatch, "unreachable");
}

ValidationResult validate_element(const Expr& e, const Element& x) {
  switch (e.kind()) {
    case Expr::Kind::Fin:
      if (x.kind() != Element::Kind::Nat)
        return Invalid{ErrorKind::ShapeMismatch, "", 0, "expected a natural for Fin"};
      if (x.value() >= e.fin_size())
        return Invalid{ErrorKind::OutOfRange, "", 0, "value not below the Fin bound"};
      return std::nullopt;
    case Expr::Kind::Omega:
      if (x.kind() != Element::Kind::Nat)
        return Invalid{ErrorKind::ShapeMismatch, "", 0, "expected a natural for Omega"};
      return std::nullopt;
    case Expr::Kind::Sum:
      if (x.kind() == Element::Kind::Left) return validate_element(e.left(), x.inner());
      if (x.kind() == Element::Kind::Right) return validate_element(e.right(), x.inner());
      return Invalid{ErrorKind::ShapeMismatch, "", 0, "expected L/R for Sum"};
    case Expr::Kind::Prod:
      if (x.kind() != Element::Kind::Pair)
        return Invalid{ErrorKind::ShapeMismatch, "", 0, "expected a pair for Prod"};
      if (auto r = validate_element(e.left(), x.first())) return r;
      return validate_element(e.right(), x.second());
    case Expr::Kind::Exp: {
      if (x.kind() != Element::Kind::List)
        return Invalid{ErrorKind::ShapeMismatch, "", 0, "expected a list for Exp"};
      for (std::size_t i = 0; i < x.entry_count(); ++i) {
        if (auto r = validate_element(e.base(), x.entry_a(i))) return r;
        if (auto r = validate_element(e.exponent(), x.entry_b(i))) return r;
      }
      for (std::size_t i = 1; i < x.entry_count(); ++i) {
        if (compare(e.exponent(), x.entry_b(i - 1), x.entry_b(i)) != Ordering::Greater)
          return Invalid{ErrorKind::NotDecreasing, "", i,
                         "exponent components must strictly decrease"};
      }
      for (std::size_t i = 0; i < x.entry_count(); ++i) {
        if (!is_positive(e.base(), x.entry_a(i)))
          return Invalid{ErrorKind::NotPositive, "", i,
                         "base component equals the least element"};
      }
      return std::nullopt;
    }
  }
  return Invalid{ErrorKind::ShapeMismatch, "", 0, "unreachable"};
}

Ordering compare(const Expr& e, const Element& x, const Element& y) {
  switch (e.kind()) {
    case Expr::Kind::Fin:
    case Expr::Kind::Omega:
      return ordering_of(x.value(), y.value());
    case Expr::Kind::Sum: {
      const bool xr = x.kind() == Element::Kind::Right;
      const bool yr = y.kind() == Element::Kind::Right;
      if (xr != yr) return xr ? Ordering::Greater : Ordering::Less;
      return compare(xr ? e.right() : e.left(), x.inner(), y.inner());
    }
    case Expr::Kind::Prod: {
      // Reverse lexicographic: the second component dominates.
      Ordering second = compare(e.right(), x.second(), y.second());
      if (second != Ordering::Equal) return second;
      return compare(e.left(), x.first(), y.first());
    }
    case Expr::Kind::Exp: {
      const std::size_t n = std::min(x.entry_count(), y.entry_count());
      for (std::size_t i = 0; i < n; ++i) {
        Ordering ob = compare(e.exponent(), x.entry_b(i), y.entry_b(i));
        if (ob != Ordering::Equal) return ob;
        Ordering oa = compare(e.base(), x.entry_a(i), y.entry_a(i));
        if (oa != Ordering::Equal) return oa;
      }
      return ordering_of(x.entry_count(), y.entry_count());
    }
  }
  return Ordering::Equal;
}

bool is_positive(const Expr& e, const Element& x) {
  return compare(e, bot(e), x) == Ordering::Less;
}

Element normalize(const Expr& base, const Expr& exponent, const RawList& raw) {
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (compare(exponent, raw[i - 1].second, raw[i].second) != Ordering::Greater)
      throw Error(ErrorKind::NotDecreasing,
                  "raw list entry " + std::to_string(i));
  }
  std::vector<Element> flat;
  for (const auto& [a, b] : raw) {
    if (is_positive(base, a)) {
      flat.push_back(a);
      flat.push_back(b);
    }
  }
  return Element::list(std::move(flat));
}

}  // namespace ord
