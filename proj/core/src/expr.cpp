#include "ordinals/expr.hpp"

namespace ord {

Expr Expr::fin(Nat n) { return Expr(Kind::Fin, std::move(n), {}); }

Expr Expr::omega() { return Expr(Kind::Omega, Nat(0), {}); }

Expr Expr::sum(Expr left, Expr right) {
  std::vector<Expr> children;
  children.reserve(2);
  children.push_back(std::move(left));
  children.push_back(std::move(right));
  return Expr(Kind::Sum, Nat(0), std::move(children));
}

Expr Expr::prod(Expr left, Expr right) {
  std::vector<Expr> children;
  children.reserve(2);
  children.push_back(std::move(left));
  children.push_back(std::move(right));
  return Expr(Kind::Prod, Nat(0), std::move(children));
}

Expr Expr::exp(Expr base, Expr exponent) {
  std::vector<Expr> children;
  children.reserve(2);
  children.push_back(std::move(base));
  children.push_back(std::move(exponent));
  return Expr(Kind::Exp, Nat(0), std::move(children));
}

bool Expr::operator==(const Expr& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == Kind::Fin) return n_ == other.n_;
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (!(children_[i] == other.children_[i])) return false;
  }
  return true;
}

bool is_empty(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Fin: return e.fin_size() == 0;
    case Expr::Kind::Omega: return false;
    case Expr::Kind::Sum: return is_empty(e.left()) && is_empty(e.right());
    case Expr::Kind::Prod: return is_empty(e.left()) || is_empty(e.right());
    case Expr::Kind::Exp: return false;
  }
  return false;
}

namespace {

ValidationResult validate_at(const Expr& e, const std::string& path) {
  switch (e.kind()) {
    case Expr::Kind::Fin:
    case Expr::Kind::Omega:
      return std::nullopt;
    case Expr::Kind::Sum:
    case Expr::Kind::Prod: {
      if (auto r = validate_at(e.left(), path + "/left")) return r;
      return validate_at(e.right(), path + "/right");
    }
    case Expr::Kind::Exp: {
      if (auto r = validate_at(e.base(), path + "/base")) return r;
      if (auto r = validate_at(e.exponent(), path + "/exponent")) return r;
      if (is_empty(e.base())) {
        return Invalid{ErrorKind::EmptyExpBase, path,
                       0, "Exp base is empty at " + path};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

ValidationResult validate_expr(const Expr& e) { return validate_at(e, ""); }

}  // namespace ord
