#include "ordinals/text.hpp"

#include <cctype>

namespace ord {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(pos_, what);
  }

  Nat natural() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw ParseError(pos_, "a natural number");
    return Nat(text_.substr(start, pos_ - start));
  }

  std::size_t pos() const { return pos_; }

  void done(const char* what) {
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, what);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

Expr parse_sum(Cursor& in);

Expr parse_atom(Cursor& in) {
  char c = in.peek();
  if (c == 'w') {
    in.eat('w');
    return omega();
  }
  if (c == '(') {
    in.eat('(');
    Expr e = parse_sum(in);
    in.expect(')', "')'");
    return e;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) return fin(in.natural());
  throw ParseError(in.pos(), "a natural, 'w' or '('");
}

Expr parse_factor(Cursor& in) {
  Expr base = parse_atom(in);
  if (in.eat('^')) return exp(std::move(base), parse_factor(in));
  return base;
}

Expr parse_term(Cursor& in) {
  Expr e = parse_factor(in);
  while (in.eat('*')) e = prod(std::move(e), parse_factor(in));
  return e;
}

Expr parse_sum(Cursor& in) {
  Expr e = parse_term(in);
  while (in.eat('+')) e = sum(std::move(e), parse_term(in));
  return e;
}

// Precedence levels for printing: Sum 0, Prod 1, Exp 2, atoms 3.
int level(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Sum: return 0;
    case Expr::Kind::Prod: return 1;
    case Expr::Kind::Exp: return 2;
    default: return 3;
  }
}

void print_at(const Expr& e, int min_level, std::string& out) {
  if (level(e) < min_level) {
    out += '(';
    print_at(e, 0, out);
    out += ')';
    return;
  }
  switch (e.kind()) {
    case Expr::Kind::Fin:
      out += e.fin_size().str();
      break;
    case Expr::Kind::Omega:
      out += 'w';
      break;
    case Expr::Kind::Sum:
      print_at(e.left(), 0, out);
      out += " + ";
      print_at(e.right(), 1, out);
      break;
    case Expr::Kind::Prod:
      print_at(e.left(), 1, out);
      out += '*';
      print_at(e.right(), 2, out);
      break;
    case Expr::Kind::Exp:
      // The grammar only admits atoms as bases; exponents associate right.
      print_at(e.base(), 3, out);
      out += '^';
      print_at(e.exponent(), 2, out);
      break;
  }
}

Element parse_element_at(Cursor& in) {
  char c = in.peek();
  if (c == 'L' || c == 'R') {
    in.eat(c);
    in.expect(':', "':'");
    Element inner = parse_element_at(in);
    return c == 'L' ? Element::left(std::move(inner)) : Element::right(std::move(inner));
  }
  if (c == '(') {
    in.eat('(');
    Element first = parse_element_at(in);
    in.expect(',', "','");
    Element second = parse_element_at(in);
    in.expect(')', "')'");
    return Element::pair(std::move(first), std::move(second));
  }
  if (c == '[') {
    in.eat('[');
    std::vector<Element> flat;
    if (!in.eat(']')) {
      do {
        in.expect('(', "'('");
        flat.push_back(parse_element_at(in));
        in.expect(',', "','");
        flat.push_back(parse_element_at(in));
        in.expect(')', "')'");
      } while (in.eat(','));
      in.expect(']', "']'");
    }
    return Element::list(std::move(flat));
  }
  if (std::isdigit(static_cast<unsigned char>(c))) return Element::nat(in.natural());
  throw ParseError(in.pos(), "a natural, 'L', 'R', '(' or '['");
}

}  // namespace

Expr parse_expr(const std::string& text) {
  Cursor in(text);
  Expr e = parse_sum(in);
  in.done("'+', '*', '^' or end of input");
  return e;
}

std::string print_expr(const Expr& e) {
  std::string out;
  print_at(e, 0, out);
  return out;
}

std::string print_cnf(const Cnf& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c.term_count(); ++i) {
    if (i > 0) out += " + ";
    const Cnf& e = c.term(i).exponent;
    const Nat& coeff = c.term(i).coefficient;
    if (e.is_zero()) {
      out += coeff.str();
      continue;
    }
    if (e.is_finite() && e.finite_value() == 1) {
      out += "w";
    } else if (e.is_finite()) {
      out += "w^" + e.finite_value().str();
    } else {
      out += "w^(" + print_cnf(e) + ")";
    }
    if (coeff != 1) out += "*" + coeff.str();
  }
  return out;
}

std::string print_element(const Element& x) {
  switch (x.kind()) {
    case Element::Kind::Nat:
      return x.value().str();
    case Element::Kind::Left:
      return "L:" + print_element(x.inner());
    case Element::Kind::Right:
      return "R:" + print_element(x.inner());
    case Element::Kind::Pair:
      return "(" + print_element(x.first()) + "," + print_element(x.second()) + ")";
    case Element::Kind::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < x.entry_count(); ++i) {
        if (i > 0) out += ",";
        out += "(" + print_element(x.entry_a(i)) + "," + print_element(x.entry_b(i)) + ")";
      }
      return out + "]";
    }
  }
  return "?";
}

Element parse_element(const std::string& text) {
  Cursor in(text);
  Element x = parse_element_at(in);
  in.done("end of input");
  return x;
}

}  // namespace ord
