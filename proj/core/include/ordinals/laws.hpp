#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ordinals/element.hpp"
#include "ordinals/expr.hpp"
#include "ordinals/semantics.hpp"

namespace ord {

/// Order-isomorphism witness between two expressions: a pair of element maps
/// that must be mutually inverse, order preserving, and rank preserving.
/// The last condition is the whole acceptance story: between equal ordinals
/// there is exactly one simulation, and it preserves ranks.
struct Iso {
  std::string name;
  Expr src;
  Expr dst;
  std::function<Element(const Element&)> fwd;
  std::function<Element(const Element&)> bwd;
};

// Exponential laws.
Iso iso_exp_zero(Expr alpha);                       // a^0 = 1
Iso iso_exp_one(Expr alpha);                        // a^1 = a
Iso iso_exp_succ(Expr alpha, Expr beta);            // a^(b+1) = a^b * a
Iso iso_exp_add(Expr alpha, Expr beta, Expr gamma); // a^(b+c) = a^b * a^c
Iso iso_exp_mul(Expr alpha, Expr beta, Expr gamma); // a^(b*c) = (a^b)^c

// Sum/product relabelings.
Iso iso_times_distr(Expr alpha, Expr beta, Expr gamma); // a*(b+c) = a*b + a*c
Iso iso_plus_assoc(Expr alpha, Expr beta, Expr gamma);
Iso iso_plus_zero(Expr alpha);
Iso iso_times_assoc(Expr alpha, Expr beta, Expr gamma);

/// Validates an iso on sampled elements (full enumeration when the ordinal
/// has at most sample_count elements): roundtrips both ways, order
/// preservation, rank preservation, and order_type(src) = order_type(dst)
/// checked once exactly.
Report check_iso(const Iso& iso, std::size_t sample_count, std::uint64_t seed = 1);

}  // namespace ord
