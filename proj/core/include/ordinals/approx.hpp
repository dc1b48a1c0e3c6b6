#pragma once

#include <cstdint>

#include "ordinals/cnf.hpp"
#include "ordinals/expr.hpp"

namespace ord {

enum class OpKind { Add, Mul, Exp };

/// Greatest g with |alpha| + g <= |beta| (and g <= |beta|), for
/// alpha <= beta. Throws Error(NotLeq) otherwise.
Cnf subtract(const Expr& alpha, const Expr& beta);

/// Greatest g with |alpha| * g <= |beta| and g <= |beta|. For |alpha| = 0
/// the second clause binds and g = |beta|.
Cnf divide(const Expr& alpha, const Expr& beta);

/// Greatest g with |alpha|^g <= |beta| and g <= |beta|, for |alpha| >= 1 and
/// |beta| >= 1. For |alpha| = 1 the second clause binds and g = |beta|.
Cnf logarithm(const Expr& alpha, const Expr& beta);

/// Certifies that gamma is the greatest ordinal with t(gamma) <= |beta| and
/// gamma <= |beta|, where t is addition/multiplication/exponentiation by
/// |alpha| on the left. Maximality is certified by the successor test; the
/// degenerate kinds (Mul with |alpha| = 0, Exp with |alpha| = 1) accept
/// exactly gamma = |beta|.
bool verify_greatest(OpKind kind, const Expr& alpha, const Expr& beta,
                     const Cnf& gamma);

/// Left cancellation at order-type level: t(beta) <= t(gamma) implies
/// beta <= gamma, with t combining at expression level. For Add the
/// canonical simulation shape is additionally checked on sampled elements:
/// Left(a) maps to Left(a) and Right(b) to Right(h b) with h the simulation
/// between the right parts.
bool check_left_cancellation(OpKind kind, const Expr& alpha, const Expr& beta,
                             const Expr& gamma, std::size_t samples = 16,
                             std::uint64_t seed = 1);

}  // namespace ord
