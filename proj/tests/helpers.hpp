#pragma once

#include <string>

#include "ordinals/semantics.hpp"
#include "ordinals/text.hpp"

namespace t {

inline ord::Expr ex(const std::string& s) { return ord::parse_expr(s); }

/// CNF literal written in expression syntax, e.g. ty("w^2*3 + 1").
inline ord::Cnf ty(const std::string& s) { return ord::order_type(ex(s)); }

inline ord::Element el(const std::string& s) { return ord::parse_element(s); }

inline std::string show(const ord::Cnf& c) { return ord::print_cnf(c); }

}  // namespace t
