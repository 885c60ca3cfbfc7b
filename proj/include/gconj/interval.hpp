#pragma once

#include <span>

#include "gconj/expr.hpp"
#include "gconj/extended_real.hpp"
#include "gconj/ops.hpp"

namespace gconj {

/// Conservative enclosure of an expression's value when some inputs are only
/// known to a tolerance (the theta solver). `[lo, hi]` bounds every defined
/// outcome the input uncertainty allows; the flags record whether a defined
/// value and whether Undefined are possible at all. Enclosures may be wider
/// than the true image, never narrower.
struct ERange {
  ExtendedReal lo;
  ExtendedReal hi;
  bool defined_possible = false;
  bool undef_possible = false;

  static ERange point(ExtendedReal v);
  static ERange band(ExtendedReal lo, ExtendedReal hi);
  static ERange nowhere();  // no defined value: always Undefined

  bool is_point() const {
    return defined_possible && !undef_possible && lo.same(hi);
  }
};

ERange apply_range(OpCode op, const ERange& a);
ERange apply_range(OpCode op, const ERange& a, const ERange& b);

/// env is indexed by symbol id; ids outside env are treated as Undefined.
ERange evaluate_range(const Expression& e, std::span<const ERange> env);

}  // namespace gconj
