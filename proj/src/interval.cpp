#include "gconj/interval.hpp"

#include <algorithm>
#include <vector>

namespace gconj {

ERange ERange::point(ExtendedReal v) {
  if (v.is_undefined()) return nowhere();
  ERange r;
  r.lo = r.hi = v;
  r.defined_possible = true;
  return r;
}

ERange ERange::band(ExtendedReal lo, ExtendedReal hi) {
  ERange r;
  r.lo = lo;
  r.hi = hi;
  r.defined_possible = true;
  return r;
}

ERange ERange::nowhere() {
  ERange r;
  r.undef_possible = true;
  return r;
}

namespace {

struct Hull {
  ERange r;

  void absorb(ExtendedReal v) {
    if (v.is_undefined()) {
      r.undef_possible = true;
      return;
    }
    if (!r.defined_possible) {
      r.lo = r.hi = v;
      r.defined_possible = true;
      return;
    }
    if (v.raw() < r.lo.raw()) r.lo = v;
    if (v.raw() > r.hi.raw()) r.hi = v;
  }
};

bool contains(const ERange& a, double x) {
  return a.lo.raw() <= x && x <= a.hi.raw();
}

// Monotone unary op whose domain is an interval clipped from below at
// `domain_lo` (values below it evaluate Undefined).
ERange clipped_monotone(OpCode op, const ERange& a, double domain_lo,
                        bool open_below) {
  ERange r;
  r.undef_possible = a.undef_possible;
  double lo = a.lo.raw(), hi = a.hi.raw();
  if (hi < domain_lo || (open_below && hi == domain_lo)) {
    r.undef_possible = true;
    return r;  // no defined part
  }
  if (lo < domain_lo || (open_below && lo == domain_lo)) {
    r.undef_possible = true;
    lo = domain_lo;
  }
  r.defined_possible = true;
  // At an open boundary the defined values are unbounded below (log -> -inf).
  r.lo = (open_below && lo == domain_lo) ? ExtendedReal::neg_inf()
                                         : apply_op(op, ExtendedReal::of(lo));
  r.hi = apply_op(op, ExtendedReal::of(hi));
  if (r.lo.is_undefined() || r.hi.is_undefined()) {
    // Shouldn't happen after clipping, but stay conservative.
    return ERange::nowhere();
  }
  return r;
}

}  // namespace

ERange apply_range(OpCode op, const ERange& a) {
  if (!a.defined_possible) return ERange::nowhere();
  ERange r;
  switch (op) {
    case OpCode::Sqrt:
      r = clipped_monotone(op, a, 0.0, false);
      break;
    case OpCode::Log:
      r = clipped_monotone(op, a, 0.0, true);
      break;
    case OpCode::Acosh:
      r = clipped_monotone(op, a, 1.0, false);
      break;
    case OpCode::Floor:
    case OpCode::Ceil: {
      Hull h;
      h.absorb(apply_op(op, a.lo));
      h.absorb(apply_op(op, a.hi));
      r = h.r;
      break;
    }
    case OpCode::Tan: {
      if (a.is_point() || a.lo.same(a.hi)) {
        Hull h;
        h.absorb(apply_op(op, a.lo));
        r = h.r;
      } else {
        // A genuine interval may straddle a pole; give up precision rather
        // than soundness.
        r = ERange::band(ExtendedReal::neg_inf(), ExtendedReal::pos_inf());
        r.undef_possible = true;
      }
      break;
    }
    default:
      throw std::invalid_argument("apply_range: not a unary operator");
  }
  r.undef_possible = r.undef_possible || a.undef_possible;
  if (!r.defined_possible) r.undef_possible = true;
  return r;
}

ERange apply_range(OpCode op, const ERange& a, const ERange& b) {
  ERange r;
  r.undef_possible = a.undef_possible || b.undef_possible;
  if (!a.defined_possible || !b.defined_possible) {
    r.undef_possible = true;
    return r;
  }

  Hull h;
  h.r.undef_possible = r.undef_possible;

  switch (op) {
    case OpCode::Add:
    case OpCode::Sub:
    case OpCode::Mul:
    case OpCode::Min:
    case OpCode::Max: {
      for (const ExtendedReal& x : {a.lo, a.hi})
        for (const ExtendedReal& y : {b.lo, b.hi}) h.absorb(apply_op(op, x, y));
      // Corner products miss 0 * inf only when one factor spans zero while
      // the other reaches infinity; the corner hull is already [-inf, inf]
      // there, so only the undefinedness flag needs help.
      if (op == OpCode::Mul &&
          ((contains(a, 0.0) && (b.lo.is_neg_inf() || b.hi.is_pos_inf())) ||
           (contains(b, 0.0) && (a.lo.is_neg_inf() || a.hi.is_pos_inf()))))
        h.r.undef_possible = true;
      break;
    }

    case OpCode::Div: {
      if (contains(b, 0.0)) {
        h.r.undef_possible = true;
        if (b.lo.same(b.hi)) return h.r;  // dividing by exactly zero
        // Denominators arbitrarily close to zero: values are unbounded.
        h.absorb(ExtendedReal::neg_inf());
        h.absorb(ExtendedReal::pos_inf());
        break;
      }
      for (const ExtendedReal& x : {a.lo, a.hi})
        for (const ExtendedReal& y : {b.lo, b.hi}) h.absorb(apply_op(op, x, y));
      break;
    }

    case OpCode::Pow: {
      double base_lo = a.lo.raw(), base_hi = a.hi.raw();
      if (base_hi < 0) {
        h.r.undef_possible = true;  // negative bases are Undefined throughout
        return h.r;
      }
      if (base_lo < 0) {
        h.r.undef_possible = true;
        base_lo = 0.0;
      }
      // For positive bases x^y is monotone in each argument, so corners of
      // the clipped box bound it; the x = 0 and x = 1 slices are the only
      // interior special cases.
      for (double x : {base_lo, base_hi})
        for (const ExtendedReal& y : {b.lo, b.hi})
          h.absorb(apply_op(op, ExtendedReal::of(x), y));
      if (base_lo < 1.0 && 1.0 < base_hi)
        for (const ExtendedReal& y : {b.lo, b.hi})
          h.absorb(apply_op(op, ExtendedReal::of(1.0), y));
      if (base_lo == 0.0 && !a.lo.same(a.hi) && b.lo.raw() <= 0)
        h.r.undef_possible = true;  // 0^y with y <= 0 somewhere in the box
      break;
    }

    default:
      throw std::invalid_argument("apply_range: not a binary operator");
  }

  if (!h.r.defined_possible) h.r.undef_possible = true;
  return h.r;
}

ERange evaluate_range(const Expression& e, std::span<const ERange> env) {
  switch (e.kind()) {
    case Expression::Kind::Symbol: {
      int id = e.sym().id;
      if (id < 0 || static_cast<std::size_t>(id) >= env.size())
        return ERange::nowhere();
      return env[id];
    }
    case Expression::Kind::Constant:
      return ERange::point(ExtendedReal::of(e.constant_value().to_double()));
    case Expression::Kind::Unary:
      return apply_range(e.op(), evaluate_range(e.left(), env));
    case Expression::Kind::Binary:
      return apply_range(e.op(), evaluate_range(e.left(), env),
                         evaluate_range(e.right(), env));
  }
  return ERange::nowhere();
}

}  // namespace gconj
