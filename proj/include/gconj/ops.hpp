#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gconj/extended_real.hpp"

namespace gconj {

/// Operator vocabulary for expression trees. Binary ops first, then unary.
enum class OpCode : std::uint8_t {
  Add, Sub, Mul, Div, Pow, Min, Max,   // binary
  Sqrt, Floor, Ceil, Log, Tan, Acosh,  // unary
};

constexpr int kOpCount = 13;

struct OperatorSpec {
  OpCode code;
  int arity;         // 1 or 2
  bool commutative;  // binary only
  const char* name;  // token name used by CLI/config: "add", "min", ...
  const char* text;  // rendered form: "+", "minimum", "sqrt", ...
};

/// Full table, indexed by static_cast<int>(OpCode).
const std::vector<OperatorSpec>& operator_table();
const OperatorSpec& op_spec(OpCode code);

/// Lookup by token name; accepts the CLI name, the rendered form, and the
/// common aliases (min/minimum, max/maximum, arccosh/acosh). Null if unknown.
const OperatorSpec* find_operator(std::string_view name);

/// Evaluates one operator application with explicit edge-case semantics:
///  - Undefined is absorbing: any Undefined operand gives Undefined.
///  - inf - inf, 0 * inf, inf / inf, x / 0, 0^0 are Undefined.
///  - a^b: a>0 uses exp(b*ln a) conventions; a=0 with b>0 gives 0, otherwise
///    Undefined; a<0 is Undefined.
///  - sqrt/log/arccosh outside their domains give Undefined; log is natural.
///  - tan takes radians and returns Undefined within 1e-9 of a pole.
///  - floor/ceil pass infinities through.
/// For unary ops pass the operand as `a`.
ExtendedReal apply_op(OpCode code, ExtendedReal a,
                      ExtendedReal b = ExtendedReal::undefined());

}  // namespace gconj
