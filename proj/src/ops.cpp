#include "gconj/ops.hpp"

#include <cmath>
#include <stdexcept>

namespace gconj {

const std::vector<OperatorSpec>& operator_table() {
  static const std::vector<OperatorSpec> table = {
      {OpCode::Add, 2, true, "add", "+"},
      {OpCode::Sub, 2, false, "sub", "-"},
      {OpCode::Mul, 2, true, "mul", "*"},
      {OpCode::Div, 2, false, "div", "/"},
      {OpCode::Pow, 2, false, "pow", "^"},
      {OpCode::Min, 2, true, "min", "minimum"},
      {OpCode::Max, 2, true, "max", "maximum"},
      {OpCode::Sqrt, 1, false, "sqrt", "sqrt"},
      {OpCode::Floor, 1, false, "floor", "floor"},
      {OpCode::Ceil, 1, false, "ceil", "ceil"},
      {OpCode::Log, 1, false, "log", "log"},
      {OpCode::Tan, 1, false, "tan", "tan"},
      {OpCode::Acosh, 1, false, "arccosh", "arccosh"},
  };
  return table;
}

const OperatorSpec& op_spec(OpCode code) {
  return operator_table()[static_cast<int>(code)];
}

const OperatorSpec* find_operator(std::string_view name) {
  for (const auto& spec : operator_table())
    if (name == spec.name || name == spec.text) return &spec;
  if (name == "minimum") return &op_spec(OpCode::Min);
  if (name == "maximum") return &op_spec(OpCode::Max);
  if (name == "acosh") return &op_spec(OpCode::Acosh);
  return nullptr;
}

namespace {

const ExtendedReal kUndef = ExtendedReal::undefined();

ExtendedReal er_add(double x, double y) {
  if (std::isinf(x) && std::isinf(y) && (x > 0) != (y > 0)) return kUndef;
  return ExtendedReal::of(x + y);
}

ExtendedReal er_mul(double x, double y) {
  if ((x == 0 && std::isinf(y)) || (y == 0 && std::isinf(x))) return kUndef;
  return ExtendedReal::of(x * y);
}

ExtendedReal er_div(double x, double y) {
  if (y == 0) return kUndef;
  if (std::isinf(x) && std::isinf(y)) return kUndef;
  if (std::isinf(y)) return ExtendedReal::of(0.0);
  return ExtendedReal::of(x / y);
}

ExtendedReal er_pow(double x, double y) {
  if (x < 0) return kUndef;  // includes -inf
  if (x == 0) return y > 0 ? ExtendedReal::of(0.0) : kUndef;
  // x > 0 (possibly +inf): exp(y * ln x) conventions.
  if (std::isinf(x)) {
    if (y > 0) return ExtendedReal::pos_inf();
    if (y < 0) return ExtendedReal::of(0.0);
    return kUndef;  // inf^0
  }
  if (std::isinf(y)) {
    if (x == 1) return kUndef;  // 1^inf via 0 * inf
    bool grows = (x > 1) == (y > 0);
    return grows ? ExtendedReal::pos_inf() : ExtendedReal::of(0.0);
  }
  return ExtendedReal::of(std::pow(x, y));
}

ExtendedReal er_tan(double x) {
  if (!std::isfinite(x)) return kUndef;
  // Poles at pi/2 + k*pi: remainder() folds into [-pi/2, pi/2].
  double r = std::remainder(x, M_PI);
  if (std::abs(std::abs(r) - M_PI / 2) < 1e-9) return kUndef;
  return ExtendedReal::of(std::tan(x));
}

}  // namespace

ExtendedReal apply_op(OpCode code, ExtendedReal a, ExtendedReal b) {
  const OperatorSpec& spec = op_spec(code);
  if (a.is_undefined()) return kUndef;
  if (spec.arity == 2 && b.is_undefined()) return kUndef;
  double x = a.raw(), y = b.raw();
  switch (code) {
    case OpCode::Add: return er_add(x, y);
    case OpCode::Sub: return er_add(x, -y);
    case OpCode::Mul: return er_mul(x, y);
    case OpCode::Div: return er_div(x, y);
    case OpCode::Pow: return er_pow(x, y);
    case OpCode::Min: return ExtendedReal::of(x < y ? x : y);
    case OpCode::Max: return ExtendedReal::of(x > y ? x : y);
    case OpCode::Sqrt: return x < 0 ? kUndef : ExtendedReal::of(std::sqrt(x));
    case OpCode::Floor: return std::isinf(x) ? a : ExtendedReal::of(std::floor(x));
    case OpCode::Ceil: return std::isinf(x) ? a : ExtendedReal::of(std::ceil(x));
    case OpCode::Log: return x <= 0 ? kUndef : ExtendedReal::of(std::log(x));
    case OpCode::Tan: return er_tan(x);
    case OpCode::Acosh: return x < 1 ? kUndef : ExtendedReal::of(std::acosh(x));
  }
  throw std::logic_error("unhandled opcode");
}

}  // namespace gconj
