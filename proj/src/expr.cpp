#include "gconj/expr.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gconj {

struct Expression::Node {
  Kind kind;
  OpCode op{};
  InvariantSymbol symbol;
  Rational constant;
  std::shared_ptr<const Node> left, right;
};

Expression Expression::symbol(InvariantSymbol sym) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Symbol;
  n->symbol = std::move(sym);
  return Expression(std::move(n));
}

Expression Expression::constant(Rational value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->constant = value;
  return Expression(std::move(n));
}

Expression Expression::unary(OpCode op, Expression child) {
  if (op_spec(op).arity != 1) throw std::invalid_argument("unary() with binary opcode");
  if (child.empty()) throw std::invalid_argument("unary() with empty child");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Unary;
  n->op = op;
  n->left = std::move(child.root_);
  return Expression(std::move(n));
}

Expression Expression::binary(OpCode op, Expression left, Expression right) {
  if (op_spec(op).arity != 2) throw std::invalid_argument("binary() with unary opcode");
  if (left.empty() || right.empty()) throw std::invalid_argument("binary() with empty child");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Binary;
  n->op = op;
  n->left = std::move(left.root_);
  n->right = std::move(right.root_);
  return Expression(std::move(n));
}

Expression::Kind Expression::kind() const {
  if (!root_) throw std::logic_error("kind() on empty expression");
  return root_->kind;
}

OpCode Expression::op() const {
  if (kind() != Kind::Unary && kind() != Kind::Binary)
    throw std::logic_error("op() on a leaf");
  return root_->op;
}

const InvariantSymbol& Expression::sym() const {
  if (kind() != Kind::Symbol) throw std::logic_error("sym() on a non-symbol");
  return root_->symbol;
}

const Rational& Expression::constant_value() const {
  if (kind() != Kind::Constant) throw std::logic_error("constant_value() on a non-constant");
  return root_->constant;
}

Expression Expression::left() const {
  if (kind() != Kind::Unary && kind() != Kind::Binary)
    throw std::logic_error("left() on a leaf");
  return Expression(root_->left);
}

Expression Expression::right() const {
  if (kind() != Kind::Binary) throw std::logic_error("right() on a non-binary node");
  return Expression(root_->right);
}

namespace {

using Node = Expression::Node;

int node_complexity(const Node* n) {
  switch (n->kind) {
    case Expression::Kind::Symbol:
    case Expression::Kind::Constant:
      return 1;
    case Expression::Kind::Unary:
      return 1 + node_complexity(n->left.get());
    case Expression::Kind::Binary:
      return 1 + node_complexity(n->left.get()) + node_complexity(n->right.get());
  }
  return 0;
}

void append_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v >> 8));
  out.push_back(static_cast<char>(v & 0xff));
}

void append_u64(std::string& out, std::uint64_t v) {
  for (int s = 56; s >= 0; s -= 8) out.push_back(static_cast<char>((v >> s) & 0xff));
}

void node_key(const Node* n, std::string& out) {
  switch (n->kind) {
    case Expression::Kind::Symbol:
      out.push_back('\x01');
      append_u16(out, static_cast<std::uint16_t>(n->symbol.id));
      return;
    case Expression::Kind::Constant:
      out.push_back('\x02');
      // Bias so byte order matches numeric order of the numerator.
      append_u64(out, static_cast<std::uint64_t>(n->constant.num) + (1ULL << 63));
      append_u64(out, static_cast<std::uint64_t>(n->constant.den));
      return;
    case Expression::Kind::Unary:
      out.push_back(static_cast<char>(0x40 | static_cast<int>(n->op)));
      node_key(n->left.get(), out);
      return;
    case Expression::Kind::Binary: {
      out.push_back(static_cast<char>(0x80 | static_cast<int>(n->op)));
      std::string lk, rk;
      node_key(n->left.get(), lk);
      node_key(n->right.get(), rk);
      if (op_spec(n->op).commutative && rk < lk) std::swap(lk, rk);
      out += lk;
      out += rk;
      return;
    }
  }
}

// Rendering precedence: ^ binds tighter than * /, which bind tighter than
// + -. Function calls and leaves are atoms.
int render_prec(const Node* n) {
  switch (n->kind) {
    case Expression::Kind::Symbol:
      return 100;
    case Expression::Kind::Constant:
      if (n->constant.num < 0) return 0;
      return n->constant.is_integer() ? 100 : 2;
    case Expression::Kind::Unary:
      return 100;
    case Expression::Kind::Binary:
      switch (n->op) {
        case OpCode::Add: case OpCode::Sub: return 1;
        case OpCode::Mul: case OpCode::Div: return 2;
        case OpCode::Pow: return 3;
        default: return 100;  // minimum/maximum render as calls
      }
  }
  return 100;
}

void node_render(const Node* n, std::string& out);

void render_child(const Node* child, int min_prec, std::string& out) {
  bool parens = render_prec(child) < min_prec;
  if (parens) out.push_back('(');
  node_render(child, out);
  if (parens) out.push_back(')');
}

void node_render(const Node* n, std::string& out) {
  switch (n->kind) {
    case Expression::Kind::Symbol:
      out += n->symbol.name;
      out += "(x)";
      return;
    case Expression::Kind::Constant:
      out += n->constant.str();
      return;
    case Expression::Kind::Unary:
      out += op_spec(n->op).text;
      out.push_back('(');
      node_render(n->left.get(), out);
      out.push_back(')');
      return;
    case Expression::Kind::Binary: {
      const OperatorSpec& spec = op_spec(n->op);
      int prec = render_prec(n);
      if (prec >= 100) {  // call style
        out += spec.text;
        out.push_back('(');
        node_render(n->left.get(), out);
        out += ", ";
        node_render(n->right.get(), out);
        out.push_back(')');
        return;
      }
      bool right_assoc = n->op == OpCode::Pow;
      render_child(n->left.get(), right_assoc ? prec + 1 : prec, out);
      if (n->op == OpCode::Pow) {
        out.push_back('^');
      } else {
        out.push_back(' ');
        out += spec.text;
        out.push_back(' ');
      }
      render_child(n->right.get(), right_assoc ? prec : prec + 1, out);
      return;
    }
  }
}

ExtendedReal node_eval_map(const Node* n, const std::map<int, ExtendedReal>& env) {
  switch (n->kind) {
    case Expression::Kind::Symbol: {
      auto it = env.find(n->symbol.id);
      return it == env.end() ? ExtendedReal::undefined() : it->second;
    }
    case Expression::Kind::Constant:
      return ExtendedReal::of(n->constant.to_double());
    case Expression::Kind::Unary:
      return apply_op(n->op, node_eval_map(n->left.get(), env));
    case Expression::Kind::Binary:
      return apply_op(n->op, node_eval_map(n->left.get(), env),
                      node_eval_map(n->right.get(), env));
  }
  return ExtendedReal::undefined();
}

ExtendedReal node_eval_span(const Node* n, std::span<const ExtendedReal> env) {
  switch (n->kind) {
    case Expression::Kind::Symbol: {
      int id = n->symbol.id;
      if (id < 0 || static_cast<size_t>(id) >= env.size()) return ExtendedReal::undefined();
      return env[id];
    }
    case Expression::Kind::Constant:
      return ExtendedReal::of(n->constant.to_double());
    case Expression::Kind::Unary:
      return apply_op(n->op, node_eval_span(n->left.get(), env));
    case Expression::Kind::Binary:
      return apply_op(n->op, node_eval_span(n->left.get(), env),
                      node_eval_span(n->right.get(), env));
  }
  return ExtendedReal::undefined();
}

void collect_ids(const Node* n, std::set<int>& ids) {
  switch (n->kind) {
    case Expression::Kind::Symbol: ids.insert(n->symbol.id); return;
    case Expression::Kind::Constant: return;
    case Expression::Kind::Unary: collect_ids(n->left.get(), ids); return;
    case Expression::Kind::Binary:
      collect_ids(n->left.get(), ids);
      collect_ids(n->right.get(), ids);
      return;
  }
}

const Node* require_root(const std::shared_ptr<const Node>& root) {
  if (!root) throw std::logic_error("operation on empty expression");
  return root.get();
}

}  // namespace

int Expression::complexity() const { return node_complexity(require_root(root_)); }

std::string Expression::canonical_key() const {
  std::string out;
  node_key(require_root(root_), out);
  return out;
}

std::string Expression::render() const {
  std::string out;
  node_render(require_root(root_), out);
  return out;
}

ExtendedReal Expression::evaluate(const std::map<int, ExtendedReal>& env) const {
  return node_eval_map(require_root(root_), env);
}

ExtendedReal Expression::evaluate(std::span<const ExtendedReal> env) const {
  return node_eval_span(require_root(root_), env);
}

std::vector<int> Expression::symbol_ids() const {
  std::set<int> ids;
  collect_ids(require_root(root_), ids);
  return std::vector<int>(ids.begin(), ids.end());
}

}  // namespace gconj
