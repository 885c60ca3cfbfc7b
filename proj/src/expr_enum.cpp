#include "gconj/expr_enum.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace gconj {

ExpressionEnumerator::ExpressionEnumerator(std::vector<InvariantSymbol> symbols,
                                           std::vector<Rational> constants,
                                           std::vector<OpCode> operators,
                                           int max_complexity,
                                           std::uint64_t max_nodes)
    : symbols_(std::move(symbols)),
      constants_(std::move(constants)),
      max_complexity_(max_complexity),
      max_nodes_(max_nodes) {
  if (max_complexity_ < 1) throw std::invalid_argument("max_complexity must be >= 1");
  if (symbols_.empty() && constants_.empty())
    throw std::invalid_argument("empty pool: no symbols or constants");
  if (symbols_.size() > 0xffff || constants_.size() > 0xffff)
    throw std::invalid_argument("pool too large");
  std::sort(operators.begin(), operators.end());
  operators.erase(std::unique(operators.begin(), operators.end()), operators.end());
  for (OpCode op : operators)
    (op_spec(op).arity == 1 ? unary_ops_ : binary_ops_).push_back(op);
  strata_.resize(max_complexity_);
}

std::uint32_t ExpressionEnumerator::add_node(const ArenaNode& n,
                                             std::string_view key_prefix,
                                             std::int64_t key_child1,
                                             std::int64_t key_child2) {
  if (nodes_.size() >= max_nodes_)
    throw std::length_error("expression arena limit exceeded (raise max_nodes)");
  std::size_t len = key_prefix.size();
  if (key_child1 >= 0) len += key_len_[key_child1];
  if (key_child2 >= 0) len += key_len_[key_child2];
  if (len > 0xffff) throw std::length_error("canonical key too long");

  std::uint32_t id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(n);
  // One reservation up front so the appends below cannot reallocate while
  // copying out of keybuf_ itself.
  keybuf_.reserve(keybuf_.size() + len);
  key_off_.push_back(keybuf_.size());
  keybuf_.append(key_prefix);
  if (key_child1 >= 0)
    keybuf_.append(keybuf_.data() + key_off_[key_child1], key_len_[key_child1]);
  if (key_child2 >= 0)
    keybuf_.append(keybuf_.data() + key_off_[key_child2], key_len_[key_child2]);
  key_len_.push_back(static_cast<std::uint16_t>(len));
  return id;
}

void ExpressionEnumerator::build_stratum(int c) {
  Stratum& st = strata_[c - 1];
  if (st.built) return;
  char tag[20];

  if (c == 1) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      tag[0] = '\x01';
      tag[1] = static_cast<char>(symbols_[i].id >> 8);
      tag[2] = static_cast<char>(symbols_[i].id & 0xff);
      st.roots.push_back(add_node({0, 0, static_cast<std::uint16_t>(i), 0, 0},
                                  {tag, 3}, -1, -1));
    }
    for (std::size_t i = 0; i < constants_.size(); ++i) {
      tag[0] = '\x02';
      std::uint64_t biased =
          static_cast<std::uint64_t>(constants_[i].num) + (1ULL << 63);
      for (int s = 0; s < 8; ++s) tag[1 + s] = static_cast<char>((biased >> (56 - 8 * s)) & 0xff);
      std::uint64_t den = static_cast<std::uint64_t>(constants_[i].den);
      for (int s = 0; s < 8; ++s) tag[9 + s] = static_cast<char>((den >> (56 - 8 * s)) & 0xff);
      st.roots.push_back(add_node({1, 0, static_cast<std::uint16_t>(i), 0, 0},
                                  {tag, 17}, -1, -1));
    }
  } else {
    // Unary applications over the previous stratum.
    build_stratum(c - 1);
    for (OpCode op : unary_ops_) {
      tag[0] = static_cast<char>(0x40 | static_cast<int>(op));
      for (std::uint32_t child : strata_[c - 2].roots)
        st.roots.push_back(add_node({2, static_cast<std::uint8_t>(op), 0, child, 0},
                                    {tag, 1}, child, -1));
    }
    // Binary applications over complexity splits c1 + c2 = c - 1.
    for (int c1 = 1; c1 <= c - 2; ++c1) {
      int c2 = c - 1 - c1;
      build_stratum(c1);
      build_stratum(c2);
      const auto& left = strata_[c1 - 1].roots;
      const auto& right = strata_[c2 - 1].roots;
      for (OpCode op : binary_ops_) {
        bool comm = op_spec(op).commutative;
        if (comm && c1 > c2) continue;  // mirrored split already covered
        tag[0] = static_cast<char>(0x80 | static_cast<int>(op));
        for (std::size_t i = 0; i < left.size(); ++i) {
          // Same-size commutative splits pair each root only with itself
          // and later roots; strata are key-sorted so key(l) <= key(r).
          std::size_t j0 = (comm && c1 == c2) ? i : 0;
          for (std::size_t j = j0; j < right.size(); ++j) {
            bool swap = comm && key_of(right[j]) < key_of(left[i]);
            st.roots.push_back(add_node(
                {3, static_cast<std::uint8_t>(op), 0, left[i], right[j]},
                {tag, 1}, swap ? right[j] : left[i], swap ? left[i] : right[j]));
          }
        }
      }
    }
  }

  std::sort(st.roots.begin(), st.roots.end(),
            [this](std::uint32_t a, std::uint32_t b) { return key_of(a) < key_of(b); });
  st.built = true;
}

bool ExpressionEnumerator::next(Candidate& out) {
  while (cur_c_ <= max_complexity_) {
    build_stratum(cur_c_);
    const auto& roots = strata_[cur_c_ - 1].roots;
    if (cur_i_ < roots.size()) {
      out.complexity = cur_c_;
      out.node = roots[cur_i_];
      out.key = key_of(out.node);
      ++cur_i_;
      return true;
    }
    ++cur_c_;
    cur_i_ = 0;
  }
  return false;
}

void ExpressionEnumerator::reset() {
  cur_c_ = 1;
  cur_i_ = 0;
}

std::uint64_t ExpressionEnumerator::count_at(int complexity) {
  if (complexity < 1 || complexity > max_complexity_)
    throw std::out_of_range("complexity outside enumerator range");
  build_stratum(complexity);
  return strata_[complexity - 1].roots.size();
}

Expression ExpressionEnumerator::materialize(std::uint32_t node) const {
  const ArenaNode& n = nodes_.at(node);
  switch (n.kind) {
    case 0: return Expression::symbol(symbols_[n.payload]);
    case 1: return Expression::constant(constants_[n.payload]);
    case 2: return Expression::unary(static_cast<OpCode>(n.op), materialize(n.a));
    default:
      return Expression::binary(static_cast<OpCode>(n.op), materialize(n.a),
                                materialize(n.b));
  }
}

ExtendedReal ExpressionEnumerator::eval(std::uint32_t node,
                                        std::span<const ExtendedReal> env) const {
  const ArenaNode& n = nodes_[node];
  switch (n.kind) {
    case 0:
      return n.payload < env.size() ? env[n.payload] : ExtendedReal::undefined();
    case 1:
      return ExtendedReal::of(constants_[n.payload].to_double());
    case 2:
      return apply_op(static_cast<OpCode>(n.op), eval(n.a, env));
    default: {
      ExtendedReal l = eval(n.a, env);
      if (l.is_undefined()) return l;  // absorbing; skip the right subtree
      return apply_op(static_cast<OpCode>(n.op), l, eval(n.b, env));
    }
  }
}

std::vector<Expression> enumerate_expressions(
    const std::vector<InvariantSymbol>& symbols,
    const std::vector<Rational>& constants, const std::vector<OpCode>& operators,
    int max_complexity, std::size_t limit) {
  ExpressionEnumerator en(symbols, constants, operators, max_complexity);
  std::vector<Expression> out;
  ExpressionEnumerator::Candidate c;
  while (out.size() < limit && en.next(c)) out.push_back(en.materialize(c.node));
  return out;
}

}  // namespace gconj
