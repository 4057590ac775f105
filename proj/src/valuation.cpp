#include "s02e/valuation.hpp"

#include <sstream>

#include "s02e/errors.hpp"

namespace s02e {

namespace {

// Standard interpretation of one operator over already-computed child
// values, with the smash width pre-checked against u so the result is
// never materialized beyond the bound it is about to be compared with.
// Returns nullopt when the value provably exceeds u.
std::optional<Nat> apply_op_bounded(const TermPtr& t, const std::vector<Nat>& d, const Nat& u) {
  Nat v;
  switch (t->kind) {
    case Term::Kind::Unary:
      switch (t->uop) {
        case UnaryOp::Succ: v = d[0] + 1; break;
        case UnaryOp::Half: v = shift_right(d[0], 1); break;
        case UnaryOp::Len: v = Nat(static_cast<unsigned long>(bitlength(d[0]))); break;
        case UnaryOp::S0: v = shift_left(d[0], 1); break;
        case UnaryOp::S1: v = shift_left(d[0], 1) + 1; break;
        case UnaryOp::Parity: v = d[0] % 2; break;
      }
      break;
    case Term::Kind::Binary:
      switch (t->bop) {
        case BinaryOp::Plus: v = d[0] + d[1]; break;
        case BinaryOp::Times: v = d[0] * d[1]; break;
        case BinaryOp::Smash: {
          const std::size_t la = bitlength(d[0]), lb = bitlength(d[1]);
          // 2^(la*lb) <= u  iff  la*lb + 1 <= bitlength(u)
          if (lb != 0 && la > bitlength(u) / lb) return std::nullopt;
          const std::size_t k = la * lb;
          if (k + 1 > bitlength(u)) return std::nullopt;
          v = pow2(k);
          break;
        }
        case BinaryOp::BoxPlus: v = shift_left(d[0], bitlength(d[1])); break;
      }
      break;
    case Term::Kind::Cond:
      v = (d[0] == 0) ? d[1] : d[2];
      break;
    default:
      throw ContractViolation("apply_op_bounded: not an internal node");
  }
  if (v > u) return std::nullopt;
  return v;
}

std::size_t arity(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Zero:
    case Term::Kind::Var: return 0;
    case Term::Kind::Unary: return 1;
    case Term::Kind::Binary: return 2;
    case Term::Kind::Cond: return 3;
  }
  return 0;
}

TermPtr child_term(const TermPtr& t, std::size_t i) {
  return i == 0 ? t->a : i == 1 ? t->b : t->c;
}

std::optional<ValNodePtr> build_rec(const TermPtr& t, const Env& env, const Nat& u) {
  ValNode node;
  node.term = t;
  switch (t->kind) {
    case Term::Kind::Zero:
      node.value = 0;
      break;
    case Term::Kind::Var:
      node.value = env.get(t->var);  // throws UnboundVariable if uncovered
      if (node.value > u) return std::nullopt;
      break;
    default: {
      const std::size_t n = arity(t);
      std::vector<Nat> d;
      d.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        auto child = build_rec(child_term(t, i), env, u);
        if (!child) return std::nullopt;
        d.push_back((*child)->value);
        node.children.push_back(std::move(*child));
      }
      auto v = apply_op_bounded(t, d, u);
      if (!v) return std::nullopt;
      node.value = std::move(*v);
      break;
    }
  }
  return std::make_shared<const ValNode>(std::move(node));
}

bool verify_rec(const ValNodePtr& w, const TermPtr& t, const Env& env, const Nat& u) {
  if (!w || !w->term || !term_equal(w->term, t)) return false;
  if (w->value > u) return false;
  const std::size_t n = arity(t);
  if (w->children.size() != n) return false;
  switch (t->kind) {
    case Term::Kind::Zero:
      return w->value == 0;
    case Term::Kind::Var:
      return env.has(t->var) && w->value == env.get(t->var);
    default: {
      std::vector<Nat> d;
      d.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (!verify_rec(w->children[i], child_term(t, i), env, u)) return false;
        d.push_back(w->children[i]->value);
      }
      auto v = apply_op_bounded(t, d, u);
      return v && *v == w->value;
    }
  }
}

void write_val_node(BitWriter& w, const ValNodePtr& node) {
  w.tag(TAG_VAL_NODE);
  w.number(encode_term(node->term));
  w.number(node->value);
  w.number(node->children.size());
  for (const ValNodePtr& c : node->children) write_val_node(w, c);
}

}  // namespace

std::optional<ValNodePtr> build_valuation_tree(const TermPtr& t, const Env& env, const Nat& u) {
  return build_rec(t, env, u);
}

bool verify_valuation_tree(const ValNodePtr& w, const TermPtr& t, const Env& env, const Nat& u) {
  try {
    return verify_rec(w, t, env, u);
  } catch (const UnboundVariable&) {
    return false;
  }
}

Nat encode_valuation_tree(const ValNodePtr& w) {
  BitWriter bw;
  write_val_node(bw, w);
  return bw.finish();
}

Nat valuation_size_exponent(const Nat& tCode, const Nat& u) {
  const Nat T(static_cast<unsigned long>(bitlength(tCode)));
  const Nat U(static_cast<unsigned long>(bitlength(u)));
  const Nat nodes = (T - 1) / 6;
  return nodes * (2 * T + 2 * U + 13) + 1;
}

Nat size_bound(const Nat& tCode, const Nat& u, std::size_t max_bits) {
  decode_term(tCode);  // DecodeError unless tCode codes a term
  const Nat e = valuation_size_exponent(tCode, u);
  if (e > Nat(static_cast<unsigned long>(max_bits))) {
    throw ResourceError("size_bound: 2^" + e.get_str() + " - 1 exceeds " +
                        std::to_string(max_bits) + " bits");
  }
  return pow2(static_cast<std::size_t>(e.get_ui())) - 1;
}

bool within_valuation_size_bound(const Nat& treeCode, const Nat& tCode, const Nat& u) {
  // treeCode <= 2^E - 1  iff  bitlength(treeCode) <= E
  return Nat(static_cast<unsigned long>(bitlength(treeCode))) <=
         valuation_size_exponent(tCode, u);
}

std::optional<Nat> value_dn(const TermPtr& t, const Env& env, const Nat& u) {
  auto w = build_valuation_tree(t, env, u);
  if (!w) return std::nullopt;
  if (!within_valuation_size_bound(encode_valuation_tree(*w), encode_term(t), u)) {
    throw ContractViolation("value_dn: witness tree exceeds its size bound");
  }
  return (*w)->value;
}

std::string print_valuation_tree(const ValNodePtr& w) {
  std::ostringstream os;
  os << "(node " << print_term(w->term) << " " << w->value.get_str();
  for (const ValNodePtr& c : w->children) os << " " << print_valuation_tree(c);
  os << ")";
  return os.str();
}

}  // namespace s02e
