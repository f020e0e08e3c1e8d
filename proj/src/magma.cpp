#include "omalg/magma.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace omalg {

Monomial Monomial::leaf(int var) {
  if (var < 1) throw std::invalid_argument("variable index must be >= 1");
  auto n = std::make_shared<Node>();
  n->var = var;
  return Monomial(std::move(n));
}

Monomial Monomial::app(int arity, int op_index, std::vector<Monomial> children) {
  if (arity < 2) throw std::invalid_argument("arity must be >= 2");
  if (op_index < 1) throw std::invalid_argument("op_index must be >= 1");
  if (static_cast<int>(children.size()) != arity)
    throw std::invalid_argument("child count must equal arity");
  auto n = std::make_shared<Node>();
  n->arity = arity;
  n->op_index = op_index;
  n->deg = 0;
  for (const Monomial& c : children) n->deg += c.degree();
  n->children = std::move(children);
  return Monomial(std::move(n));
}

bool Monomial::operator==(const Monomial& o) const {
  if (node_ == o.node_) return true;
  return structural_compare(*this, o) == 0;
}

int Monomial::structural_compare(const Monomial& a, const Monomial& b) {
  if (a.node_ == b.node_) return 0;
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
  if (a.is_leaf()) return a.var() == b.var() ? 0 : (a.var() < b.var() ? -1 : 1);
  if (a.op_index() != b.op_index()) return a.op_index() < b.op_index() ? -1 : 1;
  for (int i = 0; i < a.arity(); ++i) {
    int c = structural_compare(a.child(i), b.child(i));
    if (c != 0) return c;
  }
  return 0;
}

namespace {

long secondary(const Monomial& m, const std::map<int, long>& w) {
  if (m.is_leaf()) {
    auto it = w.find(m.var());
    return it == w.end() ? 0 : it->second;
  }
  long s = 0;
  for (int i = 0; i < m.arity(); ++i) s += secondary(m.child(i), w);
  return s;
}

int compare_rec(const Monomial& a, const Monomial& b, const OrderingSpec& ord) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  if (!ord.secondary_weight.empty()) {
    long wa = secondary(a, ord.secondary_weight);
    long wb = secondary(b, ord.secondary_weight);
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  if (a.arity() != b.arity()) return a.arity() < b.arity() ? -1 : 1;
  if (a.is_leaf()) return a.var() == b.var() ? 0 : (a.var() < b.var() ? -1 : 1);
  if (a.op_index() != b.op_index()) return a.op_index() < b.op_index() ? -1 : 1;
  if (ord.child_rule == ChildRule::Lex) {
    for (int i = 0; i < a.arity(); ++i) {
      int c = compare_rec(a.child(i), b.child(i), ord);
      if (c != 0) return c;
    }
  } else {
    for (int i = a.arity() - 1; i >= 0; --i) {
      int c = compare_rec(a.child(i), b.child(i), ord);
      if (c != 0) return c;
    }
  }
  return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, const OrderingSpec& ord) {
  return compare_rec(a, b, ord);
}

long weighted_degree(const Monomial& m, const std::vector<int>& weights) {
  if (m.is_leaf()) {
    if (m.var() > static_cast<int>(weights.size()))
      throw std::domain_error("variable index exceeds weight table");
    return weights[static_cast<size_t>(m.var()) - 1];
  }
  long s = 0;
  for (int i = 0; i < m.arity(); ++i) s += weighted_degree(m.child(i), weights);
  return s;
}

namespace {

// Cartesian product over per-slot candidate lists, appended onto each prefix.
void product_apply(const OmegaSignature& sig, int arity, int op_index,
                   const std::vector<const std::vector<Monomial>*>& slots,
                   std::vector<Monomial>& out) {
  std::vector<size_t> idx(slots.size(), 0);
  for (const auto* s : slots)
    if (s->empty()) return;
  for (;;) {
    std::vector<Monomial> children;
    children.reserve(slots.size());
    for (size_t i = 0; i < slots.size(); ++i) children.push_back((*slots[i])[idx[i]]);
    out.push_back(Monomial::app(arity, op_index, std::move(children)));
    size_t i = slots.size();
    while (i > 0) {
      --i;
      if (++idx[i] < slots[i]->size()) break;
      idx[i] = 0;
      if (i == 0) return;
    }
  }
}

// All additive splits of `total` into `parts` positive parts, recursing over
// the candidate tables indexed by part size.
void splits_rec(const OmegaSignature& sig, int arity, int op_index,
                const std::map<long, std::vector<Monomial>>& table, long total, int parts,
                std::vector<const std::vector<Monomial>*>& slots, std::vector<Monomial>& out) {
  if (parts == 1) {
    auto it = table.find(total);
    if (it == table.end() || it->second.empty()) return;
    slots.push_back(&it->second);
    product_apply(sig, arity, op_index, slots, out);
    slots.pop_back();
    return;
  }
  for (const auto& [sz, cands] : table) {
    if (sz > total - (parts - 1) || cands.empty()) continue;
    slots.push_back(&cands);
    splits_rec(sig, arity, op_index, table, total - sz, parts - 1, slots, out);
    slots.pop_back();
  }
}

std::vector<Monomial> enumerate_core(const OmegaSignature& sig,
                                     const std::vector<int>& weights, long wdeg) {
  std::map<long, std::vector<Monomial>> table;  // weighted degree -> monomials
  for (long k = 1; k <= wdeg; ++k) {
    std::vector<Monomial> out;
    for (size_t j = 0; j < weights.size(); ++j)
      if (weights[j] == k) out.push_back(Monomial::leaf(static_cast<int>(j) + 1));
    for (const auto& [n, p] : sig.arities_up_to(static_cast<int>(k))) {
      for (int i = 1; i <= p; ++i) {
        std::vector<const std::vector<Monomial>*> slots;
        splits_rec(sig, n, i, table, k, n, slots, out);
      }
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
      return compare(a, b, OrderingSpec{}) < 0;
    });
    table[k] = std::move(out);
  }
  return table[wdeg];
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const OmegaSignature& sig, int d, int degree) {
  if (d < 1 || degree < 1) throw std::invalid_argument("d and degree must be >= 1");
  return enumerate_core(sig, std::vector<int>(static_cast<size_t>(d), 1), degree);
}

std::vector<Monomial> enumerate_weighted(const OmegaSignature& sig,
                                         const std::vector<int>& weights, int wdeg) {
  for (int w : weights)
    if (w < 1) throw std::invalid_argument("weights must be >= 1");
  if (weights.empty() || wdeg < 1) throw std::invalid_argument("need variables and wdeg >= 1");
  return enumerate_core(sig, weights, wdeg);
}

std::optional<Path> find_subword(const Monomial& haystack, const Monomial& needle) {
  if (haystack == needle) return Path{};
  if (haystack.is_leaf()) return std::nullopt;
  for (int i = 0; i < haystack.arity(); ++i) {
    if (haystack.child(i).degree() < needle.degree()) continue;
    if (auto sub = find_subword(haystack.child(i), needle)) {
      Path p{i + 1};
      p.insert(p.end(), sub->begin(), sub->end());
      return p;
    }
  }
  return std::nullopt;
}

const Monomial& subterm_at(const Monomial& m, const Path& path) {
  const Monomial* cur = &m;
  for (int i : path) {
    if (cur->is_leaf() || i < 1 || i > cur->arity()) throw std::domain_error("invalid path");
    cur = &cur->child(i - 1);
  }
  return *cur;
}

namespace {

Monomial shape_rec(const Monomial& m, std::vector<int>& leaves) {
  if (m.is_leaf()) {
    leaves.push_back(m.var());
    return Monomial::leaf(1);
  }
  std::vector<Monomial> children;
  children.reserve(static_cast<size_t>(m.arity()));
  for (int i = 0; i < m.arity(); ++i) children.push_back(shape_rec(m.child(i), leaves));
  return Monomial::app(m.arity(), m.op_index(), std::move(children));
}

Monomial assemble_rec(const Monomial& shape, const std::vector<int>& leaves, size_t& pos) {
  if (shape.is_leaf()) {
    if (pos >= leaves.size()) throw std::invalid_argument("leaf word too short");
    return Monomial::leaf(leaves[pos++]);
  }
  std::vector<Monomial> children;
  children.reserve(static_cast<size_t>(shape.arity()));
  for (int i = 0; i < shape.arity(); ++i) children.push_back(assemble_rec(shape.child(i), leaves, pos));
  return Monomial::app(shape.arity(), shape.op_index(), std::move(children));
}

}  // namespace

std::pair<Monomial, std::vector<int>> shape_and_leaves(const Monomial& m) {
  std::vector<int> leaves;
  Monomial shape = shape_rec(m, leaves);
  return {shape, std::move(leaves)};
}

Monomial assemble(const Monomial& shape, const std::vector<int>& leaves) {
  size_t pos = 0;
  Monomial m = assemble_rec(shape, leaves, pos);
  if (pos != leaves.size()) throw std::invalid_argument("leaf word too long");
  return m;
}

namespace {

struct Tokens {
  std::vector<std::string> toks;
  size_t pos = 0;
  const std::string& peek() const {
    static const std::string end = "<end>";
    return pos < toks.size() ? toks[pos] : end;
  }
  std::string next() {
    if (pos >= toks.size()) throw std::invalid_argument("unexpected end of term");
    return toks[pos++];
  }
};

int parse_posint(const std::string& tok, const char* what) {
  if (tok.empty() || tok.size() > 8) throw std::invalid_argument(std::string("bad ") + what + ": " + tok);
  for (char c : tok)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument(std::string("bad ") + what + ": " + tok);
  int v = std::stoi(tok);
  if (v < 1) throw std::invalid_argument(std::string("bad ") + what + ": " + tok);
  return v;
}

Monomial parse_term_rec(Tokens& t) {
  std::string tok = t.next();
  if (tok == "(") {
    if (t.next() != "nu") throw std::invalid_argument("expected 'nu'");
    int arity = parse_posint(t.next(), "arity");
    if (arity < 2) throw std::invalid_argument("arity must be >= 2");
    int op_index = parse_posint(t.next(), "op_index");
    std::vector<Monomial> children;
    children.reserve(static_cast<size_t>(arity));
    for (int i = 0; i < arity; ++i) children.push_back(parse_term_rec(t));
    if (t.next() != ")") throw std::invalid_argument("expected ')': arity does not match child count");
    return Monomial::app(arity, op_index, std::move(children));
  }
  if (tok.size() >= 2 && tok[0] == 'x') return Monomial::leaf(parse_posint(tok.substr(1), "variable"));
  throw std::invalid_argument("unexpected token: " + tok);
}

Tokens tokenize(const std::string& text) {
  Tokens t;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      t.toks.push_back(cur);
      cur.clear();
    }
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (c == '(' || c == ')') {
      flush();
      t.toks.push_back(std::string(1, c));
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return t;
}

}  // namespace

Monomial parse_term(const std::string& text) {
  Tokens t = tokenize(text);
  Monomial m = parse_term_rec(t);
  if (t.pos != t.toks.size()) throw std::invalid_argument("trailing input after term");
  return m;
}

std::string print_term(const Monomial& m) {
  if (m.is_leaf()) return "x" + std::to_string(m.var());
  std::string s = "(nu " + std::to_string(m.arity()) + " " + std::to_string(m.op_index());
  for (int i = 0; i < m.arity(); ++i) s += " " + print_term(m.child(i));
  return s + ")";
}

void validate_term(const Monomial& m, const OmegaSignature& sig) {
  if (m.is_leaf()) return;
  if (m.op_index() > sig.op_count(m.arity()))
    throw std::domain_error("op_index " + std::to_string(m.op_index()) + " exceeds operation count for arity " +
                            std::to_string(m.arity()));
  for (int i = 0; i < m.arity(); ++i) validate_term(m.child(i), sig);
}

namespace {

std::optional<Monomial> membership_rec(const Monomial& m, const std::vector<Monomial>& gens) {
  for (size_t i = 0; i < gens.size(); ++i)
    if (m == gens[i]) return Monomial::leaf(static_cast<int>(i) + 1);
  if (m.is_leaf()) return std::nullopt;
  std::vector<Monomial> children;
  children.reserve(static_cast<size_t>(m.arity()));
  for (int i = 0; i < m.arity(); ++i) {
    auto sub = membership_rec(m.child(i), gens);
    if (!sub) return std::nullopt;
    children.push_back(std::move(*sub));
  }
  return Monomial::app(m.arity(), m.op_index(), std::move(children));
}

}  // namespace

std::optional<MagmaExpression> submagma_membership(const Monomial& m,
                                                   const std::vector<Monomial>& gens) {
  auto e = membership_rec(m, gens);
  if (!e) return std::nullopt;
  return MagmaExpression{std::move(*e)};
}

namespace {

Monomial eval_rec(const Monomial& skel, const std::vector<Monomial>& gens) {
  if (skel.is_leaf()) {
    int idx = skel.var();
    if (idx > static_cast<int>(gens.size())) throw std::domain_error("generator index out of range");
    return gens[static_cast<size_t>(idx) - 1];
  }
  std::vector<Monomial> children;
  children.reserve(static_cast<size_t>(skel.arity()));
  for (int i = 0; i < skel.arity(); ++i) children.push_back(eval_rec(skel.child(i), gens));
  return Monomial::app(skel.arity(), skel.op_index(), std::move(children));
}

}  // namespace

Monomial eval_expression(const MagmaExpression& e, const std::vector<Monomial>& gens) {
  return eval_rec(e.skeleton, gens);
}

}  // namespace omalg
