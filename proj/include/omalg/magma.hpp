#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omalg/signature.hpp"

namespace omalg {

/// An Omega-monomial: a planar rooted tree whose internal nodes carry an
/// operation (arity, op_index) and whose leaves carry variable indices >= 1.
/// Immutable; copies share subtrees.
class Monomial {
 public:
  static Monomial leaf(int var);
  static Monomial app(int arity, int op_index, std::vector<Monomial> children);

  bool is_leaf() const { return node_->arity == 0; }
  int var() const { return node_->var; }
  int arity() const { return node_->arity; }
  int op_index() const { return node_->op_index; }
  const Monomial& child(int i) const { return node_->children[static_cast<size_t>(i)]; }
  int degree() const { return node_->deg; }

  bool operator==(const Monomial& o) const;
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  /// Fixed structural total order (degree, arity, op_index, children lex,
  /// leaf variable); used for canonical storage.
  static int structural_compare(const Monomial& a, const Monomial& b);

 private:
  struct Node {
    int var = 0;       // leaf label, 0 for internal nodes
    int arity = 0;     // 0 for leaves
    int op_index = 0;  // 0 for leaves
    int deg = 1;
    std::vector<Monomial> children;
  };
  explicit Monomial(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct StructuralLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::structural_compare(a, b) < 0;
  }
};

enum class ChildRule {
  Lex,   // leftmost differing child decides
  RLex,  // rightmost differing child decides (inverse lexicographic)
};

/// An admissible ordering: total degree, then the optional secondary weight
/// (a per-variable nonnegative weight summed over leaves), then root arity,
/// then op_index, then children per the child rule; leaves by variable index.
struct OrderingSpec {
  ChildRule child_rule = ChildRule::Lex;
  std::map<int, long> secondary_weight;  // empty = unset
};

int compare(const Monomial& a, const Monomial& b, const OrderingSpec& ord);

long weighted_degree(const Monomial& m, const std::vector<int>& weights);

/// All monomials in x_1..x_d of exactly the given degree, ascending in the
/// default ordering, each exactly once.
std::vector<Monomial> enumerate_monomials(const OmegaSignature& sig, int d, int degree);

/// Enumeration by weighted degree; weights[j-1] >= 1 is the degree of x_j.
std::vector<Monomial> enumerate_weighted(const OmegaSignature& sig,
                                         const std::vector<int>& weights, int wdeg);

/// Counts Omega-tree shapes with the given number of leaves without building
/// them (one-variable monomial count).
using Path = std::vector<int>;  // 1-based child indices; empty = whole monomial

/// First preorder occurrence of `needle` as an Omega-subword of `haystack`.
std::optional<Path> find_subword(const Monomial& haystack, const Monomial& needle);

const Monomial& subterm_at(const Monomial& m, const Path& path);

/// Splits into the tree shape (all leaves relabeled x_1) and the leaf word.
std::pair<Monomial, std::vector<int>> shape_and_leaves(const Monomial& m);
/// Exact inverse of shape_and_leaves.
Monomial assemble(const Monomial& shape, const std::vector<int>& leaves);

/// Term grammar:  term := var | app ;  var := "x"<int> ;
/// app := "(" "nu" <arity> <op_index> term*arity ")".
Monomial parse_term(const std::string& text);
std::string print_term(const Monomial& m);

/// Checks op_index <= p_n for every internal node. Throws std::domain_error.
void validate_term(const Monomial& m, const OmegaSignature& sig);

/// An abstract Omega-monomial over generator symbols: same tree structure,
/// leaves carry 1-based indices into a generator list.
struct MagmaExpression {
  Monomial skeleton;
};

/// Decides membership of m in the submagma generated by `gens`; returns a
/// witness expression whose evaluation at `gens` reproduces m.
std::optional<MagmaExpression> submagma_membership(const Monomial& m,
                                                   const std::vector<Monomial>& gens);

Monomial eval_expression(const MagmaExpression& e, const std::vector<Monomial>& gens);

}  // namespace omalg
