#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "omalg/magma.hpp"
#include "omalg/rational.hpp"
#include "omalg/series.hpp"

namespace omalg {

/// Finite rational linear combination of Omega-monomials. Zero coefficients
/// are never stored; the zero polynomial is the empty map.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rat, StructuralLess>;

  Polynomial() = default;
  static Polynomial monomial(Monomial m, Rat c = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Adds c * m, erasing the term if the sum vanishes.
  void add_term(const Monomial& m, const Rat& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator*(const Rat& c) const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  /// Total degree if all monomials share one, else -1. Zero polynomial: 0.
  int homogeneous_degree() const;
  long weighted_homogeneous_degree(const std::vector<int>& weights) const;  // -1 if mixed

 private:
  TermMap terms_;
};

/// The ord-maximal monomial and its coefficient. Requires f != 0.
std::pair<Monomial, Rat> leading_term(const Polynomial& f, const OrderingSpec& ord);

Polynomial make_monic(const Polynomial& f, const OrderingSpec& ord);

/// Substitutes `replacement` into the slot at `path` of m, expanded by
/// multilinearity.
Polynomial replace_at_path(const Monomial& m, const Path& path,
                           const Polynomial& replacement);

/// nu_{n i}(args...) expanded multilinearly over the argument terms.
Polynomial apply_op(int arity, int op_index, const std::vector<Polynomial>& args);

/// Normal form of f modulo B: repeatedly rewrites the ord-largest reducible
/// monomial at its first preorder occurrence of a leading term of B.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const OrderingSpec& ord);

struct GroebnerBasis {
  std::vector<Polynomial> elements;  // monic
  OrderingSpec ordering;
  bool reduced = false;
};

/// Reduced Groebner basis by interreduction; no S-polynomials arise because
/// leading terms never overlap, so the output never exceeds the input size.
GroebnerBasis groebner(std::vector<Polynomial> gens, const OrderingSpec& ord);

/// true iff reduce(f, B) = 0. Requires B reduced.
bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis);

/// Hilbert series of K{X}_Omega / (B) to degree trunc, computed both by
/// normal-monomial counting and by H(K{x}_Omega, G(X) - G(B)); throws if the
/// two routes disagree. B must be reduced and homogeneous under `weights`
/// (weights[j-1] is the degree of x_j).
Series quotient_hilbert(const GroebnerBasis& basis, const OmegaSignature& sig,
                        const std::vector<int>& weights, int trunc);

/// G(B(J)) = G(Omega, H_A) - H_A + G_X.
Series gb_generating_function(const Series& h_quotient, const OmegaSignature& sig,
                              const Series& g_generators);

/// Text format: `<rat>*<term> (+ <rat>*<term>)*`, <rat> = p or p/q.
Polynomial parse_polynomial(const std::string& text);
std::string print_polynomial(const Polynomial& f, const OrderingSpec& ord = {});

/// One polynomial per line; `#` starts a comment line.
std::vector<Polynomial> read_polynomials(std::istream& in);
std::vector<Polynomial> read_polynomial_file(const std::string& path);

/// Evaluates a generator-symbol expression at concrete polynomials.
Polynomial eval_expression(const MagmaExpression& e, const std::vector<Polynomial>& gens);

}  // namespace omalg
