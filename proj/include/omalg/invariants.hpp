#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "omalg/linalg.hpp"
#include "omalg/polyring.hpp"
#include "omalg/series.hpp"
#include "omalg/signature.hpp"

namespace omalg {

/// A linear action of a group on span{x_1..x_d}, given by generator matrices
/// (columns = images of basis vectors, exact rationals).
struct GroupAction {
  int dim = 0;
  std::vector<Mat> generators;
};

/// All elements of the generated group, or throws std::domain_error if the
/// closure exceeds `bound`. Generators must be invertible.
std::vector<Mat> group_closure(const GroupAction& action, int bound = 10000);

/// A nilpotent derivation in Jordan form: variables are grouped into
/// consecutive cells; within a cell delta(x_first) = 0 and delta(x_j) = x_{j-1}.
struct LinearDerivation {
  std::vector<int> cell_sizes;  // each >= 1
  int dim() const;
};

using Partition = std::pair<int, int>;  // (lambda1, lambda2), lambda1 >= lambda2 >= 0

/// Degree-graded decomposition into irreducible GL2 characters:
/// slices[q] maps a partition to its multiplicity at z-degree q.
struct SchurSeries {
  int trunc = 0;
  std::vector<std::map<Partition, long>> slices;  // indexed 0..trunc
};

/// (1/|G|) sum_g H(K{X}_Omega, xi_1(g) t, ..., xi_d(g) t), evaluated exactly
/// via coefficient k of the one-variable free series times (tr g)^k.
Series invariant_hilbert_finite_group(const GroupAction& action,
                                      const OmegaSignature& sig, int trunc);

/// Nonunitary associative invariants: (1/|G|) sum_g (1/(1 - tr(g) t) - 1).
Series assoc_invariant_series(const GroupAction& action, int trunc);

/// Coefficientwise product; truncations must agree.
Series hadamard_invariants(const Series& assoc, const Series& free_one_var);

/// Basis of ker(delta) on the homogeneous component of the given degree,
/// by exact null-space computation over the monomial basis.
std::vector<Polynomial> constants_basis(const LinearDerivation& delta,
                                        const OmegaSignature& sig, int degree);

/// Basis of the image of the averaging projection f -> (1/|G|) sum_g g(f) on
/// the homogeneous component, computed blockwise per tree shape.
std::vector<Polynomial> reynolds_basis(const GroupAction& action,
                                       const OmegaSignature& sig, int degree);

/// z-degree-q slice: decomposition of b_q * chi(u1,u2)^q into irreducible
/// characters, chi = sum_i s_{lambda^(i)}, b_q = number of Omega-tree shapes
/// with q leaves. Conversion m_(a,b) = c_(a,b) - c_(a+1,b-1) from the
/// monomial coefficients of the power.
SchurSeries gl2_character_series(const OmegaSignature& sig,
                                 const std::vector<Partition>& highest_weights,
                                 int trunc);

/// Hilbert series of the constants of the derivation with the given Jordan
/// cell sizes: each irreducible W(lambda) contributes exactly one constant,
/// so the z^q coefficient is sum_lambda m_lambda.
Series weitzenboeck_constants_series(const OmegaSignature& sig,
                                     const std::vector<int>& cell_sizes, int trunc);

/// SL2-invariants: only lambda1 = lambda2 contributes, one invariant each.
Series sl2_invariants_series(const OmegaSignature& sig,
                             const std::vector<Partition>& highest_weights,
                             int trunc);

enum class QuadKind { Cos2, Sin2 };

/// Composite midpoint quadrature (>= 2^12 panels) of
/// 2 int_0^1 w(u) s_lambda(e^{2 pi i u}, e^{-2 pi i u}) du,
/// w = cos^2(pi u) or sin^2(2 pi u). Test oracle for the selection rules.
double quadrature_crosscheck(QuadKind kind, const Partition& lambda);

/// Applies the linear substitution x_j -> sum_i m[i][j] x_{i+1} to every
/// monomial of f, expanded multilinearly.
Polynomial apply_matrix_substitution(const Mat& m, const Polynomial& f);

/// delta extended to polynomials by the Leibniz rule over operation slots.
Polynomial apply_derivation(const LinearDerivation& delta, const Polynomial& f);

/// The sequence f_1..f_k with
/// f_{i+1} = nu_3(x_3, x_1, nu_3(x_2, f_i, f_i)) - nu_3(x_1, x_1, nu_3(x_4, f_i, f_i)).
/// Each element is verified to be fixed by the shear x_3 -> x_1 + x_3,
/// x_4 -> x_2 + x_4 (checked via the kernel of g - id for large elements).
/// Requires a ternary operation in sig.
std::vector<Polynomial> nonfg_witness(const OmegaSignature& sig,
                                      const Polynomial& f1, int k);

/// The unipotent 4x4 generator used by nonfg_witness verification.
Mat nonfg_witness_generator();

/// Fraction of degree-2k binary tree shapes all of whose branches have odd
/// degree: 4^{k-1} c_k / c_{2k} as an exact rational.
Rat odd_branch_ratio(long k);

/// JSON {"d": n, "generators": [[["p/q",...],...],...]}.
GroupAction parse_group_action_json(const std::string& text);
GroupAction read_group_action_file(const std::string& path);

/// JSON mapping z-degree to a list of [lambda1, lambda2, m] triples.
std::string schur_series_to_json(const SchurSeries& s);

}  // namespace omalg
