#pragma once

#include <vector>

#include "omalg/polyring.hpp"

namespace omalg {

/// Elementary Nielsen transformations: while some leading monomial lies in
/// the submagma generated by the others, subtract the witness expression
/// evaluated at the other generators. Input must be homogeneous and nonzero;
/// output is a monic homogeneous free generating set of the same subalgebra.
std::vector<Polynomial> nielsen_reduce(std::vector<Polynomial> gens,
                                       const OrderingSpec& ord);

/// G(Y) = H_A - G(Omega, H_A): generating function of any homogeneous free
/// generating set of a graded subalgebra with Hilbert series H_A.
Series free_gen_series(const Series& h_subalgebra, const OmegaSignature& sig);

/// Independent oracle: spans all Omega-compositions of the generators per
/// degree and returns the exact rank per degree.
Series brute_force_subalgebra_hilbert(const OmegaSignature& sig,
                                      const std::vector<Polynomial>& gens, int trunc);

}  // namespace omalg
