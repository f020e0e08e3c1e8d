#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace omalg {

class Series;

/// The operation set Omega: finitely many n-ary operations per arity n >= 2.
/// The omega builtin has exactly one operation of every arity >= 2 and is
/// materialized lazily: a computation truncated at degree N only ever asks
/// about arities <= N.
class OmegaSignature {
 public:
  static OmegaSignature binary();
  static OmegaSignature nary(int n);
  static OmegaSignature omega();
  static OmegaSignature custom(std::map<int, int> arities);

  bool is_omega() const { return omega_; }

  /// Number of operations of the given arity (p_n). 0 for unused arities.
  int op_count(int arity) const;

  /// Largest arity with p_n > 0, capped at `bound`. Returns 1 when the
  /// signature has no operation of arity <= bound.
  int max_arity(int bound) const;

  /// All (arity, count) pairs with arity <= bound, ascending.
  std::vector<std::pair<int, int>> arities_up_to(int bound) const;

  /// Canonical text in the signature grammar.
  std::string text() const;

  bool operator==(const OmegaSignature& o) const {
    return omega_ == o.omega_ && arities_ == o.arities_;
  }

 private:
  OmegaSignature() = default;
  bool omega_ = false;
  std::map<int, int> arities_;  // finite-list case only
};

/// Grammar: `binary` | `nary:<n>` | `omega` | `custom:<n1>=<p1>,<n2>=<p2>,...`
/// with n_i >= 2 distinct and p_i >= 1. Throws std::invalid_argument naming
/// the offending token.
OmegaSignature parse_signature(const std::string& text);

/// G(Omega,t) = sum p_n t^n truncated at `trunc`.
Series gen_fn(const OmegaSignature& sig, int trunc);

}  // namespace omalg
