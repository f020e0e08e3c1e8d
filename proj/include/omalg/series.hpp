#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "omalg/rational.hpp"
#include "omalg/signature.hpp"

namespace omalg {

/// Truncated formal power series with exact rational coefficients.
/// Binary operations truncate to the minimum truncation of the operands;
/// nothing ever silently extends a truncation.
class Series {
 public:
  explicit Series(int trunc);
  static Series monomial(int degree, const Rat& c, int trunc);

  int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
  void set(int k, Rat v) { coeffs_[static_cast<size_t>(k)] = std::move(v); }

  Series truncated(int n) const;
  bool is_zero() const;
  /// Index of the lowest nonzero coefficient, or trunc()+1 for the zero series.
  int valuation() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  Series operator-() const;
  Series operator*(const Rat& c) const;
  bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<Rat> coeffs_;  // indexed 0..trunc
};

/// a(b(t)); requires b(0) = 0.
Series compose(const Series& a, const Series& b);

/// G(Omega, h) = sum_n p_n h^n; requires h(0) = 0.
Series apply_signature(const OmegaSignature& sig, const Series& h);

/// Unique solution H of G(Omega,H) - H + t = 0 with H(0) = 0, by
/// degree-by-degree recursion (coefficient k depends only on coefficients
/// below k). Parallelized across power-table rows when OpenMP is enabled.
Series solve_free_series(const OmegaSignature& sig, int trunc);
/// Plain serial reference for the same recursion; kept for tests and the
/// benchmark target.
Series solve_free_series_serial(const OmegaSignature& sig, int trunc);

/// Unique v with G(Omega,v) - v + u = 0 and v(0) = 0; requires u(0) = 0.
Series solve_substituted(const OmegaSignature& sig, const Series& u);

/// Inverts t = z f(z): returns z(t) with coefficients
/// a_k = (1/k) [zeta^{k-1}] (1/f)^k. Requires f(0) != 0.
Series lagrange_invert(const Series& f);

enum class ExponentMethod { Root, Ratio };

struct ExponentEstimate {
  double estimate;
  double spread;  // max - min over the sampled window
};

/// Numeric estimate of limsup a_k^{1/k}. Root: max of a_k^{1/k} over the last
/// quarter of indices. Ratio: (a_{k+s}/a_k)^{1/s} averaged over the last
/// quarter of the support, s = gap of the support. Requires at least 16
/// nonzero coefficients.
ExponentEstimate estimate_exponent(const Series& coeffs, ExponentMethod method);

inline double scaled_exponent(double exp1, int d) { return d * exp1; }

/// CSV rows `degree,numerator,denominator` for degrees from..trunc.
std::string series_to_csv(const Series& s, int from_degree = 1, bool header = true);
/// {"trunc": N, "coeffs": ["p/q", ...]} with coefficients 0..trunc.
std::string series_to_json(const Series& s);
/// Reads either format back (autodetected).
Series series_from_text(const std::string& text);

}  // namespace omalg
