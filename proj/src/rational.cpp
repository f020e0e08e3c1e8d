#include "omalg/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace omalg {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || text[i - 1] == '/'));
    if (!ok) throw std::invalid_argument("bad rational: " + text);
  }
  Rat r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int catalan(long k) {
  if (k < 1) throw std::invalid_argument("catalan: k >= 1 required");
  return binomial(2 * k - 2, k - 1) / k;
}

double log2_abs(const Rat& r) {
  if (r == 0) throw std::invalid_argument("log2_abs of zero");
  long en, ed;
  double mn = mpz_get_d_2exp(&en, r.get_num().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, r.get_den().get_mpz_t());
  return std::log2(std::fabs(mn)) + static_cast<double>(en) -
         std::log2(std::fabs(md)) - static_cast<double>(ed);
}

}  // namespace omalg
