#include "omalg/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace omalg {

Series::Series(int trunc) {
  if (trunc < 0) throw std::invalid_argument("negative truncation");
  coeffs_.assign(static_cast<size_t>(trunc) + 1, Rat(0));
}

Series Series::monomial(int degree, const Rat& c, int trunc) {
  Series s(trunc);
  if (degree < 0 || degree > trunc) throw std::invalid_argument("monomial degree out of range");
  s.set(degree, c);
  return s;
}

Series Series::truncated(int n) const {
  if (n > trunc()) throw std::domain_error("cannot extend truncation");
  Series s(n);
  for (int k = 0; k <= n; ++k) s.set(k, (*this)[k]);
  return s;
}

bool Series::is_zero() const {
  for (const Rat& c : coeffs_)
    if (c != 0) return false;
  return true;
}

int Series::valuation() const {
  for (int k = 0; k <= trunc(); ++k)
    if ((*this)[k] != 0) return k;
  return trunc() + 1;
}

Series& Series::operator+=(const Series& o) {
  if (o.trunc() < trunc()) coeffs_.resize(static_cast<size_t>(o.trunc()) + 1);
  for (int k = 0; k <= trunc(); ++k) coeffs_[static_cast<size_t>(k)] += o[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.trunc() < trunc()) coeffs_.resize(static_cast<size_t>(o.trunc()) + 1);
  for (int k = 0; k <= trunc(); ++k) coeffs_[static_cast<size_t>(k)] -= o[k];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  int n = std::min(a.trunc(), b.trunc());
  Series r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      r.set(i + j, r[i + j] + a[i] * b[j]);
    }
  }
  return r;
}

Series Series::operator-() const {
  Series r(trunc());
  for (int k = 0; k <= trunc(); ++k) r.set(k, -(*this)[k]);
  return r;
}

Series Series::operator*(const Rat& c) const {
  Series r(trunc());
  for (int k = 0; k <= trunc(); ++k) r.set(k, (*this)[k] * c);
  return r;
}

Series compose(const Series& a, const Series& b) {
  if (b[0] != 0) throw std::domain_error("compose requires zero constant term");
  int n = std::min(a.trunc(), b.trunc());
  Series r = Series::monomial(0, a[0], n);
  Series pw = Series::monomial(0, Rat(1), n);
  Series bt = b.truncated(n);
  for (int k = 1; k <= n; ++k) {
    pw = pw * bt;
    if (a[k] != 0) r += pw * a[k];
  }
  return r;
}

Series apply_signature(const OmegaSignature& sig, const Series& h) {
  if (h[0] != 0) throw std::domain_error("apply_signature requires zero constant term");
  int n = h.trunc();
  Series r(n);
  Series pw = h;
  for (int m = 2; m <= n; ++m) {
    pw = pw * h;
    int p = sig.op_count(m);
    if (p != 0) r += pw * Rat(p);
  }
  return r;
}

Series solve_substituted(const OmegaSignature& sig, const Series& u) {
  if (u[0] != 0) throw std::domain_error("substituted series must vanish at 0");
  int n = u.trunc();
  int maxn = sig.is_omega() ? n : sig.max_arity(n);
  Series v(n);
  if (maxn < 2) {
    for (int k = 1; k <= n; ++k) v.set(k, u[k]);
    return v;
  }
  // pw[m][k] = coefficient of t^k in v^m; row m at degree k only reads row
  // m-1 at degrees < k, so rows of a fixed degree are independent.
  std::vector<std::vector<Rat>> pw(static_cast<size_t>(maxn) + 1,
                                   std::vector<Rat>(static_cast<size_t>(n) + 1, Rat(0)));
  for (int k = 1; k <= n; ++k) {
    int top = std::min(maxn, k);
#pragma omp parallel for schedule(dynamic)
    for (int m = 2; m <= top; ++m) {
      Rat s(0);
      for (int j = 1; j <= k - m + 1; ++j) {
        if (pw[1][static_cast<size_t>(j)] == 0) continue;
        s += pw[1][static_cast<size_t>(j)] * pw[static_cast<size_t>(m) - 1][static_cast<size_t>(k - j)];
      }
      pw[static_cast<size_t>(m)][static_cast<size_t>(k)] = s;
    }
    Rat c = u[k];
    for (int m = 2; m <= top; ++m) {
      int p = sig.op_count(m);
      if (p != 0) c += Rat(p) * pw[static_cast<size_t>(m)][static_cast<size_t>(k)];
    }
    v.set(k, c);
    pw[1][static_cast<size_t>(k)] = c;
  }
  return v;
}

Series solve_free_series(const OmegaSignature& sig, int trunc) {
  return solve_substituted(sig, Series::monomial(1, Rat(1), trunc));
}

Series solve_free_series_serial(const OmegaSignature& sig, int trunc) {
  int n = trunc;
  int maxn = sig.is_omega() ? n : sig.max_arity(n);
  Series v(n);
  if (n >= 1) v.set(1, Rat(1));
  if (maxn < 2) return v;
  std::vector<std::vector<Rat>> pw(static_cast<size_t>(maxn) + 1,
                                   std::vector<Rat>(static_cast<size_t>(n) + 1, Rat(0)));
  pw[1][1] = Rat(1);
  for (int k = 2; k <= n; ++k) {
    int top = std::min(maxn, k);
    for (int m = 2; m <= top; ++m) {
      Rat s(0);
      for (int j = 1; j <= k - m + 1; ++j) {
        if (pw[1][static_cast<size_t>(j)] == 0) continue;
        s += pw[1][static_cast<size_t>(j)] * pw[static_cast<size_t>(m) - 1][static_cast<size_t>(k - j)];
      }
      pw[static_cast<size_t>(m)][static_cast<size_t>(k)] = s;
    }
    Rat c(0);
    for (int m = 2; m <= top; ++m) {
      int p = sig.op_count(m);
      if (p != 0) c += Rat(p) * pw[static_cast<size_t>(m)][static_cast<size_t>(k)];
    }
    v.set(k, c);
    pw[1][static_cast<size_t>(k)] = c;
  }
  return v;
}

Series lagrange_invert(const Series& f) {
  if (f[0] == 0) throw std::domain_error("lagrange_invert requires nonzero constant term");
  int n = f.trunc();
  // g = 1/f.
  Series g(n);
  Rat inv0 = Rat(1) / f[0];
  g.set(0, inv0);
  for (int k = 1; k <= n; ++k) {
    Rat s(0);
    for (int j = 1; j <= k; ++j) s += f[j] * g[k - j];
    g.set(k, -inv0 * s);
  }
  Series z(n);
  Series gp = g;  // g^k at iteration k
  if (n >= 1) z.set(1, gp[0]);
  for (int k = 2; k <= n; ++k) {
    gp = gp * g;
    z.set(k, gp[k - 1] / k);
  }
  return z;
}

ExponentEstimate estimate_exponent(const Series& coeffs, ExponentMethod method) {
  std::vector<int> support;
  for (int k = 1; k <= coeffs.trunc(); ++k)
    if (coeffs[k] != 0) support.push_back(k);
  if (support.size() < 16) throw std::domain_error("too few nonzero coefficients");
  size_t from = support.size() - support.size() / 4;
  double lo = 0, hi = 0, sum = 0;
  int count = 0;
  if (method == ExponentMethod::Root) {
    for (size_t i = from; i < support.size(); ++i) {
      int k = support[i];
      double r = std::exp2(log2_abs(coeffs[k]) / k);
      if (count == 0 || r < lo) lo = r;
      if (count == 0 || r > hi) hi = r;
      sum = std::max(sum, r);
      ++count;
    }
    return {sum, hi - lo};
  }
  for (size_t i = from; i + 1 < support.size(); ++i) {
    int k = support[i];
    int s = support[i + 1] - k;
    double r = std::exp2((log2_abs(coeffs[k + s]) - log2_abs(coeffs[k])) / s);
    if (count == 0 || r < lo) lo = r;
    if (count == 0 || r > hi) hi = r;
    sum += r;
    ++count;
  }
  if (count == 0) throw std::domain_error("support too sparse for ratio method");
  return {sum / count, hi - lo};
}

std::string series_to_csv(const Series& s, int from_degree, bool header) {
  std::ostringstream os;
  if (header) os << "degree,numerator,denominator\n";
  for (int k = from_degree; k <= s.trunc(); ++k)
    os << k << "," << s[k].get_num().get_str() << "," << s[k].get_den().get_str() << "\n";
  return os.str();
}

std::string series_to_json(const Series& s) {
  nlohmann::json j;
  j["trunc"] = s.trunc();
  auto coeffs = nlohmann::json::array();
  for (int k = 0; k <= s.trunc(); ++k) coeffs.push_back(rat_to_string(s[k]));
  j["coeffs"] = coeffs;
  return j.dump();
}

Series series_from_text(const std::string& text) {
  size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) throw std::invalid_argument("empty series text");
  if (text[pos] == '{') {
    auto j = nlohmann::json::parse(text);
    int trunc = j.at("trunc").get<int>();
    Series s(trunc);
    const auto& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != trunc + 1)
      throw std::invalid_argument("coeffs length must be trunc+1");
    for (int k = 0; k <= trunc; ++k) s.set(k, parse_rational(coeffs[static_cast<size_t>(k)].get<std::string>()));
    return s;
  }
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, Rat>> rows;
  int maxdeg = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line.rfind("degree", 0) == 0) continue;
    std::istringstream ls(line);
    std::string dtok, ntok, qtok;
    if (!std::getline(ls, dtok, ',') || !std::getline(ls, ntok, ',') || !std::getline(ls, qtok))
      throw std::invalid_argument("bad csv row: " + line);
    int deg = std::stoi(dtok);
    rows.emplace_back(deg, parse_rational(ntok) / parse_rational(qtok));
    maxdeg = std::max(maxdeg, deg);
  }
  if (rows.empty()) throw std::invalid_argument("no series rows");
  Series s(maxdeg);
  for (const auto& [deg, c] : rows) s.set(deg, c);
  return s;
}

}  // namespace omalg
