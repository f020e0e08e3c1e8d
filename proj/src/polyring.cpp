#include "omalg/polyring.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace omalg {

Polynomial Polynomial::monomial(Monomial m, Rat c) {
  Polynomial p;
  p.add_term(m, c);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

int Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return -1;
  return d;
}

long Polynomial::weighted_homogeneous_degree(const std::vector<int>& weights) const {
  if (terms_.empty()) return 0;
  long d = weighted_degree(terms_.begin()->first, weights);
  for (const auto& [m, c] : terms_)
    if (weighted_degree(m, weights) != d) return -1;
  return d;
}

std::pair<Monomial, Rat> leading_term(const Polynomial& f, const OrderingSpec& ord) {
  if (f.is_zero()) throw std::domain_error("leading term of zero polynomial");
  auto it = f.terms().begin();
  auto best = it;
  for (++it; it != f.terms().end(); ++it)
    if (compare(it->first, best->first, ord) > 0) best = it;
  return {best->first, best->second};
}

Polynomial make_monic(const Polynomial& f, const OrderingSpec& ord) {
  auto [m, c] = leading_term(f, ord);
  return f * (Rat(1) / c);
}

Polynomial replace_at_path(const Monomial& m, const Path& path, const Polynomial& replacement) {
  if (path.empty()) return replacement;
  if (m.is_leaf() || path[0] < 1 || path[0] > m.arity()) throw std::domain_error("invalid path");
  int slot = path[0] - 1;
  Polynomial sub = replace_at_path(m.child(slot), Path(path.begin() + 1, path.end()), replacement);
  Polynomial out;
  for (const auto& [u, c] : sub.terms()) {
    std::vector<Monomial> children;
    children.reserve(static_cast<size_t>(m.arity()));
    for (int i = 0; i < m.arity(); ++i) children.push_back(i == slot ? u : m.child(i));
    out.add_term(Monomial::app(m.arity(), m.op_index(), std::move(children)), c);
  }
  return out;
}

Polynomial apply_op(int arity, int op_index, const std::vector<Polynomial>& args) {
  if (static_cast<int>(args.size()) != arity) throw std::invalid_argument("argument count must equal arity");
  for (const Polynomial& a : args)
    if (a.is_zero()) return Polynomial{};
  std::vector<Polynomial::TermMap::const_iterator> it;
  for (const Polynomial& a : args) it.push_back(a.terms().begin());
  Polynomial out;
  for (;;) {
    std::vector<Monomial> children;
    Rat c(1);
    for (size_t i = 0; i < it.size(); ++i) {
      children.push_back(it[i]->first);
      c *= it[i]->second;
    }
    out.add_term(Monomial::app(arity, op_index, std::move(children)), c);
    size_t i = it.size();
    for (;;) {
      if (i == 0) return out;
      --i;
      if (++it[i] != args[i].terms().end()) break;
      it[i] = args[i].terms().begin();
    }
  }
}

namespace {

// Largest reducible monomial of f together with its rewrite data, or nullopt.
struct Reduction {
  Monomial target;
  Rat coeff;
  Path path;
  size_t rule;
};

std::optional<Reduction> find_reduction(const Polynomial& f, const std::vector<Monomial>& lts,
                                        const OrderingSpec& ord) {
  std::optional<Reduction> best;
  for (const auto& [m, c] : f.terms()) {
    if (best && compare(m, best->target, ord) < 0) continue;
    for (size_t r = 0; r < lts.size(); ++r) {
      if (auto p = find_subword(m, lts[r])) {
        best = Reduction{m, c, std::move(*p), r};
        break;
      }
    }
  }
  return best;
}

}  // namespace

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const OrderingSpec& ord) {
  std::vector<Polynomial> monic;
  std::vector<Monomial> lts;
  for (const Polynomial& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("zero polynomial in basis");
    monic.push_back(make_monic(g, ord));
    lts.push_back(leading_term(monic.back(), ord).first);
  }
  Polynomial cur = f;
  while (auto red = find_reduction(cur, lts, ord)) {
    // Occurrence of lt(g) in the target is replaced by lt(g) - g, which
    // cancels the target and strictly lowers everything it introduces.
    cur -= replace_at_path(red->target, red->path, monic[red->rule]) * red->coeff;
  }
  return cur;
}

GroebnerBasis groebner(std::vector<Polynomial> gens, const OrderingSpec& ord) {
  std::vector<Polynomial> b;
  for (Polynomial& g : gens)
    if (!g.is_zero()) b.push_back(make_monic(g, ord));
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < b.size(); ++i) {
      std::vector<Polynomial> others;
      for (size_t j = 0; j < b.size(); ++j)
        if (j != i) others.push_back(b[j]);
      Polynomial nf = others.empty() ? b[i] : reduce(b[i], others, ord);
      if (nf == b[i]) continue;
      changed = true;
      if (nf.is_zero()) {
        b.erase(b.begin() + static_cast<long>(i));
      } else {
        b[i] = make_monic(nf, ord);
      }
      break;
    }
  }
  std::sort(b.begin(), b.end(), [&](const Polynomial& x, const Polynomial& y) {
    return compare(leading_term(x, ord).first, leading_term(y, ord).first, ord) < 0;
  });
  return GroebnerBasis{std::move(b), ord, true};
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis) {
  if (basis.elements.empty()) return f.is_zero();
  return reduce(f, basis.elements, basis.ordering).is_zero();
}

namespace {

// Normal monomials per weighted degree: every proper subterm of a normal
// monomial is normal, so candidates are operations applied to normal children
// and only the candidate itself can match a leading term.
std::vector<long> count_normal(const GroebnerBasis& basis, const OmegaSignature& sig,
                               const std::vector<int>& weights, int trunc) {
  std::set<Monomial, StructuralLess> lts;
  for (const Polynomial& g : basis.elements)
    lts.insert(leading_term(g, basis.ordering).first);
  std::map<long, std::vector<Monomial>> normal;
  std::vector<long> counts(static_cast<size_t>(trunc) + 1, 0);
  for (long k = 1; k <= trunc; ++k) {
    std::vector<Monomial> out;
    for (size_t j = 0; j < weights.size(); ++j)
      if (weights[j] == k) out.push_back(Monomial::leaf(static_cast<int>(j) + 1));
    for (const auto& [n, p] : sig.arities_up_to(static_cast<int>(k))) {
      for (int i = 1; i <= p; ++i) {
        // splits of k into n parts over the normal tables
        std::vector<Monomial> children;
        std::function<void(long, int)> rec = [&](long rem, int parts) {
          if (parts == 1) {
            auto it = normal.find(rem);
            if (it == normal.end()) return;
            for (const Monomial& m : it->second) {
              children.push_back(m);
              out.push_back(Monomial::app(n, i, children));
              children.pop_back();
            }
            return;
          }
          for (const auto& [sz, cands] : normal) {
            if (sz > rem - (parts - 1)) continue;
            for (const Monomial& m : cands) {
              children.push_back(m);
              rec(rem - sz, parts - 1);
              children.pop_back();
            }
          }
        };
        rec(k, n);
      }
    }
    std::vector<Monomial> kept;
    for (const Monomial& m : out)
      if (!lts.count(m)) kept.push_back(m);
    counts[static_cast<size_t>(k)] = static_cast<long>(kept.size());
    normal[k] = std::move(kept);
  }
  return counts;
}

}  // namespace

Series quotient_hilbert(const GroebnerBasis& basis, const OmegaSignature& sig,
                        const std::vector<int>& weights, int trunc) {
  if (!basis.reduced) throw std::domain_error("basis must be reduced");
  Series g_b(trunc);
  for (const Polynomial& g : basis.elements) {
    long d = g.weighted_homogeneous_degree(weights);
    if (d < 0) throw std::domain_error("inhomogeneous basis element");
    if (d <= trunc) g_b.set(static_cast<int>(d), g_b[static_cast<int>(d)] + 1);
  }
  Series g_x(trunc);
  for (int w : weights) {
    if (w < 1) throw std::domain_error("weights must be >= 1");
    if (w <= trunc) g_x.set(w, g_x[w] + 1);
  }
  Series by_formula = solve_substituted(sig, g_x - g_b);
  std::vector<long> counts = count_normal(basis, sig, weights, trunc);
  Series by_count(trunc);
  for (int k = 1; k <= trunc; ++k) by_count.set(k, Rat(counts[static_cast<size_t>(k)]));
  if (!(by_formula == by_count))
    throw std::runtime_error("quotient Hilbert series mismatch between normal-word count and formula");
  return by_count;
}

Series gb_generating_function(const Series& h_quotient, const OmegaSignature& sig,
                              const Series& g_generators) {
  if (h_quotient[0] != 0 || g_generators[0] != 0)
    throw std::domain_error("series must vanish at 0");
  return apply_signature(sig, h_quotient) - h_quotient + g_generators;
}

Polynomial parse_polynomial(const std::string& text) {
  std::string trimmed;
  {
    size_t a = text.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) throw std::invalid_argument("empty polynomial");
    size_t b = text.find_last_not_of(" \t\r\n");
    trimmed = text.substr(a, b - a + 1);
  }
  if (trimmed == "0") return Polynomial{};
  Polynomial out;
  size_t start = 0;
  while (start <= trimmed.size()) {
    size_t plus = trimmed.find('+', start);
    std::string piece = trimmed.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    size_t star = piece.find('*');
    if (star == std::string::npos)
      throw std::invalid_argument("expected <rational>*<term>: " + piece);
    std::string rat = piece.substr(0, star);
    size_t a = rat.find_first_not_of(" \t");
    size_t b = rat.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("missing coefficient");
    Rat c = parse_rational(rat.substr(a, b - a + 1));
    Monomial m = parse_term(piece.substr(star + 1));
    out.add_term(m, c);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

std::string print_polynomial(const Polynomial& f, const OrderingSpec& ord) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rat>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
    return compare(x.first, y.first, ord) > 0;
  });
  std::string s;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) s += " + ";
    s += rat_to_string(terms[i].second) + "*" + print_term(terms[i].first);
  }
  return s;
}

std::vector<Polynomial> read_polynomials(std::istream& in) {
  std::vector<Polynomial> out;
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    out.push_back(parse_polynomial(line));
  }
  return out;
}

std::vector<Polynomial> read_polynomial_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return read_polynomials(in);
}

Polynomial eval_expression(const MagmaExpression& e, const std::vector<Polynomial>& gens) {
  struct Walk {
    const std::vector<Polynomial>& gens;
    Polynomial operator()(const Monomial& skel) const {
      if (skel.is_leaf()) {
        int idx = skel.var();
        if (idx > static_cast<int>(gens.size())) throw std::domain_error("generator index out of range");
        return gens[static_cast<size_t>(idx) - 1];
      }
      std::vector<Polynomial> args;
      args.reserve(static_cast<size_t>(skel.arity()));
      for (int i = 0; i < skel.arity(); ++i) args.push_back((*this)(skel.child(i)));
      return apply_op(skel.arity(), skel.op_index(), args);
    }
  };
  return Walk{gens}(e.skeleton);
}

}  // namespace omalg
