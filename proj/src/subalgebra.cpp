#include "omalg/subalgebra.hpp"

#include <map>
#include <stdexcept>

#include "omalg/linalg.hpp"

namespace omalg {

std::vector<Polynomial> nielsen_reduce(std::vector<Polynomial> gens, const OrderingSpec& ord) {
  std::vector<Polynomial> b;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (g.homogeneous_degree() < 0) throw std::domain_error("generators must be homogeneous");
    b.push_back(make_monic(g, ord));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j < b.size(); ++j) {
      std::vector<Monomial> other_lts;
      std::vector<Polynomial> others;
      for (size_t i = 0; i < b.size(); ++i) {
        if (i == j) continue;
        other_lts.push_back(leading_term(b[i], ord).first);
        others.push_back(b[i]);
      }
      Monomial lt = leading_term(b[j], ord).first;
      auto witness = submagma_membership(lt, other_lts);
      if (!witness) continue;
      Polynomial replaced = b[j] - eval_expression(*witness, others);
      changed = true;
      if (replaced.is_zero()) {
        b.erase(b.begin() + static_cast<long>(j));
      } else {
        // the step must strictly decrease the leading monomial
        if (compare(leading_term(replaced, ord).first, lt, ord) >= 0)
          throw std::runtime_error("elementary transformation failed to decrease leading term");
        b[j] = make_monic(replaced, ord);
      }
      break;
    }
  }
  return b;
}

Series free_gen_series(const Series& h_subalgebra, const OmegaSignature& sig) {
  if (h_subalgebra[0] != 0) throw std::domain_error("Hilbert series must vanish at 0");
  return h_subalgebra - apply_signature(sig, h_subalgebra);
}

Series brute_force_subalgebra_hilbert(const OmegaSignature& sig,
                                      const std::vector<Polynomial>& gens, int trunc) {
  std::map<int, std::vector<Polynomial>> span;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    int d = g.homogeneous_degree();
    if (d < 0) throw std::domain_error("generators must be homogeneous");
    if (d <= trunc) span[d].push_back(g);
  }
  for (int d = 2; d <= trunc; ++d) {
    std::vector<Polynomial> made;
    for (const auto& [n, p] : sig.arities_up_to(d)) {
      for (int i = 1; i <= p; ++i) {
        std::vector<Polynomial> args;
        auto rec = [&](auto&& self, int rem, int parts) -> void {
          if (parts == 1) {
            auto it = span.find(rem);
            if (it == span.end()) return;
            for (const Polynomial& q : it->second) {
              args.push_back(q);
              made.push_back(apply_op(n, i, args));
              args.pop_back();
            }
            return;
          }
          for (const auto& [sz, cands] : span) {
            if (sz > rem - (parts - 1)) break;
            for (const Polynomial& q : cands) {
              args.push_back(q);
              self(self, rem - sz, parts - 1);
              args.pop_back();
            }
          }
        };
        rec(rec, d, n);
      }
    }
    auto& slot = span[d];
    slot.insert(slot.end(), made.begin(), made.end());
    if (slot.empty()) span.erase(d);
  }
  Series h(trunc);
  for (const auto& [d, polys] : span) {
    std::map<Monomial, size_t, StructuralLess> col_of;
    for (const Polynomial& q : polys)
      for (const auto& [m, c] : q.terms()) col_of.try_emplace(m, col_of.size());
    Mat rows;
    for (const Polynomial& q : polys) {
      Vec row(col_of.size(), Rat(0));
      for (const auto& [m, c] : q.terms()) row[col_of.at(m)] = c;
      rows.push_back(std::move(row));
    }
    h.set(d, Rat(rank(std::move(rows))));
  }
  return h;
}

}  // namespace omalg
