#include "omalg/signature.hpp"

#include <sstream>
#include <stdexcept>

#include "omalg/series.hpp"

namespace omalg {

OmegaSignature OmegaSignature::binary() {
  OmegaSignature s;
  s.arities_[2] = 1;
  return s;
}

OmegaSignature OmegaSignature::nary(int n) {
  if (n < 2) throw std::invalid_argument("arity must be >= 2");
  OmegaSignature s;
  s.arities_[n] = 1;
  return s;
}

OmegaSignature OmegaSignature::omega() {
  OmegaSignature s;
  s.omega_ = true;
  return s;
}

OmegaSignature OmegaSignature::custom(std::map<int, int> arities) {
  if (arities.empty()) throw std::invalid_argument("empty signature");
  for (const auto& [n, p] : arities) {
    if (n < 2) throw std::invalid_argument("arity must be >= 2");
    if (p < 1) throw std::invalid_argument("operation count must be >= 1");
  }
  OmegaSignature s;
  s.arities_ = std::move(arities);
  return s;
}

int OmegaSignature::op_count(int arity) const {
  if (omega_) return arity >= 2 ? 1 : 0;
  auto it = arities_.find(arity);
  return it == arities_.end() ? 0 : it->second;
}

int OmegaSignature::max_arity(int bound) const {
  if (omega_) return bound >= 2 ? bound : 1;
  int best = 1;
  for (const auto& [n, p] : arities_)
    if (n <= bound) best = n;
  return best;
}

std::vector<std::pair<int, int>> OmegaSignature::arities_up_to(int bound) const {
  std::vector<std::pair<int, int>> out;
  if (omega_) {
    for (int n = 2; n <= bound; ++n) out.emplace_back(n, 1);
    return out;
  }
  for (const auto& [n, p] : arities_)
    if (n <= bound) out.emplace_back(n, p);
  return out;
}

std::string OmegaSignature::text() const {
  if (omega_) return "omega";
  if (arities_.size() == 1 && arities_.begin()->second == 1) {
    int n = arities_.begin()->first;
    if (n == 2) return "binary";
    return "nary:" + std::to_string(n);
  }
  std::ostringstream os;
  os << "custom:";
  bool first = true;
  for (const auto& [n, p] : arities_) {
    if (!first) os << ",";
    first = false;
    os << n << "=" << p;
  }
  return os.str();
}

OmegaSignature parse_signature(const std::string& text) {
  if (text == "binary") return OmegaSignature::binary();
  if (text == "omega") return OmegaSignature::omega();
  auto parse_int = [](const std::string& tok) {
    if (tok.empty()) throw std::invalid_argument("empty integer in signature");
    for (char c : tok)
      if (c < '0' || c > '9') throw std::invalid_argument("bad integer in signature: " + tok);
    if (tok.size() > 6) throw std::invalid_argument("integer too large in signature: " + tok);
    return std::stoi(tok);
  };
  if (text.rfind("nary:", 0) == 0) {
    int n = parse_int(text.substr(5));
    if (n < 2) throw std::invalid_argument("arity must be >= 2");
    return OmegaSignature::nary(n);
  }
  if (text.rfind("custom:", 0) == 0) {
    std::map<int, int> arities;
    std::string body = text.substr(7);
    std::istringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("expected <arity>=<count> in signature: " + item);
      int n = parse_int(item.substr(0, eq));
      int p = parse_int(item.substr(eq + 1));
      if (n < 2) throw std::invalid_argument("arity must be >= 2");
      if (p < 1) throw std::invalid_argument("operation count must be >= 1");
      if (arities.count(n)) throw std::invalid_argument("duplicate arity in signature");
      arities[n] = p;
    }
    if (arities.empty()) throw std::invalid_argument("empty signature");
    return OmegaSignature::custom(std::move(arities));
  }
  throw std::invalid_argument("unknown signature: " + text);
}

Series gen_fn(const OmegaSignature& sig, int trunc) {
  Series g(trunc);
  for (const auto& [n, p] : sig.arities_up_to(trunc)) g.set(n, Rat(p));
  return g;
}

}  // namespace omalg
