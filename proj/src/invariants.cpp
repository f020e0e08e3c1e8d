#include "omalg/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "omalg/magma.hpp"

namespace omalg {

int LinearDerivation::dim() const {
  int d = 0;
  for (int s : cell_sizes) {
    if (s < 1) throw std::invalid_argument("cell sizes must be >= 1");
    d += s;
  }
  return d;
}

std::vector<Mat> group_closure(const GroupAction& action, int bound) {
  int d = action.dim;
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  for (const Mat& g : action.generators) {
    if (static_cast<int>(g.size()) != d) throw std::invalid_argument("generator dimension mismatch");
    for (const Vec& row : g)
      if (static_cast<int>(row.size()) != d) throw std::invalid_argument("generator dimension mismatch");
    if (rank(g) != d) throw std::domain_error("generator matrix not invertible");
  }
  std::set<Mat> seen;
  std::vector<Mat> order;
  std::vector<Mat> frontier{identity(d)};
  seen.insert(frontier[0]);
  order.push_back(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const Mat& m : frontier) {
      for (const Mat& g : action.generators) {
        Mat p = mat_mul(g, m);
        if (seen.insert(p).second) {
          order.push_back(p);
          if (static_cast<int>(order.size()) > bound)
            throw std::domain_error("group closure exceeds bound");
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  return order;
}

namespace {

Rat trace(const Mat& m) {
  Rat t(0);
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

}  // namespace

Series invariant_hilbert_finite_group(const GroupAction& action,
                                      const OmegaSignature& sig, int trunc) {
  std::vector<Mat> elements = group_closure(action);
  Series free = solve_free_series(sig, trunc);
  Series out(trunc);
  Rat inv_order = Rat(1) / Rat(static_cast<long>(elements.size()));
  for (const Mat& g : elements) {
    Rat tr = trace(g);
    Rat pw(1);
    for (int k = 1; k <= trunc; ++k) {
      pw *= tr;
      out.set(k, out[k] + free[k] * pw * inv_order);
    }
  }
  return out;
}

Series assoc_invariant_series(const GroupAction& action, int trunc) {
  std::vector<Mat> elements = group_closure(action);
  Series out(trunc);
  Rat inv_order = Rat(1) / Rat(static_cast<long>(elements.size()));
  for (const Mat& g : elements) {
    Rat tr = trace(g);
    Rat pw(1);
    for (int k = 1; k <= trunc; ++k) {
      pw *= tr;
      out.set(k, out[k] + pw * inv_order);
    }
  }
  return out;
}

Series hadamard_invariants(const Series& assoc, const Series& free_one_var) {
  if (assoc.trunc() != free_one_var.trunc())
    throw std::domain_error("truncations must agree");
  Series out(assoc.trunc());
  for (int k = 0; k <= assoc.trunc(); ++k) out.set(k, assoc[k] * free_one_var[k]);
  return out;
}

namespace {

// image[v] = w means delta(x_v) = x_w; 0 means delta(x_v) = 0.
std::vector<int> derivation_images(const LinearDerivation& delta) {
  std::vector<int> image(static_cast<size_t>(delta.dim()) + 1, 0);
  int start = 1;
  for (int s : delta.cell_sizes) {
    for (int v = start + 1; v < start + s; ++v) image[static_cast<size_t>(v)] = v - 1;
    start += s;
  }
  return image;
}

Polynomial derive_monomial(const Monomial& m, const std::vector<int>& image) {
  if (m.is_leaf()) {
    int w = image[static_cast<size_t>(m.var())];
    return w == 0 ? Polynomial{} : Polynomial::monomial(Monomial::leaf(w));
  }
  Polynomial out;
  for (int i = 0; i < m.arity(); ++i) {
    Polynomial sub = derive_monomial(m.child(i), image);
    for (const auto& [u, c] : sub.terms()) {
      std::vector<Monomial> children;
      children.reserve(static_cast<size_t>(m.arity()));
      for (int j = 0; j < m.arity(); ++j) children.push_back(j == i ? u : m.child(j));
      out.add_term(Monomial::app(m.arity(), m.op_index(), std::move(children)), c);
    }
  }
  return out;
}

}  // namespace

Polynomial apply_derivation(const LinearDerivation& delta, const Polynomial& f) {
  std::vector<int> image = derivation_images(delta);
  Polynomial out;
  for (const auto& [m, c] : f.terms()) out += derive_monomial(m, image) * c;
  return out;
}

std::vector<Polynomial> constants_basis(const LinearDerivation& delta,
                                        const OmegaSignature& sig, int degree) {
  int d = delta.dim();
  std::vector<Monomial> dom = enumerate_monomials(sig, d, degree);
  if (dom.empty()) return {};
  std::vector<int> image = derivation_images(delta);
  std::map<Monomial, size_t, StructuralLess> row_of;
  std::vector<std::map<size_t, Rat>> cols;  // sparse column per domain monomial
  for (const Monomial& m : dom) {
    Polynomial dm = derive_monomial(m, image);
    std::map<size_t, Rat> col;
    for (const auto& [u, c] : dm.terms()) {
      auto [it, inserted] = row_of.try_emplace(u, row_of.size());
      col[it->second] = c;
    }
    cols.push_back(std::move(col));
  }
  Mat mat(row_of.size(), Vec(dom.size(), Rat(0)));
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, c] : cols[j]) mat[r][j] = c;
  Mat kernel = mat.empty() ? identity(static_cast<int>(dom.size())) : null_space(mat);
  std::vector<Polynomial> basis;
  for (const Vec& v : kernel) {
    Polynomial p;
    for (size_t j = 0; j < dom.size(); ++j) p.add_term(dom[j], v[j]);
    basis.push_back(std::move(p));
  }
  return basis;
}

namespace {

// Image of a leaf word under g^{tensor q} as a sparse word->coefficient map.
void word_image_rec(const Mat& g, const std::vector<int>& word, size_t pos,
                    std::vector<int>& cur, const Rat& coeff,
                    std::map<std::vector<int>, Rat>& out) {
  if (pos == word.size()) {
    out[cur] += coeff;
    return;
  }
  size_t j = static_cast<size_t>(word[pos]) - 1;
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i][j] == 0) continue;
    cur.push_back(static_cast<int>(i) + 1);
    word_image_rec(g, word, pos + 1, cur, coeff * g[i][j], out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Polynomial> reynolds_basis(const GroupAction& action,
                                       const OmegaSignature& sig, int degree) {
  std::vector<Mat> elements = group_closure(action);
  Rat inv_order = Rat(1) / Rat(static_cast<long>(elements.size()));
  std::vector<Monomial> dom = enumerate_monomials(sig, action.dim, degree);
  std::map<Monomial, std::vector<std::vector<int>>, StructuralLess> by_shape;
  for (const Monomial& m : dom) {
    auto [shape, leaves] = shape_and_leaves(m);
    by_shape[shape].push_back(std::move(leaves));
  }
  std::vector<Polynomial> basis;
  for (const auto& [shape, words] : by_shape) {
    std::map<std::vector<int>, size_t> col_of;
    for (const auto& w : words) col_of.emplace(w, col_of.size());
    Mat rows;
    for (const auto& w : words) {
      std::map<std::vector<int>, Rat> avg;
      for (const Mat& g : elements) {
        std::vector<int> cur;
        word_image_rec(g, w, 0, cur, inv_order, avg);
      }
      Vec row(col_of.size(), Rat(0));
      for (const auto& [img, c] : avg) row[col_of.at(img)] = c;
      rows.push_back(std::move(row));
    }
    int r = rref(rows);
    for (int i = 0; i < r; ++i) {
      Polynomial p;
      for (const auto& [w, j] : col_of)
        if (rows[static_cast<size_t>(i)][j] != 0)
          p.add_term(assemble(shape, w), rows[static_cast<size_t>(i)][j]);
      basis.push_back(std::move(p));
    }
  }
  return basis;
}

namespace {

using BiPoly = std::map<std::pair<int, int>, Int>;  // (u1-exp, u2-exp) -> coeff

BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
      r[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  return r;
}

BiPoly schur(const Partition& lambda) {
  BiPoly s;
  for (int j = 0; j <= lambda.first - lambda.second; ++j)
    s[{lambda.first - j, lambda.second + j}] = 1;
  return s;
}

}  // namespace

SchurSeries gl2_character_series(const OmegaSignature& sig,
                                 const std::vector<Partition>& highest_weights,
                                 int trunc) {
  if (trunc < 1) throw std::invalid_argument("trunc must be >= 1");
  for (const Partition& p : highest_weights)
    if (p.second < 0 || p.second > p.first)
      throw std::domain_error("invalid partition: need lambda1 >= lambda2 >= 0");
  Series shapes = solve_free_series(sig, trunc);  // b_q = shape count with q leaves
  BiPoly chi;
  for (const Partition& p : highest_weights)
    for (const auto& [e, c] : schur(p)) chi[e] += c;
  SchurSeries out;
  out.trunc = trunc;
  out.slices.resize(static_cast<size_t>(trunc) + 1);
  BiPoly pw{{{0, 0}, 1}};
  for (int q = 1; q <= trunc; ++q) {
    pw = bipoly_mul(pw, chi);
    Int bq(shapes[q].get_num());
    if (shapes[q].get_den() != 1) throw std::runtime_error("shape count not integral");
    if (bq == 0) continue;
    auto coeff = [&](int a, int b) {
      if (b < 0 || b > a) return Int(0);
      auto it = pw.find({a, b});
      return it == pw.end() ? Int(0) : it->second;
    };
    for (const auto& [e, c] : pw) {
      auto [a, b] = e;
      if (b > a) continue;  // mirror of a partition entry
      Int m = coeff(a, b) - coeff(a + 1, b - 1);
      if (m == 0) continue;
      if (m < 0) throw std::runtime_error("negative multiplicity");
      Int total = m * bq;
      if (!total.fits_slong_p()) throw std::runtime_error("multiplicity overflow");
      out.slices[static_cast<size_t>(q)][{a, b}] = total.get_si();
    }
  }
  return out;
}

Series weitzenboeck_constants_series(const OmegaSignature& sig,
                                     const std::vector<int>& cell_sizes, int trunc) {
  std::vector<Partition> weights;
  for (int s : cell_sizes) {
    if (s < 1) throw std::invalid_argument("cell sizes must be >= 1");
    weights.emplace_back(s - 1, 0);
  }
  SchurSeries ss = gl2_character_series(sig, weights, trunc);
  Series out(trunc);
  for (int q = 1; q <= trunc; ++q) {
    long total = 0;
    for (const auto& [lambda, m] : ss.slices[static_cast<size_t>(q)]) total += m;
    out.set(q, Rat(total));
  }
  return out;
}

Series sl2_invariants_series(const OmegaSignature& sig,
                             const std::vector<Partition>& highest_weights,
                             int trunc) {
  SchurSeries ss = gl2_character_series(sig, highest_weights, trunc);
  Series out(trunc);
  for (int q = 1; q <= trunc; ++q) {
    long total = 0;
    for (const auto& [lambda, m] : ss.slices[static_cast<size_t>(q)])
      if (lambda.first == lambda.second) total += m;
    out.set(q, Rat(total));
  }
  return out;
}

double quadrature_crosscheck(QuadKind kind, const Partition& lambda) {
  if (lambda.second < 0 || lambda.second > lambda.first)
    throw std::domain_error("invalid partition");
  const int panels = 1 << 13;
  const double pi = std::acos(-1.0);
  double sum = 0;
  for (int i = 0; i < panels; ++i) {
    double u = (i + 0.5) / panels;
    // s_lambda(e^{2 pi i u}, e^{-2 pi i u}) = sum_j cos(2 pi (l1 - l2 - 2j) u)
    double s = 0;
    for (int j = 0; j <= lambda.first - lambda.second; ++j)
      s += std::cos(2 * pi * (lambda.first - lambda.second - 2 * j) * u);
    double w = kind == QuadKind::Cos2 ? std::cos(pi * u) * std::cos(pi * u)
                                      : std::sin(2 * pi * u) * std::sin(2 * pi * u);
    sum += 2 * w * s;
  }
  return sum / panels;
}

Polynomial apply_matrix_substitution(const Mat& m, const Polynomial& f) {
  struct Walk {
    const Mat& g;
    Polynomial operator()(const Monomial& t) const {
      if (t.is_leaf()) {
        size_t j = static_cast<size_t>(t.var()) - 1;
        if (j >= g.size()) throw std::domain_error("variable outside action dimension");
        Polynomial p;
        for (size_t i = 0; i < g.size(); ++i)
          if (g[i][j] != 0) p.add_term(Monomial::leaf(static_cast<int>(i) + 1), g[i][j]);
        return p;
      }
      std::vector<Polynomial> args;
      args.reserve(static_cast<size_t>(t.arity()));
      for (int i = 0; i < t.arity(); ++i) args.push_back((*this)(t.child(i)));
      return apply_op(t.arity(), t.op_index(), args);
    }
  };
  Polynomial out;
  Walk walk{m};
  for (const auto& [t, c] : f.terms()) out += walk(t) * c;
  return out;
}

Mat nonfg_witness_generator() {
  Mat g = identity(4);
  g[0][2] = Rat(1);  // x3 -> x1 + x3
  g[1][3] = Rat(1);  // x4 -> x2 + x4
  return g;
}

namespace {

// Checks D(f) = 0 for the derivation extending the linear map D, working
// shape by shape on leaf words to keep memory linear in the term count.
bool derivation_kills(const Mat& dmat, const Polynomial& f) {
  std::map<Monomial, std::map<std::vector<int>, Rat>, StructuralLess> by_shape;
  for (const auto& [m, c] : f.terms()) {
    auto [shape, word] = shape_and_leaves(m);
    by_shape[shape][word] += c;
  }
  for (const auto& [shape, words] : by_shape) {
    std::map<std::vector<int>, Rat> img;
    for (const auto& [word, c] : words) {
      for (size_t pos = 0; pos < word.size(); ++pos) {
        size_t j = static_cast<size_t>(word[pos]) - 1;
        for (size_t i = 0; i < dmat.size(); ++i) {
          if (dmat[i][j] == 0) continue;
          std::vector<int> w = word;
          w[pos] = static_cast<int>(i) + 1;
          auto it = img.emplace(std::move(w), Rat(0)).first;
          it->second += c * dmat[i][j];
          if (it->second == 0) img.erase(it);
        }
      }
    }
    if (!img.empty()) return false;
  }
  return true;
}

bool fixed_by(const Mat& g, const Polynomial& f) {
  // Direct substitution on small inputs; on large ones use the kernel of the
  // logarithm, exact here because (g - id)^2 = 0.
  if (f.homogeneous_degree() >= 0 && f.homogeneous_degree() <= 9)
    return apply_matrix_substitution(g, f) == f;
  size_t d = g.size();
  Mat dmat(d, Vec(d, Rat(0)));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) dmat[i][j] = g[i][j] - (i == j ? Rat(1) : Rat(0));
  Mat sq = mat_mul(dmat, dmat);
  for (const Vec& row : sq)
    for (const Rat& c : row)
      if (c != 0) throw std::domain_error("generator is not unipotent of class 2");
  return derivation_kills(dmat, f);
}

}  // namespace

std::vector<Polynomial> nonfg_witness(const OmegaSignature& sig,
                                      const Polynomial& f1, int k) {
  if (sig.op_count(3) < 1) throw std::domain_error("signature needs a ternary operation");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Mat g = nonfg_witness_generator();
  Polynomial x1 = Polynomial::monomial(Monomial::leaf(1));
  Polynomial x2 = Polynomial::monomial(Monomial::leaf(2));
  Polynomial x3 = Polynomial::monomial(Monomial::leaf(3));
  Polynomial x4 = Polynomial::monomial(Monomial::leaf(4));
  std::vector<Polynomial> out{f1};
  if (!fixed_by(g, f1)) throw std::domain_error("f1 is not fixed by the witness generator");
  for (int i = 1; i < k; ++i) {
    const Polynomial& f = out.back();
    Polynomial next = apply_op(3, 1, {x3, x1, apply_op(3, 1, {x2, f, f})}) -
                      apply_op(3, 1, {x1, x1, apply_op(3, 1, {x4, f, f})});
    if (!fixed_by(g, next)) throw std::domain_error("witness element is not fixed by the generator");
    out.push_back(std::move(next));
  }
  return out;
}

Rat odd_branch_ratio(long k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Int g2k = catalan(k);
  Int four(4);
  Int pw;
  mpz_pow_ui(pw.get_mpz_t(), four.get_mpz_t(), static_cast<unsigned long>(k - 1));
  g2k *= pw;
  Rat r(g2k, catalan(2 * k));
  r.canonicalize();
  return r;
}

GroupAction parse_group_action_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  GroupAction a;
  a.dim = j.at("d").get<int>();
  for (const auto& gen : j.at("generators")) {
    Mat m;
    for (const auto& row : gen) {
      Vec v;
      for (const auto& cell : row) v.push_back(parse_rational(cell.get<std::string>()));
      m.push_back(std::move(v));
    }
    a.generators.push_back(std::move(m));
  }
  return a;
}

GroupAction read_group_action_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_action_json(ss.str());
}

std::string schur_series_to_json(const SchurSeries& s) {
  nlohmann::json j = nlohmann::json::object();
  for (int q = 1; q <= s.trunc; ++q) {
    auto arr = nlohmann::json::array();
    for (const auto& [lambda, m] : s.slices[static_cast<size_t>(q)])
      arr.push_back({lambda.first, lambda.second, m});
    j[std::to_string(q)] = arr;
  }
  return j.dump();
}

}  // namespace omalg
