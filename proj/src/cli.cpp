#include "omalg/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "omalg/invariants.hpp"
#include "omalg/polyring.hpp"
#include "omalg/series.hpp"
#include "omalg/subalgebra.hpp"

namespace omalg::cli {

namespace {

void emit_series(const Series& s, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << series_to_json(s) << "\n";
  } else {
    out << series_to_csv(s);
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list");
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<Partition> parse_partition_list(const std::string& text) {
  std::vector<Partition> out;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("expected <l1>:<l2> in weight list: " + item);
    out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
  }
  if (out.empty()) throw std::invalid_argument("empty weight list");
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty coefficient list");
  return out;
}

OrderingSpec ordering_from_name(const std::string& name) {
  OrderingSpec ord;
  if (name == "lex") {
    ord.child_rule = ChildRule::Lex;
  } else if (name == "rlex") {
    ord.child_rule = ChildRule::RLex;
  } else {
    throw std::invalid_argument("unknown ordering: " + name);
  }
  return ord;
}

// Smallest signature containing every operation used by the polynomials.
OmegaSignature infer_signature(const std::vector<Polynomial>& polys) {
  std::map<int, int> arities;
  struct Walk {
    std::map<int, int>& arities;
    void operator()(const Monomial& m) const {
      if (m.is_leaf()) return;
      int& p = arities[m.arity()];
      p = std::max(p, m.op_index());
      for (int i = 0; i < m.arity(); ++i) (*this)(m.child(i));
    }
  };
  for (const Polynomial& f : polys)
    for (const auto& [m, c] : f.terms()) Walk{arities}(m);
  if (arities.empty()) throw std::domain_error("cannot infer a signature; pass --sig");
  return OmegaSignature::custom(std::move(arities));
}

int max_variable(const std::vector<Polynomial>& polys) {
  int d = 1;
  struct Walk {
    int& d;
    void operator()(const Monomial& m) const {
      if (m.is_leaf()) {
        d = std::max(d, m.var());
        return;
      }
      for (int i = 0; i < m.arity(); ++i) (*this)(m.child(i));
    }
  };
  for (const Polynomial& f : polys)
    for (const auto& [m, c] : f.terms()) Walk{d}(m);
  return d;
}

void emit_polynomials(const std::vector<Polynomial>& polys, const OrderingSpec& ord,
                      const std::string& format, std::ostream& out) {
  if (format == "json") {
    std::string s = "[";
    for (size_t i = 0; i < polys.size(); ++i) {
      if (i) s += ",";
      s += "\"" + print_polynomial(polys[i], ord) + "\"";
    }
    out << s << "]\n";
  } else {
    for (const Polynomial& f : polys) out << print_polynomial(f, ord) << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact kernel for free multioperator algebras"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "csv";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));

  std::string sig_text, ord_name = "lex", in_path, poly_path, hilbert_path, action_path;
  std::string cells_text, weights_text, coeff_text, method_name = "root";
  int trunc = 0;
  long k_arg = 0;
  bool free_gens = false;

  auto* series = app.add_subcommand("series", "Hilbert series of free algebras");
  series->require_subcommand(1);
  auto* series_free = series->add_subcommand("free", "series of the free one-generator algebra");
  series_free->add_option("--sig", sig_text)->required();
  series_free->add_option("--trunc", trunc)->required()->check(CLI::PositiveNumber);
  series_free->callback([&] { emit_series(solve_free_series(parse_signature(sig_text), trunc), format, out); });

  auto* series_exp = series->add_subcommand("exponent", "numeric growth-rate estimate");
  series_exp->add_option("--sig", sig_text)->required();
  series_exp->add_option("--trunc", trunc)->required()->check(CLI::PositiveNumber);
  series_exp->add_option("--method", method_name)->check(CLI::IsMember({"root", "ratio"}));
  series_exp->callback([&] {
    auto est = estimate_exponent(solve_free_series(parse_signature(sig_text), trunc),
                                 method_name == "ratio" ? ExponentMethod::Ratio : ExponentMethod::Root);
    std::ostringstream os;
    os << std::fixed << std::setprecision(6);
    if (format == "json") {
      os << "{\"estimate\":" << est.estimate << ",\"spread\":" << est.spread << "}\n";
    } else {
      os << "estimate,spread\n" << est.estimate << "," << est.spread << "\n";
    }
    out << os.str();
  });

  auto* series_lag = series->add_subcommand("lagrange", "invert t = z f(z)");
  series_lag->add_option("--f", coeff_text, "comma-separated coefficients of f from degree 0")->required();
  series_lag->add_option("--trunc", trunc)->required()->check(CLI::PositiveNumber);
  series_lag->callback([&] {
    std::vector<Rat> cs = parse_rat_list(coeff_text);
    Series f(trunc);
    for (size_t i = 0; i < cs.size() && static_cast<int>(i) <= trunc; ++i)
      f.set(static_cast<int>(i), cs[i]);
    emit_series(lagrange_invert(f), format, out);
  });

  auto* gb = app.add_subcommand("gb", "Groebner bases of operator ideals");
  gb->require_subcommand(1);
  auto* gb_compute = gb->add_subcommand("compute", "reduced basis by interreduction");
  gb_compute->add_option("--ord", ord_name)->required()->check(CLI::IsMember({"lex", "rlex"}));
  gb_compute->add_option("--in", in_path)->required();
  gb_compute->callback([&] {
    OrderingSpec ord = ordering_from_name(ord_name);
    GroebnerBasis b = groebner(read_polynomial_file(in_path), ord);
    emit_polynomials(b.elements, ord, format, out);
  });

  auto* gb_hilbert = gb->add_subcommand("hilbert", "Hilbert series of the quotient");
  gb_hilbert->add_option("--in", in_path)->required();
  gb_hilbert->add_option("--trunc", trunc)->required()->check(CLI::PositiveNumber);
  gb_hilbert->add_option("--ord", ord_name)->check(CLI::IsMember({"lex", "rlex"}));
  gb_hilbert->add_option("--sig", sig_text, "signature; inferred from the input when omitted");
  gb_hilbert->callback([&] {
    OrderingSpec ord = ordering_from_name(ord_name);
    std::vector<Polynomial> polys = read_polynomial_file(in_path);
    OmegaSignature sig = sig_text.empty() ? infer_signature(polys) : parse_signature(sig_text);
    GroebnerBasis b = groebner(polys, ord);
    std::vector<int> weights(static_cast<size_t>(max_variable(polys)), 1);
    emit_series(quotient_hilbert(b, sig, weights, trunc), format, out);
  });

  auto* gb_member = gb->add_subcommand("member", "ideal membership via normal form");
  gb_member->add_option("--in", in_path)->required();
  gb_member->add_option("--poly", poly_path)->required();
  gb_member->add_option("--ord", ord_name)->check(CLI::IsMember({"lex", "rlex"}));
  gb_member->callback([&] {
    OrderingSpec ord = ordering_from_name(ord_name);
    GroebnerBasis b = groebner(read_polynomial_file(in_path), ord);
    std::vector<Polynomial> polys = read_polynomial_file(poly_path);
    bool all = true;
    for (const Polynomial& f : polys) all = all && ideal_membership(f, b);
    if (format == "json") {
      out << (all ? "{\"member\":true}" : "{\"member\":false}") << "\n";
    } else {
      out << "member\n" << (all ? "true" : "false") << "\n";
    }
  });

  auto* sub = app.add_subcommand("sub", "subalgebras of free algebras");
  sub->require_subcommand(1);
  auto* sub_nielsen = sub->add_subcommand("nielsen", "free generating set by elementary transformations");
  sub_nielsen->add_option("--in", in_path)->required();
  sub_nielsen->add_option("--ord", ord_name)->check(CLI::IsMember({"lex", "rlex"}));
  sub_nielsen->callback([&] {
    OrderingSpec ord = ordering_from_name(ord_name);
    emit_polynomials(nielsen_reduce(read_polynomial_file(in_path), ord), ord, format, out);
  });

  auto* sub_gens = sub->add_subcommand("gens-series", "free-generator series from a Hilbert series");
  sub_gens->add_option("--hilbert", hilbert_path)->required();
  sub_gens->add_option("--sig", sig_text)->required();
  sub_gens->callback([&] {
    Series h = series_from_text(read_file(hilbert_path));
    emit_series(free_gen_series(h, parse_signature(sig_text)), format, out);
  });

  auto* inv = app.add_subcommand("inv", "invariant-theory series");
  inv->require_subcommand(1);
  auto* inv_group = inv->add_subcommand("group", "finite-group invariant Hilbert series");
  inv_group->add_option("--action", action_path)->required();
  inv_group->add_option("--sig", sig_text)->required();
  inv_group->add_option("--trunc", trunc)->required()->check(CLI::PositiveNumber);
  inv_group->callback([&] {
    GroupAction a = read_group_action_file(action_path);
    emit_series(invariant_hilbert_finite_group(a, parse_signature(sig_text), trunc), format, out);
  });

  auto* inv_weitz = inv->add_subcommand("weitz", "constants of a nilpotent derivation");
  inv_weitz->add_option("--sig", sig_text)->required();
  inv_weitz->add_option("--cells", cells_text, "Jordan cell sizes, e.g. 2,2")->required();
  inv_weitz->add_option("--trunc", trunc)->required()->check(CLI::PositiveNumber);
  inv_weitz->add_flag("--free-gens", free_gens, "emit the free-generator series instead");
  inv_weitz->callback([&] {
    OmegaSignature sig = parse_signature(sig_text);
    Series h = weitzenboeck_constants_series(sig, parse_int_list(cells_text), trunc);
    emit_series(free_gens ? free_gen_series(h, sig) : h, format, out);
  });

  auto* inv_sl2 = inv->add_subcommand("sl2", "SL2-invariants series");
  inv_sl2->add_option("--sig", sig_text)->required();
  inv_sl2->add_option("--weights", weights_text, "highest weights, e.g. 1:0,2:1")->required();
  inv_sl2->add_option("--trunc", trunc)->required()->check(CLI::PositiveNumber);
  inv_sl2->callback([&] {
    emit_series(sl2_invariants_series(parse_signature(sig_text), parse_partition_list(weights_text), trunc),
                format, out);
  });

  auto* inv_odd = inv->add_subcommand("odd-ratio", "odd-branch tree fraction at degree 2k");
  inv_odd->add_option("--k", k_arg)->required()->check(CLI::PositiveNumber);
  inv_odd->callback([&] {
    Rat r = odd_branch_ratio(k_arg);
    if (format == "json") {
      out << "{\"k\":" << k_arg << ",\"value\":\"" << rat_to_string(r) << "\"}\n";
    } else {
      out << "k,numerator,denominator\n"
          << k_arg << "," << r.get_num().get_str() << "," << r.get_den().get_str() << "\n";
    }
  });

  std::vector<const char*> argv;
  argv.push_back("omalg");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace omalg::cli
