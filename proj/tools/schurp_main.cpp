// schurp: exact dimensions of (skew) shifted Young diagrams, factorial Schur
// P-polynomial evaluations, projective character tables, and limit-character
// convergence experiments. Exit codes: 0 ok, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "schurp/acceptance.hpp"
#include "schurp/characters.hpp"
#include "schurp/dimensions.hpp"
#include "schurp/error.hpp"
#include "schurp/json_io.hpp"
#include "schurp/partition.hpp"
#include "schurp/polynomials.hpp"
#include "schurp/tableau.hpp"

namespace {

using namespace schurp;

Partition parse_partition_arg(const std::string& text, const std::string& what) {
  try {
    return Partition::parse(text);
  } catch (const Error&) {
    fail(ErrorCode::InvalidArgument, what + " is not a valid partition");
  }
}

StrictPartition parse_strict_arg(const std::string& text, const std::string& what) {
  Partition p = parse_partition_arg(text, what);
  if (!p.is_strict()) fail(ErrorCode::NotStrict, what + " not strict");
  return StrictPartition::from_partition(std::move(p));
}

EvaluationPoint parse_point_arg(const std::string& text, const std::string& what) {
  EvaluationPoint point;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    try {
      point.push_back(parse_rational(tok));
    } catch (const Error&) {
      fail(ErrorCode::InvalidArgument, what + " has an invalid rational '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return point;
}

std::string dump_json(const Json& j) { return j.dump(2); }

int run_dim(const std::string& outer, const std::string& inner, bool ordinary, bool oracle,
            const std::string& format) {
  Integer value;
  if (ordinary) {
    Partition eta = parse_partition_arg(outer, "outer partition");
    Partition nu = parse_partition_arg(inner, "inner partition");
    if (!contains(nu, eta))
      value = 0;
    else
      value = oracle ? count_ordinary_standard_tableaux(OrdinarySkewShape(eta, nu))
                     : f_skew(eta, nu).value;
  } else {
    StrictPartition lambda = parse_strict_arg(outer, "outer partition");
    StrictPartition mu = parse_strict_arg(inner, "inner partition");
    if (!contains(mu, lambda))
      value = 0;
    else
      value = oracle ? count_shifted_standard_tableaux(shifted_skew_shape(lambda, mu))
                     : g_skew(lambda, mu).value;
  }
  if (format == "json") {
    Json j;
    j["kind"] = ordinary ? "ordinary" : "shifted";
    j["outer"] = outer;
    j["inner"] = inner;
    j["method"] = oracle ? "oracle" : "closed";
    j["dimension"] = value.get_str();
    std::cout << dump_json(j) << '\n';
  } else if (format == "csv") {
    std::cout << "outer,inner,dimension\n"
              << '"' << outer << "\",\"" << inner << "\"," << value.get_str() << '\n';
  } else {
    std::cout << value.get_str() << '\n';
  }
  return 0;
}

int run_eval(const std::string& which, const std::string& index, const std::string& point_text) {
  if (which == "H") {
    std::cout << rational_str(capital_h(parse_strict_arg(index, "index partition"))) << '\n';
    return 0;
  }
  if (which == "pstar") {
    StrictPartition mu = parse_strict_arg(index, "index partition");
    StrictPartition lambda = parse_strict_arg(point_text, "point partition");
    std::cout << rational_str(eval_Pstar(mu, lambda)) << '\n';
    return 0;
  }
  EvaluationPoint point = parse_point_arg(point_text, "point");
  if (which == "p") {
    StrictPartition mu = parse_strict_arg(index, "index partition");
    std::cout << rational_str(eval_P(mu, point)) << '\n';
  } else {  // sstar
    Partition nu = parse_partition_arg(index, "index partition");
    std::cout << rational_str(eval_sstar(nu, point)) << '\n';
  }
  return 0;
}

int run_expand(const std::string& family, const std::string& index, int nvars) {
  PolynomialFamily f;
  if (family == "P")
    f = PolynomialFamily::P;
  else if (family == "Pstar")
    f = PolynomialFamily::Pstar;
  else
    f = PolynomialFamily::PowerSum;
  Partition idx = parse_partition_arg(index, "index partition");
  GradedPolynomial graded = expand_in_monomials(f, idx, nvars);
  Json j;
  j["family"] = family;
  j["index"] = idx.str();
  j["n_vars"] = nvars;
  Json components = Json::array();
  for (const auto& [degree, component] : graded) components.push_back(monomial_to_json(component));
  j["components"] = std::move(components);
  std::cout << dump_json(j) << '\n';
  return 0;
}

int run_char(int k, const std::string& mu_text, const std::string& rho_text, bool table,
             const std::string& format) {
  if (table) {
    if (k <= 0) fail(ErrorCode::InvalidArgument, "character table needs --k >= 1");
    std::cout << dump_json(character_table_to_json(CharacterTable::for_weight(k))) << '\n';
    return 0;
  }
  if (mu_text.empty() || rho_text.empty())
    fail(ErrorCode::InvalidArgument, "char needs either --table or both --mu and --rho");
  StrictPartition mu = parse_strict_arg(mu_text, "mu partition");
  Partition rho = parse_partition_arg(rho_text, "rho partition");
  if (k > 0 && mu.weight() != k)
    fail(ErrorCode::SizeMismatch, "mu does not have weight k");
  Root2Value value = char_value(mu, rho);
  if (format == "json") {
    Json j;
    j["mu"] = mu.str();
    j["rho"] = rho.str();
    j["a"] = json_rational(value.a);
    j["b"] = json_rational(value.b);
    std::cout << dump_json(j) << '\n';
  } else {
    std::cout << root2_str(value) << '\n';
  }
  return 0;
}

int run_psi(const std::string& gamma_text, const std::string& rho_text) {
  EvaluationPoint coords = parse_point_arg(gamma_text, "gamma");
  ThomaPoint gamma(std::vector<Rational>(coords.begin(), coords.end()));
  Partition rho = parse_partition_arg(rho_text, "rho partition");
  std::cout << root2_str(psi(gamma, rho)) << '\n';
  return 0;
}

int run_converge(const std::string& gamma_text, const std::string& rho_text,
                 const std::vector<int>& ns) {
  EvaluationPoint coords = parse_point_arg(gamma_text, "gamma");
  ThomaPoint gamma(std::vector<Rational>(coords.begin(), coords.end()));
  Partition rho = parse_partition_arg(rho_text, "rho partition");
  if (rho.weight() > 9)
    fail(ErrorCode::DegreeTooLarge, "converge supports |rho| <= 9");
  std::cout << convergence_csv(convergence_table(gamma, rho, ns));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact shifted Young diagram dimensions and projective characters"};
  app.require_subcommand(1);

  // dim
  auto* dim = app.add_subcommand("dim", "dimension of a (skew) shifted or ordinary diagram");
  std::string dim_outer, dim_inner, dim_format = "plain";
  bool dim_shifted = false, dim_ordinary = false, dim_oracle = false;
  dim->add_option("--outer", dim_outer, "outer partition, e.g. 3,1")->required();
  dim->add_option("--inner", dim_inner, "inner partition (default empty)");
  auto* shifted_flag = dim->add_flag("--shifted", dim_shifted, "shifted diagrams (default)");
  dim->add_flag("--ordinary", dim_ordinary, "ordinary diagrams")->excludes(shifted_flag);
  dim->add_flag("--oracle", dim_oracle, "count tableaux by backtracking instead of the formula");
  dim->add_option("--format", dim_format)->check(CLI::IsMember({"plain", "csv", "json"}));

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate P*, P, s* or H");
  std::string eval_index, eval_point;
  bool eval_pstar = false, eval_p = false, eval_sstar_flag = false, eval_h = false;
  auto* fp = eval->add_flag("--pstar", eval_pstar, "factorial Schur P at a strict partition");
  auto* gp = eval->add_flag("--p", eval_p, "Schur P at a rational point");
  auto* sp = eval->add_flag("--sstar", eval_sstar_flag, "shifted Schur polynomial");
  auto* hp = eval->add_flag("--H", eval_h, "normalization constant H");
  fp->excludes(gp)->excludes(sp)->excludes(hp);
  gp->excludes(sp)->excludes(hp);
  sp->excludes(hp);
  eval->add_option("--index", eval_index)->required();
  eval->add_option("--point", eval_point);

  // expand
  auto* expand = app.add_subcommand("expand", "monomial-basis expansion as JSON");
  std::string expand_family, expand_index, expand_format = "json";
  int expand_nvars = 0;
  expand->add_option("--family", expand_family)->required()->check(
      CLI::IsMember({"P", "Pstar", "p"}));
  expand->add_option("--index", expand_index)->required();
  expand->add_option("--nvars", expand_nvars)->required()->check(CLI::Range(1, 7));
  expand->add_option("--format", expand_format)->check(CLI::IsMember({"json"}));

  // char
  auto* chr = app.add_subcommand("char", "projective character values");
  int char_k = 0;
  std::string char_mu, char_rho, char_format = "plain";
  bool char_table = false;
  chr->add_option("--k", char_k, "weight of the table");
  chr->add_option("--mu", char_mu, "strict partition");
  chr->add_option("--rho", char_rho, "odd class partition");
  chr->add_flag("--table", char_table, "print the whole table as JSON");
  chr->add_option("--format", char_format)->check(CLI::IsMember({"plain", "json"}));

  // psi
  auto* psi_cmd = app.add_subcommand("psi", "limit character value");
  std::string psi_gamma, psi_rho;
  psi_cmd->add_option("--gamma", psi_gamma, "Thoma parameters, e.g. 1/2,1/3,1/6")->required();
  psi_cmd->add_option("--rho", psi_rho, "class partition")->required();

  // converge
  auto* converge = app.add_subcommand("converge", "normalized-character convergence table (CSV)");
  std::string conv_gamma, conv_rho;
  std::vector<int> conv_ns;
  int conv_max_n = 500;
  converge->add_option("--gamma", conv_gamma)->required();
  converge->add_option("--rho", conv_rho)->required();
  converge->add_option("--ns", conv_ns, "comma-separated n values")->required()->delimiter(',');
  converge->add_option("--max-n", conv_max_n, "cap on each n (default 500)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string verify_level = "quick";
  verify->add_option("--level", verify_level)->check(CLI::IsMember({"quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << '\n';
    return 2;
  }

  try {
    if (dim->parsed())
      return run_dim(dim_outer, dim_inner, dim_ordinary, dim_oracle, dim_format);
    if (eval->parsed()) {
      int picked = int(eval_pstar) + int(eval_p) + int(eval_sstar_flag) + int(eval_h);
      if (picked != 1) {
        std::cerr << "eval needs exactly one of --pstar --p --sstar --H\n";
        return 2;
      }
      if (!eval_h && eval_point.empty()) {
        std::cerr << "eval needs --point for this family\n";
        return 2;
      }
      std::string which = eval_pstar ? "pstar" : eval_p ? "p" : eval_sstar_flag ? "sstar" : "H";
      return run_eval(which, eval_index, eval_point);
    }
    if (expand->parsed()) return run_expand(expand_family, expand_index, expand_nvars);
    if (chr->parsed()) return run_char(char_k, char_mu, char_rho, char_table, char_format);
    if (psi_cmd->parsed()) return run_psi(psi_gamma, psi_rho);
    if (converge->parsed()) {
      for (int n : conv_ns)
        if (n > conv_max_n) {
          std::cerr << "requested n exceeds --max-n (" << conv_max_n << ")\n";
          return 2;
        }
      return run_converge(conv_gamma, conv_rho, conv_ns);
    }
    if (verify->parsed()) {
      VerifyLevel level = verify_level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
      return schurp::run_acceptance_ok(level, std::cout) ? 0 : 1;
    }
  } catch (const schurp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
