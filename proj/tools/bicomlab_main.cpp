#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicomlab/consequences.hpp"
#include "bicomlab/identities.hpp"
#include "bicomlab/operators.hpp"
#include "bicomlab/parser.hpp"

namespace {

using namespace bicomlab;

int degree_bound() {
  if (const char* env = std::getenv("BICOMLAB_DEGREE_BOUND")) {
    try {
      int b = std::stoi(env);
      if (b < 2 || b > 7) throw std::invalid_argument("");
      return b;
    } catch (const std::exception&) {
      throw std::invalid_argument("BICOMLAB_DEGREE_BOUND must be an integer in [2,7]");
    }
  }
  return 6;
}

NodeOp product_from(const std::string& s) {
  if (s == "plain") return NodeOp::plain;
  if (s == "com") return NodeOp::com;
  if (s == "anti") return NodeOp::anti;
  throw std::invalid_argument("product must be plain, com or anti");
}

// The identity argument is either an expression (or "lhs = rhs"), or the
// name of a built-in identity.
MagmaPoly identity_from(const std::string& text) {
  if (auto known = identities::by_name(text)) return *known;
  return parse_identity(text);
}

struct Output {
  bool json = false;
  void emit(const nlohmann::json& j, const std::string& plain) const {
    if (json)
      std::cout << j.dump() << "\n";
    else
      std::cout << plain << "\n";
  }
};

int run_reports(const Output& out, const std::vector<Report>& reports) {
  bool all = true;
  if (out.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : reports) {
      j.push_back(r.to_json());
      all = all && r.pass;
    }
    std::cout << (reports.size() == 1 ? j[0].dump() : j.dump()) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << r.str() << "\n";
      all = all && r.pass;
    }
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computer algebra for free bicommutative algebras"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "emit JSON instead of plain text");

  std::string expr_arg, product_arg = "plain", algebra_arg = "martin-A", multidegree_arg,
              kind_arg, suite_arg;
  int degree_arg = 0;

  auto* cmd_normalize = app.add_subcommand("normalize", "canonical form of an expression");
  cmd_normalize->add_option("expr", expr_arg)->required();
  auto* cmd_involute = app.add_subcommand("involute", "apply the involution");
  cmd_involute->add_option("expr", expr_arg)->required();
  auto* cmd_is_jordan = app.add_subcommand("is-jordan", "Jordan membership (symmetry test)");
  cmd_is_jordan->add_option("expr", expr_arg)->required();
  auto* cmd_is_lie = app.add_subcommand("is-lie", "Lie membership (Dynkin/head test)");
  cmd_is_lie->add_option("expr", expr_arg)->required();
  auto* cmd_jexpr = app.add_subcommand("jordan-express", "rewrite in anticommutators");
  cmd_jexpr->add_option("expr", expr_arg)->required();
  auto* cmd_lexpr = app.add_subcommand("lie-express", "rewrite in commutators");
  cmd_lexpr->add_option("expr", expr_arg)->required();

  auto* cmd_check = app.add_subcommand("check-identity", "does an identity hold in the free algebra");
  cmd_check->add_option("identity", expr_arg, "\"lhs = rhs\" or a built-in name")->required();
  cmd_check->add_option("--product", product_arg, "plain|com|anti for plain nodes");

  auto* cmd_finite = app.add_subcommand("check-finite", "check an identity on a finite algebra");
  cmd_finite->add_option("identity", expr_arg, "\"lhs = rhs\" or a built-in name")->required();
  cmd_finite->add_option("--algebra", algebra_arg, "JSON file or martin-A");

  auto* cmd_basis = app.add_subcommand("basis", "canonical words of a multidegree");
  cmd_basis->add_option("--multidegree", multidegree_arg, "e.g. x:1,y:2")->required();

  auto* cmd_dim = app.add_subcommand("dim", "dimension of a multilinear slice");
  cmd_dim->add_option("--degree", degree_arg)->required();
  cmd_dim->add_option("--kind", kind_arg, "bicom|jordan|lie")->required();

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify
      ->add_option("--suite", suite_arg,
                   "theorem1|theorem2|degree4|section7|filtration|oracle|corollary")
      ->required();
  cmd_verify->add_option("--degree", degree_arg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_normalize) {
      BicomElement e = parse_element(expr_arg);
      out.emit(e.to_json(), e.str());
      return 0;
    }
    if (*cmd_involute) {
      BicomElement e = involute(parse_element(expr_arg));
      out.emit(e.to_json(), e.str());
      return 0;
    }
    if (*cmd_is_jordan) {
      bool yes = is_jordan(parse_element(expr_arg));
      out.emit({{"result", yes}}, yes ? "true" : "false");
      return yes ? 0 : 1;
    }
    if (*cmd_is_lie) {
      bool yes = is_lie(parse_element(expr_arg));
      out.emit({{"result", yes}}, yes ? "true" : "false");
      return yes ? 0 : 1;
    }
    if (*cmd_jexpr) {
      BracketExpr e = jordan_express(parse_element(expr_arg));
      out.emit({{"expression", e.str()}}, e.str());
      return 0;
    }
    if (*cmd_lexpr) {
      BracketExpr e = lie_express(parse_element(expr_arg));
      out.emit({{"expression", e.str()}}, e.str());
      return 0;
    }
    if (*cmd_check) {
      MagmaPoly identity = identity_from(expr_arg);
      NodeOp product = product_from(product_arg);
      BicomElement residual = eval_bicom_symbolic(identity, product);
      bool holds = residual.is_zero();
      out.emit({{"holds", holds}, {"residual", residual.str()}},
               holds ? "PASS: identity holds in the free bicommutative algebra"
                     : "FAIL: residual " + residual.str());
      return holds ? 0 : 1;
    }
    if (*cmd_finite) {
      MagmaPoly identity = identity_from(expr_arg);
      FiniteAlgebra algebra = FiniteAlgebra::load(algebra_arg);
      FiniteCheck check = holds_in_finite(identity, algebra);
      if (check.holds) {
        out.emit({{"holds", true}}, "PASS: identity holds on " + algebra_arg);
        return 0;
      }
      nlohmann::json jw = nlohmann::json::object();
      std::string tw;
      for (const auto& [g, i] : check.witness) {
        jw[g.name()] = algebra.basis()[i];
        if (!tw.empty()) tw += ", ";
        tw += g.name() + "=" + algebra.basis()[i];
      }
      std::string value = algebra.format(check.value);
      out.emit({{"holds", false}, {"witness", jw}, {"value", value}},
               "FAIL: witness " + tw + " gives " + value);
      return 1;
    }
    if (*cmd_basis) {
      auto words = enumerate_basis(parse_multidegree(multidegree_arg));
      if (out.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& w : words) j.push_back(w.str());
        std::cout << nlohmann::json{{"count", words.size()}, {"words", j}}.dump() << "\n";
      } else {
        for (const auto& w : words) std::cout << w.str() << "\n";
      }
      return 0;
    }
    if (*cmd_dim) {
      if (degree_arg < 1 || degree_arg > 7)
        throw std::invalid_argument("dim supports degrees 1..7");
      long long value = 0;
      if (kind_arg == "bicom") {
        Multidegree md;
        for (const auto& g : consequences::standard_vars(degree_arg)) md[g] = 1;
        value = degree_arg == 1 ? 1 : static_cast<long long>(enumerate_basis(md).size());
      } else if (kind_arg == "jordan") {
        value = consequences::image_rank(degree_arg, NodeOp::anti);
      } else if (kind_arg == "lie") {
        value = consequences::image_rank(degree_arg, NodeOp::com);
      } else {
        throw std::invalid_argument("kind must be bicom, jordan or lie");
      }
      out.emit({{"degree", degree_arg}, {"kind", kind_arg}, {"dim", value}},
               std::to_string(value));
      return 0;
    }
    if (*cmd_verify) {
      const int bound = degree_bound();
      if (degree_arg > bound)
        throw std::invalid_argument("degree exceeds BICOMLAB_DEGREE_BOUND (" +
                                    std::to_string(bound) + ")");
      std::vector<Report> reports;
      auto sweep = [&](int lo, int hi, auto&& f) {
        if (degree_arg > 0) {
          if (degree_arg < lo || degree_arg > hi)
            throw std::invalid_argument("degree out of range for this suite");
          reports.push_back(f(degree_arg));
        } else {
          for (int n = lo; n <= hi; ++n) reports.push_back(f(n));
        }
      };
      if (suite_arg == "theorem1")
        sweep(2, bound, consequences::verify_theorem1);
      else if (suite_arg == "theorem2")
        sweep(2, bound, consequences::verify_theorem2);
      else if (suite_arg == "degree4")
        reports.push_back(consequences::verify_degree4_independence());
      else if (suite_arg == "section7")
        reports.push_back(consequences::verify_section7());
      else if (suite_arg == "filtration")
        sweep(1, std::min(4, bound - 2), consequences::verify_filtration);
      else if (suite_arg == "corollary")
        sweep(2, std::min(6, bound), consequences::verify_corollary1);
      else if (suite_arg == "oracle")
        reports.push_back(consequences::verify_oracle(degree_arg > 0 ? degree_arg
                                                                     : std::min(6, bound)));
      else
        throw std::invalid_argument("unknown suite '" + suite_arg + "'");
      return run_reports(out, reports);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
