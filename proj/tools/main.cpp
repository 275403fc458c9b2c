#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qgrass/expr.hpp"
#include "qgrass/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact verification of quantum Grassmannian identities"};
  app.require_subcommand(1);

  qgr::SuiteConfig cfg;
  std::string format = "text";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--m", cfg.m, "row count")->capture_default_str();
  verify->add_option("--n", cfg.n, "column count")->capture_default_str();
  verify->add_option("--suite", cfg.suite, "one of the named suites, or all")
      ->capture_default_str();
  verify->add_option("--format", format, "text or json")->capture_default_str();
  verify->add_option("--degree-bound", cfg.degree_bound, "domain probe degree bound")
      ->capture_default_str();
  verify->add_option("--seed", cfg.seed, "seed for the sampled property checks")
      ->capture_default_str();
  verify->add_flag("--timings", cfg.timings,
                   "record wall times (breaks byte-determinism across machines)");

  std::string expr;
  int cm = 2, cn = 4;
  auto* compute = app.add_subcommand("compute", "evaluate a minor-product expression");
  compute->add_option("expr", expr, "expression over minors, q, p, t")->required();
  compute->add_option("--m", cm, "row count")->capture_default_str();
  compute->add_option("--n", cn, "column count")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool computing = compute->parsed();
  try {
    if (computing) {
      std::cout << qgr::to_string(qgr::eval_expression(expr, cm, cn)) << "\n";
      return 0;
    }
    if (format != "text" && format != "json")
      qgr::fail(qgr::Err::InvalidConfig, "format must be text or json");
    qgr::Report rep = qgr::run_suite(cfg);
    std::cout << (format == "json" ? qgr::render_json(rep, cfg) : qgr::render_text(rep, cfg));
    return rep.all_ok() ? 0 : 1;
  } catch (const qgr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (computing) return 2;  // any evaluation problem is an input problem
    bool config = e.kind() == qgr::Err::InvalidConfig || e.kind() == qgr::Err::ParseError;
    return config ? 2 : 1;
  }
}
