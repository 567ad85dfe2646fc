#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "antileib/cli.hpp"

namespace {

antileib::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw antileib::value_error("cannot open workspace file '" + path + "'");
  return antileib::json::parse(in);
}

void write_json(const std::string& path, const antileib::json& doc) {
  std::ofstream out(path);
  if (!out)
    throw antileib::value_error("cannot open output file '" + path + "'");
  out << doc.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
  using antileib::CliRequest;
  CLI::App app{"exact checker and builder for structure-constant algebras"};
  app.require_subcommand(1);

  CliRequest req;
  std::string workspace_path;
  std::string out_path;
  std::uint64_t prime_arg = 0;

  auto* check = app.add_subcommand("check", "verify a law on an algebra");
  check->add_option("--workspace", workspace_path, "input workspace JSON")
      ->required();
  check->add_option("--algebra", req.algebra_id, "algebra id")->required();
  check->add_option("--law", req.law, "law id (kebab-case)")->required();
  check->add_flag("--strict-dialgebra", req.strict_dialgebra,
                  "also require the bar-unit compatibilities");

  auto* derive = app.add_subcommand("derive", "build a derived structure");
  derive->add_option("--workspace", workspace_path, "input workspace JSON")
      ->required();
  derive->add_option("--functor", req.functor,
                     "anticommutator | dicommutator | collapse | semidirect |"
                     " hemisemidirect | hemisemidirect-trialgebra | dual-rep |"
                     " coadjoint | kernel-quotient")
      ->required();
  derive->add_option("--in", req.inputs, "input ids")->required();
  derive->add_flag("--swap-dicommutator", req.swap_dicommutator,
                   "use the opposite dicommutator convention");
  derive->add_flag("--force", req.force,
                   "skip the precondition check on the input");
  derive->add_option("--out", out_path, "path for the derived workspace")
      ->required();

  auto* op = app.add_subcommand("operator", "test a linear map");
  op->add_option("--workspace", workspace_path, "input workspace JSON")
      ->required();
  op->add_option("--kind", req.kind,
                 "embedding | averaging | homomorphic | nijenhuis | graph |"
                 " crossed-module")
      ->required();
  op->add_option("--map", req.map_id, "map id")->required();
  op->add_option("--rep", req.rep_id, "representation or action id");
  op->add_option("--algebra", req.algebra_id, "algebra id");
  op->add_option("--induce", req.induce,
                 "bracket | rep | dialgebra | trialgebra |"
                 " antiassoc-trialgebra");
  op->add_flag("--force", req.force,
               "skip the precondition check on the input");
  op->add_option("--out", out_path, "path for the induced workspace");

  auto* classify = app.add_subcommand("classify", "enumerate small algebras");
  classify->add_option("--dim", req.dim, "dimension (1 or 2)")->required();
  auto* prime_opt =
      classify->add_option("--prime", prime_arg, "work over F_p");
  classify->add_flag("--allow-small-characteristic",
                     req.allow_small_characteristic,
                     "permit characteristic 2 or 3");
  classify->add_option("--out", out_path, "path for the report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  req.command = app.get_subcommands().front()->get_name();
  if (req.command == "classify" && prime_opt->count() > 0)
    req.prime = prime_arg;

  antileib::json doc;
  if (req.command != "classify") {
    try {
      doc = load_json(workspace_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  antileib::CliResult res = antileib::run_command(doc, req);
  try {
    if (req.command == "classify") {
      write_json(out_path, res.report);
    } else if (!out_path.empty()) {
      write_json(out_path, res.out_doc ? *res.out_doc : res.report);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << res.report.dump(2) << "\n";
  return res.exit_code;
}
