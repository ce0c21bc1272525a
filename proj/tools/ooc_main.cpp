// ooc: design, verify and inspect one-dimensional unipolar orthogonal code sets.
//
// Exit codes: 0 success, 1 invalid arguments, 2 infeasible (empty family),
// 3 verification failure, 4 I/O error. Set OOC_VERBOSE=1 to print design
// diagnostics on stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ooc/code_model.hpp"
#include "ooc/correlation.hpp"
#include "ooc/designer.hpp"
#include "ooc/document.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kInvalidArguments = 1,
  kInfeasible = 2,
  kVerificationFailed = 3,
  kIoError = 4,
};

bool verbose() {
  const char* v = std::getenv("OOC_VERBOSE");
  return v && *v && std::string(v) != "0";
}

struct DesignArgs {
  std::vector<int> n;
  std::vector<int> w;
  int lambda_a = 1;
  int lambda_c = 1;
  std::size_t max_sets = 0;
  std::string out;
  std::string format = "json";
};

int run_design(const DesignArgs& args) {
  if (args.n.empty() || args.w.empty()) {
    std::cerr << "error: --n and --w are required\n";
    return kInvalidArguments;
  }
  const std::size_t classes = std::max(args.n.size(), args.w.size());
  if ((args.n.size() != 1 && args.n.size() != classes) ||
      (args.w.size() != 1 && args.w.size() != classes)) {
    std::cerr << "error: --n and --w lists must have equal length (or one of them a single value)\n";
    return kInvalidArguments;
  }

  ooc::DesignConfig config;
  for (std::size_t i = 0; i < classes; ++i) {
    ooc::CodeParams p{args.n[args.n.size() == 1 ? 0 : i], args.w[args.w.size() == 1 ? 0 : i],
                      args.lambda_a, args.lambda_c};
    try {
      p.validate();
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: invalid code parameters: " << e.what() << '\n';
      return kInvalidArguments;
    }
    if (p.w < 3) {
      std::cerr << "error: invalid code parameters: design needs w >= 3, got " << ooc::to_string(p) << '\n';
      return kInvalidArguments;
    }
    config.parameter_list.push_back(p);
  }
  if (args.max_sets > 0) config.max_sets = args.max_sets;

  ooc::Family family;
  if (config.parameter_list.size() == 1) {
    auto report = ooc::design_fixed_report(config.parameter_list.front(), config.max_sets);
    if (verbose()) {
      for (const auto& d : report.diagnostics) std::cerr << "diagnostic: " << d << '\n';
    }
    family = std::move(report.family);
  } else {
    family = ooc::design_multi(config);
  }
  if (family.sets.empty()) {
    std::cerr << "infeasible: no code set found for the given parameters\n";
    return kInfeasible;
  }

  const auto doc = ooc::make_document(family, config);
  const std::string text = args.format == "csv" ? ooc::to_csv(doc) : ooc::to_json(doc);
  if (args.out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream file(args.out, std::ios::binary);
  if (!(file << text)) {
    std::cerr << "error: cannot write " << args.out << '\n';
    return kIoError;
  }
  return kOk;
}

int run_verify(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot read " << path << '\n';
    return kIoError;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();

  ooc::CodeSetDocument doc;
  try {
    doc = ooc::from_json(buffer.str());
  } catch (const ooc::DocumentError& e) {
    std::cout << "FAIL document-schema " << path << ": " << e.what() << '\n';
    return kVerificationFailed;
  }
  const auto report = ooc::verify_document(doc);
  std::cout << report.render();
  const auto failures = report.failures();
  std::cout << (failures.empty() ? "PASS" : "FAIL") << " overall: " << report.checks.size()
            << " check(s), " << failures.size() << " failure(s)";
  if (report.has_method_disagreement()) std::cout << ", including correlation method disagreement";
  std::cout << '\n';
  return failures.empty() ? kOk : kVerificationFailed;
}

int run_bound(int n, int w, int lambda) {
  try {
    std::cout << ooc::johnson_bound(n, w, lambda) << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidArguments;
  }
  return kOk;
}

struct ConvertArgs {
  std::string binary;
  std::vector<int> wpr;
  std::vector<int> dopr;
  int n = 0;
  std::string to = "standard";
};

int run_convert(const ConvertArgs& args) {
  const int given = !args.binary.empty() + !args.wpr.empty() + !args.dopr.empty();
  if (given != 1) {
    std::cerr << "error: give exactly one of --binary, --wpr, --dopr\n";
    return kInvalidArguments;
  }
  try {
    std::optional<ooc::Dopr> dopr;
    if (!args.binary.empty()) {
      const auto code = ooc::BinaryCode::parse(args.binary);
      if (args.n != 0 && args.n != code.length()) {
        throw std::invalid_argument("binary code has length " + std::to_string(code.length()) +
                                    ", --n is " + std::to_string(args.n));
      }
      dopr = ooc::dopr_from_wpr(ooc::wpr_from_binary(code));
    } else {
      if (args.n <= 0) throw std::invalid_argument("--n is required with --wpr and --dopr");
      dopr = args.wpr.empty() ? ooc::Dopr(args.dopr, args.n)
                              : ooc::dopr_from_wpr(ooc::Wpr(args.wpr, args.n));
    }
    const auto standard = ooc::standardize(*dopr);
    if (args.to == "dopr") {
      std::cout << ooc::join(dopr->dops()) << '\n';
    } else if (args.to == "wpr") {
      std::cout << ooc::join(ooc::wpr_from_dopr(*dopr).positions()) << '\n';
    } else if (args.to == "binary") {
      std::cout << ooc::binary_from_wpr(ooc::wpr_from_dopr(*dopr)).str() << '\n';
    } else {
      std::cout << ooc::join(standard.dops()) << '\n';
    }
    std::cout << "standard: " << ooc::join(standard.dops()) << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidArguments;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Design and verify families of one-dimensional unipolar orthogonal codes"};
  app.require_subcommand(1);

  DesignArgs design;
  auto* design_cmd = app.add_subcommand("design", "Design a minimum-correlated family of maximal code sets");
  design_cmd->add_option("--n", design.n, "Code length(s), comma separated for several classes")
      ->delimiter(',')
      ->required();
  design_cmd->add_option("--w", design.w, "Code weight(s), comma separated for several classes")
      ->delimiter(',')
      ->required();
  design_cmd->add_option("--lambda-a", design.lambda_a, "Auto-correlation constraint")->capture_default_str();
  design_cmd->add_option("--lambda-c", design.lambda_c, "Cross-correlation constraint")->capture_default_str();
  design_cmd->add_option("--max-sets", design.max_sets, "Cap on cliques carried between stages (0 = none)");
  design_cmd->add_option("--out", design.out, "Output path (default: stdout)");
  design_cmd->add_option("--format", design.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Re-check every invariant of a code set document");
  verify_cmd->add_option("path", verify_path, "Document (JSON)")->required();

  int bound_n = 0;
  int bound_w = 0;
  int bound_lambda = 1;
  auto* bound_cmd = app.add_subcommand("bound", "Print the Johnson bound on set size");
  bound_cmd->add_option("--n", bound_n, "Code length")->required();
  bound_cmd->add_option("--w", bound_w, "Code weight")->required();
  bound_cmd->add_option("--lambda", bound_lambda, "Correlation constraint")->capture_default_str();

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between binary, WPR and DoPR forms");
  convert_cmd->add_option("--binary", convert.binary, "Binary code, e.g. 0101001000100");
  convert_cmd->add_option("--wpr", convert.wpr, "Weighted positions")->delimiter(',');
  convert_cmd->add_option("--dopr", convert.dopr, "Differences of positions")->delimiter(',');
  convert_cmd->add_option("--n", convert.n, "Code length");
  convert_cmd->add_option("--to", convert.to, "Target representation")
      ->check(CLI::IsMember({"binary", "wpr", "dopr", "standard"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidArguments;
  }

  if (*design_cmd) return run_design(design);
  if (*verify_cmd) return run_verify(verify_path);
  if (*bound_cmd) return run_bound(bound_n, bound_w, bound_lambda);
  return run_convert(convert);
}
