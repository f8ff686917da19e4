#include <fstream>
#include <iostream>

#ifdef SCTREE_CLI11_SINGLE_HEADER
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif

#include "commands.hpp"
#include "sctree/error.hpp"

using namespace sctree;
using namespace sctree::cli;

namespace {

int emit(const Report& report, const Options& options) {
  std::string text = report.to_json().dump(2) + "\n";
  if (options.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(options.output);
    if (!out) {
      std::cerr << "error: cannot write " << options.output << "\n";
      return kInputError;
    }
    out << text;
  }
  if (report.failed) return kVerificationFailed;
  if (report.size_limited) return kSizeLimit;
  return kOk;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::SizeLimitExceeded: return kSizeLimit;
    // Internal consistency checks that tripped while verifying.
    case ErrorCode::InconsistentState:
    case ErrorCode::NotAShelling:
    case ErrorCode::Overflow: return kVerificationFailed;
    default: return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial trees, cover ideals and their powers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SCTREE_VERSION);

  Options options;
  std::string field = "Q";
  std::string path;
  std::string suite;
  std::string method = "auto";
  unsigned k = 1;
  unsigned power_k = 1;
  std::vector<unsigned> kvec;
  std::string letters;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", options.limits.max_vertices, "vertex cap for searches")->capture_default_str();
    sub->add_option("--max-generators", options.limits.max_generators, "generator cap for exhaustive orders")
        ->capture_default_str();
    sub->add_option("--max-polarized", options.limits.max_polarized, "polarized variable cap for Hochster")
        ->capture_default_str();
    sub->add_option("--field", field, "Q, GF2, GF3 or GF5")->capture_default_str();
    sub->add_option("-o,--output", options.output, "write the report here instead of stdout");
  };

  auto* analyze = app.add_subcommand("analyze", "leaves, good leaves, tree verdicts and covers of a complex");
  analyze->add_option("path", path, "complex JSON")->required();
  common(analyze);

  auto* cover = app.add_subcommand("cover-power", "J(Δ)^k: generators, linear quotients, linearity, regularity");
  cover->add_option("path", path, "complex JSON")->required();
  cover->add_option("--k", k, "power")->capture_default_str();
  cover->add_flag("--symbolic", options.symbolic, "use the symbolic power");
  common(cover);

  auto* construct = app.add_subcommand("construct", "run the contraction/deletion construction on H(k)");
  construct->add_option("path", path, "complex JSON or run descriptor")->required();
  auto* kopt = construct->add_option("--k", kvec, "budget per facet, e.g. 1,2,2")->delimiter(',');
  auto* sopt = construct->add_option("--string", letters, "moves over {L,D}");
  construct->add_flag("--trace", options.trace, "include every state");
  common(construct);

  auto* betti = app.add_subcommand("betti", "graded Betti numbers of an ideal or of a cover ideal");
  betti->add_option("path", path, "ideal, complex or hypergraph JSON")->required();
  betti->add_option("--power", power_k, "take this power first")->capture_default_str();
  betti->add_option("--method", method, "auto, hochster or koszul")
      ->check(CLI::IsMember({"auto", "hochster", "koszul"}))
      ->capture_default_str();
  common(betti);

  auto* vd = app.add_subcommand("check-vd", "vertex decomposition with a verified certificate");
  vd->add_option("path", path, "complex or hypergraph JSON")->required();
  auto* vdk = vd->add_option("--k", kvec, "decompose H(k) instead")->delimiter(',');
  common(vd);

  auto* shell = app.add_subcommand("check-shellable", "shelling order; for hypergraphs, of Ind(H) with J(H) quotients");
  shell->add_option("path", path, "complex or hypergraph JSON")->required();
  auto* shk = shell->add_option("--k", kvec, "use H(k) instead")->delimiter(',');
  common(shell);

  auto* verify = app.add_subcommand("verify-paper", "run a verification suite");
  verify->add_option("--suite", suite,
                     "examples, theorem1, theorem2, regularity, construction-lemmas, counterexamples or all")
      ->required();
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    options.field = Field::parse(field);
    auto opt_k = [&](CLI::Option* o) { return o->count() ? std::optional(kvec) : std::nullopt; };
    Report report("");
    if (*analyze) {
      report = cmd_analyze(path, options);
    } else if (*cover) {
      report = cmd_cover_power(path, k, options);
    } else if (*construct) {
      report = cmd_construct(path, opt_k(kopt), sopt->count() ? std::optional(letters) : std::nullopt, options);
    } else if (*betti) {
      BettiMethod m = method == "hochster" ? BettiMethod::Hochster
                      : method == "koszul" ? BettiMethod::Koszul
                                           : BettiMethod::Auto;
      report = cmd_betti(path, power_k, m, options);
    } else if (*vd) {
      report = cmd_check_vd(path, opt_k(vdk), options);
    } else if (*shell) {
      report = cmd_check_shellable(path, opt_k(shk), options);
    } else {
      report = cmd_verify_paper(suite, options);
    }
    return emit(report, options);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
}
