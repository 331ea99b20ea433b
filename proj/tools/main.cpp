#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "simpmon/commands.hpp"

int main(int argc, char** argv) {
  using namespace simpmon;
  CLI::App app{"Finite monoids, their nerves, group completions and simplicial monoids"};
  app.require_subcommand(1);
  bool serial = false;
  app.add_flag("--serial", serial, "Use the serial reference kernels");

  std::string file;
  auto* describe = app.add_subcommand("describe", "Validate a monoid table and list its idempotents");
  describe->add_option("file", file, "Monoid table")->required();

  HomologyOptions hopts;
  std::string emit;
  auto* homology = app.add_subcommand("homology", "Integral homology of the nerve of a monoid");
  homology->add_option("file", file, "Monoid table")->required();
  homology->add_option("--max-degree", hopts.max_degree, "Nerve truncation degree")
      ->capture_default_str();
  homology->add_option("--emit-chains", emit, "Write the normalized chain complex here");

  auto* completion = app.add_subcommand("completion", "Presentation and triviality of the universal group");
  completion->add_option("file", file, "Monoid table")->required();

  VerifyOptions vopts;
  Format format = Format::text;
  bool timings = false, wrong_codiagonal = false;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  auto* verify = app.add_subcommand("verify-paper", "Run the full counterexample check list");
  verify->add_option("--max-degree", vopts.max_degree, "Nerve and diagonal truncation degree")
      ->capture_default_str();
  verify->add_option("--levels", vopts.levels, "Levels of the simplicial monoid")
      ->capture_default_str();
  verify->add_option("--format", format, "text or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  verify->add_flag("--timings", timings, "Append elapsed time per check");
  verify->add_flag("--inject-wrong-codiagonal", wrong_codiagonal)->group("");
  verify->add_flag("--inject-zero-beta", vopts.zero_beta)->group("");

  FpHomologyOptions fopts;
  auto* fp = app.add_subcommand("fp-homology",
                                "Homology of a word-length truncation of the free-product nerve");
  fp->add_option("--copies", fopts.copies, "Free factors")->capture_default_str();
  fp->add_option("--word-length", fopts.word_length, "Maximum total word length")
      ->capture_default_str();
  fp->add_option("--max-degree", fopts.max_degree, "Truncation degree")->capture_default_str();
  fp->add_option("--budget", fopts.budget, "Simplex budget per degree")->capture_default_str();

  bool complete = false;
  auto* chains = app.add_subcommand("chain-homology", "Homology of a chain complex file");
  chains->add_option("file", file, "Chain complex in `dim n: r` / `n i j c` form")->required();
  chains->add_flag("--complete", complete, "The top degree has no missing boundary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  const Exec exec = serial ? Exec::serial : Exec::parallel;
  hopts.exec = vopts.exec = fopts.exec = exec;
  if (!emit.empty()) hopts.emit_chains = emit;
  if (wrong_codiagonal) vopts.codiagonal = Codiagonal::shifted;

  return run_guarded(
      [&] {
        if (*describe) return cmd_describe(file, std::cout);
        if (*homology) return cmd_homology(file, hopts, std::cout);
        if (*completion) return cmd_completion(file, std::cout);
        if (*verify) return cmd_verify_paper(vopts, format, timings, std::cout);
        if (*fp) return cmd_fp_homology(fopts, std::cout);
        return cmd_chain_homology(file, complete, std::cout);
      },
      std::cerr);
}
