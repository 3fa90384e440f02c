// tcgen: exact analysis of generated triangular conorms.
//
// Subcommands load a JSON instance spec (generator + ordinal-sum conorm) and
// run the checker, the evaluator, or the brute-force verifier against it.

#include <CLI11.hpp>

#include <iostream>

#include "tcgen/cli.hpp"

using namespace tcgen;

namespace {

cli::Format parse_format(const std::string& s) {
  return s == "json" ? cli::Format::json : cli::Format::text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of generated triangular conorms"};
  app.require_subcommand(1);

  std::string spec_path, format = "text";

  auto* check = app.add_subcommand("check", "decide border-continuous-t-conorm status");
  check->add_option("spec", spec_path, "instance spec (JSON)")->required();
  check->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  std::string eval_x, eval_y;
  auto* eval = app.add_subcommand("eval", "evaluate T(x,y) exactly");
  eval->add_option("spec", spec_path, "instance spec (JSON)")->required();
  eval->add_option("x", eval_x, "rational in [0,1]")->required();
  eval->add_option("y", eval_y, "rational in [0,1]")->required();
  eval->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  std::string step = "1/4";
  std::string out_path;
  auto* table = app.add_subcommand("table", "write a CSV value table");
  table->add_option("spec", spec_path, "instance spec (JSON)")->required();
  table->add_option("--step", step, "grid step, rational in (0,1]");
  table->add_option("--out", out_path, "output file (default stdout)");

  int denominator = 12;
  std::size_t budget = 20000;
  auto* verify = app.add_subcommand("verify", "brute-force oracle cross-check");
  verify->add_option("spec", spec_path, "instance spec (JSON)")->required();
  verify->add_option("--denominator", denominator, "probe grid denominator (>= 2)");
  verify->add_option("--witness-budget", budget, "max triples for the witness search");
  verify->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  auto* decompose = app.add_subcommand("decompose", "triple-sequence normal form of Ran(f)");
  decompose->add_option("spec", spec_path, "instance spec (JSON)")->required();
  decompose->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    InstanceSpec spec = load_spec(spec_path);
    cli::Format fmt = parse_format(format);
    if (check->parsed()) return cli::cmd_check(spec, fmt, std::cout);
    if (eval->parsed()) return cli::cmd_eval(spec, eval_x, eval_y, fmt, std::cout, std::cerr);
    if (table->parsed()) {
      std::optional<std::string> out =
          out_path.empty() ? std::nullopt : std::optional<std::string>(out_path);
      return cli::cmd_table(spec, step, out, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      if (denominator < 2) {
        std::cerr << "error: --denominator must be >= 2\n";
        return cli::kExitInput;
      }
      return cli::cmd_verify(spec, {denominator, budget, fmt}, std::cout);
    }
    if (decompose->parsed()) return cli::cmd_decompose(spec, fmt, std::cout);
  } catch (const ParseError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return cli::kExitInput;
  } catch (const BuildError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return cli::kExitInput;
  } catch (const RangeError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return cli::kExitInput;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return cli::kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return cli::kExitInternal;
  }
  return cli::kExitInput;
}
