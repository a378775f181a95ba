#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mgcli/runner.hpp"
#include "mgcli/script.hpp"

int main(int argc, char** argv) {
  CLI::App app{"mgverify: multigraded ideal verification scripts"};
  std::string path;
  mgcli::RunOptions options;
  std::size_t max_basis = 0;
  std::uint32_t characteristic = 0;
  app.add_option("script", path, "script file, or - for stdin")->required();
  app.add_option("--seed", options.seed, "run seed for every random choice");
  app.add_option("--char", characteristic, "field characteristic, overriding the ring declaration");
  app.add_option("--order", options.order, "degrevlex, lex or weight:w1,w2,...");
  app.add_flag("--json", options.json, "one JSON record per command on stdout");
  app.add_option("--trials", options.trials, "gin trials per order")->check(CLI::PositiveNumber);
  app.add_option("--max-basis", max_basis, "abort Groebner computations beyond this many elements")
      ->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : mgcli::kUsageError;
  }
  if (max_basis) options.max_basis = max_basis;

  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "cannot read " << path << "\n";
      return mgcli::kUsageError;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }

  mgcli::ParseOptions parse_options;
  if (characteristic) parse_options.characteristic = characteristic;
  try {
    const auto script = mgcli::parse(text, parse_options);
    return mgcli::run(script, options, std::cout, std::cerr);
  } catch (const mgcli::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return mgcli::kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return mgcli::kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return mgcli::kCheckFailure;
  }
}
