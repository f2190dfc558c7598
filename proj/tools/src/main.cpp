#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "sopq_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);

  // Only slurp stdin when some argument asks for it.
  std::string input;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "-" || args[i] == "--input=-" || args[i] == "--cert=-") {
      input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
      break;
    }
  }

  const auto result = sopq::cli::run(args, input);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
