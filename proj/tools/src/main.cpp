#include "gegenmetric_cli/run.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const auto parsed = gegenmetric::cli::parse_command_line(argc, argv, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  return gegenmetric::cli::run(*parsed.config, std::cout, std::cerr);
}
