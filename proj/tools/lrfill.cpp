#include "lrfill/oeis/http_transport.hpp"

#include <iostream>
#include <string>
#include <vector>

#include "lrfill/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  lrfill::cli::Environment env;
  env.transport = lrfill::oeis::http_transport();
  return lrfill::cli::run(args, std::cout, std::cerr, env);
}
