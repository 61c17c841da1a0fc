#include <cstdlib>
#include <iostream>
#include <stdexcept>

#include "fibfield/cli.hpp"

int main(int argc, char** argv) {
  std::uint64_t max_q = 0;
  try {
    max_q = fibfield::cli::max_q_from_env(std::getenv("FIBFIELD_MAX_Q"));
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return fibfield::cli::kUsageError;
  }
  return fibfield::cli::run({argv + 1, argv + argc}, std::cout, std::cerr, max_q);
}
